#include "kup/twist/fn_identities.hpp"

#include <string>

#include "kup/hopf/tensor_ops.hpp"

namespace kup {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += ", ";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

}  // namespace

SuiteReport fn_identity_suite(const TwoCocycle& c, int max_n) {
    SuiteReport rep;
    const HopfData& h = c.host();
    const LinearMap& S = h.antipode();
    const LinearMap& Sinv = h.antipode_inv();
    const LinearMap& S2 = h.antipode_power(2);
    const LinearMap left_uinv = h.left_mult(c.u_inv());
    const LinearMap right_u = h.right_mult(c.u());
    auto P = [&](const SparseTensor& a, const SparseTensor& b) { return leg_product(h, a, b); };
    auto F = [&](int n) -> const SparseTensor& { return c.F_n(n); };
    auto Fi = [&](int n) -> const SparseTensor& { return c.F_n_inv(n); };

    for (int n = 1; n <= max_n; ++n) {
        rep.add("recursions-agree", params({{"n", n}}), F(n) == F_n_mirrored(c, n));
        rep.add("inverse", params({{"n", n}}), P(F(n), Fi(n)) == unit_tensor(h, n) && P(Fi(n), F(n)) == unit_tensor(h, n));
    }

    {
        HopfData hf = drinfeld_twist(h, c);
        for (int n = 2; n <= std::min(max_n, 4); ++n) {
            bool ok = true;
            for (int i = 0; i < h.dim() && ok; ++i)
                ok = hf.delta_n(hf.basis(i), n) == P(P(F(n), h.delta_n(h.basis(i), n)), Fi(n));
            rep.add("twisted-coproduct", params({{"n", n}}), ok);
        }
        for (int s = -2; s <= 2; ++s) {
            const LinearMap& SF2s = hf.antipode_power(2 * s);
            const SparseVector q = c.Q_s(s), qi = c.Q_s_inv(s);
            bool ok = h.mul(q, qi) == h.one();
            for (int i = 0; i < h.dim() && ok; ++i)
                ok = SF2s.col(i) == h.mul(h.mul(q, h.S(h.basis(i), 2 * s)), qi);
            rep.add("Q-conjugation", params({{"s", s}}), ok);
        }
    }

    // Insertion and splitting.
    for (int m = 1; m <= max_n; ++m)
        for (int n = 1; m + n <= max_n; ++n)
            for (int j = 1; j <= n + 1; ++j) {
                const auto ones = unit_tensor(h, n);
                SparseTensor rhs = P(insert_tensor(F(m), ones, j - 1), expand(h, F(n + 1), j - 1, m));
                rep.add("insertion", params({{"m", m}, {"n", n}, {"j", j}}), F(m + n) == rhs);
                SparseTensor rhs_inv = P(expand(h, Fi(n + 1), j - 1, m), insert_tensor(Fi(m), ones, j - 1));
                rep.add("insertion-inverse", params({{"m", m}, {"n", n}, {"j", j}}), Fi(m + n) == rhs_inv);
            }
    for (int m = 0; m <= max_n; ++m)
        for (int n = 0; m + n <= max_n; ++n) {
            if (m + n == 0) continue;
            SparseTensor rhs = P(F(m).outer(F(n)), expand(h, expand(h, c.F(), 1, n), 0, m));
            rep.add("splitting", params({{"m", m}, {"n", n}}), F(m + n) == rhs);
        }

    // Reduction of adjacent legs.
    for (int n = 2; n <= max_n; ++n)
        for (int m = 1; m <= n - 1; ++m) {
            std::vector<LegGroup> groups;
            for (int s = 0; s < m - 1; ++s) groups.push_back({{s}});
            groups.push_back({{m - 1, &S}, {m}});
            for (int s = m + 1; s < n; ++s) groups.push_back({{s}});
            SparseTensor lhs = insert_tensor(SparseTensor::from_vector(h.one()), F(n - 2), m - 1);
            SparseTensor rhs = combine_legs(h, F(n).apply_on_leg(m, left_uinv), groups);
            rep.add("reduction", params({{"m", m}, {"n", n}}), lhs == rhs);

            std::vector<LegGroup> groups_inv;
            for (int s = 0; s < m - 1; ++s) groups_inv.push_back({{s}});
            groups_inv.push_back({{m - 1}, {m, &S}});
            for (int s = m + 1; s < n; ++s) groups_inv.push_back({{s}});
            SparseTensor lhs_inv = insert_tensor(SparseTensor::from_vector(h.one()), Fi(n - 2), m - 1);
            SparseTensor rhs_inv = combine_legs(h, Fi(n).apply_on_leg(m - 1, right_u), groups_inv);
            rep.add("reduction-inverse", params({{"m", m}, {"n", n}}), lhs_inv == rhs_inv);
        }

    // Tensor powers of u and u^{-1}.
    for (int n = 1; 2 * n + 1 <= max_n; ++n) {
        std::vector<LegGroup> g;
        g.push_back({{0}});
        for (int l = 2; l <= n + 1; ++l) g.push_back({{l - 1}, {2 * n + 2 - l, &S}});
        const SparseTensor target = tensor_power(h, c.u(), n).insert_leg(0, h.one());
        const SparseTensor a = combine_legs(h, F(2 * n + 1), g);
        const SparseTensor b = P(F(n + 1), combine_legs(h, expand(h, F(n + 1), 0, n + 1), g));
        rep.add("u-from-F", params({{"n", n}}), target == a && target == b);

        std::vector<LegGroup> gi;
        gi.push_back({{0}});
        for (int l = 2; l <= n + 1; ++l) gi.push_back({{2 * n + 2 - l, &Sinv}, {l - 1}});
        const SparseTensor target_i = tensor_power(h, Sinv.apply(c.u_inv()), n).insert_leg(0, h.one());
        const SparseTensor ai = combine_legs(h, Fi(2 * n + 1), gi);
        const SparseTensor bi = P(combine_legs(h, expand(h, Fi(n + 1), 0, n + 1), gi), Fi(n + 1));
        rep.add("Sinv-uinv-from-Finv", params({{"n", n}}), target_i == ai && target_i == bi);
    }
    for (int n = 1; 2 * n <= max_n; ++n) {
        const SparseTensor un = tensor_power(h, c.u(), n);
        std::vector<LegGroup> g, grev;
        for (int l = 1; l <= n; ++l) {
            g.push_back({{l - 1}, {2 * n - l, &S}});
            grev.push_back({{n - l}, {n + l - 1, &S}});
        }
        const SparseTensor a = combine_legs(h, F(2 * n), g);
        const SparseTensor b = P(F(n), combine_legs(h, expand(h, F(n + 1), 0, n), g));
        const SparseTensor cc = P(combine_legs(h, expand(h, F(n + 1), n, n), grev), apply_all(F(n), S));
        rep.add("u-power", params({{"n", n}}), un == a && un == b && un == cc);

        const SparseTensor uin = tensor_power(h, c.u_inv(), n);
        std::vector<LegGroup> gi, gi_rev;
        for (int l = 1; l <= n; ++l) {
            gi.push_back({{l - 1, &S}, {2 * n - l}});
            gi_rev.push_back({{n - l, &S}, {n + l - 1}});
        }
        const SparseTensor ai = combine_legs(h, Fi(2 * n), gi);
        const SparseTensor bi = P(apply_all(Fi(n), S), combine_legs(h, expand(h, Fi(n + 1), 0, n), gi));
        const SparseTensor ci = P(combine_legs(h, expand(h, Fi(n + 1), n, n), gi_rev), Fi(n));
        rep.add("uinv-power", params({{"n", n}}), uin == ai && uin == bi && uin == ci);
    }

    // Coproducts of u and Q and the antipode contractions.
    for (int n = 1; n + 1 <= max_n; ++n) {
        const SparseTensor un = tensor_power(h, c.u(), n);
        const SparseTensor uin = tensor_power(h, c.u_inv(), n);
        const SparseTensor du = h.delta_n(c.u(), n);
        const SparseTensor dui = h.delta_n(c.u_inv(), n);
        rep.add("coproduct-u", params({{"n", n}}), du == P(P(Fi(n), un), reversed(apply_all(Fi(n), S))));

        std::vector<LegGroup> g_sd, g_sf, g_id_rev;
        for (int l = 1; l <= n; ++l) {
            g_sd.push_back({{n - l, &S}, {n + l - 1}});
            g_sf.push_back({{n - l, &S}});
            g_id_rev.push_back({{n - l}});
        }
        {
            const SparseTensor a = combine_legs(h, expand(h, Fi(n + 1), 0, n), g_sd);
            const SparseTensor b = P(combine_legs(h, F(n), g_sf), uin);
            const SparseTensor cc = P(dui, Fi(n));
            rep.add("antipode-Finv-contract", params({{"n", n}}), a == b && a == cc);
        }
        {
            std::vector<LegGroup> g;
            for (int l = 1; l <= n; ++l) g.push_back({{l - 1}, {2 * n - l, &S}});
            const SparseTensor a = combine_legs(h, expand(h, F(n + 1), 0, n), g);
            const SparseTensor b = P(Fi(n), un);
            const SparseTensor cc = P(du, combine_legs(h, F(n), g_sf));
            rep.add("antipode-F-contract", params({{"n", n}}), a == b && a == cc);
        }
        {
            std::vector<LegGroup> g;
            for (int l = 1; l <= n; ++l) g.push_back({{n - l}, {n + l - 1, &S}});
            const SparseTensor a = combine_legs(h, expand(h, F(n + 1), n, n), g);
            const SparseTensor b = P(un, apply_all(Fi(n), S));
            const SparseTensor cc = P(combine_legs(h, F(n), g_id_rev), combine_legs(h, du, g_id_rev));
            rep.add("antipode-F-contract-rev", params({{"n", n}}), a == b && a == cc);
        }
    }
    for (int n = 1; n <= max_n; ++n)
        rep.add("coproduct-Q", params({{"n", n}}),
                P(F(n), h.delta_n(c.Q(), n)) == P(tensor_power(h, c.Q(), n), apply_all(F(n), S2)));
    return rep;
}

}  // namespace kup
