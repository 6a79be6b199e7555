#include <doctest.h>

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "kup/diagram/builders.hpp"
#include "kup/error.hpp"
#include "kup/hopf/builders.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/invariants/closed_forms.hpp"
#include "kup/invariants/kuperberg.hpp"
#include "kup/invariants/request.hpp"
#include "kup/twist/cocycle.hpp"

using namespace kup;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc{};
}

CycScalar zeta(int n, int k = 1) { return CycScalar::root_of_unity(n, k); }

/// Hand expansion of the Q8 diagram:
///   lambda(L2_4 S(L1_3) S^2(L2_2) L1_1) * lambda(S^2(L1_4) S(L2_3) L1_2 L2_1)
/// with L1, L2 two copies of Delta^4(Lambda).
CycScalar q8_hand_formula(const HopfData& h) {
    const IntegralData I = integrals(h);
    const SparseTensor D = h.delta_n(I.Lambda, 4);
    std::vector<std::pair<std::vector<int>, CycScalar>> terms;
    std::vector<int> idx(4);
    for (const auto& [k, c] : D.entries()) {
        D.decode(k, idx);
        terms.emplace_back(idx, c);
    }
    const LinearMap& S = h.antipode();
    const LinearMap& S2 = h.antipode_power(2);
    auto e = [&](int i) { return h.basis(i); };
    CycScalar total(0);
    for (const auto& [x, cx] : terms)
        for (const auto& [y, cy] : terms) {
            SparseVector a = h.mul(h.mul(h.mul(e(y[3]), S.col(x[2])), S2.col(y[1])), e(x[0]));
            SparseVector b = h.mul(h.mul(h.mul(S2.col(x[3]), S.col(y[2])), e(x[1])), e(y[0]));
            total += cx * cy * pair(I.lambda, a) * pair(I.lambda, b);
        }
    return total;
}

std::vector<std::pair<int, int>> coprime_pairs(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k)
            if (std::gcd(n, k) == 1) out.emplace_back(n, k);
    return out;
}

const std::vector<std::string> kSmall = {"group:Z2", "group:Z3", "group:S3", "taft:2", "taft:3",
                                         "dual:group:Z2xZ2", "dual:group:S3", "op:taft:3"};

}  // namespace

TEST_SUITE("invariants") {
    TEST_CASE("3-sphere and S^2 x S^1 on every built-in algebra") {
        for (const auto& sel : builtin_algebra_selectors()) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            if (h.dim() > 16) continue;
            const IntegralData I = integrals(h);
            CHECK(kuperberg(compile_plan(s3_diagram()), h, I) == CycScalar(1));
            CHECK(kuperberg(compile_plan(s2xs1_diagram()), h, I) == h.antipode_power(2).trace());
            CHECK(nu(1, h, I) == CycScalar(1));
            CHECK(nu(0, h, I) == h.antipode_power(2).trace());
        }
        CHECK(kuperberg(compile_plan(s2xs1_diagram()), algebra_from_selector("group:Z2")) == CycScalar(2));
        CHECK(kuperberg(compile_plan(s2xs1_diagram()), algebra_from_selector("taft:2")) == CycScalar(0));
    }

    TEST_CASE("S^2 x S^1 under every framing shift") {
        for (const char* sel : {"group:S3", "taft:2", "taft:3", "dual:taft:3", "dual:group:S3"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(kuperberg(compile_plan(s2xs1_diagram(a, b)), h, I) == s2xs1_closed(a, b, h, I));
                }
        }
    }

    TEST_CASE("Q8 diagram against its hand expansion") {
        for (const char* sel : {"group:Q8", "group:S3", "taft:2", "taft:3", "dual:group:S3"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const CycScalar hand = q8_hand_formula(h);
            CHECK(kuperberg(compile_plan(q8_diagram()), h) == hand);
            CHECK(genus2(1, 1, h) == hand);
        }
    }

    TEST_CASE("nu_n of group algebras counts n-th roots of 1") {
        for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8", "D8"}) {
            CAPTURE(g);
            const GroupTable G = named_group(g);
            HopfData h = group_algebra(G);
            const IntegralData I = integrals(h);
            for (int n = -3; n <= 6; ++n) {
                CAPTURE(n);
                CHECK(nu(n, h, I) == CycScalar(G.count_roots(n)));
            }
            for (int n = 2; n <= 5; ++n) {
                CHECK(lens_fR_closed(n, n - 1, h, I) == CycScalar(G.count_roots(n)));
                CHECK(lens_fL_closed(n, 1, h) == CycScalar(G.count_roots(n)));
            }
        }
        CHECK(nu(2, algebra_from_selector("group:S3")) == CycScalar(4));
    }

    TEST_CASE("nu_n routes and symmetries") {
        for (const auto& sel : kSmall) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            HopfData op = opposite(h);
            for (int n = 1; n <= 4; ++n) {
                CAPTURE(n);
                // With Lambda h = alpha(h) Lambda and (id (x) lambda) Delta = lambda g, the negative
                // indicators pick up alpha(g)^{-1}; at n = 1 this is lambda(S^2 Lambda).
                CHECK(nu(-n, h, I) == pair(I.alpha, I.g_inv) * nu(n, op));
                CHECK(nu(-n, h, I) == pair(I.alpha, I.g_inv) * (n >= 2 ? lens_fL_closed(n, 1, h) : CycScalar(1)));
                if (n >= 2) {
                    CHECK(nu(n, h, I) == lens_fR_closed(n, n - 1, h, I));
                    CHECK(nu(n, h, I) == kuperberg(lens_fR_plan(n, n - 1), h, I));
                    CHECK(nu_nk(n, 1, h) == nu(n, h, I));
                    CHECK(nu_tilde(n, 1, h, I) == nu(n, h, I));
                }
            }
        }
    }

    TEST_CASE("c-sequence") {
        CHECK(c_sequence(8, 3) == std::vector<int>{-1, -1, 0, 0, 0, -1, -1, 0});
        for (int n = 2; n <= 9; ++n) CHECK(c_sequence(n, n - 1) == std::vector<int>(n, 0));
        for (const auto& [n, k] : coprime_pairs(13)) {
            if ((n - k) % 2 == 0) continue;
            CAPTURE(n);
            CAPTURE(k);
            const auto c = c_sequence(n, k);
            const auto s = lens_fR_plan(n, k).s;
            for (int i = 0; i < n; ++i) CHECK(s[i] == 2 * c[i] + 1);
        }
        CHECK(code_of([] { (void)c_sequence(7, 3); }) == Errc::BadParity);
        CHECK(code_of([] { (void)c_sequence(8, 2); }) == Errc::NotCoprime);
    }

    TEST_CASE("Taft algebra values") {
        HopfData t7 = algebra_from_selector("taft:7");
        const CycScalar expected = zeta(7, 1) * CycScalar(-42) + zeta(7, 2) * CycScalar(-35) +
                                   zeta(7, 3) * CycScalar(-28) + zeta(7, 4) * CycScalar(-21) +
                                   zeta(7, 5) * CycScalar(-14) + zeta(7, 6) * CycScalar(-7);
        const CycScalar v71 = lens_fL_closed(7, 1, t7);
        CHECK(v71 == expected);
        CHECK(v71.str() == "7 - 35*z - 28*z^2 - 21*z^3 - 14*z^4 - 7*z^5 (z = zeta_7)");
        CHECK(lens_fR_closed(7, 2, t7).is_zero());
        CHECK(nu_nk(7, 5, t7).is_zero());

        HopfData t4 = algebra_from_selector("taft:4");
        CHECK(lens_fR_closed(4, 1, t4).is_zero());
        CHECK(lens_fL_closed(4, 1, t4) == CycScalar(8) * (CycScalar(1) - zeta(4)));
        CHECK(kuperberg(lens_fR_plan(4, 1), t4).is_zero());
        CHECK(kuperberg(lens_fL_plan(4, 1), t4) == CycScalar(8) * (CycScalar(1) - zeta(4)));
    }

    TEST_CASE("lens spaces: plan evaluation equals the closed forms") {
        for (const auto& sel : {"group:Z2", "group:S3", "taft:2", "taft:3", "dual:group:Z2xZ2", "op:taft:3"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            for (const auto& [n, k] : coprime_pairs(sel == std::string("dual:group:Z2xZ2") ? 6 : 7)) {
                CAPTURE(n);
                CAPTURE(k);
                if ((n - k) % 2 == 1) {
                    const CycScalar closed = lens_fR_closed(n, k, h, I);
                    CHECK(kuperberg(lens_fR_plan(n, k), h, I) == closed);
                    CHECK(lens_fR_trace(n, k, h) == closed);
                }
                if (k % 2 == 1) CHECK(kuperberg(lens_fL_plan(n, k), h, I) == lens_fL_closed(n, k, h));
            }
        }
    }

    TEST_CASE("nu_{n,k}, nu'_{n,k} and the shuffled indicator") {
        for (const auto& sel : {"group:S3", "taft:2", "taft:3", "dual:group:S3"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            HopfData op = opposite(h);
            for (const auto& [n, k] : coprime_pairs(6)) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(nu_prime(n, k, h) == nu_nk(n, k, op));
                const InvariantRequest r = parse_request("nu:" + std::to_string(n) + ":" + std::to_string(k));
                CHECK(evaluate(r, h, Route::alternate) == evaluate(r, h, Route::primary));
                const CycScalar t = nu_tilde(n, k, h, I);
                CHECK(nu_tilde_trace(n, k, h) == t);
                CHECK(nu_tilde(n, k + n, h, I) == t);
                CHECK(nu_tilde(n, k - 2 * n, h, I) == t);
            }
        }
        HopfData t4 = algebra_from_selector("taft:4");
        CHECK(nu_prime(4, 3, t4) == nu_nk(4, 3, opposite(t4)));
        CHECK(code_of([] { (void)nu_nk(6, 3, algebra_from_selector("group:Z2")); }) == Errc::NotCoprime);
        CHECK(code_of([] { (void)nu_tilde(6, 4, algebra_from_selector("group:Z2")); }) == Errc::NotCoprime);
        CHECK(nu_tilde(5, 2, algebra_from_selector("group:S3")) ==
              nu_tilde_trace(5, 2, algebra_from_selector("group:S3")));
    }

    TEST_CASE("genus-2 Seifert family: three routes") {
        for (const char* sel : {"group:Z2", "group:S3", "taft:2", "taft:3"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            for (int m = 1; m <= 2; ++m)
                for (int n = 1; n <= 2; ++n) {
                    CAPTURE(m);
                    CAPTURE(n);
                    const CycScalar v = genus2(m, n, h, I);
                    CHECK(genus2_psi_trace(m, n, h) == v);
                    CHECK(kuperberg(compile_plan(seifert_diagram(m, n)), h, I) == v);
                }
            CHECK(genus2(1, 1, h, I) == kuperberg(compile_plan(q8_diagram()), h, I));
        }
        CHECK(code_of([] { (void)genus2(0, 1, algebra_from_selector("group:Z2")); }) == Errc::BadParameters);
    }

    TEST_CASE("stabilization leaves the invariant unchanged") {
        for (const char* sel : {"group:S3", "taft:2", "taft:3", "dual:group:Z2xZ2"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            const IntegralData I = integrals(h);
            for (const auto& name : fixture_names()) {
                CAPTURE(name);
                const FramedDiagram d = fixture_diagram(name);
                CHECK(kuperberg(compile_plan(stabilize(d)), h, I) == kuperberg(compile_plan(d), h, I));
            }
        }
    }

    TEST_CASE("T exponents enter through T = S^-2 on unimodular algebras") {
        // Shifting phi on both sides of one point changes t; for a unimodular algebra with
        // trivial distinguished grouplikes T = S^-2, so t = 1 acts like s -> s - 2.
        HopfData h = algebra_from_selector("group:S3");
        EvalPlan p = compile_plan(q8_diagram());
        const CycScalar base = kuperberg(p, h);
        EvalPlan q = p;
        q.t[2] = 1;
        q.s[2] += 2;
        CHECK(kuperberg(q, h) == base);
        HopfData t2 = algebra_from_selector("taft:3");
        EvalPlan l = lens_fR_plan(5, 2);
        const IntegralData I = integrals(t2);
        CHECK(T_power(t2, I, 1).compose(t2.antipode()) == t2.antipode().compose(T_power(t2, I, 1)));
        // An invalid plan is rejected.
        l.sigma[0] = l.sigma[1];
        CHECK(code_of([&] { (void)kuperberg(l, t2, I); }) == Errc::BadParameters);
    }

    TEST_CASE("request selectors") {
        CHECK(parse_request("lens:5:2:fR").kind == InvariantKind::lens);
        CHECK(parse_request("nu:-3").a == -3);
        CHECK(parse_request("nu-tilde:5:7").b == 7);
        CHECK(parse_request("seifert:2:1").kind == InvariantKind::seifert);
        CHECK(code_of([] { (void)parse_request("lens:5:1:fR"); }) == Errc::BadParity);
        CHECK(code_of([] { (void)parse_request("lens:6:3:fL"); }) == Errc::NotCoprime);
        CHECK(code_of([] { (void)parse_request("lens:5:2:fX"); }) == Errc::BadParameters);
        CHECK(code_of([] { (void)parse_request("seifert:0:1"); }) == Errc::BadParameters);
        CHECK(code_of([] { (void)parse_request("nu:x"); }) == Errc::BadParameters);
        CHECK(code_of([] { (void)parse_request("torus"); }) == Errc::BadParameters);
        CHECK(code_of([] { (void)parse_request("plan:/nonexistent/file.diag"); }) == Errc::BadParameters);
        const InvariantRequest f = parse_request(std::string("plan:") + KUP_DATA_DIR + "/diagrams/q8.diag");
        HopfData h = algebra_from_selector("taft:2");
        CHECK(evaluate(f, h) == evaluate(parse_request("q8"), h));
        for (const char* sel : {"s3", "s2xs1", "q8", "lens:5:2:fR", "lens:5:3:fL", "nu:3", "nu:0", "nu:1", "nu:-2",
                                "nu:5:2", "nu-prime:5:2", "nu-tilde:5:3", "seifert:1:2"}) {
            CAPTURE(sel);
            const InvariantRequest r = parse_request(sel);
            CHECK(evaluate(r, h, Route::primary) == evaluate(r, h, Route::alternate));
        }
        CHECK(request_diagram(parse_request("nu:3")) == std::nullopt);
        CHECK(request_diagram(parse_request("lens:5:2:fR")) == lens_fR_diagram(5, 2));
    }

    TEST_CASE("gauge invariance under bicharacter twists") {
        HopfData t4 = algebra_from_selector("taft:4");
        const TwoCocycle c = cocycle_from_selector(t4, "taft-bichar:1");
        for (const char* sel : {"nu:2", "nu:4:1", "nu-tilde:3:2", "lens:3:2:fR"}) {
            CAPTURE(sel);
            const CheckReport r = gauge_check(parse_request(sel), t4, c);
            CHECK_MESSAGE(r.passed, std::string(r.lhs.str() + " vs " + r.rhs.str()));
        }
        HopfData k4 = algebra_from_selector("dual:group:Z2xZ2");
        const TwoCocycle ck = cocycle_from_selector(k4, "klein");
        const CheckReport r = gauge_check(parse_request("seifert:1:1"), k4, ck);
        CHECK(r.passed);
        const CheckReport trivial = gauge_check(parse_request("nu:3"), t4, trivial_cocycle(t4));
        CHECK(trivial.passed);
    }

    TEST_CASE("multiplicativity and duality") {
        HopfData z2 = algebra_from_selector("group:Z2");
        const CheckReport m = multiplicativity_check(parse_request("nu:3"), z2, z2);
        CHECK(m.passed);
        CHECK(m.lhs == CycScalar(1));
        HopfData t2 = algebra_from_selector("taft:2");
        CHECK(duality_check(parse_request("nu:2"), t2).passed);
        // Drinfeld-double style product H (x) (H^op)*.
        HopfData dh = tensor_product(t2, dual(opposite(t2)));
        const CycScalar lhs = lens_fL_closed(4, 1, dh);
        CHECK(lhs == lens_fL_closed(4, 1, t2) * lens_fL_closed(4, 1, opposite(t2)));
        CHECK(multiplicativity_check(parse_request("nu:3"), t2, algebra_from_selector("group:S3")).passed);
    }

    TEST_CASE("plans on dual algebras, where most partial words vanish") {
        // Products of delta functions vanish unless the labels agree, so the contraction prunes
        // almost every prefix; the results must still match the closed forms.
        for (const char* sel : {"dual:group:S3", "dual:taft:3", "dual:group:Z2xZ2"}) {
            CAPTURE(sel);
            HopfData h = algebra_from_selector(sel);
            for (int m = 1; m <= 2; ++m)
                for (int n = 1; n <= 2; ++n) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CHECK(kuperberg(compile_plan(seifert_diagram(m, n)), h) == genus2(m, n, h));
                }
            for (int n = 2; n <= 6; ++n)
                for (int k = 1; k < n; ++k) {
                    if (std::gcd(n, k) != 1) continue;
                    CAPTURE(n);
                    CAPTURE(k);
                    if ((n - k) % 2 == 1) CHECK(kuperberg(lens_fR_plan(n, k), h) == lens_fR_closed(n, k, h));
                    if (k % 2 == 1) CHECK(kuperberg(lens_fL_plan(n, k), h) == lens_fL_closed(n, k, h));
                }
        }
    }

    TEST_CASE("group algebras from table files") {
        const std::string dir = std::string(KUP_DATA_DIR) + "/groups/";
        const std::ifstream probe(dir + "a4.group");
        REQUIRE(probe.good());
        for (const char* file : {"q8.group", "a4.group"}) {
            CAPTURE(file);
            std::ifstream in(dir + file);
            std::stringstream ss;
            ss << in.rdbuf();
            const GroupTable g = GroupTable::parse(ss.str());
            HopfData h = algebra_from_selector("group:" + dir + file);
            CHECK(h.dim() == g.order());
            for (int n = 1; n <= 6; ++n) {
                CAPTURE(n);
                const InvariantRequest req = parse_request("nu:" + std::to_string(n));
                CHECK(evaluate(req, h, Route::primary) == CycScalar(g.count_roots(n)));
                CHECK(evaluate(req, h, Route::alternate) == CycScalar(g.count_roots(n)));
            }
        }
        // The file version of Q8 has the element-order statistics of the built-in one.
        const GroupTable q8 = named_group("Q8");
        std::ifstream in(dir + "q8.group");
        std::stringstream ss;
        ss << in.rdbuf();
        const GroupTable fq8 = GroupTable::parse(ss.str());
        for (int n = -4; n <= 8; ++n) CHECK(fq8.count_roots(n) == q8.count_roots(n));
    }
}
