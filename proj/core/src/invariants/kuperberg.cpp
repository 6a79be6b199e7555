#include "kup/invariants/kuperberg.hpp"

#include <map>
#include <numeric>

#include "kup/error.hpp"

namespace kup {

namespace {

int half_odd_index(int theta4, const char* what) {
    if ((theta4 + 2) % 4 != 0)
        fail(Errc::BadRotationGrain, std::string(what) + " rotation " + quarter_str(theta4) + " is not an odd multiple of 1/2");
    return (theta4 + 2) / 4;
}

void validate_plan(const EvalPlan& p) {
    auto bad = [](const std::string& m) { fail(Errc::BadParameters, "evaluation plan: " + m); };
    if (static_cast<int>(p.lower_sizes.size()) != p.genus || static_cast<int>(p.upper_orders.size()) != p.genus ||
        static_cast<int>(p.theta_lower4.size()) != p.genus || static_cast<int>(p.theta_upper4.size()) != p.genus)
        bad("curve lists do not match the genus");
    if (std::accumulate(p.lower_sizes.begin(), p.lower_sizes.end(), 0) != p.n) bad("lower sizes do not sum to n");
    if (static_cast<int>(p.sigma.size()) != p.n || static_cast<int>(p.s.size()) != p.n ||
        static_cast<int>(p.t.size()) != p.n)
        bad("sigma, s and t need n entries");
    std::vector<int> seen(p.n + 1, 0), concat;
    for (const auto& o : p.upper_orders) concat.insert(concat.end(), o.begin(), o.end());
    if (concat != p.sigma) bad("upper orders do not concatenate to sigma");
    for (int i : p.sigma) {
        if (i < 1 || i > p.n || seen[i]++) bad("sigma is not a permutation of 1..n");
    }
}

/// Disjoint-set forest over lower curves.
struct Components {
    std::vector<int> parent;
    explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

/// One lower tensor of a block, with its legs reordered by first use along the upper curves
/// and its entries decoded; sorted entries form a trie whose depth-d level is leg d.
struct LowerTrie {
    std::vector<std::vector<int>> idx;  ///< idx[e][d]: basis index of leg d in entry e
    std::vector<CycScalar> coeff;
};

LowerTrie make_trie(const SparseTensor& t) {
    LowerTrie out;
    out.idx.reserve(t.nnz());
    out.coeff.reserve(t.nnz());
    for (const auto& [key, c] : t.entries()) {
        out.idx.push_back(t.decode(key));
        out.coeff.push_back(c);
    }
    return out;
}

/// Full contraction of one connected block. The upper traversal visits, at step r, leg
/// depth[r] of tensor owner[r] (legs of each tensor are visited in increasing depth); steps
/// are grouped into consecutive words, each paired with its functional. The search walks all
/// tries at once, so a prefix whose partial word product vanishes prunes every entry below it
/// without enumerating the product of the tensors.
class BlockContraction {
public:
    BlockContraction(const HopfData& h, std::vector<LowerTrie> tries, std::vector<int> owner, std::vector<int> depth,
                     const std::vector<int>& word_len, std::vector<Covector> functionals)
        : h_(h), tries_(std::move(tries)), owner_(std::move(owner)), depth_(std::move(depth)),
          fns_(std::move(functionals)) {
        const int A = static_cast<int>(owner_.size());
        word_of_.resize(A);
        first_.resize(A);
        last_.resize(A);
        for (int w = 0, r = 0; w < static_cast<int>(word_len.size()); ++w)
            for (int q = 0; q < word_len[w]; ++q, ++r) {
                word_of_[r] = w;
                first_[r] = q == 0;
                last_[r] = q == word_len[w] - 1;
            }
        vec_.resize(A);
        lo_.resize(tries_.size());
        hi_.resize(tries_.size());
        for (std::size_t i = 0; i < tries_.size(); ++i) {
            lo_[i] = 0;
            hi_[i] = tries_[i].coeff.size();
        }
    }

    CycScalar run() {
        total_ = CycScalar(0);
        visit(0, CycScalar(1));
        return total_;
    }

private:
    void visit(int r, const CycScalar& fac) {
        if (r == static_cast<int>(owner_.size())) {
            total_ += fac;
            return;
        }
        const int i = owner_[r], d = depth_[r];
        const LowerTrie& t = tries_[i];
        const std::size_t lo = lo_[i], hi = hi_[i];
        const bool complete = d + 1 == static_cast<int>(t.idx.empty() ? 0 : t.idx[lo].size());
        for (std::size_t a = lo; a < hi;) {
            const int v = t.idx[a][d];
            std::size_t b = a + 1;
            while (b < hi && t.idx[b][d] == v) ++b;
            vec_[r] = first_[r] ? h_.basis(v) : h_.mult().right_basis(vec_[r - 1], v);
            if (last_[r] || !vec_[r].is_zero()) {
                CycScalar f = fac;
                if (complete) f *= t.coeff[a];  // the entry is determined once its last leg is fixed
                if (last_[r]) f *= pair(fns_[word_of_[r]], vec_[r]);
                if (!f.is_zero()) {
                    lo_[i] = a;
                    hi_[i] = b;
                    visit(r + 1, f);
                }
            }
            a = b;
        }
        lo_[i] = lo;
        hi_[i] = hi;
    }

    const HopfData& h_;
    std::vector<LowerTrie> tries_;
    std::vector<int> owner_, depth_, word_of_;
    std::vector<char> first_, last_;
    std::vector<Covector> fns_;
    std::vector<SparseVector> vec_;
    std::vector<std::size_t> lo_, hi_;
    CycScalar total_;
};

}  // namespace

SparseVector lower_integral(const HopfData& h, const IntegralData& I, int theta4) {
    return twisted_integral_element(h, I, half_odd_index(theta4, "lower curve"));
}

Covector upper_cointegral(const HopfData& h, const IntegralData& I, int theta4) {
    return twisted_integral_functional(h, I, half_odd_index(-theta4, "upper curve"));
}

CycScalar kuperberg(const EvalPlan& plan, const HopfData& h) { return kuperberg(plan, h, integrals(h)); }

CycScalar kuperberg(const EvalPlan& plan, const HopfData& h, const IntegralData& I) {
    validate_plan(plan);
    const int g = plan.genus;
    // Lower point (1-based) -> (curve, offset within the curve).
    std::vector<int> curve_of(plan.n + 1), offset_of(plan.n + 1), curve_start(g, 0);
    for (int i = 0, p = 1; i < g; ++i) {
        curve_start[i] = p;
        for (int q = 0; q < plan.lower_sizes[i]; ++q, ++p) {
            curve_of[p] = i;
            offset_of[p] = q;
        }
    }
    std::vector<SparseVector> Lam(g);
    std::vector<Covector> lam(g);
    for (int i = 0; i < g; ++i) {
        Lam[i] = lower_integral(h, I, plan.theta_lower4[i]);
        lam[i] = upper_cointegral(h, I, plan.theta_upper4[i]);
    }

    CycScalar result(1);
    for (int i = 0; i < g; ++i)
        if (plan.lower_sizes[i] == 0) result *= h.eps(Lam[i]);
    for (int j = 0; j < g; ++j)
        if (plan.upper_orders[j].empty()) result *= pair(lam[j], h.unit());
    if (result.is_zero()) return result;

    Components comp(g);
    for (const auto& order : plan.upper_orders)
        for (std::size_t q = 1; q < order.size(); ++q) comp.join(curve_of[order[0]], curve_of[order[q]]);

    // Leg maps S^s T^t, shared between points with equal exponents.
    std::map<std::pair<int, int>, LinearMap> leg_maps;
    auto leg_map = [&](int s, int t) -> const LinearMap* {
        if (s == 0 && t == 0) return nullptr;
        auto it = leg_maps.find({s, t});
        if (it == leg_maps.end()) {
            LinearMap m = h.antipode_power(s);
            if (t != 0) m = m.compose(T_power(h, I, t));
            it = leg_maps.emplace(std::make_pair(s, t), std::move(m)).first;
        }
        return &it->second;
    };

    for (int root = 0; root < g; ++root) {
        std::vector<int> lowers, uppers;
        for (int i = 0; i < g; ++i)
            if (plan.lower_sizes[i] > 0 && comp.find(i) == root) lowers.push_back(i);
        if (lowers.empty()) continue;
        for (int j = 0; j < g; ++j)
            if (!plan.upper_orders[j].empty() && comp.find(curve_of[plan.upper_orders[j][0]]) == root)
                uppers.push_back(j);

        // Each lower curve's tensor, with the per-point maps applied and its legs reordered by
        // first use along the upper curves of the block.
        std::vector<int> block_of(g, -1);
        for (std::size_t b = 0; b < lowers.size(); ++b) block_of[lowers[b]] = static_cast<int>(b);
        std::vector<int> owner, depth, word_len, next_depth(lowers.size(), 0);
        std::vector<std::vector<int>> leg_order(lowers.size());
        std::vector<Covector> fns;
        for (int j : uppers) {
            for (int p : plan.upper_orders[j]) {
                const int b = block_of[curve_of[p]];
                owner.push_back(b);
                depth.push_back(next_depth[b]++);
                leg_order[b].push_back(offset_of[p]);
            }
            word_len.push_back(static_cast<int>(plan.upper_orders[j].size()));
            fns.push_back(lam[j]);
        }
        std::vector<LowerTrie> tries;
        for (std::size_t b = 0; b < lowers.size(); ++b) {
            const int i = lowers[b];
            std::vector<const LinearMap*> maps;
            for (int q = 0; q < plan.lower_sizes[i]; ++q) {
                const int p = curve_start[i] + q;
                maps.push_back(leg_map(plan.s[p - 1], plan.t[p - 1]));
            }
            const SparseTensor L = h.delta_n(Lam[i], plan.lower_sizes[i]).apply_per_leg(maps);
            tries.push_back(make_trie(L.permute_legs(leg_order[b])));
        }
        result *= BlockContraction(h, std::move(tries), std::move(owner), std::move(depth), word_len, std::move(fns)).run();
        if (result.is_zero()) return result;
    }
    return result;
}

}  // namespace kup
