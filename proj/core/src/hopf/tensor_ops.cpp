#include "kup/hopf/tensor_ops.hpp"

#include <numeric>

#include "kup/error.hpp"

namespace kup {

SparseTensor combine_legs(const HopfData& h, const SparseTensor& t, const std::vector<LegGroup>& groups) {
    std::vector<int> seen(t.arity(), 0);
    for (const auto& g : groups)
        for (const auto& f : g) {
            if (f.leg < 0 || f.leg >= t.arity()) fail(Errc::ArityMismatch, "combine_legs: leg out of range");
            ++seen[f.leg];
        }
    for (int s : seen)
        if (s != 1) fail(Errc::ArityMismatch, "combine_legs: every leg must be used exactly once");

    const int out_arity = static_cast<int>(groups.size());
    TensorBuilder b(h.legs(out_arity));
    std::vector<int> idx(t.arity()), out(out_arity);
    std::vector<SparseVector> vals(out_arity);
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        bool zero = false;
        for (int r = 0; r < out_arity && !zero; ++r) {
            SparseVector v = h.one();
            for (const auto& f : groups[r]) {
                SparseVector w = f.map ? f.map->col(idx[f.leg]) : h.basis(idx[f.leg]);
                v = h.mul(v, w);
                if (v.is_zero()) break;
            }
            zero = v.is_zero();
            vals[r] = std::move(v);
        }
        if (zero) continue;
        // Outer product of the per-leg vectors.
        std::vector<std::size_t> pos(out_arity, 0);
        while (true) {
            CycScalar coeff = c;
            for (int r = 0; r < out_arity; ++r) {
                const auto& e = vals[r].entries()[pos[r]];
                out[r] = e.first;
                coeff *= e.second;
            }
            b.add(out, coeff);
            int r = out_arity - 1;
            while (r >= 0 && ++pos[r] == vals[r].entries().size()) pos[r--] = 0;
            if (r < 0) break;
        }
    }
    return std::move(b).finalize();
}

SparseTensor tensor_power(const HopfData& h, const SparseVector& v, int n) {
    SparseTensor t = SparseTensor::scalar(CycScalar(1));
    for (int i = 0; i < n; ++i) t = t.outer(SparseTensor::from_vector(v));
    (void)h;
    return t;
}

SparseTensor unit_tensor(const HopfData& h, int n) { return tensor_power(h, h.one(), n); }

SparseTensor reversed(const SparseTensor& t) {
    std::vector<int> sigma(t.arity());
    for (int r = 0; r < t.arity(); ++r) sigma[r] = t.arity() - 1 - r;
    return t.permute_legs(sigma);
}

SparseTensor apply_all(const SparseTensor& t, const LinearMap& m) {
    std::vector<const LinearMap*> maps(t.arity(), &m);
    return t.apply_per_leg(maps);
}

SparseTensor insert_tensor(const SparseTensor& w, const SparseTensor& v, int j) {
    if (j < 0 || j > v.arity()) fail(Errc::ArityMismatch, "insert_tensor: position out of range");
    // outer = w-legs then v-legs; reorder to v[0..j) w v[j..).
    SparseTensor o = w.outer(v);
    const int m = w.arity();
    std::vector<int> sigma;
    for (int r = 0; r < j; ++r) sigma.push_back(m + r);
    for (int r = 0; r < m; ++r) sigma.push_back(r);
    for (int r = j; r < v.arity(); ++r) sigma.push_back(m + r);
    return o.permute_legs(sigma);
}

SparseTensor expand(const HopfData& h, const SparseTensor& t, int leg, int n) {
    return t.expand_leg(leg, n, h.comult(), h.counit());
}

SparseTensor leg_product(const HopfData& h, const SparseTensor& a, const SparseTensor& b) {
    if (a.arity() == 0 || b.arity() == 0) {
        if (a.arity() == 0) return b.scaled(a.scalar_value());
        return a.scaled(b.scalar_value());
    }
    return a.mul(b, h.mult());
}

}  // namespace kup
