#include "kup/hopf/hopf_data.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "kup/error.hpp"
#include "kup/tensor/linalg.hpp"

namespace kup {

struct HopfData::PowerCache {
    std::mutex mu;
    std::map<int, LinearMap> powers;
};

HopfData::HopfData(std::string name, std::vector<std::string> labels, BilinearTable mult, SparseVector unit,
                   CoproductTable comult, Covector counit, LinearMap antipode)
    : name_(std::move(name)),
      dim_(mult.dim()),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      powers_(std::make_shared<PowerCache>()) {
    if (dim_ < 1) fail(Errc::DimensionMismatch, "Hopf algebra must have positive dimension");
    if (static_cast<int>(labels_.size()) != dim_ || unit_.dim() != dim_ || comult_.dim() != dim_ ||
        static_cast<int>(counit_.size()) != dim_ || antipode_.dim() != dim_)
        fail(Errc::DimensionMismatch, "structure tensors of '" + name_ + "' have inconsistent dimensions");
    if (auto inv = Matrix::from_map(antipode_).inverse()) {
        antipode_inv_ = inv->to_map();
        antipode_invertible_ = true;
    } else {
        antipode_inv_ = LinearMap::zero(dim_);
    }
}

int HopfData::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

const LinearMap& HopfData::antipode_power(int k) const {
    std::lock_guard<std::mutex> lock(powers_->mu);
    auto it = powers_->powers.find(k);
    if (it != powers_->powers.end()) return it->second;
    if (k < 0 && !antipode_invertible_) fail(Errc::AxiomFailure, "antipode of '" + name_ + "' is not invertible");
    const LinearMap& base = k >= 0 ? antipode_ : antipode_inv_;
    LinearMap m = LinearMap::identity(dim_);
    for (int s = 0; s < std::abs(k); ++s) m = base.compose(m);
    return powers_->powers.emplace(k, std::move(m)).first->second;
}

SparseTensor HopfData::coproduct(const SparseVector& a) const { return delta_n(a, 2); }

SparseTensor HopfData::delta_n(const SparseVector& a, int n) const {
    if (a.dim() != dim_) fail(Errc::DimensionMismatch, "vector does not live in '" + name_ + "'");
    return SparseTensor::from_vector(a).expand_leg(0, n, comult_, counit_);
}

SparseVector HopfData::multiply_all(const SparseTensor& t) const {
    SparseVector out(dim_);
    if (t.arity() == 0) return unit_.scaled(t.scalar_value());
    std::vector<int> idx(t.arity());
    for (const auto& [k, c] : t.entries()) {
        t.decode(k, idx);
        SparseVector p = basis(idx[0]);
        for (int r = 1; r < t.arity() && !p.is_zero(); ++r) p = mult_.right_basis(p, idx[r]);
        out += p.scaled(c);
    }
    return out;
}

Covector HopfData::convolve(const Covector& f, const Covector& g) const {
    Covector r(dim_);
    for (int i = 0; i < dim_; ++i) {
        CycScalar s(0);
        for (const auto& t : comult_.at(i)) {
            if (f[t.left].is_zero() || g[t.right].is_zero()) continue;
            s += t.coeff * f[t.left] * g[t.right];
        }
        r[i] = s;
    }
    return r;
}

Covector HopfData::convolve_power(const Covector& f, int n) const {
    if (n < 0) fail(Errc::BadParameters, "negative convolution power");
    Covector r = counit_;
    for (int k = 0; k < n; ++k) r = convolve(r, f);
    return r;
}

SparseVector HopfData::left_hit(const Covector& f, const SparseVector& h) const {
    SparseVector out(dim_);
    for (const auto& [i, c] : h.entries())
        for (const auto& t : comult_.at(i))
            if (!f[t.right].is_zero()) out.add(t.left, c * t.coeff * f[t.right]);
    return out;
}

SparseVector HopfData::right_hit(const SparseVector& h, const Covector& f) const {
    SparseVector out(dim_);
    for (const auto& [i, c] : h.entries())
        for (const auto& t : comult_.at(i))
            if (!f[t.left].is_zero()) out.add(t.right, c * t.coeff * f[t.left]);
    return out;
}

Covector HopfData::left_hit(const SparseVector& h, const Covector& f) const {
    return right_mult(h).pullback(f);  // x -> f(x h)
}

Covector HopfData::right_hit(const Covector& f, const SparseVector& h) const {
    return left_mult(h).pullback(f);  // x -> f(h x)
}

LinearMap HopfData::left_mult(const SparseVector& a) const {
    LinearMap m(dim_);
    for (int j = 0; j < dim_; ++j) m.col(j) = mul(a, basis(j));
    return m;
}

LinearMap HopfData::right_mult(const SparseVector& a) const {
    LinearMap m(dim_);
    for (int j = 0; j < dim_; ++j) m.col(j) = mul(basis(j), a);
    return m;
}

// ---------------------------------------------------------------- axioms

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

SparseTensor coproduct_tensor(const HopfData& h, const SparseVector& v) {
    TensorBuilder b(h.legs(2));
    for (const auto& [i, c] : v.entries())
        for (const auto& t : h.comult().at(i)) {
            const int idx[2] = {t.left, t.right};
            b.add_product(b.encode(idx), t.coeff, c);
        }
    return std::move(b).finalize();
}

}  // namespace

AxiomReport verify_axioms(const HopfData& h) {
    AxiomReport rep;
    const int n = h.dim();
    const auto& L = h.labels();
    auto record = [&](const std::string& name, auto&& body) {
        AxiomCheck c{name, true, ""};
        body(c);
        rep.checks.push_back(std::move(c));
    };

    record("associativity", [&](AxiomCheck& c) {
        for (int i = 0; i < n && c.passed; ++i)
            for (int j = 0; j < n && c.passed; ++j) {
                SparseVector ij = h.mult().at(i, j);
                for (int k = 0; k < n; ++k) {
                    SparseVector lhs = h.mult().right_basis(ij, k);
                    SparseVector rhs = h.mul(h.basis(i), h.mult().at(j, k));
                    if (!(lhs == rhs)) {
                        c.passed = false;
                        c.witness = "(" + L[i] + ", " + L[j] + ", " + L[k] + ")";
                        break;
                    }
                }
            }
    });
    record("unit", [&](AxiomCheck& c) {
        for (int i = 0; i < n; ++i) {
            SparseVector e = h.basis(i);
            if (!(h.mul(h.unit(), e) == e) || !(h.mul(e, h.unit()) == e)) {
                c.passed = false;
                c.witness = "(" + L[i] + ")";
                return;
            }
        }
    });
    record("coassociativity", [&](AxiomCheck& c) {
        for (int i = 0; i < n; ++i) {
            SparseTensor d = h.coproduct(h.basis(i));
            SparseTensor left = d.expand_leg(0, 2, h.comult(), h.counit());
            SparseTensor right = d.expand_leg(1, 2, h.comult(), h.counit());
            if (left != right) {
                c.passed = false;
                c.witness = "(" + L[i] + ")";
                return;
            }
        }
    });
    record("counit", [&](AxiomCheck& c) {
        for (int i = 0; i < n; ++i) {
            SparseTensor d = h.coproduct(h.basis(i));
            const int l0[1] = {0}, l1[1] = {1};
            SparseVector a = d.contract_with_covector(l0, {h.counit()}).to_vector();
            SparseVector b = d.contract_with_covector(l1, {h.counit()}).to_vector();
            if (!(a == h.basis(i)) || !(b == h.basis(i))) {
                c.passed = false;
                c.witness = "(" + L[i] + ")";
                return;
            }
        }
    });
    record("counit multiplicative", [&](AxiomCheck& c) {
        if (!h.eps(h.unit()).is_one()) {
            c.passed = false;
            c.witness = "(1)";
            return;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (h.eps(h.mult().at(i, j)) != h.counit()[i] * h.counit()[j]) {
                    c.passed = false;
                    c.witness = "(" + L[i] + ", " + L[j] + ")";
                    return;
                }
    });
    record("coproduct multiplicative", [&](AxiomCheck& c) {
        SparseTensor one2 = SparseTensor::from_vector(h.unit()).outer(SparseTensor::from_vector(h.unit()));
        if (coproduct_tensor(h, h.unit()) != one2) {
            c.passed = false;
            c.witness = "(1)";
            return;
        }
        std::vector<SparseTensor> d(n);
        for (int i = 0; i < n; ++i) d[i] = h.coproduct(h.basis(i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SparseTensor lhs = coproduct_tensor(h, h.mult().at(i, j));
                SparseTensor rhs = d[i].mul(d[j], h.mult());
                if (lhs != rhs) {
                    c.passed = false;
                    c.witness = "(" + L[i] + ", " + L[j] + ")";
                    return;
                }
            }
    });
    record("antipode", [&](AxiomCheck& c) {
        for (int i = 0; i < n; ++i) {
            SparseVector expect = h.unit().scaled(h.counit()[i]);
            SparseVector left(n), right(n);
            for (const auto& t : h.comult().at(i)) {
                left += h.mul(h.antipode().col(t.left), h.basis(t.right)).scaled(t.coeff);
                right += h.mul(h.basis(t.left), h.antipode().col(t.right)).scaled(t.coeff);
            }
            if (!(left == expect) || !(right == expect)) {
                c.passed = false;
                c.witness = "(" + L[i] + ")";
                return;
            }
        }
    });
    record("antipode invertible", [&](AxiomCheck& c) {
        if (!h.antipode_invertible()) {
            c.passed = false;
            c.witness = "(S singular)";
        }
    });
    return rep;
}

}  // namespace kup
