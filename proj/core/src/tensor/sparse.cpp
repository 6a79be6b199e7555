#include "kup/tensor/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kup/error.hpp"

namespace kup {

namespace {

/// Dense accumulator that remembers which slots were touched.
class DenseAccumulator {
public:
    explicit DenseAccumulator(int dim) : vals_(dim), used_(dim, false) {}
    void add(int i, const CycScalar& c) {
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            vals_[i] = c;
        } else {
            vals_[i] += c;
        }
    }
    void add_product(int i, const CycScalar& a, const CycScalar& b) {
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            vals_[i] = a * b;
        } else {
            vals_[i].add_product(a, b);
        }
    }
    SparseVector take(int dim) {
        std::sort(touched_.begin(), touched_.end());
        SparseVector out(dim);
        for (int i : touched_) {
            if (!vals_[i].is_zero()) out.add(i, vals_[i]);
            used_[i] = false;
        }
        touched_.clear();
        return out;
    }

private:
    std::vector<CycScalar> vals_;
    std::vector<bool> used_;
    std::vector<int> touched_;
};

std::vector<std::uint64_t> strides_for(const std::vector<int>& dims) {
    std::vector<std::uint64_t> s(dims.size());
    unsigned __int128 acc = 1;
    for (std::size_t r = dims.size(); r-- > 0;) {
        if (dims[r] < 1) fail(Errc::DimensionMismatch, "tensor legs must have positive dimension");
        s[r] = static_cast<std::uint64_t>(acc);
        acc *= static_cast<unsigned>(dims[r]);
        if (acc > (static_cast<unsigned __int128>(1) << 63))
            fail(Errc::IndexOverflow, "tensor index space exceeds 2^63 entries");
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::basis(int dim, int i, CycScalar c) {
    SparseVector v(dim);
    v.add(i, c);
    return v;
}

SparseVector SparseVector::from_dense(const std::vector<CycScalar>& d) {
    SparseVector v(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.entries_.emplace_back(static_cast<int>(i), d[i]);
    return v;
}

CycScalar SparseVector::at(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it->second : CycScalar(0);
}

std::vector<CycScalar> SparseVector::to_dense() const {
    std::vector<CycScalar> d(dim_);
    for (const auto& [i, c] : entries_) d[i] = c;
    return d;
}

void SparseVector::add(int i, const CycScalar& c) {
    if (c.is_zero()) return;
    if (i < 0 || i >= dim_) fail(Errc::DimensionMismatch, "vector index out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, Entry{i, c});
    }
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
    if (dim_ == 0) dim_ = o.dim_;
    if (o.dim_ != dim_ && o.dim_ != 0) fail(Errc::DimensionMismatch, "vector dimensions differ");
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            CycScalar s = a->second + b->second;
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) { return *this += o.scaled(CycScalar(-1)); }

SparseVector SparseVector::scaled(const CycScalar& c) const {
    SparseVector r(dim_);
    if (c.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [i, v] : entries_) r.entries_.emplace_back(i, v * c);
    return r;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k].first != b.entries_[k].first || a.entries_[k].second != b.entries_[k].second) return false;
    return true;
}

CycScalar pair(const Covector& f, const SparseVector& v) {
    CycScalar s(0);
    for (const auto& [i, c] : v.entries())
        if (!f[i].is_zero()) s.add_product(f[i], c);
    return s;
}

// ------------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(int dim) {
    LinearMap m(dim);
    for (int j = 0; j < dim; ++j) m.cols_[j].add(j, CycScalar(1));
    return m;
}

SparseVector LinearMap::apply(const SparseVector& v) const {
    if (v.dim() != dim()) fail(Errc::DimensionMismatch, "linear map applied to vector of wrong dimension");
    DenseAccumulator acc(dim());
    for (const auto& [j, c] : v.entries())
        for (const auto& [i, m] : cols_[j].entries()) acc.add_product(i, m, c);
    return acc.take(dim());
}

LinearMap LinearMap::compose(const LinearMap& other) const {
    if (other.dim() != dim()) fail(Errc::DimensionMismatch, "composition of maps of different dimension");
    LinearMap r(dim());
    for (int j = 0; j < dim(); ++j) r.cols_[j] = apply(other.cols_[j]);
    return r;
}

LinearMap LinearMap::transpose() const {
    LinearMap r(dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [i, c] : cols_[j].entries()) r.cols_[i].add(j, c);
    return r;
}

LinearMap LinearMap::power(int e) const {
    if (e < 0) fail(Errc::BadParameters, "negative power of a linear map");
    LinearMap r = identity(dim());
    for (int k = 0; k < e; ++k) r = compose(r);
    return r;
}

CycScalar LinearMap::trace() const {
    CycScalar t(0);
    for (int j = 0; j < dim(); ++j) t += cols_[j].at(j);
    return t;
}

bool LinearMap::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.is_zero(); });
}

Covector LinearMap::pullback(const Covector& f) const {
    Covector r(dim());
    for (int j = 0; j < dim(); ++j) r[j] = pair(f, cols_[j]);
    return r;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    LinearMap r(a.dim());
    for (int j = 0; j < a.dim(); ++j) r.cols_[j] = a.cols_[j] - b.cols_[j];
    return r;
}

bool operator==(const LinearMap& a, const LinearMap& b) { return a.cols_ == b.cols_; }

// --------------------------------------------------------------- BilinearTable

SparseVector BilinearTable::apply(const SparseVector& a, const SparseVector& b) const {
    DenseAccumulator acc(dim_);
    for (const auto& [i, ca] : a.entries())
        for (const auto& [j, cb] : b.entries()) {
            const SparseVector& p = at(i, j);
            if (p.is_zero()) continue;
            CycScalar c = ca * cb;
            for (const auto& [k, ck] : p.entries()) acc.add_product(k, ck, c);
        }
    return acc.take(dim_);
}

SparseVector BilinearTable::right_basis(const SparseVector& a, int j) const {
    DenseAccumulator acc(dim_);
    for (const auto& [i, ca] : a.entries())
        for (const auto& [k, ck] : at(i, j).entries()) acc.add_product(k, ck, ca);
    return acc.take(dim_);
}

// --------------------------------------------------------------- TensorBuilder

TensorBuilder::TensorBuilder(std::vector<int> dims) : dims_(std::move(dims)), strides_(strides_for(dims_)) {}

void TensorBuilder::add(std::uint64_t key, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(key, c);
    if (!inserted) it->second += c;
}

void TensorBuilder::add_product(std::uint64_t key, const CycScalar& a, const CycScalar& b) {
    auto it = acc_.find(key);
    if (it == acc_.end())
        acc_.emplace(key, a * b);
    else
        it->second.add_product(a, b);
}

void TensorBuilder::add(std::span<const int> idx, const CycScalar& c) { add(encode(idx), c); }

std::uint64_t TensorBuilder::encode(std::span<const int> idx) const {
    if (idx.size() != dims_.size()) fail(Errc::ArityMismatch, "index tuple has wrong arity");
    std::uint64_t k = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (idx[r] < 0 || idx[r] >= dims_[r]) fail(Errc::DimensionMismatch, "tensor index out of range");
        k += strides_[r] * static_cast<std::uint64_t>(idx[r]);
    }
    return k;
}

SparseTensor TensorBuilder::finalize() && {
    SparseTensor t(std::move(dims_));
    t.entries_.reserve(acc_.size());
    for (auto& [k, c] : acc_)
        if (!c.is_zero()) t.entries_.emplace_back(k, std::move(c));
    std::sort(t.entries_.begin(), t.entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    acc_.clear();
    return t;
}

// ---------------------------------------------------------------- SparseTensor

SparseTensor::SparseTensor(std::vector<int> dims) : dims_(std::move(dims)) { compute_strides(); }

void SparseTensor::compute_strides() { strides_ = strides_for(dims_); }

SparseTensor SparseTensor::scalar(const CycScalar& c) {
    SparseTensor t;
    if (!c.is_zero()) t.entries_.emplace_back(0, c);
    return t;
}

SparseTensor SparseTensor::from_vector(const SparseVector& v) {
    SparseTensor t({v.dim()});
    for (const auto& [i, c] : v.entries()) t.entries_.emplace_back(static_cast<Key>(i), c);
    return t;
}

SparseTensor SparseTensor::basis(std::vector<int> dims, std::span<const int> idx, CycScalar c) {
    SparseTensor t(std::move(dims));
    if (!c.is_zero()) t.entries_.emplace_back(t.encode(idx), std::move(c));
    return t;
}

SparseTensor SparseTensor::simple(const std::vector<SparseVector>& factors) {
    SparseTensor t = scalar(CycScalar(1));
    for (const auto& f : factors) t = t.outer(from_vector(f));
    return t;
}

SparseTensor::Key SparseTensor::encode(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != arity()) fail(Errc::ArityMismatch, "index tuple has wrong arity");
    Key k = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (idx[r] < 0 || idx[r] >= dims_[r]) fail(Errc::DimensionMismatch, "tensor index out of range");
        k += strides_[r] * static_cast<Key>(idx[r]);
    }
    return k;
}

void SparseTensor::decode(Key k, std::span<int> idx) const {
    for (std::size_t r = 0; r < dims_.size(); ++r) {
        idx[r] = static_cast<int>(k / strides_[r]);
        k %= strides_[r];
    }
}

std::vector<int> SparseTensor::decode(Key k) const {
    std::vector<int> idx(dims_.size());
    decode(k, idx);
    return idx;
}

CycScalar SparseTensor::at(std::span<const int> idx) const {
    Key k = encode(idx);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key key) { return e.first < key; });
    return (it != entries_.end() && it->first == k) ? it->second : CycScalar(0);
}

CycScalar SparseTensor::scalar_value() const {
    if (arity() != 0) fail(Errc::ArityMismatch, "scalar_value on a tensor with legs");
    return entries_.empty() ? CycScalar(0) : entries_.front().second;
}

SparseVector SparseTensor::to_vector() const {
    if (arity() != 1) fail(Errc::ArityMismatch, "to_vector on a tensor that is not 1-leg");
    SparseVector v(dims_[0]);
    for (const auto& [k, c] : entries_) v.add(static_cast<int>(k), c);
    return v;
}

SparseTensor SparseTensor::permute_legs(std::span<const int> sigma) const {
    const int n = arity();
    if (static_cast<int>(sigma.size()) != n) fail(Errc::ArityMismatch, "permutation size differs from arity");
    std::vector<bool> seen(n, false);
    for (int s : sigma) {
        if (s < 0 || s >= n || seen[s]) fail(Errc::ArityMismatch, "not a permutation of the legs");
        seen[s] = true;
    }
    std::vector<int> nd(n);
    for (int r = 0; r < n; ++r) nd[r] = dims_[sigma[r]];
    SparseTensor out(nd);
    out.entries_.reserve(entries_.size());
    std::vector<int> idx(n);
    for (const auto& [k, c] : entries_) {
        decode(k, idx);
        Key nk = 0;
        for (int r = 0; r < n; ++r) nk += out.strides_[r] * static_cast<Key>(idx[sigma[r]]);
        out.entries_.emplace_back(nk, c);
    }
    std::sort(out.entries_.begin(), out.entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SparseTensor SparseTensor::apply_on_leg(int leg, const LinearMap& m) const {
    if (leg < 0 || leg >= arity()) fail(Errc::ArityMismatch, "leg out of range");
    if (m.dim() != dims_[leg]) fail(Errc::DimensionMismatch, "map dimension differs from leg dimension");
    TensorBuilder b(dims_);
    const Key stride = strides_[leg];
    for (const auto& [k, c] : entries_) {
        int i = static_cast<int>((k / stride) % static_cast<Key>(dims_[leg]));
        Key base = k - stride * static_cast<Key>(i);
        for (const auto& [j, mc] : m.col(i).entries()) b.add_product(base + stride * static_cast<Key>(j), mc, c);
    }
    return std::move(b).finalize();
}

SparseTensor SparseTensor::apply_per_leg(const std::vector<const LinearMap*>& maps) const {
    if (static_cast<int>(maps.size()) != arity()) fail(Errc::ArityMismatch, "one map per leg required");
    SparseTensor t = *this;
    for (int r = 0; r < arity(); ++r)
        if (maps[r] != nullptr) t = t.apply_on_leg(r, *maps[r]);
    return t;
}

SparseTensor SparseTensor::contract_with_covector(std::span<const int> legs, const std::vector<Covector>& phis) const {
    if (legs.size() != phis.size()) fail(Errc::ArityMismatch, "one covector per contracted leg required");
    std::vector<int> pos(arity(), -1);
    for (std::size_t q = 0; q < legs.size(); ++q) {
        int l = legs[q];
        if (l < 0 || l >= arity() || pos[l] != -1) fail(Errc::ArityMismatch, "bad contraction leg list");
        if (static_cast<int>(phis[q].size()) != dims_[l]) fail(Errc::DimensionMismatch, "covector dimension mismatch");
        pos[l] = static_cast<int>(q);
    }
    std::vector<int> nd, keep;
    for (int r = 0; r < arity(); ++r)
        if (pos[r] == -1) {
            nd.push_back(dims_[r]);
            keep.push_back(r);
        }
    TensorBuilder b(nd);
    std::vector<int> idx(arity()), kidx(keep.size());
    for (const auto& [k, c] : entries_) {
        decode(k, idx);
        CycScalar f = c;
        bool zero = false;
        for (std::size_t q = 0; q < legs.size(); ++q) {
            const CycScalar& v = phis[q][idx[legs[q]]];
            if (v.is_zero()) {
                zero = true;
                break;
            }
            f *= v;
        }
        if (zero) continue;
        for (std::size_t r = 0; r < keep.size(); ++r) kidx[r] = idx[keep[r]];
        b.add(kidx, f);
    }
    return std::move(b).finalize();
}

SparseTensor SparseTensor::multiply_legs(std::span<const int> group, const BilinearTable& m) const {
    if (group.empty()) fail(Errc::ArityMismatch, "empty leg group");
    std::vector<bool> in(arity(), false);
    for (int l : group) {
        if (l < 0 || l >= arity() || in[l]) fail(Errc::ArityMismatch, "bad leg group");
        if (dims_[l] != m.dim()) fail(Errc::DimensionMismatch, "leg dimension differs from algebra dimension");
        in[l] = true;
    }
    if (group.size() == 1) return *this;
    const int target = *std::min_element(group.begin(), group.end());
    std::vector<int> nd, src;  // src[r] = old leg for new leg r, or -1 for the product leg
    for (int r = 0; r < arity(); ++r) {
        if (r == target) {
            nd.push_back(m.dim());
            src.push_back(-1);
        } else if (!in[r]) {
            nd.push_back(dims_[r]);
            src.push_back(r);
        }
    }
    TensorBuilder b(nd);
    std::vector<int> idx(arity()), nidx(nd.size());
    int prod_pos = static_cast<int>(std::find(src.begin(), src.end(), -1) - src.begin());
    for (const auto& [k, c] : entries_) {
        decode(k, idx);
        SparseVector p = SparseVector::basis(m.dim(), idx[group[0]]);
        for (std::size_t q = 1; q < group.size() && !p.is_zero(); ++q) p = m.right_basis(p, idx[group[q]]);
        for (std::size_t r = 0; r < src.size(); ++r)
            if (src[r] >= 0) nidx[r] = idx[src[r]];
        for (const auto& [j, pc] : p.entries()) {
            nidx[prod_pos] = j;
            b.add_product(b.encode(nidx), pc, c);
        }
    }
    return std::move(b).finalize();
}

SparseTensor SparseTensor::expand_leg(int leg, int n, const CoproductTable& delta, const Covector& counit) const {
    if (leg < 0 || leg >= arity()) fail(Errc::ArityMismatch, "leg out of range");
    if (n < 0) fail(Errc::BadParameters, "negative coproduct order");
    const int d = dims_[leg];
    if (delta.dim() != d) fail(Errc::DimensionMismatch, "coproduct dimension differs from leg dimension");
    if (n == 0) {
        const int l[1] = {leg};
        return contract_with_covector(l, {counit});
    }
    // Iterate x -> (id (x) Delta^(k)) Delta(x) by always expanding the newest last leg.
    SparseTensor cur = *this;
    int last = leg;
    for (int step = 1; step < n; ++step) {
        std::vector<int> nd = cur.dims_;
        nd.insert(nd.begin() + last + 1, d);
        TensorBuilder b(nd);
        std::vector<int> idx(cur.arity()), nidx(nd.size());
        for (const auto& [k, c] : cur.entries_) {
            cur.decode(k, idx);
            for (int r = 0; r <= last; ++r) nidx[r] = idx[r];
            for (int r = last + 1; r < cur.arity(); ++r) nidx[r + 1] = idx[r];
            for (const auto& t : delta.at(idx[last])) {
                nidx[last] = t.left;
                nidx[last + 1] = t.right;
                b.add_product(b.encode(nidx), t.coeff, c);
            }
        }
        cur = std::move(b).finalize();
        ++last;
    }
    return cur;
}

namespace {

/// Leg-wise product by simultaneous descent over the sorted entry lists: at each leg the
/// entries sharing a digit form a contiguous block, so products of leg values are formed
/// once per pair of blocks and vanishing products prune whole subtrees.
struct LegwiseProduct {
    const std::vector<SparseTensor::Entry>& a;
    const std::vector<SparseTensor::Entry>& b;
    const std::vector<SparseTensor::Key>& strides;
    const std::vector<int>& dims;
    const BilinearTable& m;
    TensorBuilder& out;

    [[nodiscard]] int digit(SparseTensor::Key k, int r) const {
        return static_cast<int>((k / strides[r]) % static_cast<SparseTensor::Key>(dims[r]));
    }

    void run(int r, std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1, SparseTensor::Key key,
             const CycScalar& coeff) {
        if (r == static_cast<int>(dims.size())) {
            // Full index fixed: exactly one entry on each side.
            CycScalar c = coeff * a[a0].second;
            out.add_product(key, c, b[b0].second);
            return;
        }
        for (std::size_t i = a0; i < a1;) {
            const int da = digit(a[i].first, r);
            std::size_t i1 = i;
            while (i1 < a1 && digit(a[i1].first, r) == da) ++i1;
            for (std::size_t j = b0; j < b1;) {
                const int db = digit(b[j].first, r);
                std::size_t j1 = j;
                while (j1 < b1 && digit(b[j1].first, r) == db) ++j1;
                for (const auto& [k, pc] : m.at(da, db).entries())
                    run(r + 1, i, i1, j, j1, key + strides[r] * static_cast<SparseTensor::Key>(k), coeff * pc);
                j = j1;
            }
            i = i1;
        }
    }
};

}  // namespace

SparseTensor SparseTensor::mul(const SparseTensor& other, const BilinearTable& m) const {
    if (other.dims_ != dims_) fail(Errc::ArityMismatch, "leg-wise product of tensors of different shape");
    for (int d : dims_)
        if (d != m.dim()) fail(Errc::DimensionMismatch, "leg dimension differs from the algebra dimension");
    TensorBuilder b(dims_);
    if (entries_.empty() || other.entries_.empty()) return std::move(b).finalize();
    LegwiseProduct p{entries_, other.entries_, strides_, dims_, m, b};
    p.run(0, 0, entries_.size(), 0, other.entries_.size(), 0, CycScalar(1));
    return std::move(b).finalize();
}

SparseTensor SparseTensor::outer(const SparseTensor& other) const {
    std::vector<int> nd = dims_;
    nd.insert(nd.end(), other.dims_.begin(), other.dims_.end());
    SparseTensor out(nd);
    Key shift = 1;
    for (int d : other.dims_) shift *= static_cast<Key>(d);
    out.entries_.reserve(entries_.size() * other.entries_.size());
    for (const auto& [ka, ca] : entries_)
        for (const auto& [kb, cb] : other.entries_) out.entries_.emplace_back(ka * shift + kb, ca * cb);
    return out;  // lexicographic order is preserved
}

SparseTensor SparseTensor::insert_leg(int pos, const SparseVector& v) const {
    if (pos < 0 || pos > arity()) fail(Errc::ArityMismatch, "insert position out of range");
    std::vector<int> perm;
    SparseTensor t = outer(from_vector(v));
    for (int r = 0; r < pos; ++r) perm.push_back(r);
    perm.push_back(arity());
    for (int r = pos; r < arity(); ++r) perm.push_back(r);
    return t.permute_legs(perm);
}

SparseTensor SparseTensor::scaled(const CycScalar& c) const {
    SparseTensor t(dims_);
    if (c.is_zero()) return t;
    t.entries_.reserve(entries_.size());
    for (const auto& [k, v] : entries_) t.entries_.emplace_back(k, v * c);
    return t;
}

SparseTensor operator+(const SparseTensor& a, const SparseTensor& b) {
    if (a.dims_ != b.dims_) fail(Errc::ArityMismatch, "sum of tensors of different shape");
    SparseTensor t(a.dims_);
    auto x = a.entries_.begin();
    auto y = b.entries_.begin();
    while (x != a.entries_.end() || y != b.entries_.end()) {
        if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
            t.entries_.push_back(*x++);
        } else if (x == a.entries_.end() || y->first < x->first) {
            t.entries_.push_back(*y++);
        } else {
            CycScalar s = x->second + y->second;
            if (!s.is_zero()) t.entries_.emplace_back(x->first, std::move(s));
            ++x;
            ++y;
        }
    }
    return t;
}

SparseTensor operator-(const SparseTensor& a, const SparseTensor& b) { return a + b.scaled(CycScalar(-1)); }

bool operator==(const SparseTensor& a, const SparseTensor& b) {
    if (a.dims_ != b.dims_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k].first != b.entries_[k].first || a.entries_[k].second != b.entries_[k].second) return false;
    return true;
}

std::string SparseTensor::str(const std::vector<std::string>* labels) const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    std::vector<int> idx(arity());
    bool first = true;
    for (const auto& [k, c] : entries_) {
        decode(k, idx);
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int r = 0; r < arity(); ++r) {
            os << (r == 0 ? " " : "⊗");
            if (labels != nullptr && idx[r] < static_cast<int>(labels->size()))
                os << (*labels)[idx[r]];
            else
                os << "e" << idx[r];
        }
    }
    return os.str();
}

}  // namespace kup
