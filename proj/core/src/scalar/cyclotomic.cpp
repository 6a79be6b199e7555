#include "kup/scalar/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <regex>

#include "kup/error.hpp"

namespace kup {

namespace {

std::atomic<int> g_conductor_bound{10000};

using Poly = std::vector<Rational>;

/// Integer polynomial exact division a / b (b monic), used to build Phi_N.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<std::int64_t> q(a.size() - db, 0);
    for (std::size_t e = a.size(); e-- > db;) {
        std::int64_t c = a[e];
        q[e - db] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= db; ++k) a[e - db + k] -= c * b[k];
    }
    return q;
}

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Reduces p in place modulo Phi_N of the given field; result has exactly degree entries.
void reduce(const CycloField& f, Poly& p) {
    const int d = f.degree;
    for (int e = static_cast<int>(p.size()) - 1; e >= d; --e) {
        if (p[e].is_zero()) continue;
        const Rational c = -p[e];
        for (const auto& [k, v] : f.tail) p[e - d + k].add_product(c, Rational(v));
        p[e] = Rational(0);
    }
    p.resize(d);
}

Poly to_poly(const CycScalar::Coeffs& c) { return Poly(c.begin(), c.end()); }

CycScalar::Coeffs to_coeffs(const Poly& p) { return CycScalar::Coeffs(p.begin(), p.end()); }

/// Polynomial division with remainder over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {q, a};
    q.assign(a.size() - db, Rational(0));
    Rational lead_inv = b.back().inverse();
    for (int e = static_cast<int>(a.size()) - 1; e >= db; --e) {
        if (a[e].is_zero()) continue;
        Rational c = a[e] * lead_inv;
        q[e - db] = c;
        for (int k = 0; k <= db; ++k) a[e - db + k] -= c * b[k];
    }
    trim(a);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_product(a[i], b[j]);
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace

const CycloField& CycloField::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    if (n < 1) fail(Errc::BadParameters, "cyclotomic conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(n);
        if (it != registry.end()) return *it->second;
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built outside the lock (recursive).
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d : divisors(n)) {
        if (d == n) continue;
        num = divide_monic(num, CycloField::get(d).phi);
    }
    auto f = std::make_unique<CycloField>();
    f->order = n;
    f->degree = static_cast<int>(num.size()) - 1;
    f->phi = num;
    for (int k = 0; k < f->degree; ++k)
        if (num[k] != 0) f->tail.emplace_back(k, num[k]);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = registry.emplace(n, std::move(f));
    return *it->second;
}

int conductor_bound() { return g_conductor_bound.load(); }
void set_conductor_bound(int bound) { g_conductor_bound.store(bound); }

int CycScalar::common_order(int a, int b) {
    if (a == b) return a;
    long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
    if (l > conductor_bound())
        fail(Errc::ConductorOverflow, "conductor " + std::to_string(l) + " exceeds bound " +
                                          std::to_string(conductor_bound()));
    return static_cast<int>(l);
}

CycScalar CycScalar::root_of_unity(int n, std::int64_t k) {
    const CycloField& f = CycloField::get(n);
    std::int64_t e = ((k % n) + n) % n;
    Poly p(std::max<std::int64_t>(e + 1, f.degree), Rational(0));
    p[e] = Rational(1);
    reduce(f, p);
    return CycScalar(&f, to_coeffs(p));
}

CycScalar CycScalar::from_coeffs(int n, const std::vector<Rational>& coeffs) {
    const CycloField& f = CycloField::get(n);
    Poly p = coeffs;
    if (static_cast<int>(p.size()) < f.degree) p.resize(f.degree, Rational(0));
    reduce(f, p);
    return CycScalar(&f, to_coeffs(p));
}

bool CycScalar::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycScalar::is_one() const noexcept {
    if (!coeffs_[0].is_one()) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycScalar::is_rational() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<Rational> CycScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CycScalar CycScalar::embed(int m) const {
    const int n = field_->order;
    if (m == n) return *this;
    if (m < 1 || m % n != 0)
        fail(Errc::NotADivisor, std::to_string(n) + " does not divide " + std::to_string(m));
    const CycloField& g = CycloField::get(m);
    const int step = m / n;
    Poly p(std::max<std::size_t>(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1, g.degree),
           Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    reduce(g, p);
    return CycScalar(&g, to_coeffs(p));
}

std::optional<CycScalar> CycScalar::restrict_to(int m) const {
    const int n = field_->order;
    if (m == n) return *this;
    if (m < 1 || n % m != 0)
        fail(Errc::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(n));
    const int dm = CycloField::get(m).degree;
    const int dn = field_->degree;
    // Columns: images of zeta_m^i in Q(zeta_n); augmented with the target.
    std::vector<Poly> rows(dn, Poly(dm + 1, Rational(0)));
    for (int i = 0; i < dm; ++i) {
        CycScalar img = root_of_unity(m, i).embed(n);
        for (int r = 0; r < dn; ++r) rows[r][i] = img.coeffs_[r];
    }
    for (int r = 0; r < dn; ++r) rows[r][dm] = coeffs_[r];
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < dm && rank < dn; ++c) {
        int p = rank;
        while (p < dn && rows[p][c].is_zero()) ++p;
        if (p == dn) continue;
        std::swap(rows[p], rows[rank]);
        Rational inv = rows[rank][c].inverse();
        for (auto& v : rows[rank]) v *= inv;
        for (int r = 0; r < dn; ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Rational fct = rows[r][c];
            for (int k = c; k <= dm; ++k) rows[r][k] -= fct * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < dn; ++r)
        if (!rows[r][dm].is_zero()) return std::nullopt;
    std::vector<Rational> sol(dm, Rational(0));
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = rows[r][dm];
    return from_coeffs(m, sol);
}

CycScalar CycScalar::minimized() const {
    if (is_rational()) return CycScalar(coeffs_[0]);
    for (int m : divisors(field_->order)) {
        if (CycloField::get(m).degree > field_->degree) continue;
        if (auto r = restrict_to(m)) return *r;
    }
    return *this;
}

CycScalar CycScalar::operator-() const {
    Coeffs c = coeffs_;
    for (auto& v : c) v = -v;
    return CycScalar(field_, std::move(c));
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
    if (field_ != b.field_) return *this = *this + b;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!b.coeffs_[i].is_zero()) coeffs_[i] += b.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
    if (field_ != b.field_) return *this = *this - b;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!b.coeffs_[i].is_zero()) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.field_ == b.field_) {
        CycScalar r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    int l = CycScalar::common_order(a.order(), b.order());
    return a.embed(l) + b.embed(l);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.field_ != b.field_) {
        if (a.order() == 1) {
            CycScalar r = b;
            for (auto& v : r.coeffs_) v *= a.coeffs_[0];
            return r;
        }
        if (b.order() == 1) {
            CycScalar r = a;
            for (auto& v : r.coeffs_) v *= b.coeffs_[0];
            return r;
        }
        int l = CycScalar::common_order(a.order(), b.order());
        return a.embed(l) * b.embed(l);
    }
    const CycloField& f = *a.field_;
    if (f.degree == 1) return CycScalar(&f, CycScalar::Coeffs{a.coeffs_[0] * b.coeffs_[0]});
    Poly p(2 * f.degree - 1, Rational(0));
    for (int i = 0; i < f.degree; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; j < f.degree; ++j)
            if (!b.coeffs_[j].is_zero()) p[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
    reduce(f, p);
    return CycScalar(&f, to_coeffs(p));
}

void CycScalar::add_product(const CycScalar& a, const CycScalar& b) {
    if (field_ == a.field_ && field_ == b.field_ && field_->degree == 1) {
        coeffs_[0].add_product(a.coeffs_[0], b.coeffs_[0]);
        return;
    }
    if (field_ == a.field_ && field_ == b.field_) {
        // Fused multiply-accumulate in a per-thread scratch buffer, avoiding temporaries.
        const CycloField& f = *field_;
        thread_local Poly p;
        p.assign(2 * f.degree - 1, Rational(0));
        bool any = false;
        for (int i = 0; i < f.degree; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < f.degree; ++j)
                if (!b.coeffs_[j].is_zero()) {
                    p[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
                    any = true;
                }
        }
        if (!any) return;
        reduce(f, p);
        for (int i = 0; i < f.degree; ++i)
            if (!p[i].is_zero()) coeffs_[i] += p[i];
        return;
    }
    *this += a * b;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    const CycloField& f = *field_;
    if (f.degree == 1) return CycScalar(&f, Coeffs{coeffs_[0].inverse()});
    // Extended Euclid: find s with s*a = 1 mod Phi_N.
    Poly phi(f.phi.begin(), f.phi.end());
    Poly r0 = phi, r1 = to_poly(coeffs_);
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) fail(Errc::DivisionByZero, "element shares a factor with the cyclotomic polynomial");
    }
    Rational c = r1[0].inverse();
    for (auto& v : s1) v *= c;
    if (static_cast<int>(s1.size()) < f.degree) s1.resize(f.degree, Rational(0));
    reduce(f, s1);
    return CycScalar(&f, to_coeffs(s1));
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

CycScalar CycScalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar result = CycScalar(field_, Coeffs(coeffs_.size()));
    result.coeffs_[0] = Rational(1);
    CycScalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.field_ == b.field_) {
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i]) return false;
        return true;
    }
    long long l = std::lcm(static_cast<long long>(a.order()), static_cast<long long>(b.order()));
    return a.embed(static_cast<int>(l)) == b.embed(static_cast<int>(l));
}

std::string CycScalar::str() const {
    std::string out;
    bool any = false;
    bool symbolic = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (any)
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        any = true;
        if (i == 0) {
            out += mag.str();
            continue;
        }
        symbolic = true;
        if (!mag.is_one()) out += mag.str() + "*";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (!any) return "0";
    if (symbolic) out += " (z = zeta_" + std::to_string(order()) + ")";
    return out;
}

CycScalar CycScalar::parse(std::string_view text) {
    std::string s(text);
    int n = 1;
    static const std::regex suffix(R"(\(\s*z\s*=\s*zeta_(\d+)\s*\)\s*$)");
    std::smatch m;
    if (std::regex_search(s, m, suffix)) {
        n = std::stoi(m[1].str());
        if (n < 1 || n > conductor_bound()) fail(Errc::ParseError, "bad conductor in '" + s + "'");
        s = s.substr(0, static_cast<std::size_t>(m.position(0)));
    }
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto digits = [&] {
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(b, i - b);
    };
    auto bad = [&]() -> CycScalar { fail(Errc::ParseError, "malformed scalar '" + std::string(text) + "'"); };
    skip();
    if (i == s.size()) bad();
    bool first = true;
    bool uses_z = false;
    while (true) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            bad();
        }
        first = false;
        Rational c(sign);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = digits();
            std::string lit = num;
            skip();
            if (i < s.size() && s[i] == '/') {
                ++i;
                skip();
                std::string den = digits();
                if (den.empty()) bad();
                lit += "/" + den;
            }
            c = c * Rational::parse(lit);
            have_coeff = true;
            skip();
        }
        std::size_t power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
            if (s[i] == '*') {
                if (!have_coeff) bad();
                ++i;
                skip();
                if (i >= s.size() || s[i] != 'z') bad();
            }
            ++i;  // the 'z'
            uses_z = true;
            power = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                std::string e = digits();
                if (e.empty()) bad();
                power = std::stoul(e);
            }
        } else if (!have_coeff) {
            bad();
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += c;
    }
    if (uses_z && n == 1 && !std::regex_search(std::string(text), suffix))
        fail(Errc::ParseError, "symbolic scalar without '(z = zeta_N)' suffix");
    if (coeffs.empty()) bad();
    return from_coeffs(n, coeffs);
}

std::size_t CycScalar::hash() const {
    CycScalar m = minimized();
    std::size_t h = std::hash<int>{}(m.order());
    for (const auto& c : m.coeffs_) h = h * 1000003u ^ c.hash();
    return h;
}

std::optional<int> root_of_unity_order(const CycScalar& c) {
    if (c.is_zero()) return std::nullopt;
    const int n = c.order();
    const int bound = (n % 2 == 0) ? n : 2 * n;
    for (int k : divisors(bound))
        if (c.pow(k).is_one()) return k;
    return std::nullopt;
}

}  // namespace kup
