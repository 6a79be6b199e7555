#include "kup/scalar/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "kup/error.hpp"

namespace kup {

namespace {

using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }  // exclude INT64_MIN so negation is safe

mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return z;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_class lo;
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Builds a rational from a 128-bit fraction, reducing first.
Rational from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational(0);
    if (d != 1) {
        i128 g = gcd128(n, d);
        if (g != 1) {
            n /= g;
            d /= g;
        }
    }
    if (fits(n) && fits(d)) return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    return Rational(q);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    if (n == kMin || d == kMin) {
        *this = from_wide(static_cast<i128>(n), static_cast<i128>(d));
        return;
    }
    normalize_small();
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

void Rational::normalize_small() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ != 1) {
        std::int64_t g = std::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    Rational r;
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin && d.get_si() != kMin) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    r.num_ = 0;
    r.den_ = 0;  // marks the big representation
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(to_mpz(num_), to_mpz(den_));
    return q;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(Errc::ParseError, "empty rational");
    std::size_t slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string ns = s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(ns) || !valid_int(ds) || ds[0] == '-' || ds[0] == '+')
        fail(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    if (ns[0] == '+') ns.erase(0, 1);
    mpz_class n(ns), d(ds);
    if (d == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    return from_mpq(mpq_class(n, d));
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            i128 s = static_cast<i128>(a.num_) + b.num_;
            if (fits(s)) return Rational(static_cast<std::int64_t>(s));
            return from_wide(s, 1);
        }
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational(0);
        if (a.den_ == 1 && b.den_ == 1) {
            i128 p = static_cast<i128>(a.num_) * b.num_;
            if (fits(p)) return Rational(static_cast<std::int64_t>(p));
            return from_wide(p, 1);
        }
        return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational Rational::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    return Rational(den_, num_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

void Rational::add_product(const Rational& b, const Rational& c) {
    if (!big_ && !b.big_ && !c.big_ && den_ == 1 && b.den_ == 1 && c.den_ == 1) {
        i128 v = static_cast<i128>(num_) + static_cast<i128>(b.num_) * c.num_;
        if (fits(v)) {
            num_ = static_cast<std::int64_t>(v);
            return;
        }
    }
    // Mixed fractions with moderate components: one fused reduction in 128-bit arithmetic.
    constexpr std::int64_t kSmall = std::int64_t{1} << 40;
    auto small = [&](const Rational& r) { return !r.big_ && r.num_ > -kSmall && r.num_ < kSmall && r.den_ < kSmall; };
    if (small(*this) && small(b) && small(c)) {
        if (b.num_ == 0 || c.num_ == 0) return;
        const i128 pd = static_cast<i128>(b.den_) * c.den_;
        const i128 n = static_cast<i128>(num_) * pd + static_cast<i128>(b.num_) * c.num_ * den_;
        *this = from_wide(n, pd * den_);
        return;
    }
    *this = *this + b * c;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits is never stored big
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
    if (!big_) {
        std::size_t h = std::hash<std::int64_t>{}(num_);
        return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    return std::hash<std::string>{}(big_->get_str());
}

}  // namespace kup
