/**
 * @file rational.hpp
 * @brief Exact rational numbers with a machine-word fast path.
 *
 * Values whose numerator and denominator fit in 64-bit signed words are kept
 * inline; any operation that would overflow transparently promotes to a GMP
 * rational. Big values are demoted back whenever they fit again, so equality
 * and hashing stay structural.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kup {

class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] int sign() const;

    /// Numerator/denominator as GMP integers (always available).
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;

    [[nodiscard]] std::string str() const;
    static Rational parse(std::string_view text);

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    /// a += b * c, the inner-loop primitive of polynomial products.
    void add_product(const Rational& b, const Rational& c);

    [[nodiscard]] Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    [[nodiscard]] std::size_t hash() const;

private:
    static Rational from_mpq(mpq_class q);
    void normalize_small();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace kup
