/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * An element of Q(zeta_N) is stored in the power basis 1, z, ..., z^{d-1}
 * with d = deg Phi_N and z = zeta_N = exp(2*pi*i/N). Every product is reduced
 * modulo the N-th cyclotomic polynomial, so the representation is canonical.
 * Operands living in different fields are first embedded in Q(zeta_L) with L
 * the least common multiple of the two conductors.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "kup/scalar/rational.hpp"

namespace kup {

/// Static data for one cyclotomic field; instances live in a process-wide registry.
struct CycloField {
    int order = 1;                       ///< conductor N
    int degree = 1;                      ///< deg Phi_N = Euler phi(N)
    std::vector<std::int64_t> phi;       ///< coefficients of Phi_N, low degree first, monic
    std::vector<std::pair<int, std::int64_t>> tail;  ///< nonzero (k, phi_k) for k < degree

    /// Returns the registered field of conductor n (created on first use).
    static const CycloField& get(int n);
};

/// Largest conductor allowed to arise from arithmetic (default 10^4).
int conductor_bound();
void set_conductor_bound(int bound);

class CycScalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 6>;

    CycScalar() : field_(&CycloField::get(1)), coeffs_(1) {}
    CycScalar(std::int64_t v) : field_(&CycloField::get(1)), coeffs_{Rational(v)} {}  // NOLINT
    CycScalar(Rational v) : field_(&CycloField::get(1)), coeffs_{std::move(v)} {}    // NOLINT

    /// zeta_N^k, reduced into the power basis of Q(zeta_N).
    static CycScalar root_of_unity(int n, std::int64_t k = 1);
    /// Element of Q(zeta_N) from a coefficient list (any length; reduced mod Phi_N).
    static CycScalar from_coeffs(int n, const std::vector<Rational>& coeffs);

    [[nodiscard]] int order() const noexcept { return field_->order; }
    [[nodiscard]] const Coeffs& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] bool is_rational() const noexcept;
    /// The rational value when the element lies in Q.
    [[nodiscard]] std::optional<Rational> as_rational() const;

    /// Same element viewed in Q(zeta_m); requires order() | m.
    [[nodiscard]] CycScalar embed(int m) const;
    /// Inverse of embed: the element of Q(zeta_m) mapping to *this, if it exists.
    [[nodiscard]] std::optional<CycScalar> restrict_to(int m) const;
    /// Embeds into the smallest cyclotomic field containing the element.
    [[nodiscard]] CycScalar minimized() const;

    CycScalar operator-() const;
    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
    CycScalar& operator+=(const CycScalar& b);
    CycScalar& operator-=(const CycScalar& b);
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }
    CycScalar& operator/=(const CycScalar& b) { return *this = *this / b; }

    /// *this += a * b without a temporary when all conductors agree.
    void add_product(const CycScalar& a, const CycScalar& b);

    [[nodiscard]] CycScalar inverse() const;
    [[nodiscard]] CycScalar pow(std::int64_t e) const;

    /// Structural equality after embedding both sides into a common field.
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Canonical text: `a0 + a1*z + a2*z^2 ... (z = zeta_N)`, suffix omitted for rationals.
    [[nodiscard]] std::string str() const;
    static CycScalar parse(std::string_view text);

    [[nodiscard]] std::size_t hash() const;

private:
    CycScalar(const CycloField* f, Coeffs c) : field_(f), coeffs_(std::move(c)) {}
    static int common_order(int a, int b);

    const CycloField* field_;
    Coeffs coeffs_;
};

/// If c is a root of unity, returns its multiplicative order.
std::optional<int> root_of_unity_order(const CycScalar& c);

}  // namespace kup
