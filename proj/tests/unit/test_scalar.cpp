#include <doctest.h>

#include <random>

#include "kup/error.hpp"
#include "kup/scalar/cyclotomic.hpp"

using kup::CycScalar;
using kup::Errc;
using kup::Rational;

namespace {

CycScalar z(int n, int k = 1) { return CycScalar::root_of_unity(n, k); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const kup::Error& e) {
        return e.code();
    }
    FAIL("expected kup::Error");
    return Errc::BadParameters;
}

CycScalar random_element(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < kup::CycloField::get(n).degree; ++i) c.emplace_back(num(rng), den(rng));
    return CycScalar::from_coeffs(n, c);
}

}  // namespace

TEST_SUITE("scalar") {
    TEST_CASE("rational arithmetic is exact and promotes on overflow") {
        Rational a(1, 3), b(1, 6);
        CHECK(a + b == Rational(1, 2));
        CHECK(a * b == Rational(1, 18));
        CHECK(a / b == Rational(2));
        Rational big(std::int64_t{1} << 62);
        Rational sq = big * big;
        CHECK_FALSE(sq.is_small());
        CHECK(sq / big == big);
        CHECK((sq / big).is_small());
        CHECK(Rational::parse("-6/4") == Rational(-3, 2));
        CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == Errc::DivisionByZero);
    }

    TEST_CASE("cyclotomic polynomials") {
        CHECK(kup::CycloField::get(1).phi == std::vector<std::int64_t>{-1, 1});
        CHECK(kup::CycloField::get(4).phi == std::vector<std::int64_t>{1, 0, 1});
        CHECK(kup::CycloField::get(12).phi == std::vector<std::int64_t>{1, 0, -1, 0, 1});
        CHECK(kup::CycloField::get(7).degree == 6);
    }

    TEST_CASE("defining relations") {
        CHECK(z(4) * z(4) == CycScalar(-1));
        CHECK((CycScalar(1) + z(3) + z(3, 2)).is_zero());
        CHECK(z(7).pow(7).is_one());
        CHECK(z(7, -1) * z(7) == CycScalar(1));
    }

    TEST_CASE("inverse by extended Euclid multiplies back to one") {
        CycScalar a = CycScalar(1) - z(5);
        CycScalar c = a.inverse();
        CHECK((c * a).is_one());
        CHECK(code_of([] { (void)CycScalar(0).inverse(); }) == Errc::DivisionByZero);
    }

    TEST_CASE("embedding") {
        CHECK(CycScalar::from_coeffs(2, {Rational(-1)}).embed(4) == CycScalar(-1));
        CHECK(z(3).embed(6) == z(6, 2));
        CHECK(z(4).embed(12) == z(12, 3));
        CHECK(code_of([] { (void)z(4).embed(6); }) == Errc::NotADivisor);
        CycScalar x = CycScalar(2) - z(3) * Rational(1, 2);
        CHECK(*x.embed(12).restrict_to(3) == x);
        CHECK_FALSE(z(4).embed(12).restrict_to(3).has_value());
        CHECK(z(3) + z(4) == z(12, 4) + z(12, 3));
    }

    TEST_CASE("field axioms on random triples") {
        std::mt19937_64 rng(20240611);
        for (int n : {3, 4, 5, 7, 12}) {
            for (int trial = 0; trial < 20; ++trial) {
                CycScalar a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
                CHECK((a * b) * c == a * (b * c));
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a * b == b * a);
                if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
        }
    }

    TEST_CASE("conductor bound") {
        int old = kup::conductor_bound();
        kup::set_conductor_bound(20);
        CHECK(code_of([] { (void)(z(7) + z(5)); }) == Errc::ConductorOverflow);
        kup::set_conductor_bound(old);
    }

    TEST_CASE("render and parse round trip") {
        CycScalar v = z(7) * CycScalar(-42) + z(7, 2) * CycScalar(-35) + z(7, 3) * CycScalar(-28) +
                      z(7, 4) * CycScalar(-21) + z(7, 5) * CycScalar(-14) + z(7, 6) * CycScalar(-7);
        // zeta_7^6 = -(1 + z + ... + z^5) in the canonical basis.
        CHECK(v.str() == "7 - 35*z - 28*z^2 - 21*z^3 - 14*z^4 - 7*z^5 (z = zeta_7)");
        CHECK(CycScalar::parse("-42*z - 35*z^2 - 28*z^3 - 21*z^4 - 14*z^5 - 7*z^6 (z = zeta_7)") == v);
        CHECK(CycScalar::parse(v.str()) == v);
        CycScalar w = CycScalar(8) - z(4) * CycScalar(8);
        CHECK(w.str() == "8 - 8*z (z = zeta_4)");
        CHECK(CycScalar::parse("1/2 - 3/4*z^2 (z = zeta_5)").str() == "1/2 - 3/4*z^2 (z = zeta_5)");
        CHECK(CycScalar(Rational(-5, 3)).str() == "-5/3");
        CHECK(CycScalar::parse("z^4 (z = zeta_4)").is_one());
        CHECK(code_of([] { (void)CycScalar::parse("2*z"); }) == Errc::ParseError);
        CHECK(code_of([] { (void)CycScalar::parse("2 +"); }) == Errc::ParseError);
    }

    TEST_CASE("roots of unity") {
        CHECK(kup::root_of_unity_order(z(4)) == 4);
        CHECK(kup::root_of_unity_order(-z(3)) == 6);
        CHECK(kup::root_of_unity_order(CycScalar(1)) == 1);
        CHECK_FALSE(kup::root_of_unity_order(CycScalar(2)).has_value());
        CHECK_FALSE(kup::root_of_unity_order(CycScalar(1) + z(7)).has_value());
    }
}
