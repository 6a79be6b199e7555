/**
 * @file identities.hpp
 * @brief Executable suite of the integral identities (Radford trace formula and relatives).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kup/hopf/hopf_data.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/report.hpp"

namespace kup {

struct NamedMap {
    std::string name;
    LinearMap map;
};

/// id, S, S^2 and `random_maps` sparse random maps drawn from the given seed.
std::vector<NamedMap> test_maps(const HopfData& h, std::uint64_t seed, int random_maps = 2);

/// Checks, over all basis elements and every test map:
///  cointegral-swap           lambda(ab) = lambda(S^2(b <- alpha) a)
///  cointegral-antipode-swap  lambdaS(ab) = lambdaS(b S(S(a) <- alpha))
///  integral-move-left        Lambda_1 (x) a Lambda_2 = S(a) Lambda_1 (x) Lambda_2
///  integral-move-right       Lambda_1 a (x) Lambda_2 = Lambda_1 (x) Lambda_2 S(a <- alpha)
///  trace-formula             Tr(X) = lambda(S(Lambda_2) X(Lambda_1)) = lambda(S(X(Lambda_2)) Lambda_1)
///  antipode-cointegral-move  lambdaS(a X(Lambda_1) Lambda_2) = lambdaS(X(Lambda_1 S(a)) Lambda_2)
///  power-move-left           lambdaS(x Y(Lambda_1) P^(n)(Lambda_2)) = lambdaS(Y(S^2(x_1) Lambda_1 S(x_3)) S^2(x_2) P^(n)(Lambda_2))
///  power-move-right          lambdaS(P^(n-1)(Lambda_1) Y(Lambda_2) x Lambda_3)
///                  = lambdaS(P^(n-1)(Lambda_1) S^2(x_2) Y(S(x_1) Lambda_2 S^2(x_3)) Lambda_3)
/// with n in 1..max_power.
SuiteReport identity_suite(const HopfData& h, const IntegralData& I, std::uint64_t seed = 20240611,
                           int max_power = 3);

}  // namespace kup
