/**
 * @file fn_identities.hpp
 * @brief Executable identities for the iterated cocycle tensors F_n of a 2-cocycle.
 *
 * Notation: F_n = f^[1] (x) ... (x) f^[n], F_n^{-1} = d^[1] (x) ... (x) d^[n],
 * I_j(w, v) inserts the legs of w before leg j of v, and (-)^rev reverses the legs.
 * Every identity is evaluated as an exact tensor equality; a parameter choice is
 * included when every F_k it touches has k <= max_n.
 *
 *  recursions-agree        F_n from (1 (x) F_{n-1})(id (x) Delta^{n-1})(F) equals (F_{n-1} (x) 1)(Delta^{n-1} (x) id)(F)
 *  inverse                 F_n F_n^{-1} = F_n^{-1} F_n = 1
 *  twisted-coproduct       Delta_F^n(h) = F_n Delta^n(h) F_n^{-1} on basis h
 *  insertion               F_{m+n} = I_j(F_m, 1^{(x)n}) (id^{j-1} (x) Delta^m (x) id^{n+1-j})(F_{n+1})
 *  insertion-inverse       F_{m+n}^{-1} = (id^{j-1} (x) Delta^m (x) id^{n+1-j})(F_{n+1}^{-1}) I_j(F_m^{-1}, 1^{(x)n})
 *  splitting               F_{m+n} = (F_m (x) F_n)(Delta^m (x) Delta^n)(F)
 *  reduction               I_m(1, F_{n-2}) = ... (x) S(f^[m]) u^{-1} f^[m+1] (x) ...   (legs of F_n)
 *  reduction-inverse       I_m(1, F_{n-2}^{-1}) = ... (x) d^[m] u S(d^[m+1]) (x) ...  (legs of F_n^{-1})
 *  u-from-F                1 (x) u^{(x)n} through F_{2n+1} and through F_{n+1}
 *  Sinv-uinv-from-Finv     1 (x) S^{-1}(u^{-1})^{(x)n} through F_{2n+1}^{-1} and F_{n+1}^{-1}
 *  u-power                 u^{(x)n} through F_{2n}, F_n and S^{(x)n}(F_n)
 *  uinv-power              (u^{-1})^{(x)n} through F_{2n}^{-1}, S^{(x)n}(F_n^{-1}) and F_n^{-1}
 *  coproduct-u             Delta^n(u) = F_n^{-1} u^{(x)n} (S^{(x)n}(F_n^{-1}))^rev
 *  antipode-Finv-contract  (x)_l S(d^[1]_(n+1-l)) d^[l+1] = (x)_l S(f^[n+1-l]) u^{-1} = (x)_l u^{-1}_(l) d^[l]
 *  antipode-F-contract     (x)_l f^[1]_(l) S(f^[n+2-l]) = (x)_l d^[l] u = (x)_l u_(l) S(f^[n+1-l])
 *  antipode-F-contract-rev (x)_l f^[n+1-l] S(f^[n+1]_(l)) = (x)_l u S(d^[l]) = (x)_l f^[n+1-l] u_(n+1-l)
 *  coproduct-Q             F_n Delta^n(Q) = Q^{(x)n} (S^2)^{(x)n}(F_n)
 *  Q-conjugation           S_F^{2s}(x) = Q_s S^{2s}(x) Q_s^{-1}, |s| <= 2, on basis x
 */
#pragma once

#include "kup/report.hpp"
#include "kup/twist/cocycle.hpp"

namespace kup {

SuiteReport fn_identity_suite(const TwoCocycle& c, int max_n = 5);

}  // namespace kup
