/**
 * @file text_format.hpp
 * @brief Line-oriented structure-constant serialization of Hopf algebras.
 *
 * Format (`#` starts a comment, scalars use the canonical cyclotomic rendering):
 *
 *     hopf <name>
 *     dim <n>
 *     labels <l_0> ... <l_{n-1}>
 *     m i j k = <scalar>     coefficient of e_k in e_i e_j
 *     d i j k = <scalar>     coefficient of e_j (x) e_k in Delta(e_i)
 *     s i j = <scalar>       coefficient of e_j in S(e_i)
 *     e i = <scalar>         eps(e_i)
 *     u i = <scalar>         coefficient of e_i in the unit
 *
 * Only nonzero constants are written; reading then writing is byte-exact.
 */
#pragma once

#include <string>
#include <string_view>

#include "kup/hopf/hopf_data.hpp"

namespace kup {

std::string write_hopf(const HopfData& h);
HopfData read_hopf(std::string_view text);

}  // namespace kup
