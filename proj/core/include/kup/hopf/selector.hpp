/**
 * @file selector.hpp
 * @brief Algebra selectors: a small grammar naming built-in and derived Hopf algebras.
 *
 *     group:<Z1|Z2|Z3|...|Z2xZ2|S3|Q8|D8>   group algebra of a named group
 *     group:<path>                         group algebra of a table file
 *     taft:<n>[:<k>]                       Taft algebra with zeta = zeta_n^k (k coprime to n)
 *     dual:<sel>   op:<sel>                dual / opposite
 *     tensor:<sel>,<sel>                   tensor product (split at the first top-level comma;
 *                                          parentheses may group nested selectors)
 *     file:<path>                          structure-constant file
 */
#pragma once

#include <string>
#include <vector>

#include "kup/hopf/builders.hpp"

namespace kup {

/// Named groups understood by `group:`.
GroupTable named_group(const std::string& name);

HopfData algebra_from_selector(const std::string& selector);

/// Selector grammar summary (used for --help text).
std::vector<std::pair<std::string, std::string>> algebra_selector_help();

/// The built-in algebra collection used by sweeps, in a fixed order.
std::vector<std::string> builtin_algebra_selectors();

}  // namespace kup
