/**
 * @file cli.hpp
 * @brief The kupinv command-line front end as a callable function.
 *
 * Commands:
 *
 *     invariant   --manifold <sel> (--algebra <sel> | --all-builtins) [--route primary|alternate|both]
 *     axioms      --algebra <sel>
 *     integrals   --algebra <sel>
 *     identities  --algebra <sel> [--cocycle <sel>] [--seed <n>] [--max-power <n>] [--max-fn <n>]
 *     gauge-test  --manifold <sel> --algebra <sel> --cocycle <sel>
 *     parse       --file <path> [--echo]
 *
 * `--machine` (before or after the command) switches to one `key = value` line per result.
 *
 * Exit codes: 0 success; 1 invalid input (arguments, selectors, files, diagram parameters);
 * 2 a computation failed or a check did not hold (axioms, identities, gauge equality, route
 * agreement, integral solving).
 */
#pragma once

#include <ostream>

namespace kup::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_failed = 2;

/// Runs one kupinv invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kup::cli
