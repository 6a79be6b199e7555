/**
 * @file request.hpp
 * @brief Invariant requests: a selector grammar naming manifolds and invariants, evaluation
 *        along a primary and an independent alternate route, and the gauge, multiplicativity
 *        and duality harnesses.
 *
 * Selectors:
 *
 *     s3 | s2xs1 | q8                      fixture diagrams
 *     lens:<n>:<k>:<fR|fL>                 lens space L(n,k) with a diagram framing
 *     nu:<n>                               generalized Frobenius-Schur indicator (any integer n)
 *     nu:<n>:<k>  nu-prime:<n>:<k>         nu_{n,k} and nu'_{n,k}
 *     nu-tilde:<n>:<k>                     shuffled indicator
 *     seifert:<m>:<n>                      genus-2 Seifert manifold M_{m,n}
 *     plan:<path>                          diagram file in the text format
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kup/diagram/builders.hpp"
#include "kup/hopf/hopf_data.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/twist/cocycle.hpp"

namespace kup {

enum class InvariantKind { plan, s3, s2xs1, q8, lens, nu, nu_nk, nu_prime, nu_tilde, seifert };

struct InvariantRequest {
    InvariantKind kind = InvariantKind::s3;
    int a = 0;  ///< n (lens, nu*), m (seifert)
    int b = 0;  ///< k (lens, nu*), n (seifert)
    LensFraming framing = LensFraming::R;
    std::optional<FramedDiagram> diagram;  ///< for plan requests
    std::string text;                      ///< selector the request was parsed from

    /// Parameter constraints (coprimality, parity, ranges); throws the matching error.
    void validate() const;
};

/// Parses a selector; `plan:<path>` reads and parses the file.
InvariantRequest parse_request(const std::string& selector);

/// Selector grammar summary (used for --help text).
std::vector<std::pair<std::string, std::string>> request_selector_help();

/// How a value is obtained.
///  - primary: algebraic formulas (Radford-trace Sweedler forms, the factored genus-2 product);
///    fixture and file requests go through the plan evaluator.
///  - alternate: an independent path: plan evaluation for lens spaces, nu_n (n >= 2 via
///    L(n, n-1), n = 1 via the 3-sphere, n = 0 via S^2 x S^1) and M_{m,n}; matrix traces for the
///    shuffled indicator; nu_{-n} = alpha(g)^{-1} nu_n(H^op) for negative n.
enum class Route { primary, alternate };

CycScalar evaluate(const InvariantRequest& req, const HopfData& h, Route route = Route::primary);

/// The fixture diagram behind a request, when it has one (plan, s3, s2xs1, q8, lens, seifert).
std::optional<FramedDiagram> request_diagram(const InvariantRequest& req);

struct CheckReport {
    std::string what;
    CycScalar lhs, rhs;
    bool passed = false;
};

/// Invariant of H and of the Drinfeld twist H_F, whose integrals are solved from scratch.
CheckReport gauge_check(const InvariantRequest& req, const HopfData& h, const TwoCocycle& c);

/// K(H (x) K) against K(H) K(K).
CheckReport multiplicativity_check(const InvariantRequest& req, const HopfData& h, const HopfData& k);

/// K(H) against K(H*).
CheckReport duality_check(const InvariantRequest& req, const HopfData& h);

}  // namespace kup
