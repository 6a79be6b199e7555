/**
 * @file framed_diagram.hpp
 * @brief Framed Heegaard diagrams: data model, text format, admissibility, stabilization
 *        and compilation into evaluation plans.
 *
 * Rotation numbers are stored exactly as integers: theta in units of 1/4 turn and phi in
 * units of 1/2. Per-point values are the aggregates from the curve's base point up to the
 * point; curve totals are supplied separately (the half contribution of the base point to
 * phi is folded into the total).
 *
 * Text format (line oriented, `#` starts a comment):
 *
 *     genus <g>
 *     lower <name> total_theta <q> total_phi <q>
 *       point <id> theta <q> phi <q>
 *     upper <name> total_theta <q> total_phi <q>
 *       point <id> theta <q> phi <q>
 *
 * where <q> is an integer or a fraction such as -3/4, and points are listed in traversal
 * order from the curve's base point.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kup {

struct CurvePoint {
    std::string id;
    int theta4 = 0;  ///< rotation of the tangent relative to the combing, in quarter turns
    int phi2 = 0;    ///< signed twist-front crossings, in half units
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct Curve {
    std::string name;
    int total_theta4 = 0;
    int total_phi2 = 0;
    std::vector<CurvePoint> points;
    friend bool operator==(const Curve&, const Curve&) = default;
};

struct FramedDiagram {
    int genus = 0;
    std::vector<Curve> lower;  ///< eta_1 .. eta_g
    std::vector<Curve> upper;  ///< mu_1 .. mu_g
    friend bool operator==(const FramedDiagram&, const FramedDiagram&) = default;
};

/// Combinatorial payload of a framed diagram, everything the evaluator needs.
///
/// Points are indexed 1..n in lower order (curve by curve, traversal order within a curve).
/// sigma lists, for the r-th point in upper order, its lower index: p_{sigma[r-1]} = p^r.
struct EvalPlan {
    int genus = 0;
    int n = 0;
    std::vector<int> sigma;                      ///< 1-based lower indices in upper order
    std::vector<int> s;                          ///< antipode exponent per lower-ordered point
    std::vector<int> t;                          ///< T exponent per lower-ordered point
    std::vector<int> lower_sizes;                ///< number of points on each lower curve
    std::vector<std::vector<int>> upper_orders;  ///< per upper curve, 1-based lower indices in traversal order
    std::vector<int> theta_lower4;               ///< theta(eta_i), quarter units
    std::vector<int> theta_upper4;               ///< theta(mu_j), quarter units
    friend bool operator==(const EvalPlan&, const EvalPlan&) = default;
};

/// Parses the text format; checks point incidence (DuplicatePoint, OrphanPoint) and rotation
/// grain (BadRotationGrain); SyntaxError names the offending line.
FramedDiagram parse_diagram(std::string_view text);

/// Canonical text form; parse_diagram(write_diagram(d)) == d.
std::string write_diagram(const FramedDiagram& d);

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<std::string> failures;  ///< one message per failing curve, naming it
};

/// theta = -phi on every upper curve and theta = phi on every lower curve.
AdmissibilityReport check_admissibility(const FramedDiagram& d);

/// s_r = 2(theta_eta(p_r) - theta_mu(p_r)) + 1/2 and t_r = phi_eta(p_r) - phi_mu(p_r);
/// NotAdmissible when the diagram fails admissibility, BadRotationGrain when s_r or t_r
/// is not an integer.
EvalPlan compile_plan(const FramedDiagram& d);

/// Adds one handle carrying a lower and an upper curve through a single new point, with
/// theta_eta(p) = 1/4, phi_eta(p) = 0, totals (1/2, 1/2) and theta_mu(p) = phi_mu(p) = 0,
/// totals (1/2, -1/2).
FramedDiagram stabilize(const FramedDiagram& d);

/// Renders a quarter-unit rotation as a reduced fraction ("-3/4", "1/2", "0").
std::string quarter_str(int theta4);

/// Human-readable summary of a plan (sigma, s, t, partitions, totals).
std::string describe_plan(const EvalPlan& p);

}  // namespace kup
