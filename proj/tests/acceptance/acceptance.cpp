/**
 * @file acceptance.cpp
 * @brief Acceptance run: one PASS/FAIL line per criterion, each with its own time budget.
 *
 * Usage: kup_acceptance [criterion ...]   (no arguments runs criteria 1-8)
 *
 * A criterion passes when every exact equality it lists holds and the wall-clock time stays
 * within its budget. Failing checks are listed on stderr under the criterion line. The exit
 * status is 0 exactly when every selected criterion passes.
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kup/diagram/builders.hpp"
#include "kup/diagram/framed_diagram.hpp"
#include "kup/error.hpp"
#include "kup/hopf/builders.hpp"
#include "kup/hopf/identities.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/invariants/closed_forms.hpp"
#include "kup/invariants/kuperberg.hpp"
#include "kup/invariants/request.hpp"
#include "kup/twist/cocycle.hpp"
#include "kup/twist/fn_identities.hpp"

using namespace kup;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects the outcome of every check inside one criterion.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    /// lhs == rhs, reporting both values on failure.
    void equal(const CycScalar& lhs, const CycScalar& rhs, const std::string& what) {
        check(lhs == rhs, what + ": " + lhs.str() + " vs " + rhs.str());
    }
    void budget(double elapsed, double limit, const std::string& what) {
        std::ostringstream os;
        os << what << " took " << elapsed << " s, budget " << limit << " s";
        check(elapsed <= limit, os.str());
    }
    [[nodiscard]] int checks() const { return checks_; }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    int checks_ = 0;
    std::vector<std::string> failures_;
};

bool is_group(const std::string& sel) { return sel.rfind("group:", 0) == 0; }
bool is_taft(const std::string& sel) { return sel.rfind("taft:", 0) == 0; }

CycScalar plan_value(const FramedDiagram& d, const HopfData& h) { return kuperberg(compile_plan(d), h); }

/// Smallest k >= 1 with c^k = 1, or 0 if there is none up to the bound.
int root_order(const CycScalar& c, int bound) {
    CycScalar p = c;
    for (int k = 1; k <= bound; ++k, p *= c)
        if (p.is_one()) return k;
    return 0;
}

// ---------------------------------------------------------------------------------------
// 1. Taft golden values.
void taft_golden(Tally& t) {
    {
        const auto t0 = Clock::now();
        const HopfData t7 = taft(7);
        // -42 z - 35 z^2 - 28 z^3 - 21 z^4 - 14 z^5 - 7 z^6 (z = zeta_7), unreduced.
        const CycScalar golden = CycScalar::from_coeffs(7, {0, -42, -35, -28, -21, -14, -7});
        const InvariantRequest l71 = parse_request("lens:7:1:fL"), l72 = parse_request("lens:7:2:fR");
        for (const Route r : {Route::primary, Route::alternate}) {
            const std::string route = r == Route::primary ? "closed form" : "diagram plan";
            t.equal(evaluate(l71, t7, r), golden, "K(L(7,1), f_L, T(zeta_7)) by " + route);
            t.equal(evaluate(l72, t7, r), CycScalar(0), "K(L(7,2), f_R, T(zeta_7)) by " + route);
        }
        t.budget(seconds_since(t0), 60, "L(7, .) on T(zeta_7)");
    }
    {
        const auto t0 = Clock::now();
        const HopfData ti = taft(4, CycScalar::root_of_unity(4));
        const CycScalar i = CycScalar::root_of_unity(4);
        for (const Route r : {Route::primary, Route::alternate}) {
            const std::string route = r == Route::primary ? "closed form" : "diagram plan";
            t.equal(evaluate(parse_request("lens:4:1:fR"), ti, r), CycScalar(0), "K(L(4,1), f_R, T(i)) by " + route);
            t.equal(evaluate(parse_request("lens:4:1:fL"), ti, r), CycScalar(8) * (CycScalar(1) - i),
                    "K(L(4,1), f_L, T(i)) by " + route);
        }
        t.budget(seconds_since(t0), 5, "L(4,1) on T(i)");
    }
}

// ---------------------------------------------------------------------------------------
// 2. The 3-sphere and S^2 x S^1 on every built-in algebra of dimension <= 16.
void baseline_manifolds(Tally& t) {
    const FramedDiagram s3 = s3_diagram(), s2s1 = s2xs1_diagram();
    for (const auto& sel : builtin_algebra_selectors()) {
        const HopfData h = algebra_from_selector(sel);
        if (h.dim() > 16) continue;
        const CycScalar trS2 = h.antipode_power(2).trace();
        t.equal(plan_value(s3, h), CycScalar(1), "K(S^3) on " + sel);
        t.equal(plan_value(s2s1, h), trS2, "K(S^2 x S^1) = Tr(S^2) on " + sel);
        if (is_group(sel)) t.equal(trS2, CycScalar(h.dim()), "Tr(S^2) = dim on " + sel);
        if (is_taft(sel)) t.equal(trS2, CycScalar(0), "Tr(S^2) = 0 on " + sel);
    }
}

// ---------------------------------------------------------------------------------------
// 3. nu_n of group algebras against root counting.
void group_indicators(Tally& t) {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3", "Q8"}) {
        const GroupTable g = named_group(name);
        const HopfData h = group_algebra(g);
        for (int n = 1; n <= 6; ++n) {
            const CycScalar count(g.count_roots(n));
            const InvariantRequest req = parse_request("nu:" + std::to_string(n));
            const std::string what = "nu_" + std::to_string(n) + "(k[" + name + "])";
            t.equal(evaluate(req, h, Route::primary), count, what + " closed form vs #{x^n = 1}");
            t.equal(evaluate(req, h, Route::alternate), count, what + " diagram plan vs #{x^n = 1}");
        }
    }
}

// ---------------------------------------------------------------------------------------
// 4. Diagram plans against closed forms.
void path_equivalence(Tally& t) {
    for (const char* sel : {"group:Z2", "group:S3", "taft:4"}) {
        const HopfData h = algebra_from_selector(sel);
        const IntegralData I = integrals(h);
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k < n; ++k) {
                if (std::gcd(n, k) != 1) continue;
                const std::string lk = "L(" + std::to_string(n) + "," + std::to_string(k) + ")";
                if ((n - k) % 2 == 1)
                    t.equal(plan_value(lens_diagram(n, k, LensFraming::R), h), lens_fR_closed(n, k, h, I),
                            lk + " f_R plan vs closed on " + sel);
                if (k % 2 == 1)
                    t.equal(plan_value(lens_diagram(n, k, LensFraming::L), h), lens_fL_closed(n, k, h),
                            lk + " f_L plan vs closed on " + sel);
            }
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) {
                const std::string mn = "M_{" + std::to_string(m) + "," + std::to_string(n) + "} on " + sel;
                const CycScalar closed = genus2(m, n, h, I);
                t.equal(plan_value(seifert_diagram(m, n), h), closed, mn + ": plan vs factored product");
                t.equal(genus2_psi_trace(m, n, h), closed, mn + ": Psi trace vs factored product");
            }
    }
}

// ---------------------------------------------------------------------------------------
// 5. Gauge invariance under nontrivial bicharacter twists.
void gauge_invariance(Tally& t) {
    std::vector<std::string> selectors;
    for (int n = -3; n <= 5; ++n) selectors.push_back("nu:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            selectors.push_back("nu:" + std::to_string(n) + ":" + std::to_string(k));
            selectors.push_back("nu-tilde:" + std::to_string(n) + ":" + std::to_string(k));
        }
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) selectors.push_back("seifert:" + std::to_string(m) + ":" + std::to_string(n));

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"taft:4", "taft-bichar:1"}, {"taft:3", "taft-bichar:1"}, {"dual:group:Z2xZ2", "klein"}};
    for (const auto& [asel, csel] : cases) {
        const HopfData h = algebra_from_selector(asel);
        const TwoCocycle c = cocycle_from_selector(h, csel);
        t.check(c.F() != trivial_cocycle(h).F(), csel + " on " + asel + " is not 1 (x) 1");
        for (const auto& sel : selectors) {
            const CheckReport r = gauge_check(parse_request(sel), h, c);
            t.check(r.passed, sel + " on " + asel + " twisted by " + csel + ": " + r.lhs.str() + " vs " + r.rhs.str());
        }
    }
}

// ---------------------------------------------------------------------------------------
// 6. Identity suites.
void identity_suites(Tally& t) {
    for (const auto& sel : builtin_algebra_selectors()) {
        const HopfData h = algebra_from_selector(sel);
        const SuiteReport r = identity_suite(h, integrals(h), 20240611, 3);
        t.check(r.table().size() == 8, "all eight integral identities evaluated on " + sel);
        for (const auto& row : r.table())
            t.check(row.failed == 0, row.name + " on " + sel + " (first failure: " + row.first_failure + ")");
    }
    const std::vector<std::pair<std::string, std::string>> cocycles = {
        {"taft:2", "taft-bichar:1"},     {"taft:3", "taft-bichar:1"}, {"taft:4", "taft-bichar:1"},
        {"dual:group:Z2xZ2", "klein"}, {"group:Z2xZ2", "klein"},    {"group:D8", "klein"}};
    for (const auto& [asel, csel] : cocycles) {
        const HopfData h = algebra_from_selector(asel);
        const SuiteReport r = fn_identity_suite(cocycle_from_selector(h, csel), 5);
        t.check(r.table().size() == 18, "all eighteen cocycle identities evaluated for " + csel + " on " + asel);
        for (const auto& row : r.table())
            t.check(row.failed == 0,
                    row.name + " for " + csel + " on " + asel + " (first failure: " + row.first_failure + ")");
    }
}

// ---------------------------------------------------------------------------------------
// 7. Radford's formula, alpha(g), stabilization, the Q8 plan.
void structural(Tally& t) {
    std::vector<FramedDiagram> fixtures;
    for (const auto& name : fixture_names()) fixtures.push_back(fixture_diagram(name));
    const auto names = fixture_names();
    for (const auto& sel : builtin_algebra_selectors()) {
        const HopfData h = algebra_from_selector(sel);
        const IntegralData I = integrals(h);
        t.check(h.antipode_power(4) == radford_map(h, I), "S^4 = Radford conjugation on " + sel);
        const int ord = root_order(pair(I.alpha, I.g), h.dim());
        t.check(ord > 0 && h.dim() % ord == 0, "alpha(g) is a root of unity of order dividing dim on " + sel);
        for (std::size_t i = 0; i < fixtures.size(); ++i)
            t.equal(plan_value(stabilize(fixtures[i]), h), plan_value(fixtures[i], h),
                    "stabilized " + names[i] + " on " + sel);
    }
    const EvalPlan q = compile_plan(q8_diagram());
    // sigma = (2 6)(4 8) as a permutation of 1..8.
    std::vector<int> sigma(8);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[1], sigma[5]);
    std::swap(sigma[3], sigma[7]);
    t.check(q.sigma == sigma, "Q8 plan sigma = (2 6)(4 8)");
    // S-terms read along the upper curves: mu_1 meets p1, p6, p3, p8 with S, S^3, S^2, S;
    // mu_2 meets p5, p2, p7, p4 with S, S, S^2, S^3.
    const std::vector<std::pair<int, int>> table = {{1, 1}, {6, 3}, {3, 2}, {8, 1}, {5, 1}, {2, 1}, {7, 2}, {4, 3}};
    for (const auto& [point, exponent] : table)
        t.check(q.s.size() == 8 && q.s[point - 1] == exponent,
                "Q8 plan: S-exponent at p" + std::to_string(point) + " is " + std::to_string(exponent));
}

// ---------------------------------------------------------------------------------------
// 8. Multiplicativity and duality.
void multiplicativity_duality(Tally& t) {
    const std::vector<std::string> factors = {"group:Z2", "group:Z3", "group:S3",         "group:Q8",
                                              "taft:2",   "op:taft:2", "dual:group:Z2xZ2", "dual:group:S3"};
    std::vector<HopfData> hs;
    for (const auto& sel : factors) hs.push_back(algebra_from_selector(sel));
    for (const auto& h : hs) t.check(h.dim() <= 8, h.name() + " has dimension at most 8");

    std::vector<InvariantRequest> nus;
    for (int n = 1; n <= 4; ++n) nus.push_back(parse_request("nu:" + std::to_string(n)));

    for (std::size_t a = 0; a < hs.size(); ++a) {
        for (const auto& req : nus) {
            const CheckReport d = duality_check(req, hs[a]);
            t.check(d.passed, d.what + ": " + d.lhs.str() + " vs " + d.rhs.str());
        }
        for (std::size_t b = a; b < hs.size(); ++b)
            for (const auto& req : nus) {
                const CheckReport m = multiplicativity_check(req, hs[a], hs[b]);
                t.check(m.passed, m.what + ": " + m.lhs.str() + " vs " + m.rhs.str());
            }
    }
    // K(H (x) (H^op)^*) = K(H) K(H^op).
    std::vector<InvariantRequest> reqs = nus;
    reqs.push_back(parse_request("lens:4:1:fL"));
    for (const char* sel : {"taft:2", "group:S3", "dual:group:S3", "group:Q8"}) {
        const HopfData h = algebra_from_selector(sel);
        const HopfData hop = opposite(h);
        const HopfData dh = tensor_product(h, dual(hop));
        for (const auto& req : reqs)
            t.equal(evaluate(req, dh), evaluate(req, h) * evaluate(req, hop),
                    req.text + " on " + std::string(sel) + " (x) (" + sel + "^op)^*");
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<void(Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "Taft golden values", 65, taft_golden},
        {2, "S^3 and S^2 x S^1 on built-ins of dim <= 16", 5, baseline_manifolds},
        {3, "nu_n(k[G]) = #{x : x^n = 1}", 10, group_indicators},
        {4, "diagram plans = closed forms (lens n <= 8, genus 2)", 180, path_equivalence},
        {5, "gauge invariance under bicharacter twists", 180, gauge_invariance},
        {6, "integral and cocycle identity suites", 120, identity_suites},
        {7, "Radford, alpha(g), stabilization, Q8 plan", 30, structural},
        {8, "multiplicativity and duality", 60, multiplicativity_duality},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int id = std::atoi(argv[i]);
        if (id < 1 || id > static_cast<int>(all.size())) {
            std::cerr << "usage: kup_acceptance [criterion 1-8 ...]\n";
            return 2;
        }
        selected.insert(id);
    }

    bool all_passed = true;
    for (const auto& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Tally t;
        const auto t0 = Clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.check(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(t0);
        t.budget(elapsed, c.budget, "criterion");
        const bool ok = t.failures().empty();
        all_passed = all_passed && ok;
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d %s  %-52s %5d checks  %7.2f s / %g s", c.id,
                      ok ? "PASS" : "FAIL", c.title, t.checks(), elapsed, c.budget);
        std::cout << line << std::endl;
        for (const auto& f : t.failures()) std::cerr << "    - " << f << "\n";
    }
    return all_passed ? 0 : 1;
}
