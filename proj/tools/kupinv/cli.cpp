#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kup/diagram/framed_diagram.hpp"
#include "kup/error.hpp"
#include "kup/hopf/identities.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/invariants/request.hpp"
#include "kup/twist/cocycle.hpp"
#include "kup/twist/fn_identities.hpp"

namespace kup::cli {

namespace {

/// Errors that mean the user asked for something malformed, as opposed to a computation
/// that could not be completed.
bool is_input_error(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::SyntaxError:
        case Errc::DuplicatePoint:
        case Errc::OrphanPoint:
        case Errc::BadRotationGrain:
        case Errc::NotAdmissible:
        case Errc::BadParity:
        case Errc::NotCoprime:
        case Errc::BadParameters:
        case Errc::NotAGroup:
        case Errc::ArityMismatch:
        case Errc::DimensionMismatch:
        case Errc::NotInverse:
        case Errc::CocycleIdentityFails: return true;
        default: return false;
    }
}

std::string help_table(const std::string& title, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    std::ostringstream os;
    os << title << ":\n";
    for (const auto& [k, v] : rows) os << "  " << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    return os.str();
}

/// Linear combination with basis labels, e.g. "1 + (-1)*g".
std::string vec_str(const HopfData& h, const SparseVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : v.entries()) {
        if (!s.empty()) s += " + ";
        if (c.is_one()) s += h.labels()[i];
        else s += "(" + c.str() + ")*" + h.labels()[i];
    }
    return s;
}

/// Values of a functional on the basis, e.g. "{1: 1, g: -1}".
std::string covec_str(const HopfData& h, const Covector& f) {
    std::string s = "{";
    for (int i = 0; i < h.dim(); ++i) s += (i ? ", " : "") + h.labels()[i] + ": " + f[i].str();
    return s + "}";
}

/// Smallest k >= 1 with c^k = 1, or 0 if none up to the bound.
int root_order(const CycScalar& c, int bound) {
    CycScalar p = c;
    for (int k = 1; k <= bound; ++k, p *= c)
        if (p.is_one()) return k;
    return 0;
}

class Printer {
public:
    Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
    [[nodiscard]] bool machine() const { return machine_; }
    /// In machine mode a `key = value` line (spaces in keys become dashes); in human mode
    /// `label: value`.
    void field(const std::string& key, const std::string& value) const {
        if (machine_) {
            std::string k = key;
            std::replace(k.begin(), k.end(), ' ', '-');
            out_ << k << " = " << value << "\n";
        }
        else out_ << key << ": " << value << "\n";
    }
    void human(const std::string& line) const {
        if (!machine_) out_ << line << "\n";
    }
    void raw(const std::string& text) const { out_ << text; }

private:
    std::ostream& out_;
    bool machine_;
};

void print_suite(const Printer& p, const std::string& prefix, const SuiteReport& r) {
    std::size_t w = 0;
    for (const auto& row : r.table()) w = std::max(w, row.name.size());
    for (const auto& row : r.table()) {
        const int total = row.passed + row.failed;
        if (p.machine()) {
            p.field(prefix + row.name, std::to_string(row.passed) + "/" + std::to_string(total));
        } else {
            std::string line = "  " + row.name + std::string(w - row.name.size() + 2, ' ') +
                               (row.failed == 0 ? "PASS " : "FAIL ") + std::to_string(row.passed) + "/" +
                               std::to_string(total);
            if (row.failed) line += "  first failure: " + row.first_failure;
            p.human(line);
        }
    }
}

/// Builds an algebra; structure-constant files are checked against the Hopf axioms first, since
/// nothing else guarantees that their constants describe a Hopf algebra.
HopfData load_algebra(const std::string& selector) {
    HopfData h = algebra_from_selector(selector);
    if (selector.find("file:") == std::string::npos) return h;
    const AxiomReport r = verify_axioms(h);
    for (const auto& c : r.checks)
        if (!c.passed)
            fail(Errc::BadParameters, "algebra '" + selector + "' fails the " + c.name + " axiom at " + c.witness);
    return h;
}

struct Options {
    bool machine = false;
    std::string algebra, manifold, cocycle, file, route = "primary";
    bool all_builtins = false, echo = false;
    std::uint64_t seed = 20240611;
    int max_power = 3, max_fn = 4;
};

int cmd_invariant(const Options& o, const Printer& p) {
    const InvariantRequest req = parse_request(o.manifold);
    std::vector<std::string> algebras;
    if (o.all_builtins) algebras = builtin_algebra_selectors();
    else algebras.push_back(o.algebra);
    const bool both = o.route == "both";
    const Route route = o.route == "alternate" ? Route::alternate : Route::primary;

    int status = exit_ok;
    for (const auto& sel : algebras) {
        const HopfData h = load_algebra(sel);
        const CycScalar v = evaluate(req, h, both ? Route::primary : route);
        std::string alt_str;
        bool agree = true;
        if (both) {
            const CycScalar a = evaluate(req, h, Route::alternate);
            agree = a == v;
            alt_str = a.str();
            if (!agree) status = exit_failed;
        }
        if (p.machine()) {
            const std::string key = algebras.size() > 1 ? "value." + sel : "value";
            if (algebras.size() == 1) {
                p.field("manifold", o.manifold);
                p.field("algebra", sel);
                p.field("route", o.route);
            }
            p.field(key, v.str());
            if (both) {
                p.field(algebras.size() > 1 ? "alternate." + sel : "alternate", alt_str);
                p.field(algebras.size() > 1 ? "routes." + sel : "routes", agree ? "AGREE" : "DIFFER");
            }
        } else if (algebras.size() == 1 && !both) {
            p.human(v.str());
        } else {
            std::string line = sel + ": " + v.str();
            if (both) line += agree ? "   [routes agree]" : "   [routes DIFFER: alternate = " + alt_str + "]";
            p.human(line);
        }
    }
    return status;
}

int cmd_axioms(const Options& o, const Printer& p) {
    const HopfData h = algebra_from_selector(o.algebra);
    const AxiomReport r = verify_axioms(h);
    p.human(h.name() + " (dim " + std::to_string(h.dim()) + ")");
    std::size_t w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.name.size());
    for (const auto& c : r.checks) {
        if (p.machine()) {
            p.field("axiom." + c.name, c.passed ? "PASS" : "FAIL");
        } else {
            std::string line = "  " + c.name + std::string(w - c.name.size() + 2, ' ') + (c.passed ? "PASS" : "FAIL");
            if (!c.passed) line += "  witness: " + c.witness;
            p.human(line);
        }
    }
    p.field("result", r.all_passed() ? "PASS" : "FAIL");
    return r.all_passed() ? exit_ok : exit_failed;
}

int cmd_integrals(const Options& o, const Printer& p) {
    const HopfData h = load_algebra(o.algebra);
    const IntegralData I = integrals(h);
    const CycScalar ag = pair(I.alpha, I.g);
    p.field("algebra", h.name());
    p.field("dim", std::to_string(h.dim()));
    p.field("Lambda", vec_str(h, I.Lambda));
    p.field("lambda", covec_str(h, I.lambda));
    p.field("g", vec_str(h, I.g));
    p.field("alpha", covec_str(h, I.alpha));
    p.field("alpha(g)", ag.str());
    p.field("alpha(g).order", std::to_string(root_order(ag, h.dim())));
    p.field("unimodular", I.alpha == h.counit() ? "yes" : "no");
    p.field("eps(Lambda)", h.eps(I.Lambda).str());
    p.field("lambda(1)", pair(I.lambda, h.unit()).str());
    p.field("Tr(S^2)", h.antipode_power(2).trace().str());
    return exit_ok;
}

int cmd_identities(const Options& o, const Printer& p) {
    const HopfData h = load_algebra(o.algebra);
    const IntegralData I = integrals(h);
    const SuiteReport r = identity_suite(h, I, o.seed, o.max_power);
    p.human("integral identities on " + h.name() + " (seed " + std::to_string(o.seed) + ")");
    print_suite(p, "identity.", r);
    bool ok = r.all_passed();
    if (!o.cocycle.empty()) {
        const TwoCocycle c = cocycle_from_selector(h, o.cocycle);
        const SuiteReport f = fn_identity_suite(c, o.max_fn);
        p.human("cocycle identities for " + o.cocycle + " (n <= " + std::to_string(o.max_fn) + ")");
        print_suite(p, "cocycle.", f);
        ok = ok && f.all_passed();
    }
    p.field("result", ok ? "PASS" : "FAIL");
    return ok ? exit_ok : exit_failed;
}

int cmd_gauge(const Options& o, const Printer& p) {
    const InvariantRequest req = parse_request(o.manifold);
    const HopfData h = load_algebra(o.algebra);
    const TwoCocycle c = cocycle_from_selector(h, o.cocycle);
    const CheckReport r = gauge_check(req, h, c);
    if (p.machine()) {
        p.field("manifold", o.manifold);
        p.field("algebra", h.name());
        p.field("cocycle", o.cocycle);
        p.field("H", r.lhs.str());
        p.field("H_F", r.rhs.str());
        p.field("result", r.passed ? "EQUAL" : "DIFFERENT");
    } else {
        p.human(r.passed ? "EQUAL" : "DIFFERENT");
        p.human("  H:   " + r.lhs.str());
        p.human("  H_F: " + r.rhs.str());
    }
    return r.passed ? exit_ok : exit_failed;
}

int cmd_parse(const Options& o, const Printer& p) {
    std::ifstream in(o.file);
    if (!in) fail(Errc::BadParameters, "cannot read diagram file '" + o.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const FramedDiagram d = parse_diagram(ss.str());
    const AdmissibilityReport a = check_admissibility(d);
    p.field("admissible", a.admissible ? "yes" : "no");
    for (std::size_t i = 0; i < a.failures.size(); ++i) p.field("failure." + std::to_string(i + 1), a.failures[i]);
    if (!a.admissible) return exit_invalid;
    p.raw(describe_plan(compile_plan(d)));
    if (o.echo) {
        p.human("--");
        p.raw(write_diagram(d));
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Kuperberg invariants of framed 3-manifolds over finite-dimensional Hopf algebras.",
                 "kupinv"};
    app.require_subcommand(1);
    app.add_flag("--machine", o.machine, "one `key = value` line per result");
    app.footer(help_table("Algebra selectors", algebra_selector_help()) + "\n" +
               help_table("Manifold selectors", request_selector_help()) + "\n" +
               help_table("Cocycle selectors", cocycle_selector_help()) +
               "\nExit codes: 0 success, 1 invalid input, 2 failed computation or check.");

    auto add_machine = [&](CLI::App* sub) { sub->add_flag("--machine", o.machine, "one `key = value` line per result"); };

    auto* inv = app.add_subcommand("invariant", "evaluate an invariant of a manifold");
    inv->add_option("--manifold,-m", o.manifold, "manifold selector")->required();
    auto* inv_alg = inv->add_option("--algebra,-a", o.algebra, "algebra selector");
    auto* inv_all = inv->add_flag("--all-builtins", o.all_builtins, "sweep the built-in algebra collection");
    inv_alg->excludes(inv_all);
    inv->add_option("--route", o.route, "primary, alternate, or both (compare)")
        ->check(CLI::IsMember({"primary", "alternate", "both"}));
    inv->footer(help_table("Manifold selectors", request_selector_help()) + "\n" +
                help_table("Algebra selectors", algebra_selector_help()));
    add_machine(inv);

    auto* ax = app.add_subcommand("axioms", "verify the Hopf algebra axioms on basis elements");
    ax->add_option("--algebra,-a", o.algebra, "algebra selector")->required();
    ax->footer(help_table("Algebra selectors", algebra_selector_help()));
    add_machine(ax);

    auto* in = app.add_subcommand("integrals", "integral, cointegral and distinguished grouplikes");
    in->add_option("--algebra,-a", o.algebra, "algebra selector")->required();
    in->footer(help_table("Algebra selectors", algebra_selector_help()));
    add_machine(in);

    auto* id = app.add_subcommand("identities", "run the integral identity suite (and cocycle identities)");
    id->add_option("--algebra,-a", o.algebra, "algebra selector")->required();
    id->add_option("--cocycle,-c", o.cocycle, "also run the cocycle identities for this cocycle");
    id->add_option("--seed", o.seed, "seed for the random test maps")->capture_default_str();
    id->add_option("--max-power", o.max_power, "largest Sweedler power in the power-move identities")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    id->add_option("--max-fn", o.max_fn, "largest n for the cocycle tensors F_n")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    id->footer(help_table("Algebra selectors", algebra_selector_help()) + "\n" +
               help_table("Cocycle selectors", cocycle_selector_help()));
    add_machine(id);

    auto* gt = app.add_subcommand("gauge-test", "compare an invariant of H with that of a Drinfeld twist H_F");
    gt->add_option("--manifold,-m", o.manifold, "manifold selector")->required();
    gt->add_option("--algebra,-a", o.algebra, "algebra selector")->required();
    gt->add_option("--cocycle,-c", o.cocycle, "cocycle selector")->required();
    gt->footer(help_table("Manifold selectors", request_selector_help()) + "\n" +
               help_table("Algebra selectors", algebra_selector_help()) + "\n" +
               help_table("Cocycle selectors", cocycle_selector_help()));
    add_machine(gt);

    auto* ps = app.add_subcommand("parse", "parse a framed diagram file and print its evaluation plan");
    ps->add_option("--file,-f", o.file, "diagram file")->required();
    ps->add_flag("--echo", o.echo, "print the diagram back in canonical form");
    add_machine(ps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }
    if (inv->parsed() && o.algebra.empty() && !o.all_builtins) {
        err << "invariant: one of --algebra or --all-builtins is required\n";
        return exit_invalid;
    }

    const Printer p(out, o.machine);
    try {
        if (inv->parsed()) return cmd_invariant(o, p);
        if (ax->parsed()) return cmd_axioms(o, p);
        if (in->parsed()) return cmd_integrals(o, p);
        if (id->parsed()) return cmd_identities(o, p);
        if (gt->parsed()) return cmd_gauge(o, p);
        if (ps->parsed()) return cmd_parse(o, p);
    } catch (const Error& e) {
        err << "kupinv: " << e.what() << "\n";
        return is_input_error(e.code()) ? exit_invalid : exit_failed;
    } catch (const std::exception& e) {
        err << "kupinv: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_invalid;
}

}  // namespace kup::cli
