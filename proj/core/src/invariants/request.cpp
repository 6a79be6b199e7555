#include "kup/invariants/request.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "kup/error.hpp"
#include "kup/hopf/builders.hpp"
#include "kup/invariants/closed_forms.hpp"
#include "kup/invariants/kuperberg.hpp"

namespace kup {

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto p = s.find(':', start);
        out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

int parse_param(const std::string& s, const std::string& sel) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) fail(Errc::BadParameters, "'" + sel + "': expected an integer, got '" + s + "'");
    return v;
}

[[noreturn]] void unknown(const std::string& sel) {
    fail(Errc::BadParameters, "unknown invariant selector '" + sel + "' (try s3, lens:5:2:fR, nu:3, seifert:1:1, ...)");
}

void check_pair(int n, int k, const char* what) {
    if (!(0 < k && k < n)) fail(Errc::BadParameters, std::string(what) + " needs 0 < k < n");
    if (std::gcd(n, k) != 1) fail(Errc::NotCoprime, std::string(what) + ": n and k are not coprime");
}

CycScalar plan_value(const FramedDiagram& d, const HopfData& h) { return kuperberg(compile_plan(d), h); }

CycScalar primary(const InvariantRequest& r, const HopfData& h) {
    switch (r.kind) {
        case InvariantKind::plan: return plan_value(*r.diagram, h);
        case InvariantKind::s3: return plan_value(s3_diagram(), h);
        case InvariantKind::s2xs1: return plan_value(s2xs1_diagram(), h);
        case InvariantKind::q8: return plan_value(q8_diagram(), h);
        case InvariantKind::lens:
            return r.framing == LensFraming::R ? lens_fR_closed(r.a, r.b, h) : lens_fL_closed(r.a, r.b, h);
        case InvariantKind::nu: return nu(r.a, h);
        case InvariantKind::nu_nk: return nu_nk(r.a, r.b, h);
        case InvariantKind::nu_prime: return nu_prime(r.a, r.b, h);
        case InvariantKind::nu_tilde: return nu_tilde(r.a, r.b, h);
        case InvariantKind::seifert: return genus2(r.a, r.b, h);
    }
    return CycScalar(0);
}

CycScalar alternate(const InvariantRequest& r, const HopfData& h) {
    const int n = r.a, k = r.b;
    switch (r.kind) {
        case InvariantKind::plan: return plan_value(*r.diagram, h);
        case InvariantKind::s3: return nu(1, h);
        case InvariantKind::s2xs1: return s2xs1_closed(0, -1, h, integrals(h));
        case InvariantKind::q8: return genus2(1, 1, h);
        case InvariantKind::lens: return kuperberg(lens_plan(n, k, r.framing), h);
        case InvariantKind::nu:
            if (n >= 2) return kuperberg(lens_fR_plan(n, n - 1), h);
            if (n == 1) return plan_value(s3_diagram(), h);
            if (n == 0) return plan_value(s2xs1_diagram(), h);
            {
                const IntegralData I = integrals(h);
                return pair(I.alpha, I.g_inv) * nu(-n, opposite(h));
            }
        case InvariantKind::nu_nk:
            if (k % 2 == 1) return kuperberg(lens_fR_plan(n, n - k), h);
            return kuperberg(lens_fL_plan(n, n - k), opposite(h));
        case InvariantKind::nu_prime:
            if (k % 2 == 1) return kuperberg(lens_fL_plan(n, k), h);
            return kuperberg(lens_fR_plan(n, k), opposite(h));
        case InvariantKind::nu_tilde: return nu_tilde_trace(n, k, h);
        case InvariantKind::seifert: return plan_value(seifert_diagram(n, k), h);
    }
    return CycScalar(0);
}

}  // namespace

void InvariantRequest::validate() const {
    switch (kind) {
        case InvariantKind::plan:
            if (!diagram) fail(Errc::BadParameters, "plan request without a diagram");
            break;
        case InvariantKind::lens: check_lens_parameters(a, b, framing); break;
        case InvariantKind::nu_nk: check_pair(a, b, "nu_{n,k}"); break;
        case InvariantKind::nu_prime: check_pair(a, b, "nu'_{n,k}"); break;
        case InvariantKind::nu_tilde:
            if (a < 2) fail(Errc::BadParameters, "nu~_{n,k} needs n >= 2");
            if (std::gcd(a, ((b % a) + a) % a) != 1) fail(Errc::NotCoprime, "nu~_{n,k}: n and k are not coprime");
            break;
        case InvariantKind::seifert:
            if (a < 1 || b < 1) fail(Errc::BadParameters, "M_{m,n} needs m, n >= 1");
            break;
        default: break;
    }
}

InvariantRequest parse_request(const std::string& selector) {
    InvariantRequest r;
    r.text = selector;
    if (selector.rfind("plan:", 0) == 0) {
        const std::string path = selector.substr(5);
        std::ifstream in(path);
        if (!in) fail(Errc::BadParameters, "cannot read diagram file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        r.kind = InvariantKind::plan;
        r.diagram = parse_diagram(ss.str());
        return r;
    }
    const auto p = split_colon(selector);
    const std::string& head = p[0];
    if (p.size() == 1 && head == "s3") r.kind = InvariantKind::s3;
    else if (p.size() == 1 && head == "s2xs1") r.kind = InvariantKind::s2xs1;
    else if (p.size() == 1 && head == "q8") r.kind = InvariantKind::q8;
    else if (head == "lens" && p.size() == 4) {
        r.kind = InvariantKind::lens;
        r.a = parse_param(p[1], selector);
        r.b = parse_param(p[2], selector);
        if (p[3] == "fR") r.framing = LensFraming::R;
        else if (p[3] == "fL") r.framing = LensFraming::L;
        else fail(Errc::BadParameters, "'" + selector + "': framing must be fR or fL");
    } else if (head == "nu" && p.size() == 2) {
        r.kind = InvariantKind::nu;
        r.a = parse_param(p[1], selector);
    } else if ((head == "nu" || head == "nu-prime" || head == "nu-tilde" || head == "seifert") && p.size() == 3) {
        r.kind = head == "nu" ? InvariantKind::nu_nk
                 : head == "nu-prime" ? InvariantKind::nu_prime
                 : head == "nu-tilde" ? InvariantKind::nu_tilde
                                      : InvariantKind::seifert;
        r.a = parse_param(p[1], selector);
        r.b = parse_param(p[2], selector);
    } else {
        unknown(selector);
    }
    r.validate();
    return r;
}

std::vector<std::pair<std::string, std::string>> request_selector_help() {
    return {{"s3", "the 3-sphere (genus-1 diagram, one point)"},
            {"s2xs1", "S^2 x S^1 (genus-1 diagram, no points)"},
            {"q8", "S^3/Q8 (genus-2 diagram, eight points)"},
            {"lens:<n>:<k>:<fR|fL>", "lens space L(n,k); fR needs n-k odd, fL needs k odd"},
            {"nu:<n>", "generalized Frobenius-Schur indicator nu_n, any integer n"},
            {"nu:<n>:<k>", "nu_{n,k}, 0 < k < n coprime"},
            {"nu-prime:<n>:<k>", "nu'_{n,k}, 0 < k < n coprime"},
            {"nu-tilde:<n>:<k>", "shuffled indicator, n >= 2, k coprime to n"},
            {"seifert:<m>:<n>", "genus-2 Seifert manifold M_{m,n}, m, n >= 1"},
            {"plan:<path>", "diagram file in the text format"}};
}

CycScalar evaluate(const InvariantRequest& req, const HopfData& h, Route route) {
    req.validate();
    return route == Route::primary ? primary(req, h) : alternate(req, h);
}

std::optional<FramedDiagram> request_diagram(const InvariantRequest& req) {
    switch (req.kind) {
        case InvariantKind::plan: return req.diagram;
        case InvariantKind::s3: return s3_diagram();
        case InvariantKind::s2xs1: return s2xs1_diagram();
        case InvariantKind::q8: return q8_diagram();
        case InvariantKind::lens: return lens_diagram(req.a, req.b, req.framing);
        case InvariantKind::seifert: return seifert_diagram(req.a, req.b);
        default: return std::nullopt;
    }
}

CheckReport gauge_check(const InvariantRequest& req, const HopfData& h, const TwoCocycle& c) {
    CheckReport r;
    r.what = req.text + " on " + h.name() + " vs its twist";
    r.lhs = evaluate(req, h);
    r.rhs = evaluate(req, drinfeld_twist(h, c));
    r.passed = r.lhs == r.rhs;
    return r;
}

CheckReport multiplicativity_check(const InvariantRequest& req, const HopfData& h, const HopfData& k) {
    CheckReport r;
    r.what = req.text + " on " + h.name() + " (x) " + k.name();
    r.lhs = evaluate(req, tensor_product(h, k));
    r.rhs = evaluate(req, h) * evaluate(req, k);
    r.passed = r.lhs == r.rhs;
    return r;
}

CheckReport duality_check(const InvariantRequest& req, const HopfData& h) {
    CheckReport r;
    r.what = req.text + " on " + h.name() + " vs its dual";
    r.lhs = evaluate(req, h);
    r.rhs = evaluate(req, dual(h));
    r.passed = r.lhs == r.rhs;
    return r;
}

}  // namespace kup
