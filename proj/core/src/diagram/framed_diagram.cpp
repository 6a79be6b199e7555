#include "kup/diagram/framed_diagram.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kup/error.hpp"

namespace kup {

namespace {

struct Fraction {
    long long num = 0, den = 1;
};

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size() || s.size() - i > 12) return false;
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

bool parse_fraction(std::string_view s, Fraction& f) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        f.den = 1;
        return parse_int(s, f.num);
    }
    if (!parse_int(s.substr(0, slash), f.num) || !parse_int(s.substr(slash + 1), f.den)) return false;
    if (f.den <= 0) return false;
    return true;
}

/// Value of f in units of 1/unit; BadRotationGrain when not integral.
int to_units(const Fraction& f, int unit, const std::string& what, int line) {
    const long long scaled = f.num * unit;
    if (scaled % f.den != 0)
        fail(Errc::BadRotationGrain, "line " + std::to_string(line) + ": " + what + " " + std::to_string(f.num) + "/" +
                                         std::to_string(f.den) + " is not a multiple of 1/" + std::to_string(unit));
    return static_cast<int>(scaled / f.den);
}

std::string half_str(int phi2) {
    if (phi2 % 2 == 0) return std::to_string(phi2 / 2);
    return std::to_string(phi2) + "/2";
}

[[noreturn]] void syntax(int line, const std::string& msg) {
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

/// Position of every point on one side of the diagram: (curve index, position within curve).
struct Incidence {
    int curve = -1;
    int pos = -1;
};

std::map<std::string, Incidence> incidence(const std::vector<Curve>& curves, const char* side) {
    std::map<std::string, Incidence> out;
    for (std::size_t c = 0; c < curves.size(); ++c)
        for (std::size_t i = 0; i < curves[c].points.size(); ++i) {
            const auto& id = curves[c].points[i].id;
            if (!out.emplace(id, Incidence{static_cast<int>(c), static_cast<int>(i)}).second)
                fail(Errc::DuplicatePoint, "point " + id + " occurs twice on the " + side + " curves");
        }
    return out;
}

void check_incidence(const FramedDiagram& d) {
    const auto lo = incidence(d.lower, "lower");
    const auto up = incidence(d.upper, "upper");
    for (const auto& [id, _] : lo)
        if (!up.count(id)) fail(Errc::OrphanPoint, "point " + id + " lies on no upper curve");
    for (const auto& [id, _] : up)
        if (!lo.count(id)) fail(Errc::OrphanPoint, "point " + id + " lies on no lower curve");
}

void check_totals(const Curve& c) {
    if (((c.total_theta4 % 4) + 4) % 4 != 2)
        fail(Errc::BadRotationGrain, "curve " + c.name + ": total theta " + quarter_str(c.total_theta4) +
                                         " is not an odd multiple of 1/2");
}

}  // namespace

std::string quarter_str(int theta4) {
    const int g = std::gcd(theta4 < 0 ? -theta4 : theta4, 4);
    if (theta4 == 0) return "0";
    const int num = theta4 / g, den = 4 / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

FramedDiagram parse_diagram(std::string_view text) {
    FramedDiagram d;
    bool have_genus = false;
    Curve* current = nullptr;
    std::set<std::string> curve_names;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokens_of(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "genus") {
            long long g = 0;
            if (have_genus) syntax(line_no, "genus given twice");
            if (tok.size() != 2 || !parse_int(tok[1], g) || g < 0 || g > 1000) syntax(line_no, "expected 'genus <g>'");
            d.genus = static_cast<int>(g);
            have_genus = true;
        } else if (kw == "lower" || kw == "upper") {
            if (!have_genus) syntax(line_no, "curve before 'genus'");
            Fraction th, ph;
            if (tok.size() != 6 || tok[2] != "total_theta" || tok[4] != "total_phi" || !parse_fraction(tok[3], th) ||
                !parse_fraction(tok[5], ph))
                syntax(line_no, "expected '" + kw + " <name> total_theta <q> total_phi <q>'");
            if (!curve_names.insert(tok[1]).second) syntax(line_no, "curve name " + tok[1] + " reused");
            Curve c;
            c.name = tok[1];
            c.total_theta4 = to_units(th, 4, "total_theta", line_no);
            c.total_phi2 = to_units(ph, 2, "total_phi", line_no);
            check_totals(c);
            auto& side = kw == "lower" ? d.lower : d.upper;
            side.push_back(std::move(c));
            current = &side.back();
        } else if (kw == "point") {
            if (current == nullptr) syntax(line_no, "point outside a curve");
            Fraction th, ph;
            if (tok.size() != 6 || tok[2] != "theta" || tok[4] != "phi" || !parse_fraction(tok[3], th) ||
                !parse_fraction(tok[5], ph))
                syntax(line_no, "expected 'point <id> theta <q> phi <q>'");
            current->points.push_back(
                {tok[1], to_units(th, 4, "theta", line_no), to_units(ph, 2, "phi", line_no)});
        } else {
            syntax(line_no, "unknown keyword '" + kw + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_genus) syntax(line_no, "missing 'genus'");
    if (static_cast<int>(d.lower.size()) != d.genus || static_cast<int>(d.upper.size()) != d.genus)
        syntax(line_no, "genus " + std::to_string(d.genus) + " needs that many lower and upper curves, found " +
                            std::to_string(d.lower.size()) + " and " + std::to_string(d.upper.size()));
    check_incidence(d);
    return d;
}

std::string write_diagram(const FramedDiagram& d) {
    std::ostringstream os;
    os << "genus " << d.genus << "\n";
    auto emit = [&](const char* kw, const std::vector<Curve>& curves) {
        for (const auto& c : curves) {
            os << kw << " " << c.name << " total_theta " << quarter_str(c.total_theta4) << " total_phi "
               << half_str(c.total_phi2) << "\n";
            for (const auto& p : c.points)
                os << "  point " << p.id << " theta " << quarter_str(p.theta4) << " phi " << half_str(p.phi2) << "\n";
        }
    };
    emit("lower", d.lower);
    emit("upper", d.upper);
    return os.str();
}

AdmissibilityReport check_admissibility(const FramedDiagram& d) {
    AdmissibilityReport r;
    // theta is stored in quarters and phi in halves: theta = phi  <=>  theta4 = 2 phi2.
    for (const auto& c : d.lower)
        if (c.total_theta4 != 2 * c.total_phi2)
            r.failures.push_back("lower curve " + c.name + ": theta " + quarter_str(c.total_theta4) + " != phi " +
                                 half_str(c.total_phi2));
    for (const auto& c : d.upper)
        if (c.total_theta4 != -2 * c.total_phi2)
            r.failures.push_back("upper curve " + c.name + ": theta " + quarter_str(c.total_theta4) + " != -phi " +
                                 "(phi = " + half_str(c.total_phi2) + ")");
    r.admissible = r.failures.empty();
    return r;
}

EvalPlan compile_plan(const FramedDiagram& d) {
    check_incidence(d);
    for (const auto& c : d.lower) check_totals(c);
    for (const auto& c : d.upper) check_totals(c);
    const AdmissibilityReport adm = check_admissibility(d);
    if (!adm.admissible) {
        std::string msg;
        for (const auto& f : adm.failures) msg += (msg.empty() ? "" : "; ") + f;
        fail(Errc::NotAdmissible, msg);
    }
    EvalPlan p;
    p.genus = d.genus;
    std::map<std::string, int> lower_index;
    std::vector<const CurvePoint*> lower_pt;
    for (const auto& c : d.lower) {
        p.lower_sizes.push_back(static_cast<int>(c.points.size()));
        p.theta_lower4.push_back(c.total_theta4);
        for (const auto& pt : c.points) {
            lower_pt.push_back(&pt);
            lower_index[pt.id] = static_cast<int>(lower_pt.size());
        }
    }
    p.n = static_cast<int>(lower_pt.size());
    p.s.assign(p.n, 0);
    p.t.assign(p.n, 0);
    for (const auto& c : d.upper) {
        p.theta_upper4.push_back(c.total_theta4);
        std::vector<int> order;
        for (const auto& pt : c.points) {
            const int i = lower_index.at(pt.id);
            order.push_back(i);
            p.sigma.push_back(i);
            const CurvePoint& lo = *lower_pt[i - 1];
            // s = 2 (theta_eta - theta_mu) + 1/2 = (diff4 + 1) / 2 with diff4 in quarters.
            const int diff4 = lo.theta4 - pt.theta4;
            if ((diff4 - 1) % 2 != 0)
                fail(Errc::BadRotationGrain, "point " + pt.id + ": 2(theta_eta - theta_mu) + 1/2 = " +
                                                 std::to_string(diff4 + 1) + "/2 is not an integer");
            p.s[i - 1] = (diff4 + 1) / 2;
            const int dphi2 = lo.phi2 - pt.phi2;
            if (dphi2 % 2 != 0)
                fail(Errc::BadRotationGrain, "point " + pt.id + ": phi_eta - phi_mu = " + half_str(dphi2) +
                                                 " is not an integer");
            p.t[i - 1] = dphi2 / 2;
        }
        p.upper_orders.push_back(std::move(order));
    }
    return p;
}

FramedDiagram stabilize(const FramedDiagram& d) {
    FramedDiagram out = d;
    std::set<std::string> used;
    for (const auto& c : d.lower) {
        used.insert(c.name);
        for (const auto& pt : c.points) used.insert(pt.id);
    }
    for (const auto& c : d.upper) used.insert(c.name);
    auto fresh = [&](const std::string& base) {
        std::string name = d.genus == 0 ? base : base + std::to_string(d.genus + 1);
        while (used.count(name)) name += "'";
        used.insert(name);
        return name;
    };
    const std::string eta = fresh("eta"), mu = fresh("mu"), pt = fresh("p");
    out.genus = d.genus + 1;
    out.lower.push_back(Curve{eta, 2, 1, {CurvePoint{pt, 1, 0}}});
    out.upper.push_back(Curve{mu, 2, -1, {CurvePoint{pt, 0, 0}}});
    return out;
}

std::string describe_plan(const EvalPlan& p) {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]";
    };
    auto qlist = [&](const std::vector<int>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << quarter_str(v[i]);
        os << "]";
    };
    os << "genus = " << p.genus << "\n";
    os << "points = " << p.n << "\n";
    os << "sigma = ";
    list(p.sigma);
    os << "\ns = ";
    list(p.s);
    os << "\nt = ";
    list(p.t);
    os << "\nlower_sizes = ";
    list(p.lower_sizes);
    os << "\nupper_orders = [";
    for (std::size_t j = 0; j < p.upper_orders.size(); ++j) {
        os << (j ? ", " : "");
        list(p.upper_orders[j]);
    }
    os << "]\ntheta_lower = ";
    qlist(p.theta_lower4);
    os << "\ntheta_upper = ";
    qlist(p.theta_upper4);
    os << "\n";
    return os.str();
}

}  // namespace kup
