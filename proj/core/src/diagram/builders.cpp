#include "kup/diagram/builders.hpp"

#include <numeric>
#include <sstream>

#include "kup/error.hpp"

namespace kup {

namespace {

std::string lens_name(int n, int k) { return "L(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string pid(const char* prefix, int i) { return prefix + std::to_string(i); }

/// Lower curve through the given ids with theta_eta = 1/4 at the base point and 1/2 after it.
Curve standard_lower(const std::string& name, const std::vector<std::string>& ids) {
    Curve c{name, 2, 1, {}};
    for (std::size_t i = 0; i < ids.size(); ++i) c.points.push_back({ids[i], i == 0 ? 1 : 2, 0});
    return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int to_int(const std::string& s, const std::string& ctx) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(Errc::BadParameters, "expected an integer in '" + ctx + "', got '" + s + "'");
    }
}

}  // namespace

int residue(long long a, int n) {
    long long r = a % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

void check_lens_parameters(int n, int k, LensFraming f) {
    if (!(0 < k && k < n)) fail(Errc::BadParameters, lens_name(n, k) + " needs 0 < k < n");
    if (std::gcd(n, k) != 1) fail(Errc::NotCoprime, lens_name(n, k) + ": n and k are not coprime");
    if (f == LensFraming::R && (n - k) % 2 == 0)
        fail(Errc::BadParity, lens_name(n, k) + ": the f_R framing needs n - k odd");
    if (f == LensFraming::L && k % 2 == 0) fail(Errc::BadParity, lens_name(n, k) + ": the f_L framing needs k odd");
}

EvalPlan lens_fR_plan(int n, int k) {
    check_lens_parameters(n, k, LensFraming::R);
    const int k0 = (n - k - 1) / 2;
    EvalPlan p;
    p.genus = 1;
    p.n = n;
    p.lower_sizes = {n};
    p.theta_lower4 = {2};
    p.theta_upper4 = {2};
    p.t.assign(n, 0);
    p.s.assign(n, 0);
    for (int r = 1; r <= n; ++r) p.sigma.push_back(residue(static_cast<long long>(k) * (r - 1), n));
    p.upper_orders = {p.sigma};
    int i = n, s = 1;
    for (int step = 0; step < n; ++step) {
        p.s[i - 1] = s;
        if (i <= k0)
            s += 2;
        else if (i < n - k)
            s -= 2;
        i = residue(i + k, n);
    }
    if (i != n || s != 1) fail(Errc::BadParameters, lens_name(n, k) + ": exponent recursion does not close");
    return p;
}

EvalPlan lens_fL_plan(int n, int k) {
    check_lens_parameters(n, k, LensFraming::L);
    const int k1 = (k - 1) / 2;
    EvalPlan p;
    p.genus = 1;
    p.n = n;
    p.lower_sizes = {n};
    p.theta_lower4 = {2};
    p.theta_upper4 = {-2};
    p.t.assign(n, 0);
    p.s.assign(n, 0);
    for (int r = 1; r <= n; ++r) p.sigma.push_back(residue(1 + static_cast<long long>(k) * (r - 1), n));
    p.upper_orders = {p.sigma};
    int i = 1, s = 1;
    for (int step = 0; step < n; ++step) {
        p.s[i - 1] = s;
        if (i >= n - k + 2 && i <= n - k1)
            s += 2;
        else if (i > n - k1)
            s -= 2;
        i = residue(i + k, n);
    }
    if (i != 1 || s != 1) fail(Errc::BadParameters, lens_name(n, k) + ": exponent recursion does not close");
    return p;
}

EvalPlan lens_plan(int n, int k, LensFraming f) { return f == LensFraming::R ? lens_fR_plan(n, k) : lens_fL_plan(n, k); }

FramedDiagram lens_fR_diagram(int n, int k) {
    check_lens_parameters(n, k, LensFraming::R);
    const int k0 = (n - k - 1) / 2;
    FramedDiagram d;
    d.genus = 1;
    // The lower curve starts just after p_n, so only p_n has turned by a quarter.
    Curve eta{"eta", 2, 1, {}};
    for (int i = 1; i <= n; ++i) eta.points.push_back({pid("p", i), i == n ? 1 : 0, 0});
    // The upper curve leaves p_n and moves k steps at a time; between consecutive points its
    // tangent turns according to which arc of the lower curve it passes.
    Curve mu{"mu", 0, -1, {}};
    int i = n, theta4 = 0;
    for (int step = 0; step < n; ++step) {
        mu.points.push_back({pid("p", i), theta4, 0});
        if (step == n - 1) break;
        if (i == n)
            theta4 -= 1;
        else if (i > n - k)
            theta4 += 0;
        else if (i <= k0)
            theta4 -= 4;
        else
            theta4 += 4;
        i = residue(i + k, n);
    }
    mu.total_theta4 = theta4 + 3;
    d.lower.push_back(std::move(eta));
    d.upper.push_back(std::move(mu));
    return d;
}

FramedDiagram lens_fL_diagram(int n, int k) {
    check_lens_parameters(n, k, LensFraming::L);
    const int k1 = (k - 1) / 2;
    FramedDiagram d;
    d.genus = 1;
    Curve eta{"eta", 2, 1, {}};
    for (int i = 1; i <= n; ++i) eta.points.push_back({pid("p", i), i == 1 ? 1 : 2, 0});
    Curve mu{"mu", 0, 1, {}};
    int i = 1, theta4 = 0;
    for (int step = 0; step < n; ++step) {
        mu.points.push_back({pid("p", i), theta4, 0});
        if (step == n - 1) break;
        if (i == 1)
            theta4 += 1;
        else if (i <= n - k)
            theta4 += 0;
        else if (i <= n - k1)
            theta4 -= 4;
        else
            theta4 += 4;
        i = residue(i + k, n);
    }
    mu.total_theta4 = theta4 - 3;
    d.lower.push_back(std::move(eta));
    d.upper.push_back(std::move(mu));
    return d;
}

FramedDiagram lens_diagram(int n, int k, LensFraming f) {
    return f == LensFraming::R ? lens_fR_diagram(n, k) : lens_fL_diagram(n, k);
}

FramedDiagram s3_diagram() { return stabilize(FramedDiagram{}); }

FramedDiagram s2xs1_diagram(int a, int b) {
    FramedDiagram d;
    d.genus = 1;
    const int theta_mu4 = 2 - 4 * a;         // -(a - 1/2)
    const int theta_eta4 = -4 * (b + 1) - 2;  // -(b + 1) - 1/2
    d.lower.push_back(Curve{"eta", theta_eta4, theta_eta4 / 2, {}});
    d.upper.push_back(Curve{"mu", theta_mu4, -theta_mu4 / 2, {}});
    return d;
}

FramedDiagram seifert_diagram(int m, int n) {
    if (m < 1 || n < 1)
        fail(Errc::BadParameters, "M_{m,n} needs m, n >= 1, got (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    FramedDiagram d;
    d.genus = 2;
    std::vector<std::string> ps, qs;
    for (int i = 1; i <= m + 3; ++i) ps.push_back(pid("p", i));
    for (int i = 1; i <= n + 3; ++i) qs.push_back(pid("q", i));
    d.lower.push_back(standard_lower("eta1", ps));
    d.lower.push_back(standard_lower("eta2", qs));

    Curve mu1{"mu1", -2, 1, {}};
    mu1.points.push_back({pid("p", 1), 0, 0});
    for (int i = m + 3; i >= 5; --i) mu1.points.push_back({pid("p", i), -3, 0});
    mu1.points.push_back({pid("q", n + 1), -3, 0});
    mu1.points.push_back({pid("p", 3), -1, 0});
    mu1.points.push_back({pid("q", n + 3), 1, 0});

    Curve mu2{"mu2", -2, 1, {}};
    mu2.points.push_back({pid("q", 1), 0, 0});
    mu2.points.push_back({pid("p", 2), 1, 0});
    mu2.points.push_back({pid("q", n + 2), -1, 0});
    mu2.points.push_back({pid("p", 4), -3, 0});
    for (int i = n; i >= 2; --i) mu2.points.push_back({pid("q", i), -3, 0});

    d.upper.push_back(std::move(mu1));
    d.upper.push_back(std::move(mu2));
    return d;
}

FramedDiagram q8_diagram() {
    FramedDiagram d;
    d.genus = 2;
    d.lower.push_back(standard_lower("eta1", {"p1", "p2", "p3", "p4"}));
    d.lower.push_back(standard_lower("eta2", {"p5", "p6", "p7", "p8"}));
    d.upper.push_back(Curve{"mu1", -2, 1, {{"p1", 0, 0}, {"p6", -3, 0}, {"p3", -1, 0}, {"p8", 1, 0}}});
    d.upper.push_back(Curve{"mu2", -2, 1, {{"p5", 0, 0}, {"p2", 1, 0}, {"p7", -1, 0}, {"p4", -3, 0}}});
    return d;
}

FramedDiagram fixture_diagram(const std::string& name) {
    if (name == "s3") return s3_diagram();
    if (name == "s2xs1") return s2xs1_diagram();
    if (name == "q8") return q8_diagram();
    const auto parts = split(name, ':');
    if (parts.size() == 3 && parts[0] == "seifert") return seifert_diagram(to_int(parts[1], name), to_int(parts[2], name));
    if (parts.size() == 4 && parts[0] == "lens") {
        const int n = to_int(parts[1], name), k = to_int(parts[2], name);
        if (parts[3] == "fR") return lens_fR_diagram(n, k);
        if (parts[3] == "fL") return lens_fL_diagram(n, k);
    }
    fail(Errc::BadParameters, "unknown fixture '" + name +
                                  "' (expected s3, s2xs1, q8, seifert:<m>:<n> or lens:<n>:<k>:<fR|fL>)");
}

std::vector<std::string> fixture_names() {
    return {"s3", "s2xs1", "q8", "seifert:1:1", "seifert:2:1", "seifert:1:2", "lens:5:2:fR", "lens:5:3:fL",
            "lens:4:1:fR", "lens:4:1:fL"};
}

}  // namespace kup
