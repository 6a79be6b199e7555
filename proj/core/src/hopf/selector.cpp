#include "kup/hopf/selector.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "kup/error.hpp"
#include "kup/hopf/text_format.hpp"

namespace kup {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadParameters, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_parens(std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : (s[i] == ')' ? -1 : 0);
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (!wraps) break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

}  // namespace

GroupTable named_group(const std::string& name) {
    if (name == "Z2xZ2" || name == "V4") return klein_four_group();
    if (name == "S3") return symmetric_group_3();
    if (name == "Q8") return quaternion_group();
    if (name == "D8") return dihedral_group_8();
    if (name.size() > 1 && name[0] == 'Z') {
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(name.substr(1), &pos);
        } catch (...) {
            pos = 0;
        }
        if (pos == name.size() - 1 && n >= 1) return cyclic_group(n);
    }
    // Anything else is read as a table file.
    GroupTable g = GroupTable::parse(read_file(name));
    return g;
}

HopfData algebra_from_selector(const std::string& raw) {
    const std::string sel = strip_parens(raw);
    auto colon = sel.find(':');
    if (colon == std::string::npos) fail(Errc::BadParameters, "algebra selector '" + sel + "' has no kind prefix");
    const std::string kind = sel.substr(0, colon);
    const std::string arg = sel.substr(colon + 1);
    if (kind == "group") return group_algebra(named_group(arg));
    if (kind == "taft") {
        int n = 0, k = 1;
        char c1 = 0;
        std::istringstream is(arg);
        is >> n;
        if (!is) fail(Errc::BadParameters, "bad taft selector '" + sel + "'");
        if (is >> c1) {
            if (c1 != ':' || !(is >> k)) fail(Errc::BadParameters, "bad taft selector '" + sel + "'");
        }
        if (n < 2) fail(Errc::BadParameters, "taft needs n >= 2");
        return taft(n, CycScalar::root_of_unity(n, k));
    }
    if (kind == "dual") return dual(algebra_from_selector(arg));
    if (kind == "op") return opposite(algebra_from_selector(arg));
    if (kind == "tensor") {
        int depth = 0;
        for (std::size_t i = 0; i < arg.size(); ++i) {
            depth += arg[i] == '(' ? 1 : (arg[i] == ')' ? -1 : 0);
            if (arg[i] == ',' && depth == 0)
                return tensor_product(algebra_from_selector(arg.substr(0, i)), algebra_from_selector(arg.substr(i + 1)));
        }
        fail(Errc::BadParameters, "tensor selector needs two comma-separated factors");
    }
    if (kind == "file") return read_hopf(read_file(arg));
    fail(Errc::BadParameters, "unknown algebra kind '" + kind + "'");
}

std::vector<std::pair<std::string, std::string>> algebra_selector_help() {
    return {
        {"group:<G>", "group algebra; G in Z<n>, Z2xZ2, S3, Q8, D8, or a group-table file"},
        {"taft:<n>[:<k>]", "Taft algebra T(zeta_n^k) of dimension n^2"},
        {"dual:<sel>", "dual Hopf algebra"},
        {"op:<sel>", "opposite multiplication, inverse antipode"},
        {"tensor:<sel>,<sel>", "tensor product (parenthesize nested selectors)"},
        {"file:<path>", "structure-constant file"},
    };
}

std::vector<std::string> builtin_algebra_selectors() {
    return {"group:Z1",          "group:Z2",          "group:Z3",        "group:Z4",
            "group:Z2xZ2",       "group:S3",          "group:Q8",        "group:D8",
            "taft:2",            "taft:3",            "taft:4",          "dual:group:Z2xZ2",
            "dual:group:S3",     "dual:taft:3",       "op:taft:3",       "dual:group:D8",
            "tensor:group:Z2,taft:2", "tensor:taft:2,taft:2"};
}

}  // namespace kup
