#include "kup/hopf/text_format.hpp"

#include <sstream>

#include "kup/error.hpp"

namespace kup {

std::string write_hopf(const HopfData& h) {
    std::ostringstream os;
    const int n = h.dim();
    os << "hopf " << h.name() << "\n";
    os << "dim " << n << "\n";
    os << "labels";
    for (const auto& l : h.labels()) os << " " << l;
    os << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : h.mult().at(i, j).entries())
                os << "m " << i << " " << j << " " << k << " = " << c.str() << "\n";
    for (int i = 0; i < n; ++i) {
        // Delta terms may repeat a pair; merge them so the output is canonical.
        SparseTensor d = h.coproduct(h.basis(i));
        std::vector<int> idx(2);
        for (const auto& [key, c] : d.entries()) {
            d.decode(key, idx);
            os << "d " << i << " " << idx[0] << " " << idx[1] << " = " << c.str() << "\n";
        }
    }
    for (int i = 0; i < n; ++i)
        for (const auto& [j, c] : h.antipode().col(i).entries()) os << "s " << i << " " << j << " = " << c.str() << "\n";
    for (int i = 0; i < n; ++i)
        if (!h.counit()[i].is_zero()) os << "e " << i << " = " << h.counit()[i].str() << "\n";
    for (const auto& [i, c] : h.unit().entries()) os << "u " << i << " = " << c.str() << "\n";
    return os.str();
}

HopfData read_hopf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line, name = "H";
    int n = -1, lineno = 0;
    std::vector<std::string> labels;
    BilinearTable m;
    CoproductTable d;
    SparseVector unit;
    Covector eps;
    LinearMap s;
    auto err = [&](const std::string& msg) { fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + msg); };
    auto need_dim = [&] {
        if (n < 1) err("structure constant before 'dim'");
    };
    auto index = [&](const std::string& tok) {
        std::size_t pos = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            err("bad index '" + tok + "'");
        }
        if (pos != tok.size() || v < 0 || v >= n) err("index out of range '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string lhs = line, rhs;
        if (auto eq = line.find('='); eq != std::string::npos) {
            lhs = line.substr(0, eq);
            rhs = line.substr(eq + 1);
        }
        std::istringstream ls(lhs);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "hopf") {
            if (tok.size() != 2) err("expected 'hopf <name>'");
            name = tok[1];
            continue;
        }
        if (kw == "dim") {
            if (tok.size() != 2 || n != -1) err("expected a single 'dim <n>'");
            n = std::stoi(tok[1]);
            if (n < 1) err("dimension must be positive");
            m = BilinearTable(n);
            d = CoproductTable(n);
            unit = SparseVector(n);
            eps.assign(n, CycScalar(0));
            s = LinearMap(n);
            continue;
        }
        if (kw == "labels") {
            need_dim();
            labels.assign(tok.begin() + 1, tok.end());
            if (static_cast<int>(labels.size()) != n) err("expected " + std::to_string(n) + " labels");
            continue;
        }
        need_dim();
        CycScalar c;
        try {
            c = CycScalar::parse(rhs);
        } catch (const Error& e) {
            err(std::string("bad scalar: ") + e.what());
        }
        if (kw == "m" && tok.size() == 4) {
            m.at(index(tok[1]), index(tok[2])).add(index(tok[3]), c);
        } else if (kw == "d" && tok.size() == 4) {
            d.at(index(tok[1])).push_back({index(tok[2]), index(tok[3]), c});
        } else if (kw == "s" && tok.size() == 3) {
            s.col(index(tok[1])).add(index(tok[2]), c);
        } else if (kw == "e" && tok.size() == 2) {
            eps[index(tok[1])] += c;
        } else if (kw == "u" && tok.size() == 2) {
            unit.add(index(tok[1]), c);
        } else {
            err("unrecognized line");
        }
    }
    if (n < 1) fail(Errc::SyntaxError, "missing 'dim'");
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return HopfData(name, labels, std::move(m), std::move(unit), std::move(d), std::move(eps), std::move(s));
}

}  // namespace kup
