/**
 * @file test_cli.cpp
 * @brief End-to-end checks of the kupinv front end: documented examples, exit codes,
 *        machine-mode format and determinism, and help text coverage of every selector.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/invariants/request.hpp"
#include "kup/twist/cocycle.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out, err;
};

Result kupinv(std::vector<std::string> args) {
    args.insert(args.begin(), "kupinv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = kup::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("kupinv_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string data(const std::string& rel) { return std::string(KUP_DATA_DIR) + "/" + rel; }

bool all_lines_key_value(const std::string& text) {
    static const std::regex line(R"([^ =]+ = .+)");
    std::istringstream is(text);
    std::string l;
    int n = 0;
    while (std::getline(is, l)) {
        if (!std::regex_match(l, line)) return false;
        ++n;
    }
    return n > 0;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("documented examples") {
        Result r = kupinv({"invariant", "--manifold", "lens:7:1:fL", "--algebra", "taft:7"});
        CHECK(r.code == 0);
        CHECK(r.out == "7 - 35*z - 28*z^2 - 21*z^3 - 14*z^4 - 7*z^5 (z = zeta_7)\n");

        r = kupinv({"invariant", "--manifold", "s3", "--algebra", "taft:4"});
        CHECK(r.code == 0);
        CHECK(r.out == "1\n");

        r = kupinv({"gauge-test", "--manifold", "lens:4:1:fL", "--algebra", "taft:4", "--cocycle", "taft-bichar:1"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("EQUAL\n", 0) == 0);
    }

    TEST_CASE("machine mode is key = value and byte-for-byte deterministic") {
        const std::vector<std::vector<std::string>> runs = {
            {"--machine", "invariant", "-m", "lens:4:1:fL", "-a", "taft:4", "--route", "both"},
            {"invariant", "--machine", "-m", "nu:3", "--all-builtins"},
            {"--machine", "integrals", "-a", "dual:group:S3"},
            {"--machine", "axioms", "-a", "taft:3"},
            {"--machine", "identities", "-a", "taft:2", "-c", "taft-bichar:1", "--max-fn", "3"},
            {"--machine", "gauge-test", "-m", "seifert:1:1", "-a", "dual:group:Z2xZ2", "-c", "klein"},
            {"--machine", "parse", "-f", data("diagrams/q8.diag")},
        };
        for (const auto& args : runs) {
            CAPTURE(args[1]);
            const Result a = kupinv(args), b = kupinv(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK(all_lines_key_value(a.out));
        }
        const Result r = kupinv({"--machine", "invariant", "-m", "lens:4:1:fL", "-a", "taft:4", "--route", "both"});
        CHECK(r.out.find("value = 8 - 8*z (z = zeta_4)\n") != std::string::npos);
        CHECK(r.out.find("routes = AGREE\n") != std::string::npos);
    }

    TEST_CASE("integrals report") {
        const Result r = kupinv({"--machine", "integrals", "-a", "taft:3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("alpha(g).order = 3\n") != std::string::npos);
        CHECK(r.out.find("unimodular = no\n") != std::string::npos);
        CHECK(r.out.find("Tr(S^2) = 0\n") != std::string::npos);
        const Result g = kupinv({"--machine", "integrals", "-a", "group:S3"});
        CHECK(g.out.find("Tr(S^2) = 6\n") != std::string::npos);
        CHECK(g.out.find("unimodular = yes\n") != std::string::npos);
    }

    TEST_CASE("exit code 1 for invalid input") {
        CHECK(kupinv({}).code == 1);
        CHECK(kupinv({"frobnicate"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "s3"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "s3", "-a", "taft:2", "--all-builtins"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "s3", "-a", "taft:2", "--route", "sideways"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "lens:4:2:fR", "-a", "taft:2"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "lens:5:2:fL", "-a", "taft:2"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "lens:5:2", "-a", "taft:2"}).code == 1);
        CHECK(kupinv({"invariant", "-m", "s3", "-a", "nonsense"}).code == 1);
        CHECK(kupinv({"gauge-test", "-m", "s3", "-a", "taft:2", "-c", "no-such-cocycle"}).code == 1);
        CHECK(kupinv({"parse", "-f", "/nonexistent/diagram.diag"}).code == 1);

        const Result bad_syntax = kupinv({"parse", "-f", write_temp("syntax.diag", "genus 1\nlower eta total_theta\n")});
        CHECK(bad_syntax.code == 1);
        CHECK(bad_syntax.err.find("SyntaxError") != std::string::npos);

        const std::string inadmissible = write_temp("inadmissible.diag",
                                                    "genus 1\n"
                                                    "lower eta total_theta 1/2 total_phi 1/2\n"
                                                    "  point p theta 1/4 phi 0\n"
                                                    "upper mu total_theta 1/2 total_phi 1/2\n"
                                                    "  point p theta 0 phi 0\n");
        const Result na = kupinv({"--machine", "parse", "-f", inadmissible});
        CHECK(na.code == 1);
        CHECK(na.out.find("admissible = no\n") != std::string::npos);
        CHECK(kupinv({"invariant", "-m", "plan:" + inadmissible, "-a", "taft:2"}).code == 1);
    }

    TEST_CASE("structure-constant files are checked before use") {
        // eps(g) = -1 breaks the counit axiom.
        const std::string broken = write_temp("broken.hopf",
                                              "hopf broken\ndim 2\nlabels 1 g\n"
                                              "m 0 0 0 = 1\nm 0 1 1 = 1\nm 1 0 1 = 1\nm 1 1 0 = 1\n"
                                              "d 0 0 0 = 1\nd 1 1 1 = 1\n"
                                              "s 0 0 = 1\ns 1 1 = 1\n"
                                              "e 0 = 1\ne 1 = -1\nu 0 = 1\n");
        const Result inv = kupinv({"invariant", "-m", "s3", "-a", "file:" + broken});
        CHECK(inv.code == 1);
        CHECK(inv.err.find("counit") != std::string::npos);

        // The axioms command reports the failure as a failed check.
        const Result ax = kupinv({"--machine", "axioms", "-a", "file:" + broken});
        CHECK(ax.code == 2);
        CHECK(ax.out.find("axiom.counit = FAIL\n") != std::string::npos);
        CHECK(ax.out.find("result = FAIL\n") != std::string::npos);

        const std::string good = write_temp("good.hopf",
                                            "hopf Z2\ndim 2\nlabels 1 g\n"
                                            "m 0 0 0 = 1\nm 0 1 1 = 1\nm 1 0 1 = 1\nm 1 1 0 = 1\n"
                                            "d 0 0 0 = 1\nd 1 1 1 = 1\n"
                                            "s 0 0 = 1\ns 1 1 = 1\n"
                                            "e 0 = 1\ne 1 = 1\nu 0 = 1\n");
        const Result ok = kupinv({"invariant", "-m", "s2xs1", "-a", "file:" + good});
        CHECK(ok.code == 0);
        CHECK(ok.out == "2\n");
    }

    TEST_CASE("routes agree across the built-in sweep") {
        for (const char* m : {"s3", "s2xs1", "q8", "lens:5:2:fR", "nu:-2", "nu:4:3", "nu-prime:5:2", "nu-tilde:5:2"}) {
            CAPTURE(m);
            const Result r = kupinv({"--machine", "invariant", "-m", m, "--all-builtins", "--route", "both"});
            CHECK(r.code == 0);
            CHECK(r.out.find("DIFFER") == std::string::npos);
        }
    }

    TEST_CASE("identity and axiom commands") {
        const Result id = kupinv({"identities", "-a", "taft:3", "-c", "taft-bichar:1", "--max-power", "2", "--max-fn", "3"});
        CHECK(id.code == 0);
        CHECK(id.out.find("FAIL") == std::string::npos);
        CHECK(id.out.find("trace-formula") != std::string::npos);
        CHECK(id.out.find("Q-conjugation") != std::string::npos);
        const Result ax = kupinv({"axioms", "-a", "tensor:group:Z2,taft:2"});
        CHECK(ax.code == 0);
        CHECK(ax.out.find("result: PASS") != std::string::npos);
    }

    TEST_CASE("parse prints the evaluation plan") {
        const Result r = kupinv({"--machine", "parse", "-f", data("diagrams/q8.diag")});
        CHECK(r.code == 0);
        CHECK(r.out.find("admissible = yes\n") != std::string::npos);
        CHECK(r.out.find("genus = 2\n") != std::string::npos);
        CHECK(r.out.find("points = 8\n") != std::string::npos);
        const Result e = kupinv({"parse", "-f", data("diagrams/s3.diag"), "--echo"});
        CHECK(e.code == 0);
        CHECK(e.out.find("upper mu") != std::string::npos);
    }

    TEST_CASE("help text lists every selector from the shared tables") {
        const Result top = kupinv({"--help"});
        CHECK(top.code == 0);
        for (const auto& table : {kup::algebra_selector_help(), kup::request_selector_help(), kup::cocycle_selector_help()})
            for (const auto& [sel, what] : table) {
                CAPTURE(sel);
                CHECK(top.out.find(sel) != std::string::npos);
                CHECK(top.out.find(what) != std::string::npos);
            }
        for (const char* cmd : {"invariant", "axioms", "integrals", "identities", "gauge-test", "parse"}) {
            CAPTURE(cmd);
            CHECK(top.out.find(cmd) != std::string::npos);
            CHECK(kupinv({cmd, "--help"}).code == 0);
        }
        const Result inv = kupinv({"invariant", "--help"});
        for (const auto& [sel, what] : kup::request_selector_help()) CHECK(inv.out.find(sel) != std::string::npos);
    }
}
