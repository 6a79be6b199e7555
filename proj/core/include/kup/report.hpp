/**
 * @file report.hpp
 * @brief Pass/fail records shared by the identity suites and consistency harnesses.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kup {

struct CheckResult {
    std::string name;    ///< identity or property name
    std::string detail;  ///< parameters of this instance (basis elements, n, map name, ...)
    bool passed = true;
};

struct SuiteReport {
    std::uint64_t seed = 0;  ///< seed used for any random maps
    std::vector<CheckResult> results;

    void add(std::string name, std::string detail, bool passed) {
        results.push_back({std::move(name), std::move(detail), passed});
    }
    [[nodiscard]] bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    struct Row {
        std::string name;
        int passed = 0;
        int failed = 0;
        std::string first_failure;
    };
    /// One row per identity name, in first-appearance order.
    [[nodiscard]] std::vector<Row> table() const {
        std::vector<Row> rows;
        for (const auto& r : results) {
            Row* row = nullptr;
            for (auto& x : rows)
                if (x.name == r.name) row = &x;
            if (row == nullptr) {
                rows.push_back({r.name, 0, 0, ""});
                row = &rows.back();
            }
            if (r.passed) {
                ++row->passed;
            } else {
                if (row->failed == 0) row->first_failure = r.detail;
                ++row->failed;
            }
        }
        return rows;
    }
    void append(const SuiteReport& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
};

}  // namespace kup
