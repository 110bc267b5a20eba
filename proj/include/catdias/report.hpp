#pragma once

#include "catdias/int_matrix.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace catdias {

// One point (or matrix entry) where two sides of an identity disagree.
struct Witness {
    std::string check;
    std::vector<int> point;

    bool operator==(const Witness&) const = default;
};

struct NamedMatrix {
    std::string name;
    std::string source_basis;
    std::string target_basis;
    IntMatrix matrix;

    bool operator==(const NamedMatrix&) const = default;
};

// Outcome of one verification. Passes iff no witness was recorded.
struct Report {
    std::string verifier;
    std::vector<std::pair<std::string, int>> params;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<Witness> witnesses;
    std::vector<NamedMatrix> matrices;
    double elapsed_ms = 0.0;

    bool pass() const { return witnesses.empty(); }
    void fail(std::string check, std::vector<int> point = {})
    {
        witnesses.push_back({std::move(check), std::move(point)});
    }
    void fail_all(const std::string& check, const std::vector<std::vector<int>>& points)
    {
        for (const auto& p : points)
            witnesses.push_back({check, p});
    }
};

// Runs `build` and stores its wall time in the returned report.
template <class F>
Report timed(F&& build)
{
    const auto start = std::chrono::steady_clock::now();
    Report report = build();
    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

std::string summary_line(const Report& report);

} // namespace catdias
