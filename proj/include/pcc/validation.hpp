#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace pcc {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string measured;  // measured values and the tolerance they were held to
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 15;

// Runs acceptance criterion `id` (1..15).
CriterionResult run_criterion(int id);

// Runs every criterion in order; `on_result` is called as each one finishes.
std::vector<CriterionResult> run_all_criteria(
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [ 3] title: measured (0.12 s)"
std::string format_result(const CriterionResult& r);

}  // namespace pcc
