#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightcat/config.hpp"

namespace tightcat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget = 0;  // seconds; 0 when unbounded
    std::string detail;
};

struct AcceptanceConfig {
    std::uint32_t seed = 1;
    Options opt;
};

constexpr int acceptance_count = 11;

// One criterion; pass requires the checks and the time budget.
CriterionResult run_criterion(int id, const AcceptanceConfig& cfg = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});
std::string format_line(const CriterionResult& r);

}  // namespace tightcat
