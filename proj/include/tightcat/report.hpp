#pragma once

#include <string>
#include <vector>

namespace tightcat {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

// Outcome of a checker: every named condition with its verdict.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    // Name of the first failing condition, empty when all pass.
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name;
        return {};
    }
    bool passed(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.pass;
        return false;
    }
};

}  // namespace tightcat
