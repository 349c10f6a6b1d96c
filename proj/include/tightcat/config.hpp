#pragma once

#include <cstddef>

namespace tightcat {

// Candidate states explored by one search before SizeLimit is raised.
// TIGHTCAT_CAP in the environment overrides the built-in default.
std::size_t default_cap();

struct Options {
    std::size_t cap = default_cap();
    bool parallel = true;
};

}  // namespace tightcat
