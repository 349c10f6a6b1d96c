#pragma once

#include <optional>
#include <vector>

#include "tightcat/action.hpp"
#include "tightcat/fincat.hpp"

namespace tightcat {

// A diagram D: J -> C replaced by the left action of connected components of
// x / D (for colimits) and the right action of components of D / x (for
// limits). Element names are the least representative "j:arrow".
struct Factorization {
    LeftAction left;
    RightAction right;
};
Factorization comprehensive_factorization(const Functor& d);

// Cocones under a functor: per apex c, families indexed by the objects of J.
std::vector<Components> diagram_cocones(const Functor& d, int c);
std::vector<Components> diagram_cones(int c, const Functor& d);
std::optional<Universal> diagram_colimit(const Functor& d);
std::optional<Universal> diagram_limit(const Functor& d);

}  // namespace tightcat
