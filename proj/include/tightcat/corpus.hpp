#pragma once

#include <string>
#include <vector>

#include "tightcat/fincat.hpp"
#include "tightcat/poset.hpp"
#include "tightcat/tight.hpp"

namespace tightcat {

struct NamedPoset {
    std::string name;
    FinPoset poset;
};
struct NamedCategory {
    std::string name;
    CatPtr category;
};

// Complete lattices up to eight elements.
std::vector<NamedPoset> lattice_corpus();
// Categories with at most three objects and eight morphisms.
std::vector<NamedCategory> category_corpus();

FinPoset pentagon_lattice();
FinPoset diamond_lattice();
// a -> b -> c with an idempotent on a that does not split.
CatPtr nonsplit_idempotent_category();
// The representable at a with the idempotent that the non-split arrow induces.
LeftTightDiagram nonsplit_diagram();

// Small shapes with at most max_nodes objects.
std::vector<NamedCategory> diagram_shapes(int max_nodes);
// Every functor from shape into a thin category.
std::vector<Functor> diagrams_into_thin(const CatPtr& shape, const CatPtr& thin);

}  // namespace tightcat
