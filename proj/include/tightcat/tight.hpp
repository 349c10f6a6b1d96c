#pragma once

#include <optional>
#include <vector>

#include "tightcat/cuts.hpp"

namespace tightcat {

// A left action with an idempotent on its cocones (covariant presentation).
struct LeftTightDiagram {
    LeftAction diagram;
    EqMap phi;
};
// A right action with an idempotent on its cones.
struct RightTightDiagram {
    RightAction diagram;
    EqMap kappa;
};

// Throws NotIdempotent or SplitMismatch; otherwise reports the checks run.
Report check_tight_diagram(const LeftTightDiagram& d, const Options& opt = {});
Report check_tight_diagram(const RightTightDiagram& d, const Options& opt = {});

std::vector<Components> fixed_cocones(const LeftTightDiagram& d, int c, const Options& opt = {});
std::vector<Components> fixed_cones(int c, const RightTightDiagram& d, const Options& opt = {});

std::optional<Universal> tight_colimit(const LeftTightDiagram& d, const Options& opt = {});
std::optional<Universal> tight_limit(const RightTightDiagram& d, const Options& opt = {});
// Independent bijection certificate for a returned witness.
bool is_tight_colimit(const LeftTightDiagram& d, const Universal& u, const Options& opt = {});

// Moves the idempotent to the loose colimit and splits it there. Throws
// NoLooseColimit or NotSplittable.
Universal tight_colimit_via_split(const LeftTightDiagram& d, const Options& opt = {});
Universal tight_limit_via_split(const RightTightDiagram& d, const Options& opt = {});

// The left component of the cut, with its idempotent on cocones, is the
// tight colimit of the representables over its elements.
Report representable_generation_check(const AbsoluteCut& cut, const Options& opt = {});

// The image of a tight colimit under the embedding is a tight colimit among
// the given cuts and the embedded objects.
Report tight_preservation_check(const CatPtr& c, const LeftTightDiagram& d, const std::vector<AbsoluteCut>& targets,
                                const Options& opt = {});

LeftTightDiagram identity_diagram(const LeftAction& a, const Options& opt = {});

// Every idempotent on the cocones of every left action with fibers at most
// cap (up to isomorphism) that passes check_tight_diagram.
std::vector<LeftTightDiagram> enumerate_tight_diagrams(const CatPtr& c, int cap, const Options& opt = {});

}  // namespace tightcat
