#pragma once

#include <map>
#include <vector>

#include "tightcat/action.hpp"
#include "tightcat/report.hpp"

namespace tightcat {

// The cocones over a left action (or cones under a right action) together
// with the action they form. For lan, source is left and action is right;
// comps[c][i] lists one morphism per element of source, by global index.
struct ConeSpace {
    Action source;
    Action action;
    std::vector<std::vector<Components>> comps;
    std::vector<std::map<Components, int>> index;

    // Local index of a family in the fiber over c, or -1.
    int find(int c, const Components& family) const;
    int global(int c, int i) const;
};

ConeSpace lan(const LeftAction& a, const Options& opt = {});
ConeSpace ran(const RightAction& b, const Options& opt = {});

// For f: A -> A' (left), the covariant map of cocones lan(A') -> lan(A).
EqMap lan_map(const ConeSpace& lan_target, const ConeSpace& lan_source, const EqMap& f);
// For g: B -> B' (right, covariant), the map of cones ran(B') -> ran(B).
EqMap ran_map(const ConeSpace& ran_target, const ConeSpace& ran_source, const EqMap& g);

// unit: A -> ran(lan A), s |-> (delta |-> delta_s).
EqMap unit(const ConeSpace& lan_a, const ConeSpace& ran_lan_a);
// counit, covariantly: B -> lan(ran B), u |-> (rho |-> rho_u).
EqMap counit(const ConeSpace& ran_b, const ConeSpace& lan_ran_b);

// Iterates of the monad on a left action A: l[0] = lan A, r[0] = ran l[0],
// l[k] = lan r[k-1], r[k] = ran l[k].
struct MonadTower {
    LeftAction base;
    std::vector<ConeSpace> l, r;
    EqMap eta;  // A -> r[0]
    EqMap mu;   // r[1] -> r[0], present when depth >= 2
};
MonadTower monad_tower(const LeftAction& a, int depth = 2, const Options& opt = {});

// Iterates of the comonad on a right action B: r[0] = ran B, l[0] = lan r[0],
// r[k] = ran l[k-1], l[k] = lan r[k].
struct ComonadTower {
    RightAction base;
    std::vector<ConeSpace> r, l;
    EqMap eps;    // B -> l[0], the counit in covariant presentation
    EqMap delta;  // l[1] -> l[0], the comultiplication likewise
};
ComonadTower comonad_tower(const RightAction& b, int depth = 2, const Options& opt = {});

LeftAction monad_square(const LeftAction& a, const Options& opt = {});
RightAction comonad_square(const RightAction& b, const Options& opt = {});

// Structure map ran(lan A) -> A.
struct Algebra {
    LeftAction carrier;
    EqMap structure;
};
// Structure map lan(ran B) -> B in the covariant presentation.
struct Coalgebra {
    RightAction carrier;
    EqMap structure;
};

Report check_algebra(const Algebra& a, const Options& opt = {});
Report check_algebra(const Algebra& a, const MonadTower& t);
Report check_coalgebra(const Coalgebra& b, const Options& opt = {});
Report check_coalgebra(const Coalgebra& b, const ComonadTower& t);

// Unit laws need depth 2, associativity depth 3.
Report check_monad_laws(const MonadTower& t);
Report check_comonad_laws(const ComonadTower& t);
// Both triangle identities at A (left) and B (right).
Report check_triangles_left(const LeftAction& a, const Options& opt = {});
Report check_triangles_right(const RightAction& b, const Options& opt = {});

// Free algebra (r1, mu) and cofree coalgebra (l1, delta).
Algebra free_algebra(const MonadTower& t);
Coalgebra cofree_coalgebra(const ComonadTower& t);

// phi[s][u] for global element indices s of A and u of B.
struct Gap {
    LeftAction left;
    RightAction right;
    std::vector<std::vector<int>> phi;
};

std::vector<Gap> gaps_enumerate(const LeftAction& a, const RightAction& b, const Options& opt = {});
Report check_gap(const Gap& g);
// The lower transpose A -> ran B and upper transpose B -> lan A.
EqMap gap_lower(const Gap& g, const ConeSpace& ran_b);
EqMap gap_upper(const Gap& g, const ConeSpace& lan_a);
Gap gap_from_lower(const LeftAction& a, const ConeSpace& ran_b, const EqMap& lower);
Gap gap_from_upper(const ConeSpace& lan_a, const RightAction& b, const EqMap& upper);

struct GapMorphism {
    EqMap lower;  // A1 -> A2
    EqMap upper;  // B2 -> B1, covariant
};
Report check_gap_morphism(const GapMorphism& f, const Gap& g1, const Gap& g2, const Options& opt = {});

// Sigma: (A, alpha) |-> (lan A, lan eta); Nu: (B, beta) |-> (ran B, ran eps).
// Structure maps live on the cone spaces of the given tower, which coincide
// with those recomputed from the new carrier.
Coalgebra nucleus_to_coalgebra(const Algebra& a, const MonadTower& t);
Algebra nucleus_to_algebra(const Coalgebra& b, const ComonadTower& t);

// Homs of algebras and coalgebras, by exhaustive search.
std::vector<EqMap> algebra_homs(const Algebra& x, const MonadTower& tx, const Algebra& y, const MonadTower& ty,
                                const Options& opt = {});
std::vector<EqMap> coalgebra_homs(const Coalgebra& x, const ComonadTower& tx, const Coalgebra& y,
                                  const ComonadTower& ty, const Options& opt = {});

}  // namespace tightcat
