#pragma once

#include <optional>
#include <vector>

#include "tightcat/isbell.hpp"

namespace tightcat {

// Cone spaces over a pair (A, B) of a left and a right action. The two
// outer levels are only filled when requested.
struct CutSpaces {
    ConeSpace lan_a;          // lan A
    ConeSpace ran_b;          // ran B
    ConeSpace ran_lan_a;      // ran lan A
    ConeSpace lan_ran_b;      // lan ran B
    ConeSpace lan_ran_lan_a;  // lan ran lan A
    ConeSpace ran_lan_ran_b;  // ran lan ran B
    bool deep = false;
    Options opt;
};
CutSpaces cut_spaces(const LeftAction& a, const RightAction& b, bool deep, const Options& opt = {});

struct Interval {
    LeftAction left;
    RightAction right;
    EqMap alg;        // ran lan A -> A
    EqMap coalg;      // lan ran B -> B, covariant
    EqMap j_lower;    // ran B -> ran lan A
    EqMap j_upper;    // lan A -> lan ran B, covariant
};

// Maps are ordered as the monos and epis of the retractions.
struct SimpleCut {
    LeftAction left;
    RightAction right;
    EqMap g_lower;  // A -> ran B
    EqMap g_upper;  // B -> lan A, covariant
    EqMap j_lower;  // ran B -> A
    EqMap j_upper;  // lan A -> B, covariant
};

struct FullCut {
    Interval interval;
    EqMap g_lower;  // A -> ran B
    EqMap g_upper;  // B -> lan A
};

struct AbsoluteCut {
    LeftAction left;
    RightAction right;
    EqMap a_lower;    // on ran B
    EqMap a_upper;    // on lan A
    EqMap phi_lower;  // on ran lan A
    EqMap phi_upper;  // on lan ran B
};

// Right action B with an idempotent on ran B.
struct CutAlgebra {
    RightAction carrier;
    EqMap kappa;
};
// Left action A with an idempotent on lan A.
struct CutCoalgebra {
    LeftAction carrier;
    EqMap phi;
};

Report check_interval(const Interval& i, const CutSpaces& sp);
Report check_interval(const Interval& i, const Options& opt = {});

// Throws RetractionFailure when the fiber sizes rule out the retractions.
Report check_simple_cut(const SimpleCut& s, const CutSpaces& sp);
Report check_simple_cut(const SimpleCut& s, const Options& opt = {});
// Checks the interval, the first and the second pair of cut equations, and
// that the two pairs hold or fail together.
Report check_full_cut(const FullCut& f, const CutSpaces& sp);
Report check_full_cut(const FullCut& f, const Options& opt = {});
// The two cut equation pairs separately.
bool full_cut_first_pair(const FullCut& f, const CutSpaces& sp);
bool full_cut_second_pair(const FullCut& f, const CutSpaces& sp);

FullCut simple_to_full(const SimpleCut& s, const CutSpaces& sp);
SimpleCut full_to_simple(const FullCut& f);

AbsoluteCut simple_to_absolute(const SimpleCut& s, const CutSpaces& sp);
// Splits both idempotents; the first splitting that yields a simple cut
// regenerating the absolute data wins. Throws SplitMismatch otherwise.
SimpleCut absolute_to_simple(const AbsoluteCut& a, const CutSpaces& sp, const Options& opt = {});
Report check_absolute_cut(const AbsoluteCut& a, const CutSpaces& sp, const Options& opt = {});
Report check_absolute_cut(const AbsoluteCut& a, const Options& opt = {});

// When the interval of a full cut is symmetric (its two gap tables agree),
// both retractions are isomorphisms.
Report interval_symmetry_check(const FullCut& f, const CutSpaces& sp);

Report check_cut_algebra(const CutAlgebra& k, const Options& opt = {});
Report check_cut_coalgebra(const CutCoalgebra& c, const Options& opt = {});
CutAlgebra cut_algebra_of(const AbsoluteCut& a);
CutCoalgebra cut_coalgebra_of(const AbsoluteCut& a);

// A morphism X -> Y of cuts: lower: A_X -> A_Y, upper: B_Y -> B_X.
struct CutMorphism {
    EqMap lower;
    EqMap upper;
};
struct CutView {
    AbsoluteCut absolute;
    SimpleCut simple;
    CutSpaces spaces;
};
CutView cut_view(const AbsoluteCut& a, const Options& opt = {});
Report cut_morphism_check(const CutMorphism& f, const CutView& x, const CutView& y);
// The upper component determined by a lower one.
EqMap reconstruct_upper(const EqMap& lower, const CutView& x, const CutView& y);
EqMap reconstruct_lower(const EqMap& upper, const CutView& x, const CutView& y);
std::vector<CutMorphism> cut_homs(const CutView& x, const CutView& y, const Options& opt = {});

// Functors relating cuts with algebras and coalgebras.
Algebra cut_to_algebra(const CutView& c);
Coalgebra cut_to_coalgebra(const CutView& c);
AbsoluteCut coalgebra_to_cut(const Coalgebra& b, const Options& opt = {});
AbsoluteCut algebra_to_cut(const Algebra& a, const Options& opt = {});

// The cut of a representable: (yoneda_left x, yoneda_right x) with identity
// idempotents.
AbsoluteCut embed_object(const CatPtr& c, int x, const Options& opt = {});

// Left actions with every fiber of size at most cap, one per isomorphism
// class, in canonical order.
std::vector<LeftAction> enumerate_left_actions(const CatPtr& c, int cap, const Options& opt = {});
// Right actions, through left actions of the opposite category.
std::vector<RightAction> enumerate_right_actions(const CatPtr& c, int cap, const Options& opt = {});
std::vector<AbsoluteCut> enumerate_cuts(const CatPtr& c, int cap, const Options& opt = {});

}  // namespace tightcat
