#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tightcat/action.hpp"
#include "tightcat/report.hpp"

namespace tightcat {

struct FinMonoid {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;  // table[a][b] = a.b
    int unit = 0;

    int size() const { return static_cast<int>(elements.size()); }
    int op(int a, int b) const { return table[a][b]; }
    bool is_group() const;
    // Throws TypeMismatch when a has no two-sided inverse.
    int inverse(int a) const;
};

// Finds the unit and checks associativity; throws AssociativityViolation or
// UnitViolation.
FinMonoid validate_monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
FinMonoid cyclic_group(int n);
FinMonoid symmetric_group3();
// {1, e} with e.e = e.
FinMonoid idempotent_monoid();

CatPtr as_category(const FinMonoid& m);

// Left: act[a][x] = a*x. Right: act[a][x] = x!a.
struct GAction {
    FinMonoid monoid;
    Variance side = Variance::Left;
    int size = 0;
    std::vector<std::vector<int>> act;
};

void check_gaction(const GAction& x);
GAction regular_action(const FinMonoid& m, Variance side);
// Free action on (monoid x orbits), element (a, o) at index o * |M| + a.
GAction free_action(const FinMonoid& m, int orbits, Variance side);
GAction trivial_action(const FinMonoid& m, int points, Variance side);
GAction disjoint_union(const GAction& x, const GAction& y);

Action to_action(const GAction& x, const CatPtr& base);
Action to_action(const GAction& x);
GAction from_action(const Action& a, const FinMonoid& m);

std::vector<std::vector<int>> orbits(const GAction& x);

struct Freeness {
    bool free = true;
    // a.x = b.x with a != b; for groups b is the unit
    int a = -1, b = -1, x = -1;
};
Freeness is_free(const GAction& x);

// X = M x roots; element_of[a][r] is the element a*roots[r].
struct FreeDecomposition {
    std::vector<int> roots;
    std::vector<std::vector<int>> element_of;
};
// Throws NotFree.
FreeDecomposition decompose(const GAction& x);

// Tuples over the monoid indexed lexicographically, first coordinate most
// significant.
std::vector<int> decode_tuple(const FinMonoid& m, int n, long long index);
long long encode_tuple(const FinMonoid& m, const std::vector<int>& t);

// Cocones over a free left action: the pointwise right action on tuples
// indexed by orbits; empty when not free.
GAction group_lan(const GAction& x);
GAction group_ran(const GAction& y);
// Evaluation of each cocone at the orbit roots, as a map from the generic
// cocone space into group_lan(x).
EqMap group_lan_comparison(const GAction& x, const Options& opt = {});
bool group_lan_agrees(const GAction& x, const Options& opt = {});

// Equivalence classes of tuples in M^n under v ~ v.a.
struct Ray {
    std::vector<int> coords;                 // canonical representative
    std::vector<std::vector<int>> members;   // full class, monoids only
    bool operator==(const Ray& o) const { return coords == o.coords; }
    bool operator<(const Ray& o) const { return coords < o.coords; }
};
// v.a on the right, a.v on the left.
std::vector<int> scale(const FinMonoid& m, const std::vector<int>& v, int a, Variance side = Variance::Right);
// Groups: first coordinate made the unit.
std::vector<int> normalize_ray(const FinMonoid& g, const std::vector<int>& v, Variance side = Variance::Right);
std::vector<Ray> projective_rays(const FinMonoid& m, int n, const Options& opt = {});
std::vector<Ray> projective_rays(const GAction& x, const Options& opt = {});
// Rays under v ~ a.v.
std::vector<Ray> projective_rays_left(const FinMonoid& m, int n, const Options& opt = {});
int find_ray(const FinMonoid& m, const std::vector<Ray>& rays, const std::vector<int>& v,
             Variance side = Variance::Right);

// A -> M x B in the Kleisli category of (M x -).
struct KleisliMorphism {
    int dom = 0, cod = 0;
    std::vector<int> map;     // A -> B
    std::vector<int> weight;  // A -> M
    bool operator==(const KleisliMorphism& o) const {
        return dom == o.dom && cod == o.cod && map == o.map && weight == o.weight;
    }
};
KleisliMorphism kleisli_identity(const FinMonoid& m, int n);
// First m1, then m2.
KleisliMorphism kleisli_compose(const FinMonoid& m, const KleisliMorphism& m1, const KleisliMorphism& m2);
// Same data read as A -> B x M.
KleisliMorphism kleisli_compose_right(const FinMonoid& m, const KleisliMorphism& m1, const KleisliMorphism& m2);
KleisliMorphism random_kleisli(const FinMonoid& m, int dom, int cod, std::mt19937& rng);
// Contravariant: m: A -> B gives B* -> A* on rays, with unit weights.
KleisliMorphism kleisli_lan(const FinMonoid& g, const KleisliMorphism& m, const Options& opt = {});
// Symmetric presentation for the Kleisli category of (- x M).
KleisliMorphism kleisli_ran(const FinMonoid& g, const KleisliMorphism& m, const Options& opt = {});
KleisliMorphism kleisli_monad(const FinMonoid& g, const KleisliMorphism& m, const Options& opt = {});

// {h in M^X | h(a*x) = a.h(x)} with the pointwise right action.
GAction monoid_lan(const GAction& x, const Options& opt = {});
std::vector<std::vector<int>> monoid_lan_tuples(const GAction& x, const Options& opt = {});

// Right action x!a := (a^-1)*x.
GAction inverse_twist(const GAction& x);

// Left actions of Z_n up to isomorphism with at most max_size elements, as
// disjoint unions of cyclic orbits.
std::vector<GAction> cyclic_actions(int n, int max_size);

struct Z4Row {
    int orbits;
    long long lan_size, lan_orbits;
    std::optional<long long> monad_size;  // only where the carrier is enumerable
};
struct Z4Demo {
    Report report;
    std::vector<Z4Row> table;
    long long coproduct_monad = 0, sum_of_monads = 0, product_of_monads = 0;
};
Z4Demo z4_demo(const Options& opt = {});

}  // namespace tightcat
