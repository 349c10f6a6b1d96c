#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tightcat/config.hpp"
#include "tightcat/fincat.hpp"

namespace tightcat {

enum class Variance { Left, Right };

// A left action (presheaf) or right action (copresheaf) over a finite
// category. trans[f] maps the input fiber of f to its output fiber: for a
// left action and f: x -> y that is fiber(y) -> fiber(x), s |-> f*s; for a
// right action it is fiber(x) -> fiber(y), u |-> u!f.
struct Action {
    CatPtr base;
    Variance variance = Variance::Left;
    std::vector<std::vector<std::string>> names;
    std::vector<std::vector<int>> trans;

    int num_objects() const { return static_cast<int>(names.size()); }
    int fiber_size(int x) const { return static_cast<int>(names[x].size()); }
    int total() const;
    std::vector<int> offsets() const;
    int input_object(int f) const { return variance == Variance::Left ? base->cod(f) : base->dom(f); }
    int output_object(int f) const { return variance == Variance::Left ? base->dom(f) : base->cod(f); }
    int act(int f, int e) const { return trans[f][e]; }
    int find_element(int x, const std::string& name) const;
    bool is_empty() const { return total() == 0; }
};

using LeftAction = Action;
using RightAction = Action;

// Equivariant map given by its fiber components.
struct EqMap {
    std::vector<std::vector<int>> comp;
    bool operator==(const EqMap& o) const { return comp == o.comp; }
    bool operator!=(const EqMap& o) const { return comp != o.comp; }
    bool operator<(const EqMap& o) const { return comp < o.comp; }
};

// Raw action description by names: fibers per object and, per non-identity
// morphism, the element map of its transition.
struct RawAction {
    Variance variance = Variance::Left;
    std::vector<std::pair<std::string, std::vector<std::string>>> fibers;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> maps;
};

Action validate_action(const CatPtr& base, const RawAction& raw);
LeftAction validate_left_action(const CatPtr& base, const RawAction& raw);
RightAction validate_right_action(const CatPtr& base, const RawAction& raw);
// Functoriality and typing of already indexed data; throws on violation.
void check_action_laws(const Action& a);

Action empty_action(const CatPtr& base, Variance v);
Action terminal_action(const CatPtr& base, Variance v);
LeftAction yoneda_left(const CatPtr& c, int x);
RightAction yoneda_right(const CatPtr& c, int x);

// Position of a morphism inside its hom-set listing.
std::vector<int> hom_positions(const FinCategory& c);

EqMap identity_map(const Action& a);
// g after f.
EqMap after(const EqMap& g, const EqMap& f);
bool is_equivariant(const Action& s, const Action& t, const EqMap& h);
bool is_injective(const EqMap& h);
bool is_surjective(const EqMap& h, const Action& target);
bool is_bijective(const EqMap& h, const Action& target);
std::optional<EqMap> inverse(const EqMap& h, const Action& target);

bool is_idempotent(const EqMap& e);

// Fixed points of an idempotent endomap, as a sub-action with its inclusion.
struct SubAction {
    Action action;
    EqMap inclusion;
};
SubAction fixed_points(const Action& a, const EqMap& e);

struct SearchSpec {
    // Restrict the values at object x to those with allowed[x][v] != 0.
    std::vector<std::vector<char>> allowed;
    bool injective = false;
};

// Exhaustive enumeration in canonical (lexicographic) order.
std::vector<EqMap> equivariant_maps(const Action& s, const Action& t, const Options& opt = {},
                                    const SearchSpec& spec = {});
std::vector<EqMap> equivariant_maps_serial(const Action& s, const Action& t, const Options& opt = {},
                                           const SearchSpec& spec = {});
// Visits maps in canonical order until the callback returns false.
void for_each_equivariant_map(const Action& s, const Action& t, const std::function<bool(const EqMap&)>& visit,
                              const Options& opt = {}, const SearchSpec& spec = {});
std::size_t count_equivariant_maps(const Action& s, const Action& t, const Options& opt = {});

std::optional<EqMap> find_isomorphism(const Action& s, const Action& t, const Options& opt = {});

// A cocone over a left action at c: for each element (global index) a
// morphism from its object to c. A cone from c under a right action: for
// each element u in fiber(a) a morphism c -> a.
using Components = std::vector<int>;

std::vector<Components> cocones(const LeftAction& a, int c, const Options& opt = {});
std::vector<Components> cones(int c, const RightAction& b, const Options& opt = {});

struct TotalCategory {
    CatPtr category;
    Functor proj;
    std::vector<std::pair<int, int>> elements;  // (object, local index) per total object
};
TotalCategory grothendieck(const Action& a);

struct Universal {
    int object;
    Components arrows;
};
std::optional<Universal> loose_colimit(const LeftAction& a, const Options& opt = {});
std::optional<Universal> loose_limit(const RightAction& b, const Options& opt = {});
// Independent re-check of the universal property against every apex.
bool is_loose_colimit(const LeftAction& a, const Universal& u, const Options& opt = {});
bool is_loose_limit(const RightAction& b, const Universal& u, const Options& opt = {});

// Representability over explicit families: sets[c] lists the cocones (or
// cones) with apex c, acted on by postcomposition (or precomposition).
std::optional<Universal> find_representation(const CatPtr& c, const std::vector<std::vector<Components>>& sets,
                                             bool colimit);
bool check_representation(const CatPtr& c, const std::vector<std::vector<Components>>& sets, const Universal& u,
                          bool colimit);

Report check_discrete_fibration(const Functor& p);
Report check_discrete_opfibration(const Functor& p);

}  // namespace tightcat
