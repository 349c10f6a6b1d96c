#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tightcat/report.hpp"

namespace tightcat {

struct Morphism {
    std::string id;
    int dom = 0;
    int cod = 0;
};

// Category description as written by hand: identities are implicit and
// composites involving them are filled in automatically.
struct RawCategory {
    struct Arrow {
        std::string id, dom, cod;
    };
    struct Entry {
        std::string first, second, result;  // first then second = result
    };
    std::vector<std::string> objects;
    std::vector<Arrow> morphisms;
    std::vector<Entry> composition;
};

class FinCategory {
public:
    // Full data: morphisms include identities; comp[f * m + g] is "f then g"
    // or -1 when cod f != dom g. Throws on any law violation.
    FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                std::vector<int> identity, std::vector<int> comp);

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& object_name(int x) const { return objects_[x]; }
    const Morphism& morphism(int m) const { return morphisms_[m]; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    int dom(int m) const { return morphisms_[m].dom; }
    int cod(int m) const { return morphisms_[m].cod; }
    int identity(int x) const { return identity_[x]; }
    bool is_identity(int m) const { return identity_[morphisms_[m].dom] == m; }

    // Geometric order: first f, then g. Returns -1 if not composable.
    int compose(int f, int g) const { return comp_[static_cast<size_t>(f) * morphisms_.size() + g]; }
    // Morphisms a -> b in declaration order.
    const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<size_t>(a) * objects_.size() + b]; }

    int object_index(const std::string& name) const;
    int morphism_index(const std::string& id) const;
    std::optional<int> find_object(const std::string& name) const;
    std::optional<int> find_morphism(const std::string& id) const;

    bool operator==(const FinCategory& o) const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identity_;
    std::vector<int> comp_;
    std::vector<std::vector<int>> hom_;
    std::unordered_map<std::string, int> object_ix_, morphism_ix_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

std::string identity_id(const std::string& object);

CatPtr validate_category(const RawCategory& raw);

CatPtr opposite(const CatPtr& c);
CatPtr product(const CatPtr& c, const CatPtr& d);

struct Functor {
    CatPtr source, target;
    std::vector<int> obj;
    std::vector<int> mor;
};

struct NatTransform {
    Functor from, to;
    std::vector<int> component;  // per source object
};

Functor identity_functor(const CatPtr& c);
Functor constant_functor(const CatPtr& source, const CatPtr& target, int object);
Functor compose_functors(const Functor& first, const Functor& second);

Report check_functor(const Functor& f);
Report check_nat_transform(const NatTransform& t);

struct CommaResult {
    CatPtr category;
    Functor dom_proj, cod_proj;
    struct Object {
        int a, b, arrow;  // arrow: F a -> G b in the shared target
    };
    std::vector<Object> objects;
};
CommaResult comma(const Functor& f, const Functor& g);

// Objects are the morphisms of C. A morphism x -> y is a pair (u, v) with
// u: dom x -> dom y, v: cod y -> cod x and x = u then y then v; the
// projection (dom, cod) lands in C x C^op and is a discrete fibration.
struct TwistedResult {
    CatPtr category;
    Functor proj;
};
TwistedResult twisted_arrow(const CatPtr& c);

// Object classes of the symmetric-transitive closure of "there is an arrow".
std::vector<std::vector<int>> connected_components(const FinCategory& c);

struct Splitting {
    int object;
    int q;  // dom e -> object
    int i;  // object -> dom e
};
std::optional<Splitting> split_idempotent(const FinCategory& c, int e);

// Standard small categories.
CatPtr terminal_category();
CatPtr discrete_category(int n);
CatPtr walking_arrow();
// One object "o"; morphisms are the monoid elements, "first a then b" is a*b.
CatPtr monoid_category(const std::vector<std::string>& elements,
                       const std::vector<std::vector<int>>& table, int unit);
CatPtr cyclic_group_category(int n);

}  // namespace tightcat
