#include "tightcat/corpus.hpp"

#include "tightcat/error.hpp"

namespace tightcat {

FinPoset pentagon_lattice() {
    return make_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FinPoset diamond_lattice() {
    return make_poset({"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

std::vector<NamedPoset> lattice_corpus() {
    return {{"chain1", chain_poset(1)},     {"chain2", chain_poset(2)},       {"chain3", chain_poset(3)},
            {"chain4", chain_poset(4)},     {"square", powerset_lattice(2)},  {"pentagon", pentagon_lattice()},
            {"diamond", diamond_lattice()}, {"cube", powerset_lattice(3)}};
}

namespace {

CatPtr parallel_pair() {
    RawCategory raw;
    raw.objects = {"a", "b"};
    raw.morphisms = {{"f", "a", "b"}, {"g", "a", "b"}};
    return validate_category(raw);
}

CatPtr span_category() {
    RawCategory raw;
    raw.objects = {"l", "c", "r"};
    raw.morphisms = {{"p", "c", "l"}, {"q", "c", "r"}};
    return validate_category(raw);
}

// Two objects, an idempotent on the first and an arrow absorbing it.
CatPtr idempotent_arrow() {
    RawCategory raw;
    raw.objects = {"a", "b"};
    raw.morphisms = {{"e", "a", "a"}, {"f", "a", "b"}};
    raw.composition = {{"e", "e", "e"}, {"e", "f", "f"}};
    return validate_category(raw);
}

}  // namespace

CatPtr nonsplit_idempotent_category() {
    RawCategory raw;
    raw.objects = {"a", "b", "c"};
    raw.morphisms = {{"e", "a", "a"}, {"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}};
    raw.composition = {{"e", "e", "e"}, {"e", "f", "f"}, {"f", "g", "h"}, {"e", "h", "h"}};
    return validate_category(raw);
}

LeftTightDiagram nonsplit_diagram() {
    CatPtr c = nonsplit_idempotent_category();
    const int a = c->object_index("a");
    const int e = c->morphism_index("e");
    LeftAction rep = yoneda_left(c, a);
    ConeSpace sp = lan(rep);
    EqMap phi;
    phi.comp.resize(c->num_objects());
    const int at = rep.offsets()[a] + rep.find_element(a, "id_a");
    // a cocone is determined by its leg u at id_a; the image has leg e;u
    for (int x = 0; x < c->num_objects(); ++x)
        for (size_t i = 0; i < sp.comps[x].size(); ++i) {
            Components target = sp.comps[x][i];
            for (int y = 0; y < c->num_objects(); ++y)
                for (int j = 0; j < rep.fiber_size(y); ++j) {
                    int k = rep.offsets()[y] + j;
                    int arrow = rep.base->hom(y, a)[j];
                    target[k] = c->compose(c->compose(arrow, e), sp.comps[x][i][at]);
                }
            phi.comp[x].push_back(sp.find(x, target));
        }
    return {rep, phi};
}

std::vector<NamedCategory> category_corpus() {
    return {{"terminal", terminal_category()},
            {"discrete2", discrete_category(2)},
            {"discrete3", discrete_category(3)},
            {"arrow", walking_arrow()},
            {"parallel", parallel_pair()},
            {"span", span_category()},
            {"chain3", thin_category(chain_poset(3))},
            {"z2", cyclic_group_category(2)},
            {"z3", cyclic_group_category(3)},
            {"idempotent", monoid_category({"1", "e"}, {{0, 1}, {1, 1}}, 0)},
            {"idempotent_arrow", idempotent_arrow()},
            {"nonsplit", nonsplit_idempotent_category()}};
}

std::vector<NamedCategory> diagram_shapes(int max_nodes) {
    std::vector<NamedCategory> out;
    for (int n = 0; n <= max_nodes; ++n) out.push_back({"discrete" + std::to_string(n), discrete_category(n)});
    if (max_nodes >= 2) {
        out.push_back({"arrow", walking_arrow()});
        out.push_back({"parallel", parallel_pair()});
    }
    if (max_nodes >= 3) {
        out.push_back({"span", span_category()});
        out.push_back({"cospan", opposite(span_category())});
        out.push_back({"chain3", thin_category(chain_poset(3))});
    }
    if (max_nodes >= 4) {
        out.push_back({"chain4", thin_category(chain_poset(4))});
        out.push_back({"square", thin_category(powerset_lattice(2))});
        out.push_back({"fork", thin_category(make_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}}))});
    }
    return out;
}

std::vector<Functor> diagrams_into_thin(const CatPtr& shape, const CatPtr& thin) {
    std::vector<Functor> out;
    const int n = shape->num_objects();
    std::vector<int> obj(n, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            Functor f{shape, thin, obj, std::vector<int>(shape->num_morphisms())};
            for (int m = 0; m < shape->num_morphisms(); ++m) {
                const auto& hom = thin->hom(obj[shape->dom(m)], obj[shape->cod(m)]);
                if (hom.empty()) return;
                f.mor[m] = hom[0];
            }
            out.push_back(std::move(f));
            return;
        }
        for (int x = 0; x < thin->num_objects(); ++x) {
            obj[k] = x;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace tightcat
