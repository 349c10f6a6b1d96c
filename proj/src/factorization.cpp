#include "tightcat/factorization.hpp"

#include <map>
#include <numeric>

namespace tightcat {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Components of the comma category between x and D. Nodes are pairs (j, arrow)
// with arrow: x -> Dj (under) or Dj -> x (over).
struct CommaComponents {
    std::vector<std::pair<int, int>> nodes;
    std::vector<int> cls;                // component of each node
    std::vector<int> reps;               // least node per component
    std::map<std::pair<int, int>, int> node_ix;
};

CommaComponents components(const Functor& d, int x, bool under) {
    const auto& J = *d.source;
    const auto& C = *d.target;
    CommaComponents r;
    for (int j = 0; j < J.num_objects(); ++j)
        for (int a : under ? C.hom(x, d.obj[j]) : C.hom(d.obj[j], x)) {
            r.node_ix[{j, a}] = static_cast<int>(r.nodes.size());
            r.nodes.push_back({j, a});
        }
    std::vector<int> parent(r.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t n = 0; n < r.nodes.size(); ++n) {
        auto [j, a] = r.nodes[n];
        // (j, a) ~ (j', a;Dm) for m: j -> j' (under), (j', Dm;a) ~ (j, a) over.
        for (int m = 0; m < J.num_morphisms(); ++m) {
            if (under ? J.dom(m) != j : J.cod(m) != j) continue;
            int other = under ? r.node_ix.at({J.cod(m), C.compose(a, d.mor[m])})
                              : r.node_ix.at({J.dom(m), C.compose(d.mor[m], a)});
            parent[find_root(parent, static_cast<int>(n))] = find_root(parent, other);
        }
    }
    std::map<int, int> root_cls;
    r.cls.resize(r.nodes.size());
    for (size_t n = 0; n < r.nodes.size(); ++n) {
        int root = find_root(parent, static_cast<int>(n));
        auto [it, fresh] = root_cls.emplace(root, static_cast<int>(r.reps.size()));
        if (fresh) r.reps.push_back(static_cast<int>(n));
        r.cls[n] = it->second;
    }
    return r;
}

}  // namespace

Factorization comprehensive_factorization(const Functor& d) {
    const auto& J = *d.source;
    const auto& C = *d.target;
    Factorization out;
    for (int side = 0; side < 2; ++side) {
        bool under = side == 0;
        Action& a = under ? out.left : out.right;
        a.base = d.target;
        a.variance = under ? Variance::Left : Variance::Right;
        std::vector<CommaComponents> comps;
        for (int x = 0; x < C.num_objects(); ++x) comps.push_back(components(d, x, under));
        a.names.resize(C.num_objects());
        for (int x = 0; x < C.num_objects(); ++x)
            for (int rep : comps[x].reps) {
                auto [j, m] = comps[x].nodes[rep];
                a.names[x].push_back(J.object_name(j) + ":" + C.morphism(m).id);
            }
        a.trans.resize(C.num_morphisms());
        for (int f = 0; f < C.num_morphisms(); ++f) {
            int in = a.input_object(f), outo = a.output_object(f);
            for (int rep : comps[in].reps) {
                auto [j, m] = comps[in].nodes[rep];
                int moved = under ? C.compose(f, m) : C.compose(m, f);
                a.trans[f].push_back(comps[outo].cls[comps[outo].node_ix.at({j, moved})]);
            }
        }
    }
    return out;
}

namespace {

std::vector<Components> families(const Functor& d, int c, bool co) {
    const auto& J = *d.source;
    const auto& C = *d.target;
    std::vector<Components> out;
    Components cur(J.num_objects(), -1);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == J.num_objects()) {
            for (int m = 0; m < J.num_morphisms(); ++m) {
                int lhs = co ? C.compose(d.mor[m], cur[J.cod(m)]) : C.compose(cur[J.dom(m)], d.mor[m]);
                if (lhs != cur[co ? J.dom(m) : J.cod(m)]) return;
            }
            out.push_back(cur);
            return;
        }
        for (int g : co ? C.hom(d.obj[j], c) : C.hom(c, d.obj[j])) {
            cur[j] = g;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<Components> diagram_cocones(const Functor& d, int c) { return families(d, c, true); }
std::vector<Components> diagram_cones(int c, const Functor& d) { return families(d, c, false); }

std::optional<Universal> diagram_colimit(const Functor& d) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < d.target->num_objects(); ++c) sets.push_back(diagram_cocones(d, c));
    return find_representation(d.target, sets, true);
}

std::optional<Universal> diagram_limit(const Functor& d) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < d.target->num_objects(); ++c) sets.push_back(diagram_cones(c, d));
    return find_representation(d.target, sets, false);
}

}  // namespace tightcat
