#include "tightcat/tight.hpp"

#include <algorithm>
#include <set>

#include "tightcat/error.hpp"

namespace tightcat {

namespace {

template <class Space>
void require_endo(const Space& sp, const EqMap& e, const char* what) {
    if (!is_equivariant(sp.action, sp.action, e))
        throw Error(ErrorKind::TypeMismatch, std::string(what) + " is not an endomap");
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, what);
}

std::vector<Components> fixed_families(const ConeSpace& sp, const EqMap& e, int c) {
    std::vector<Components> out;
    for (size_t i = 0; i < sp.comps[c].size(); ++i)
        if (e.comp[c][i] == static_cast<int>(i)) out.push_back(sp.comps[c][i]);
    return out;
}

}  // namespace

Report check_tight_diagram(const LeftTightDiagram& d, const Options& opt) {
    ConeSpace cocones = lan(d.diagram, opt);
    require_endo(cocones, d.phi, "phi");
    ConeSpace cones = ran(cocones.action, opt);
    SubAction image = fixed_points(cones.action, ran_map(cones, cones, d.phi));
    if (!find_isomorphism(image.action, d.diagram, opt))
        throw Error(ErrorKind::SplitMismatch, "fixed cones do not match the diagram");
    Report r;
    r.add("idempotent", true);
    r.add("splits_on_diagram", true);
    return r;
}

Report check_tight_diagram(const RightTightDiagram& d, const Options& opt) {
    ConeSpace cones = ran(d.diagram, opt);
    require_endo(cones, d.kappa, "kappa");
    ConeSpace cocones = lan(cones.action, opt);
    SubAction image = fixed_points(cocones.action, lan_map(cocones, cocones, d.kappa));
    if (!find_isomorphism(image.action, d.diagram, opt))
        throw Error(ErrorKind::SplitMismatch, "fixed cocones do not match the diagram");
    Report r;
    r.add("idempotent", true);
    r.add("splits_on_diagram", true);
    return r;
}

std::vector<Components> fixed_cocones(const LeftTightDiagram& d, int c, const Options& opt) {
    ConeSpace sp = lan(d.diagram, opt);
    require_endo(sp, d.phi, "phi");
    return fixed_families(sp, d.phi, c);
}

std::vector<Components> fixed_cones(int c, const RightTightDiagram& d, const Options& opt) {
    ConeSpace sp = ran(d.diagram, opt);
    require_endo(sp, d.kappa, "kappa");
    return fixed_families(sp, d.kappa, c);
}

namespace {

std::vector<std::vector<Components>> all_fixed(const ConeSpace& sp, const EqMap& e) {
    std::vector<std::vector<Components>> sets;
    for (size_t c = 0; c < sp.comps.size(); ++c) sets.push_back(fixed_families(sp, e, static_cast<int>(c)));
    return sets;
}

}  // namespace

std::optional<Universal> tight_colimit(const LeftTightDiagram& d, const Options& opt) {
    ConeSpace sp = lan(d.diagram, opt);
    require_endo(sp, d.phi, "phi");
    return find_representation(d.diagram.base, all_fixed(sp, d.phi), true);
}

std::optional<Universal> tight_limit(const RightTightDiagram& d, const Options& opt) {
    ConeSpace sp = ran(d.diagram, opt);
    require_endo(sp, d.kappa, "kappa");
    return find_representation(d.diagram.base, all_fixed(sp, d.kappa), false);
}

bool is_tight_colimit(const LeftTightDiagram& d, const Universal& u, const Options& opt) {
    ConeSpace sp = lan(d.diagram, opt);
    require_endo(sp, d.phi, "phi");
    return check_representation(d.diagram.base, all_fixed(sp, d.phi), u, true);
}

namespace {

Universal via_split(const CatPtr& cp, const ConeSpace& sp, const EqMap& e, const std::optional<Universal>& loose,
                    bool colimit) {
    const auto& C = *cp;
    if (!loose) throw Error(ErrorKind::NoLooseColimit, colimit ? "diagram has no loose colimit" : "no loose limit");
    const int apex = loose->object;
    const int at = sp.find(apex, loose->arrows);
    const Components& target = sp.comps[apex][e.comp[apex][at]];
    int endo = -1;
    for (int m : C.hom(apex, apex)) {
        Components moved(loose->arrows.size());
        for (size_t k = 0; k < moved.size(); ++k)
            moved[k] = colimit ? C.compose(loose->arrows[k], m) : C.compose(m, loose->arrows[k]);
        if (moved == target) {
            endo = m;
            break;
        }
    }
    if (endo < 0) throw Error(ErrorKind::TypeMismatch, "transported idempotent not found");
    auto split = split_idempotent(C, endo);
    if (!split) throw Error(ErrorKind::NotSplittable, "'" + C.morphism(endo).id + "' does not split");
    Universal u{split->object, Components(loose->arrows.size())};
    for (size_t k = 0; k < u.arrows.size(); ++k)
        u.arrows[k] = colimit ? C.compose(loose->arrows[k], split->q) : C.compose(split->i, loose->arrows[k]);
    return u;
}

}  // namespace

Universal tight_colimit_via_split(const LeftTightDiagram& d, const Options& opt) {
    ConeSpace sp = lan(d.diagram, opt);
    require_endo(sp, d.phi, "phi");
    return via_split(d.diagram.base, sp, d.phi, loose_colimit(d.diagram, opt), true);
}

Universal tight_limit_via_split(const RightTightDiagram& d, const Options& opt) {
    ConeSpace sp = ran(d.diagram, opt);
    require_endo(sp, d.kappa, "kappa");
    return via_split(d.diagram.base, sp, d.kappa, loose_limit(d.diagram, opt), false);
}

LeftTightDiagram identity_diagram(const LeftAction& a, const Options& opt) {
    return {a, identity_map(lan(a, opt).action)};
}

std::vector<LeftTightDiagram> enumerate_tight_diagrams(const CatPtr& c, int cap, const Options& opt) {
    std::vector<LeftTightDiagram> out;
    for (const auto& d : enumerate_left_actions(c, cap, opt)) {
        ConeSpace sp = lan(d, opt);
        for (const auto& e : equivariant_maps(sp.action, sp.action, opt)) {
            if (!is_idempotent(e)) continue;
            LeftTightDiagram t{d, e};
            try {
                check_tight_diagram(t, opt);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::SplitMismatch) throw;
                continue;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

namespace {

struct Target {
    LeftAction carrier;
    ConeSpace cocones;
    EqMap xi;
};

// Square of a cut-coalgebra morphism f: (A, phi) -> (T, xi).
bool coalgebra_square(const EqMap& f, const ConeSpace& lan_a, const EqMap& phi, const Target& t) {
    EqMap pull = lan_map(t.cocones, lan_a, f);
    return after(phi, pull) == after(pull, t.xi);
}

// The map representable at x -> T picked out by the element t_elem in T(x).
EqMap yoneda_map(const CatPtr& cp, int x, const Action& t, int t_elem) {
    const auto& C = *cp;
    EqMap m;
    m.comp.resize(C.num_objects());
    for (int y = 0; y < C.num_objects(); ++y)
        for (int h : C.hom(y, x)) m.comp[y].push_back(t.act(h, t_elem));
    return m;
}

}  // namespace

Report representable_generation_check(const AbsoluteCut& cut, const Options& opt) {
    Report r;
    const LeftAction& a = cut.left;
    const CatPtr& cp = a.base;
    const auto& C = *cp;
    ConeSpace lan_a = lan(a, opt);
    const EqMap& phi = cut.a_upper;
    require_endo(lan_a, phi, "phi");
    ConeSpace ran_lan_a = ran(lan_a.action, opt);
    EqMap lifted = ran_map(ran_lan_a, ran_lan_a, phi);
    SubAction fixed = fixed_points(ran_lan_a.action, lifted);
    EqMap to_fixed = after(lifted, unit(lan_a, ran_lan_a));
    const auto off = a.offsets();

    // sigma: A -> A through the splitting of the lifted idempotent
    std::vector<std::vector<int>> back(a.num_objects());
    bool canonical = is_injective(to_fixed);
    for (int x = 0; x < a.num_objects() && canonical; ++x)
        canonical = static_cast<int>(fixed.inclusion.comp[x].size()) == a.fiber_size(x);
    EqMap sigma;
    if (canonical) {
        sigma = identity_map(a);
    } else {
        auto psi = find_isomorphism(a, fixed.action, opt);
        if (!psi) {
            r.add("splits_on_left", false, "fixed cones are not isomorphic to the left action");
            return r;
        }
        sigma.comp.resize(a.num_objects());
        for (int x = 0; x < a.num_objects(); ++x) {
            std::vector<int> pos(ran_lan_a.action.fiber_size(x), -1);
            for (int i = 0; i < a.fiber_size(x); ++i) pos[fixed.inclusion.comp[x][psi->comp[x][i]]] = i;
            for (int i = 0; i < a.fiber_size(x); ++i) sigma.comp[x].push_back(pos[to_fixed.comp[x][i]]);
        }
    }
    r.add("splits_on_left", true, canonical ? "unit lands on the fixed cones" : "through a searched isomorphism");

    // every leg of the cocone rho_s = sigma(s) is a cut-coalgebra morphism
    bool legs = true;
    for (int x = 0; x < a.num_objects() && legs; ++x)
        for (int i = 0; i < a.fiber_size(x) && legs; ++i) {
            int g = off[x] + sigma.comp[x][i];
            for (size_t c = 0; c < lan_a.comps.size() && legs; ++c)
                for (size_t k = 0; k < lan_a.comps[c].size(); ++k)
                    if (lan_a.comps[c][phi.comp[c][k]][g] != lan_a.comps[c][k][g]) {
                        legs = false;
                        break;
                    }
        }
    r.add("legs_are_morphisms", legs);

    std::vector<Target> targets;
    for (int c = 0; c < C.num_objects(); ++c) {
        LeftAction rep = yoneda_left(cp, c);
        ConeSpace sp = lan(rep, opt);
        targets.push_back({rep, sp, identity_map(sp.action)});
    }
    targets.push_back({a, lan_a, phi});
    bool universal = true;
    std::string detail;
    for (size_t ti = 0; ti < targets.size() && universal; ++ti) {
        const Target& t = targets[ti];
        SubAction t_fixed = fixed_points(t.cocones.action, t.xi);
        std::set<EqMap> homs_image;
        size_t homs = 0;
        std::set<EqMap> tight;
        for_each_equivariant_map(
            a, t.carrier,
            [&](const EqMap& f) {
                if (coalgebra_square(f, lan_a, phi, t)) {
                    ++homs;
                    homs_image.insert(after(f, sigma));
                }
                // tight cocone: each leg a morphism, fixed cocones pulled back stay fixed
                EqMap pull = lan_map(t.cocones, lan_a, f);
                bool ok = true;
                for (int x = 0; x < a.num_objects() && ok; ++x)
                    for (int i = 0; i < a.fiber_size(x) && ok; ++i) {
                        int g = t.carrier.offsets()[x] + f.comp[x][i];
                        for (size_t c = 0; c < t.cocones.comps.size() && ok; ++c)
                            for (size_t k = 0; k < t.cocones.comps[c].size(); ++k)
                                if (t.cocones.comps[c][t.xi.comp[c][k]][g] != t.cocones.comps[c][k][g]) {
                                    ok = false;
                                    break;
                                }
                    }
                for (size_t c = 0; c < t_fixed.inclusion.comp.size() && ok; ++c)
                    for (int k : t_fixed.inclusion.comp[c]) {
                        int v = pull.comp[c][k];
                        if (phi.comp[c][v] != v) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) tight.insert(f);
                return true;
            },
            opt);
        if (homs_image.size() != homs || homs_image != tight) {
            universal = false;
            detail = ti + 1 == targets.size() ? "against the cut itself"
                                              : "against representable " + C.object_name(static_cast<int>(ti));
        }
    }
    r.add("universal", universal, detail);
    return r;
}

Report tight_preservation_check(const CatPtr& cp, const LeftTightDiagram& d, const std::vector<AbsoluteCut>& targets,
                                const Options& opt) {
    const auto& C = *cp;
    Report r;
    auto colim = tight_colimit(d, opt);
    if (!colim) {
        r.add("tight_colimit_exists", false);
        return r;
    }
    ConeSpace lan_d = lan(d.diagram, opt);
    std::vector<CutView> embedded;
    for (int x = 0; x < C.num_objects(); ++x) embedded.push_back(cut_view(embed_object(cp, x, opt), opt));
    std::vector<CutView> views = embedded;
    for (const auto& t : targets) views.push_back(cut_view(t, opt));
    const CutView& apex = embedded[colim->object];
    const auto d_off = d.diagram.offsets();
    bool preserved = true;
    std::string detail;
    for (size_t vi = 0; vi < views.size() && preserved; ++vi) {
        const CutView& t = views[vi];
        const LeftAction& ta = t.absolute.left;
        const EqMap& xi = t.absolute.a_upper;
        SubAction t_fixed = fixed_points(t.spaces.lan_a.action, xi);
        auto leg_ok = [&](int x, int elem) {
            EqMap lower = yoneda_map(cp, x, ta, elem);
            CutMorphism m{lower, reconstruct_upper(lower, embedded[x], t)};
            return cut_morphism_check(m, embedded[x], t).pass();
        };
        std::set<EqMap> image;
        size_t homs = 0;
        for (int elem = 0; elem < ta.fiber_size(colim->object); ++elem) {
            if (!leg_ok(colim->object, elem)) continue;
            ++homs;
            // gamma_s = u_s * elem
            EqMap gamma;
            gamma.comp.resize(C.num_objects());
            for (int x = 0; x < C.num_objects(); ++x)
                for (int i = 0; i < d.diagram.fiber_size(x); ++i)
                    gamma.comp[x].push_back(ta.act(colim->arrows[d_off[x] + i], elem));
            image.insert(gamma);
        }
        (void)apex;
        std::set<EqMap> tight;
        for_each_equivariant_map(
            d.diagram, ta,
            [&](const EqMap& gamma) {
                for (int x = 0; x < C.num_objects(); ++x)
                    for (int v : gamma.comp[x])
                        if (!leg_ok(x, v)) return true;
                EqMap pull = lan_map(t.spaces.lan_a, lan_d, gamma);
                for (size_t c = 0; c < t_fixed.inclusion.comp.size(); ++c)
                    for (int k : t_fixed.inclusion.comp[c]) {
                        int v = pull.comp[c][k];
                        if (d.phi.comp[c][v] != v) return true;
                    }
                tight.insert(gamma);
                return true;
            },
            opt);
        if (image.size() != homs || image != tight) {
            preserved = false;
            detail = vi < embedded.size() ? "against the embedded " + C.object_name(static_cast<int>(vi))
                                          : "against target cut " + std::to_string(vi - embedded.size());
        }
    }
    r.add("tight_colimit_exists", true);
    r.add("preserved", preserved, detail);
    return r;
}

}  // namespace tightcat
