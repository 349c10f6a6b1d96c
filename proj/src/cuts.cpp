#include "tightcat/cuts.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tightcat/error.hpp"

namespace tightcat {

CutSpaces cut_spaces(const LeftAction& a, const RightAction& b, bool deep, const Options& opt) {
    CutSpaces sp;
    sp.opt = opt;
    sp.deep = deep;
    sp.lan_a = lan(a, opt);
    sp.ran_b = ran(b, opt);
    sp.ran_lan_a = ran(sp.lan_a.action, opt);
    sp.lan_ran_b = lan(sp.ran_b.action, opt);
    if (deep) {
        sp.lan_ran_lan_a = lan(sp.ran_lan_a.action, opt);
        sp.ran_lan_ran_b = ran(sp.lan_ran_b.action, opt);
    }
    return sp;
}

namespace {

void require_deep(const CutSpaces& sp) {
    if (!sp.deep) throw Error(ErrorKind::TypeMismatch, "cut check needs the outer cone spaces");
}

bool same_fibers(const Action& x, const Action& y) {
    if (x.num_objects() != y.num_objects()) return false;
    for (int o = 0; o < x.num_objects(); ++o)
        if (x.fiber_size(o) != y.fiber_size(o)) return false;
    return true;
}

}  // namespace

Report check_interval(const Interval& i, const CutSpaces& sp) {
    Report r;
    bool typed = is_equivariant(sp.ran_lan_a.action, i.left, i.alg) &&
                 is_equivariant(sp.lan_ran_b.action, i.right, i.coalg) &&
                 is_equivariant(sp.ran_b.action, sp.ran_lan_a.action, i.j_lower) &&
                 is_equivariant(sp.lan_a.action, sp.lan_ran_b.action, i.j_upper);
    r.add("typed", typed);
    if (!typed) return r;
    r.merge(check_algebra(Algebra{i.left, i.alg}, sp.opt), "algebra.");
    r.merge(check_coalgebra(Coalgebra{i.right, i.coalg}, sp.opt), "coalgebra.");
    EqMap lower_via_coalg = ran_map(sp.ran_b, sp.ran_lan_a, after(i.coalg, i.j_upper));
    EqMap upper_via_alg = lan_map(sp.lan_a, sp.lan_ran_b, after(i.alg, i.j_lower));
    r.add("lower_through_coalgebra", i.j_lower == lower_via_coalg);
    r.add("upper_through_algebra", i.j_upper == upper_via_alg);
    EqMap lower_closed = ran_map(sp.ran_b, sp.ran_lan_a, after(i.coalg, upper_via_alg));
    EqMap upper_closed = lan_map(sp.lan_a, sp.lan_ran_b, after(i.alg, lower_via_coalg));
    r.add("closed_forms", i.j_lower == lower_closed && i.j_upper == upper_closed);
    return r;
}

Report check_interval(const Interval& i, const Options& opt) {
    return check_interval(i, cut_spaces(i.left, i.right, false, opt));
}

Report check_simple_cut(const SimpleCut& s, const CutSpaces& sp) {
    require_deep(sp);
    for (int x = 0; x < s.left.num_objects(); ++x) {
        if (s.left.fiber_size(x) > sp.ran_b.action.fiber_size(x))
            throw Error(ErrorKind::RetractionFailure,
                        "left fiber over '" + s.left.base->object_name(x) + "' is larger than its cone fiber");
        if (s.right.fiber_size(x) > sp.lan_a.action.fiber_size(x))
            throw Error(ErrorKind::RetractionFailure,
                        "right fiber over '" + s.left.base->object_name(x) + "' is larger than its cocone fiber");
    }
    Report r;
    bool typed = is_equivariant(s.left, sp.ran_b.action, s.g_lower) &&
                 is_equivariant(s.right, sp.lan_a.action, s.g_upper) &&
                 is_equivariant(sp.ran_b.action, s.left, s.j_lower) &&
                 is_equivariant(sp.lan_a.action, s.right, s.j_upper);
    r.add("typed", typed);
    if (!typed) return r;
    bool transposes = gap_from_lower(s.left, sp.ran_b, s.g_lower).phi == gap_from_upper(sp.lan_a, s.right, s.g_upper).phi;
    r.add("transposes", transposes, "lower and upper monos carry the same gap");
    r.add("lower_retraction", after(s.j_lower, s.g_lower) == identity_map(s.left));
    r.add("upper_retraction", after(s.j_upper, s.g_upper) == identity_map(s.right));
    EqMap eps = counit(sp.ran_b, sp.lan_ran_b);
    EqMap i_hat = after(lan_map(sp.lan_a, sp.lan_ran_b, s.j_lower), s.g_upper);
    r.add("lower_coherence",
          after(s.j_lower, ran_map(sp.ran_lan_ran_b, sp.ran_b, eps)) ==
              after(s.j_lower, ran_map(sp.ran_lan_ran_b, sp.ran_b, i_hat)));
    EqMap eta = unit(sp.lan_a, sp.ran_lan_a);
    EqMap h_hat = after(ran_map(sp.ran_b, sp.ran_lan_a, s.j_upper), s.g_lower);
    r.add("upper_coherence",
          after(s.j_upper, lan_map(sp.lan_ran_lan_a, sp.lan_a, h_hat)) ==
              after(s.j_upper, lan_map(sp.lan_ran_lan_a, sp.lan_a, eta)));
    return r;
}

Report check_simple_cut(const SimpleCut& s, const Options& opt) {
    return check_simple_cut(s, cut_spaces(s.left, s.right, true, opt));
}

namespace {

EqMap full_lower_retraction(const FullCut& f) { return after(f.interval.alg, f.interval.j_lower); }
EqMap full_upper_retraction(const FullCut& f) { return after(f.interval.coalg, f.interval.j_upper); }

}  // namespace

bool full_cut_first_pair(const FullCut& f, const CutSpaces& sp) {
    return after(full_lower_retraction(f), f.g_lower) == identity_map(f.interval.left) &&
           after(full_upper_retraction(f), lan_map(sp.lan_ran_b, sp.lan_a, f.g_lower)) == f.interval.coalg;
}

bool full_cut_second_pair(const FullCut& f, const CutSpaces& sp) {
    return after(full_lower_retraction(f), ran_map(sp.ran_lan_a, sp.ran_b, f.g_upper)) == f.interval.alg &&
           after(full_upper_retraction(f), f.g_upper) == identity_map(f.interval.right);
}

Report check_full_cut(const FullCut& f, const CutSpaces& sp) {
    Report r = check_interval(f.interval, sp);
    for (auto& c : r.checks) c.name = "interval." + c.name;
    bool typed = is_equivariant(f.interval.left, sp.ran_b.action, f.g_lower) &&
                 is_equivariant(f.interval.right, sp.lan_a.action, f.g_upper);
    r.add("gap_typed", typed);
    if (!typed) return r;
    r.add("transposes", gap_from_lower(f.interval.left, sp.ran_b, f.g_lower).phi ==
                            gap_from_upper(sp.lan_a, f.interval.right, f.g_upper).phi);
    bool first = full_cut_first_pair(f, sp), second = full_cut_second_pair(f, sp);
    r.add("first_pair", first);
    r.add("second_pair", second);
    r.add("pairs_equivalent", first == second);
    return r;
}

Report check_full_cut(const FullCut& f, const Options& opt) {
    return check_full_cut(f, cut_spaces(f.interval.left, f.interval.right, false, opt));
}

FullCut simple_to_full(const SimpleCut& s, const CutSpaces& sp) {
    FullCut f;
    f.interval.left = s.left;
    f.interval.right = s.right;
    f.interval.alg = after(s.j_lower, ran_map(sp.ran_lan_a, sp.ran_b, s.g_upper));
    f.interval.coalg = after(s.j_upper, lan_map(sp.lan_ran_b, sp.lan_a, s.g_lower));
    f.interval.j_lower = ran_map(sp.ran_b, sp.ran_lan_a, s.j_upper);
    f.interval.j_upper = lan_map(sp.lan_a, sp.lan_ran_b, s.j_lower);
    f.g_lower = s.g_lower;
    f.g_upper = s.g_upper;
    return f;
}

SimpleCut full_to_simple(const FullCut& f) {
    return {f.interval.left, f.interval.right, f.g_lower, f.g_upper, full_lower_retraction(f),
            full_upper_retraction(f)};
}

AbsoluteCut simple_to_absolute(const SimpleCut& s, const CutSpaces& sp) {
    AbsoluteCut a;
    a.left = s.left;
    a.right = s.right;
    a.a_lower = after(s.g_lower, s.j_lower);
    a.a_upper = after(s.g_upper, s.j_upper);
    a.phi_lower = after(ran_map(sp.ran_b, sp.ran_lan_a, s.j_upper), after(a.a_lower, ran_map(sp.ran_lan_a, sp.ran_b, s.g_upper)));
    a.phi_upper = after(lan_map(sp.lan_a, sp.lan_ran_b, s.j_lower), after(a.a_upper, lan_map(sp.lan_ran_b, sp.lan_a, s.g_lower)));
    return a;
}

namespace {

// Partial inverse of a map that is bijective onto the fixed points of e,
// precomposed with e.
std::optional<EqMap> retraction_through(const EqMap& mono, const EqMap& e) {
    EqMap inv;
    inv.comp.resize(e.comp.size());
    EqMap out;
    out.comp.resize(e.comp.size());
    for (size_t x = 0; x < e.comp.size(); ++x) {
        std::vector<int> back(e.comp[x].size(), -1);
        for (size_t i = 0; i < mono.comp[x].size(); ++i) {
            int v = mono.comp[x][i];
            if (e.comp[x][v] != v || back[v] != -1) return std::nullopt;
            back[v] = static_cast<int>(i);
        }
        for (size_t v = 0; v < e.comp[x].size(); ++v) {
            int b = back[e.comp[x][v]];
            if (b < 0) return std::nullopt;
            out.comp[x].push_back(b);
        }
    }
    return out;
}

std::optional<SimpleCut> split_cut(const LeftAction& a, const RightAction& b, const EqMap& a_lower,
                                   const EqMap& a_upper, const CutSpaces& sp, const AbsoluteCut* compare,
                                   const Options& opt) {
    if (!is_idempotent(a_lower) || !is_idempotent(a_upper))
        throw Error(ErrorKind::NotIdempotent, "cut idempotents");
    SubAction lower_fix = fixed_points(sp.ran_b.action, a_lower);
    SubAction upper_fix = fixed_points(sp.lan_a.action, a_upper);
    if (!same_fibers(lower_fix.action, a) || !same_fibers(upper_fix.action, b)) return std::nullopt;
    SearchSpec spec;
    spec.injective = true;
    spec.allowed.resize(a.num_objects());
    for (int x = 0; x < a.num_objects(); ++x)
        for (int v = 0; v < sp.ran_b.action.fiber_size(x); ++v) spec.allowed[x].push_back(a_lower.comp[x][v] == v);
    std::optional<SimpleCut> found;
    for_each_equivariant_map(
        a, sp.ran_b.action,
        [&](const EqMap& sigma) {
            auto j_lower = retraction_through(sigma, a_lower);
            if (!j_lower) return true;
            EqMap g_upper = gap_upper(gap_from_lower(a, sp.ran_b, sigma), sp.lan_a);
            auto j_upper = retraction_through(g_upper, a_upper);
            if (!j_upper) return true;
            SimpleCut s{a, b, sigma, g_upper, *j_lower, *j_upper};
            if (!check_simple_cut(s, sp).pass()) return true;
            AbsoluteCut back = simple_to_absolute(s, sp);
            if (back.a_lower != a_lower || back.a_upper != a_upper) return true;
            if (compare && (back.phi_lower != compare->phi_lower || back.phi_upper != compare->phi_upper)) return true;
            found = std::move(s);
            return false;
        },
        opt, spec);
    return found;
}

}  // namespace

SimpleCut absolute_to_simple(const AbsoluteCut& a, const CutSpaces& sp, const Options& opt) {
    require_deep(sp);
    auto s = split_cut(a.left, a.right, a.a_lower, a.a_upper, sp, &a, opt);
    if (!s) throw Error(ErrorKind::SplitMismatch, "the idempotents do not split on the cut's actions");
    return *s;
}

Report check_absolute_cut(const AbsoluteCut& a, const CutSpaces& sp, const Options& opt) {
    Report r;
    auto endo = [](const Action& x, const EqMap& e) { return is_equivariant(x, x, e) && is_idempotent(e); };
    r.add("lower_idempotent", endo(sp.ran_b.action, a.a_lower));
    r.add("upper_idempotent", endo(sp.lan_a.action, a.a_upper));
    r.add("lower_nucleus_idempotent", endo(sp.ran_lan_a.action, a.phi_lower));
    r.add("upper_nucleus_idempotent", endo(sp.lan_ran_b.action, a.phi_upper));
    if (!r.pass()) return r;
    try {
        absolute_to_simple(a, sp, opt);
        r.add("joint_splitting", true);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SplitMismatch) throw;
        r.add("joint_splitting", false, e.what());
    }
    return r;
}

Report check_absolute_cut(const AbsoluteCut& a, const Options& opt) {
    return check_absolute_cut(a, cut_spaces(a.left, a.right, true, opt), opt);
}

Report interval_symmetry_check(const FullCut& f, const CutSpaces& sp) {
    Gap lower = gap_from_lower(sp.ran_b.action, sp.ran_lan_a, f.interval.j_lower);
    Gap upper = gap_from_upper(sp.lan_ran_b, sp.lan_a.action, f.interval.j_upper);
    bool symmetric = lower.phi == upper.phi;
    Report r;
    if (!symmetric) {
        r.add("symmetric_interval_gives_isomorphisms", true, "interval is not symmetric");
        return r;
    }
    bool isos = is_bijective(full_lower_retraction(f), f.interval.left) &&
                is_bijective(full_upper_retraction(f), f.interval.right);
    r.add("symmetric_interval_gives_isomorphisms", isos, "interval is symmetric");
    return r;
}

namespace {

// u |-> (family |-> family_u) for the families of a sub-space.
std::optional<EqMap> evaluation_into(const Action& elems, const ConeSpace& families, const SubAction& sub,
                                     const ConeSpace& target) {
    EqMap out;
    out.comp.resize(elems.num_objects());
    int g = 0;
    for (int x = 0; x < elems.num_objects(); ++x)
        for (int i = 0; i < elems.fiber_size(x); ++i, ++g) {
            Components fam;
            for (int c = 0; c < sub.action.num_objects(); ++c)
                for (int v : sub.inclusion.comp[c]) fam.push_back(families.comps[c][v][g]);
            int found = target.find(x, fam);
            if (found < 0) return std::nullopt;
            out.comp[x].push_back(found);
        }
    return out;
}

}  // namespace

Report check_cut_algebra(const CutAlgebra& k, const Options& opt) {
    ConeSpace cones = ran(k.carrier, opt);
    if (!is_equivariant(cones.action, cones.action, k.kappa))
        throw Error(ErrorKind::TypeMismatch, "kappa is not an endomap of the cone action");
    if (!is_idempotent(k.kappa)) throw Error(ErrorKind::NotIdempotent, "kappa");
    Report r;
    r.add("idempotent", true);
    ConeSpace cocones_of_cones = lan(cones.action, opt);
    EqMap lifted = lan_map(cocones_of_cones, cocones_of_cones, k.kappa);
    SubAction image = fixed_points(cocones_of_cones.action, lifted);
    if (!find_isomorphism(image.action, k.carrier, opt))
        throw Error(ErrorKind::SplitMismatch, "the lifted idempotent does not split on the carrier");
    r.add("splits_on_carrier", true);
    SubAction fixed = fixed_points(cones.action, k.kappa);
    ConeSpace reindexed = lan(fixed.action, opt);
    auto ev = evaluation_into(k.carrier, cones, fixed, reindexed);
    r.add("evaluation_iso", ev && is_bijective(*ev, reindexed.action),
          "carrier against the cocones of the fixed cones");
    return r;
}

Report check_cut_coalgebra(const CutCoalgebra& c, const Options& opt) {
    ConeSpace cocones = lan(c.carrier, opt);
    if (!is_equivariant(cocones.action, cocones.action, c.phi))
        throw Error(ErrorKind::TypeMismatch, "phi is not an endomap of the cocone action");
    if (!is_idempotent(c.phi)) throw Error(ErrorKind::NotIdempotent, "phi");
    Report r;
    r.add("idempotent", true);
    ConeSpace cones_of_cocones = ran(cocones.action, opt);
    EqMap lifted = ran_map(cones_of_cocones, cones_of_cocones, c.phi);
    SubAction image = fixed_points(cones_of_cocones.action, lifted);
    if (!find_isomorphism(image.action, c.carrier, opt))
        throw Error(ErrorKind::SplitMismatch, "the lifted idempotent does not split on the carrier");
    r.add("splits_on_carrier", true);
    SubAction fixed = fixed_points(cocones.action, c.phi);
    ConeSpace reindexed = ran(fixed.action, opt);
    auto ev = evaluation_into(c.carrier, cocones, fixed, reindexed);
    r.add("evaluation_iso", ev && is_bijective(*ev, reindexed.action),
          "carrier against the cones of the fixed cocones");
    return r;
}

CutAlgebra cut_algebra_of(const AbsoluteCut& a) { return {a.right, a.a_lower}; }
CutCoalgebra cut_coalgebra_of(const AbsoluteCut& a) { return {a.left, a.a_upper}; }

CutView cut_view(const AbsoluteCut& a, const Options& opt) {
    CutView v;
    v.absolute = a;
    v.spaces = cut_spaces(a.left, a.right, true, opt);
    v.simple = absolute_to_simple(a, v.spaces, opt);
    return v;
}

EqMap reconstruct_upper(const EqMap& lower, const CutView& x, const CutView& y) {
    return after(x.simple.j_upper, after(lan_map(y.spaces.lan_a, x.spaces.lan_a, lower), y.simple.g_upper));
}

EqMap reconstruct_lower(const EqMap& upper, const CutView& x, const CutView& y) {
    return after(y.simple.j_lower, after(ran_map(x.spaces.ran_b, y.spaces.ran_b, upper), x.simple.g_lower));
}

Report cut_morphism_check(const CutMorphism& f, const CutView& x, const CutView& y) {
    Report r;
    bool typed = is_equivariant(x.absolute.left, y.absolute.left, f.lower) &&
                 is_equivariant(y.absolute.right, x.absolute.right, f.upper);
    r.add("typed", typed);
    if (!typed) return r;
    EqMap on_cones = ran_map(x.spaces.ran_b, y.spaces.ran_b, f.upper);
    EqMap on_cocones = lan_map(y.spaces.lan_a, x.spaces.lan_a, f.lower);
    r.add("lower_square", after(on_cones, x.absolute.a_lower) == after(y.absolute.a_lower, on_cones));
    r.add("upper_square", after(x.absolute.a_upper, on_cocones) == after(on_cocones, y.absolute.a_upper));
    r.add("lower_determined", f.lower == reconstruct_lower(f.upper, x, y));
    r.add("upper_determined", f.upper == reconstruct_upper(f.lower, x, y));
    return r;
}

std::vector<CutMorphism> cut_homs(const CutView& x, const CutView& y, const Options& opt) {
    std::vector<CutMorphism> out;
    for_each_equivariant_map(
        x.absolute.left, y.absolute.left,
        [&](const EqMap& lower) {
            CutMorphism m{lower, reconstruct_upper(lower, x, y)};
            if (cut_morphism_check(m, x, y).pass()) out.push_back(std::move(m));
            return true;
        },
        opt);
    return out;
}

Algebra cut_to_algebra(const CutView& c) {
    return {c.absolute.left, after(c.simple.j_lower, ran_map(c.spaces.ran_lan_a, c.spaces.ran_b, c.simple.g_upper))};
}

Coalgebra cut_to_coalgebra(const CutView& c) {
    return {c.absolute.right, after(c.simple.j_upper, lan_map(c.spaces.lan_ran_b, c.spaces.lan_a, c.simple.g_lower))};
}

AbsoluteCut coalgebra_to_cut(const Coalgebra& b, const Options& opt) {
    LeftAction left = ran(b.carrier, opt).action;
    CutSpaces sp = cut_spaces(left, b.carrier, false, opt);
    SimpleCut s{left, b.carrier, identity_map(left), counit(sp.ran_b, sp.lan_a), identity_map(left), b.structure};
    return simple_to_absolute(s, sp);
}

AbsoluteCut algebra_to_cut(const Algebra& a, const Options& opt) {
    RightAction right = lan(a.carrier, opt).action;
    CutSpaces sp = cut_spaces(a.carrier, right, false, opt);
    SimpleCut s{a.carrier, right, unit(sp.lan_a, sp.ran_b), identity_map(right), a.structure, identity_map(right)};
    return simple_to_absolute(s, sp);
}

AbsoluteCut embed_object(const CatPtr& cp, int x, const Options& opt) {
    const auto& C = *cp;
    if (x < 0 || x >= C.num_objects()) throw Error(ErrorKind::UnknownObject, std::to_string(x));
    LeftAction a = yoneda_left(cp, x);
    RightAction b = yoneda_right(cp, x);
    CutSpaces sp = cut_spaces(a, b, false, opt);
    Gap g{a, b, {}};
    for (int s_obj = 0; s_obj < C.num_objects(); ++s_obj)
        for (int s : C.hom(s_obj, x)) {
            std::vector<int> row;
            for (int u_obj = 0; u_obj < C.num_objects(); ++u_obj)
                for (int u : C.hom(x, u_obj)) row.push_back(C.compose(s, u));
            g.phi.push_back(std::move(row));
        }
    EqMap g_lower = gap_lower(g, sp.ran_b);
    EqMap g_upper = gap_upper(g, sp.lan_a);
    auto j_lower = inverse(g_lower, sp.ran_b.action);
    auto j_upper = inverse(g_upper, sp.lan_a.action);
    if (!j_lower || !j_upper) throw Error(ErrorKind::SplitMismatch, "representable transposes are not invertible");
    return simple_to_absolute(SimpleCut{a, b, g_lower, g_upper, *j_lower, *j_upper}, sp);
}

namespace {

// Transition tables of a left action with the given fiber sizes, completed by
// backtracking with composites forced.
class ActionSearch {
public:
    ActionSearch(const CatPtr& c, std::vector<int> sizes, std::size_t cap) : c_(c), sizes_(std::move(sizes)), cap_(cap) {
        const auto& C = *c_;
        trans_.resize(C.num_morphisms());
        for (int f = 0; f < C.num_morphisms(); ++f) {
            trans_[f].assign(sizes_[C.cod(f)], -1);
            if (C.is_identity(f))
                for (int e = 0; e < sizes_[C.cod(f)]; ++e) trans_[f][e] = e;
            else
                for (int e = 0; e < sizes_[C.cod(f)]; ++e) vars_.push_back({f, e});
        }
        for (int f = 0; f < C.num_morphisms(); ++f)
            for (int g = 0; g < C.num_morphisms(); ++g)
                if (int h = C.compose(f, g); h >= 0 && !C.is_identity(f) && !C.is_identity(g)) triples_.push_back({f, g, h});
    }

    template <class Visit>
    void run(Visit&& visit) {
        rec(0, visit);
    }

private:
    struct Triple {
        int f, g, h;
    };

    bool settle() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : triples_)
                for (int e = 0; e < static_cast<int>(trans_[t.g].size()); ++e) {
                    int mid = trans_[t.g][e];
                    if (mid < 0) continue;
                    int v = trans_[t.f][mid];
                    if (v < 0) continue;
                    int& slot = trans_[t.h][e];
                    if (slot == -1) {
                        slot = v;
                        trail_.push_back({t.h, e});
                        changed = true;
                    } else if (slot != v) {
                        return false;
                    }
                }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            trans_[trail_.back().first][trail_.back().second] = -1;
            trail_.pop_back();
        }
    }

    template <class Visit>
    void rec(size_t k, Visit& visit) {
        while (k < vars_.size() && trans_[vars_[k].first][vars_[k].second] != -1) ++k;
        if (k == vars_.size()) {
            visit(trans_);
            return;
        }
        auto [f, e] = vars_[k];
        int range = sizes_[c_->dom(f)];
        for (int v = 0; v < range; ++v) {
            if (++nodes_ > cap_) throw Error(ErrorKind::SizeLimit, "action enumeration exceeded the cap");
            size_t mark = trail_.size();
            trans_[f][e] = v;
            trail_.push_back({f, e});
            if (settle()) rec(k + 1, visit);
            undo(mark);
        }
    }

    CatPtr c_;
    std::vector<int> sizes_;
    std::size_t cap_;
    std::size_t nodes_ = 0;
    std::vector<std::vector<int>> trans_;
    std::vector<std::pair<int, int>> vars_, trail_;
    std::vector<Triple> triples_;
};

}  // namespace

std::vector<RightAction> enumerate_right_actions(const CatPtr& cp, int cap, const Options& opt) {
    std::vector<RightAction> out;
    for (auto a : enumerate_left_actions(opposite(cp), cap, opt)) {
        a.base = cp;
        a.variance = Variance::Right;
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<LeftAction> enumerate_left_actions(const CatPtr& cp, int cap, const Options& opt) {
    const int n = cp->num_objects();
    std::vector<LeftAction> out;
    std::vector<int> sizes(n, 0);
    while (true) {
        std::vector<LeftAction> bucket;
        ActionSearch(cp, sizes, opt.cap).run([&](const std::vector<std::vector<int>>& trans) {
            Action a;
            a.base = cp;
            a.variance = Variance::Left;
            a.names.resize(n);
            for (int x = 0; x < n; ++x)
                for (int i = 0; i < sizes[x]; ++i) a.names[x].push_back(std::to_string(i));
            a.trans = trans;
            for (const auto& b : bucket)
                if (find_isomorphism(a, b, opt)) return;
            bucket.push_back(std::move(a));
        });
        for (auto& a : bucket) out.push_back(std::move(a));
        int x = n - 1;
        while (x >= 0 && sizes[x] == cap) sizes[x--] = 0;
        if (x < 0) break;
        ++sizes[x];
    }
    return out;
}

std::vector<AbsoluteCut> enumerate_cuts(const CatPtr& cp, int cap, const Options& opt) {
    std::vector<AbsoluteCut> out;
    for (const auto& a : enumerate_left_actions(cp, cap, opt)) {
        ConeSpace lan_a = lan(a, opt);
        for (const auto& e : equivariant_maps(lan_a.action, lan_a.action, opt)) {
            if (!is_idempotent(e)) continue;
            RightAction b = fixed_points(lan_a.action, e).action;
            bool small = true;
            for (int x = 0; x < b.num_objects(); ++x) small = small && b.fiber_size(x) <= cap;
            if (!small) continue;
            CutSpaces sp = cut_spaces(a, b, true, opt);
            // e was taken on lan A; on the recomputed space it is the same map
            for (const auto& d : equivariant_maps(sp.ran_b.action, sp.ran_b.action, opt)) {
                if (!is_idempotent(d)) continue;
                if (!same_fibers(fixed_points(sp.ran_b.action, d).action, a)) continue;
                if (auto s = split_cut(a, b, d, e, sp, nullptr, opt)) out.push_back(simple_to_absolute(*s, sp));
            }
        }
    }
    return out;
}

}  // namespace tightcat
