#include "tightcat/isbell.hpp"

#include <algorithm>

#include "tightcat/error.hpp"

namespace tightcat {

int ConeSpace::find(int c, const Components& family) const {
    auto it = index[c].find(family);
    return it == index[c].end() ? -1 : it->second;
}

int ConeSpace::global(int c, int i) const {
    int g = i;
    for (int x = 0; x < c; ++x) g += static_cast<int>(comps[x].size());
    return g;
}

namespace {

std::string family_name(const FinCategory& C, const Components& fam) {
    std::string s = "[";
    for (size_t i = 0; i < fam.size(); ++i) {
        if (i) s += ",";
        s += C.morphism(fam[i]).id;
    }
    return s + "]";
}

int must_find(const ConeSpace& sp, int c, const Components& fam) {
    int i = sp.find(c, fam);
    if (i < 0) throw Error(ErrorKind::TypeMismatch, "family is not in the expected cone space");
    return i;
}

ConeSpace build(const Action& src, bool left, const Options& opt) {
    const auto& C = *src.base;
    ConeSpace sp;
    sp.source = src;
    sp.action.base = src.base;
    sp.action.variance = left ? Variance::Right : Variance::Left;
    const int n = C.num_objects();
    sp.comps.resize(n);
    sp.index.resize(n);
    sp.action.names.resize(n);
    for (int c = 0; c < n; ++c) {
        sp.comps[c] = left ? cocones(src, c, opt) : cones(c, src, opt);
        for (size_t i = 0; i < sp.comps[c].size(); ++i) {
            sp.index[c][sp.comps[c][i]] = static_cast<int>(i);
            sp.action.names[c].push_back(family_name(C, sp.comps[c][i]));
        }
    }
    sp.action.trans.resize(C.num_morphisms());
    for (int f = 0; f < C.num_morphisms(); ++f) {
        int in = sp.action.input_object(f), out = sp.action.output_object(f);
        for (const auto& fam : sp.comps[in]) {
            Components moved(fam.size());
            for (size_t k = 0; k < fam.size(); ++k) moved[k] = left ? C.compose(fam[k], f) : C.compose(f, fam[k]);
            sp.action.trans[f].push_back(must_find(sp, out, moved));
        }
    }
    return sp;
}

// Precomposition of every family with a map into the indexing action.
EqMap reindex(const ConeSpace& from, const ConeSpace& to, const EqMap& along) {
    const auto off = from.source.offsets();
    const auto& dst = to.source;
    std::vector<int> global;
    for (int x = 0; x < dst.num_objects(); ++x)
        for (int v : along.comp[x]) global.push_back(off[x] + v);
    EqMap out;
    out.comp.resize(from.comps.size());
    for (size_t c = 0; c < from.comps.size(); ++c)
        for (const auto& fam : from.comps[c]) {
            Components moved(global.size());
            for (size_t k = 0; k < global.size(); ++k) moved[k] = fam[global[k]];
            out.comp[c].push_back(must_find(to, static_cast<int>(c), moved));
        }
    return out;
}

// Evaluation of families at elements: x |-> (family |-> family_x).
EqMap evaluation(const Action& elems, const ConeSpace& families, const ConeSpace& target) {
    EqMap out;
    out.comp.resize(elems.num_objects());
    int g = 0;
    for (int x = 0; x < elems.num_objects(); ++x)
        for (int i = 0; i < elems.fiber_size(x); ++i, ++g) {
            Components fam;
            for (const auto& fiber : families.comps)
                for (const auto& f : fiber) fam.push_back(f[g]);
            out.comp[x].push_back(must_find(target, x, fam));
        }
    return out;
}

}  // namespace

ConeSpace lan(const LeftAction& a, const Options& opt) {
    if (a.variance != Variance::Left) throw Error(ErrorKind::TypeMismatch, "lan expects a left action");
    return build(a, true, opt);
}

ConeSpace ran(const RightAction& b, const Options& opt) {
    if (b.variance != Variance::Right) throw Error(ErrorKind::TypeMismatch, "ran expects a right action");
    return build(b, false, opt);
}

EqMap lan_map(const ConeSpace& lan_target, const ConeSpace& lan_source, const EqMap& f) {
    return reindex(lan_target, lan_source, f);
}

EqMap ran_map(const ConeSpace& ran_target, const ConeSpace& ran_source, const EqMap& g) {
    return reindex(ran_target, ran_source, g);
}

EqMap unit(const ConeSpace& lan_a, const ConeSpace& ran_lan_a) { return evaluation(lan_a.source, lan_a, ran_lan_a); }

EqMap counit(const ConeSpace& ran_b, const ConeSpace& lan_ran_b) { return evaluation(ran_b.source, ran_b, lan_ran_b); }

MonadTower monad_tower(const LeftAction& a, int depth, const Options& opt) {
    MonadTower t;
    t.base = a;
    for (int k = 0; k < depth; ++k) {
        t.l.push_back(lan(k == 0 ? a : t.r.back().action, opt));
        t.r.push_back(ran(t.l.back().action, opt));
    }
    if (depth >= 1) t.eta = unit(t.l[0], t.r[0]);
    if (depth >= 2) t.mu = ran_map(t.r[1], t.r[0], counit(t.r[0], t.l[1]));
    return t;
}

ComonadTower comonad_tower(const RightAction& b, int depth, const Options& opt) {
    ComonadTower t;
    t.base = b;
    for (int k = 0; k < depth; ++k) {
        t.r.push_back(ran(k == 0 ? b : t.l.back().action, opt));
        t.l.push_back(lan(t.r.back().action, opt));
    }
    if (depth >= 1) t.eps = counit(t.r[0], t.l[0]);
    if (depth >= 2) t.delta = lan_map(t.l[1], t.l[0], unit(t.l[0], t.r[1]));
    return t;
}

LeftAction monad_square(const LeftAction& a, const Options& opt) { return ran(lan(a, opt).action, opt).action; }

RightAction comonad_square(const RightAction& b, const Options& opt) { return lan(ran(b, opt).action, opt).action; }

Report check_algebra(const Algebra& a, const Options& opt) { return check_algebra(a, monad_tower(a.carrier, 2, opt)); }

Report check_algebra(const Algebra& a, const MonadTower& t) {
    if (a.carrier.names != t.base.names || t.l.size() < 2)
        throw Error(ErrorKind::TypeMismatch, "tower does not belong to the carrier");
    Report r;
    bool typed = is_equivariant(t.r[0].action, a.carrier, a.structure);
    r.add("structure_equivariant", typed);
    if (!typed) return r;
    r.add("unit", after(a.structure, t.eta) == identity_map(a.carrier), "structure after eta");
    EqMap lifted = ran_map(t.r[1], t.r[0], lan_map(t.l[0], t.l[1], a.structure));
    r.add("multiplication", after(a.structure, lifted) == after(a.structure, t.mu), "structure against mu");
    return r;
}

Report check_coalgebra(const Coalgebra& b, const Options& opt) {
    return check_coalgebra(b, comonad_tower(b.carrier, 2, opt));
}

Report check_coalgebra(const Coalgebra& b, const ComonadTower& t) {
    if (b.carrier.names != t.base.names || t.r.size() < 2)
        throw Error(ErrorKind::TypeMismatch, "tower does not belong to the carrier");
    Report r;
    bool typed = is_equivariant(t.l[0].action, b.carrier, b.structure);
    r.add("structure_equivariant", typed);
    if (!typed) return r;
    r.add("counit", after(b.structure, t.eps) == identity_map(b.carrier), "structure after eps");
    EqMap lifted = lan_map(t.l[1], t.l[0], ran_map(t.r[0], t.r[1], b.structure));
    r.add("comultiplication", after(b.structure, lifted) == after(b.structure, t.delta), "structure against delta");
    return r;
}

Report check_monad_laws(const MonadTower& t) {
    Report r;
    if (t.l.size() < 2) throw Error(ErrorKind::TypeMismatch, "monad laws need a tower of depth 2");
    EqMap eta_at_square = unit(t.l[1], t.r[1]);
    r.add("left_unit", after(t.mu, eta_at_square) == identity_map(t.r[0].action), "mu after eta at the square");
    EqMap square_eta = ran_map(t.r[0], t.r[1], lan_map(t.l[1], t.l[0], t.eta));
    r.add("right_unit", after(t.mu, square_eta) == identity_map(t.r[0].action), "mu after the square of eta");
    if (t.l.size() >= 3) {
        EqMap mu_at_square = ran_map(t.r[2], t.r[1], counit(t.r[1], t.l[2]));
        EqMap square_mu = ran_map(t.r[2], t.r[1], lan_map(t.l[1], t.l[2], t.mu));
        r.add("associativity", after(t.mu, mu_at_square) == after(t.mu, square_mu));
    }
    return r;
}

Report check_comonad_laws(const ComonadTower& t) {
    Report r;
    if (t.l.size() < 2) throw Error(ErrorKind::TypeMismatch, "comonad laws need a tower of depth 2");
    EqMap eps_at_square = counit(t.r[1], t.l[1]);
    r.add("left_counit", after(t.delta, eps_at_square) == identity_map(t.l[0].action));
    EqMap square_eps = lan_map(t.l[0], t.l[1], ran_map(t.r[1], t.r[0], t.eps));
    r.add("right_counit", after(t.delta, square_eps) == identity_map(t.l[0].action));
    if (t.l.size() >= 3) {
        EqMap delta_at_square = lan_map(t.l[2], t.l[1], unit(t.l[1], t.r[2]));
        EqMap square_delta = lan_map(t.l[2], t.l[1], ran_map(t.r[1], t.r[2], t.delta));
        r.add("coassociativity", after(t.delta, delta_at_square) == after(t.delta, square_delta));
    }
    return r;
}

// Evaluation at a cocone (or cone) is checked as a family over the next
// cone space without building the level above it.
Report check_triangles_left(const LeftAction& a, const Options& opt) {
    const auto& C = *a.base;
    auto l1 = lan(a, opt);
    auto r1 = ran(l1.action, opt);
    EqMap eta = unit(l1, r1);
    const auto a_off = a.offsets();
    bool cocone = true, triangle = true;
    for (int c = 0; c < C.num_objects(); ++c)
        for (size_t k = 0; k < l1.comps[c].size(); ++k) {
            const int at = l1.global(c, static_cast<int>(k));
            for (int f = 0; f < C.num_morphisms() && cocone; ++f) {
                const int x = C.cod(f), y = C.dom(f);
                for (size_t i = 0; i < r1.comps[x].size(); ++i) {
                    int moved = r1.action.act(f, static_cast<int>(i));
                    if (r1.comps[y][moved][at] != C.compose(f, r1.comps[x][i][at])) {
                        cocone = false;
                        break;
                    }
                }
            }
            for (int x = 0; x < a.num_objects() && triangle; ++x)
                for (int i = 0; i < a.fiber_size(x); ++i)
                    if (r1.comps[x][eta.comp[x][i]][at] != l1.comps[c][k][a_off[x] + i]) {
                        triangle = false;
                        break;
                    }
        }
    Report r;
    r.add("evaluation_is_cocone", cocone);
    r.add("lan_triangle", triangle, "lan eta after eps at lan");
    return r;
}

Report check_triangles_right(const RightAction& b, const Options& opt) {
    const auto& C = *b.base;
    auto r1 = ran(b, opt);
    auto l1 = lan(r1.action, opt);
    EqMap eps = counit(r1, l1);
    const auto b_off = b.offsets();
    bool cone = true, triangle = true;
    for (int c = 0; c < C.num_objects(); ++c)
        for (size_t k = 0; k < r1.comps[c].size(); ++k) {
            const int at = r1.global(c, static_cast<int>(k));
            for (int f = 0; f < C.num_morphisms() && cone; ++f) {
                const int x = C.dom(f), y = C.cod(f);
                for (size_t i = 0; i < l1.comps[x].size(); ++i) {
                    int moved = l1.action.act(f, static_cast<int>(i));
                    if (l1.comps[y][moved][at] != C.compose(l1.comps[x][i][at], f)) {
                        cone = false;
                        break;
                    }
                }
            }
            for (int y = 0; y < b.num_objects() && triangle; ++y)
                for (int j = 0; j < b.fiber_size(y); ++j)
                    if (l1.comps[y][eps.comp[y][j]][at] != r1.comps[c][k][b_off[y] + j]) {
                        triangle = false;
                        break;
                    }
        }
    Report r;
    r.add("evaluation_is_cone", cone);
    r.add("ran_triangle", triangle, "ran eps after eta at ran");
    return r;
}

Algebra free_algebra(const MonadTower& t) { return {t.r[0].action, t.mu}; }

Coalgebra cofree_coalgebra(const ComonadTower& t) { return {t.l[0].action, t.delta}; }

namespace {

// Backtracking over gap tables. Fixing phi(s, u) forces phi(s, u!g) and
// phi(f*s, u) for every morphism out of the relevant objects.
class GapSearch {
public:
    GapSearch(const Action& a, const Action& b, std::size_t cap) : a_(a), b_(b), cap_(cap) {
        const auto& C = *a.base;
        oa_ = a.offsets();
        ob_ = b.offsets();
        na_ = oa_.back();
        nb_ = ob_.back();
        for (int x = 0; x < a.num_objects(); ++x)
            for (int i = 0; i < a.fiber_size(x); ++i) obj_a_.push_back(x);
        for (int x = 0; x < b.num_objects(); ++x)
            for (int i = 0; i < b.fiber_size(x); ++i) obj_b_.push_back(x);
        val_.assign(static_cast<size_t>(na_) * nb_, -1);
        for (int f = 0; f < C.num_morphisms(); ++f)
            if (!C.is_identity(f)) morphisms_.push_back(f);
    }

    void run(std::vector<Gap>& out) {
        out.clear();
        rec(0, out);
    }

private:
    bool assign(int var, int m, size_t mark) {
        if (++nodes_ > cap_) throw Error(ErrorKind::SizeLimit, "gap search exceeded the cap");
        const auto& C = *a_.base;
        val_[var] = m;
        trail_.push_back(var);
        for (size_t head = mark; head < trail_.size(); ++head) {
            int w = trail_[head];
            int s = w / nb_, u = w % nb_;
            int x = obj_a_[s], y = obj_b_[u];
            int phi = val_[w];
            for (int f : morphisms_) {
                int target = -1, value = -1;
                if (C.dom(f) == y) {
                    int u2 = ob_[C.cod(f)] + b_.act(f, u - ob_[y]);
                    target = s * nb_ + u2;
                    value = C.compose(phi, f);
                    if (!push(target, value)) return false;
                }
                if (C.cod(f) == x) {
                    int s2 = oa_[C.dom(f)] + a_.act(f, s - oa_[x]);
                    target = s2 * nb_ + u;
                    value = C.compose(f, phi);
                    if (!push(target, value)) return false;
                }
            }
        }
        return true;
    }

    bool push(int target, int value) {
        if (val_[target] == -1) {
            val_[target] = value;
            trail_.push_back(target);
            return true;
        }
        return val_[target] == value;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            val_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    void rec(int from, std::vector<Gap>& out) {
        const int n = na_ * nb_;
        while (from < n && val_[from] != -1) ++from;
        if (from == n) {
            Gap g{a_, b_, std::vector<std::vector<int>>(na_, std::vector<int>(nb_))};
            for (int s = 0; s < na_; ++s)
                for (int u = 0; u < nb_; ++u) g.phi[s][u] = val_[s * nb_ + u];
            out.push_back(std::move(g));
            if (out.size() > cap_) throw Error(ErrorKind::SizeLimit, "too many gaps");
            return;
        }
        int s = from / nb_, u = from % nb_;
        for (int m : a_.base->hom(obj_a_[s], obj_b_[u])) {
            size_t mark = trail_.size();
            if (assign(from, m, mark)) rec(from + 1, out);
            undo(mark);
        }
    }

    const Action& a_;
    const Action& b_;
    std::size_t cap_;
    std::size_t nodes_ = 0;
    std::vector<int> oa_, ob_, obj_a_, obj_b_, val_, trail_, morphisms_;
    int na_ = 0, nb_ = 0;
};

}  // namespace

std::vector<Gap> gaps_enumerate(const LeftAction& a, const RightAction& b, const Options& opt) {
    if (a.variance != Variance::Left || b.variance != Variance::Right)
        throw Error(ErrorKind::TypeMismatch, "gaps need a left and a right action");
    std::vector<Gap> out;
    GapSearch(a, b, opt.cap).run(out);
    return out;
}

Report check_gap(const Gap& g) {
    const auto& C = *g.left.base;
    const auto oa = g.left.offsets(), ob = g.right.offsets();
    Report r;
    std::string cone_fail, cocone_fail;
    for (int x = 0; x < g.left.num_objects(); ++x)
        for (int i = 0; i < g.left.fiber_size(x); ++i)
            for (int y = 0; y < g.right.num_objects(); ++y)
                for (int j = 0; j < g.right.fiber_size(y); ++j) {
                    int s = oa[x] + i, u = ob[y] + j;
                    int phi = g.phi[s][u];
                    if (C.dom(phi) != x || C.cod(phi) != y) {
                        cone_fail = "entry has the wrong type";
                        continue;
                    }
                    for (int f = 0; f < C.num_morphisms(); ++f) {
                        if (C.dom(f) == y && cone_fail.empty() &&
                            g.phi[s][ob[C.cod(f)] + g.right.act(f, j)] != C.compose(phi, f))
                            cone_fail = g.left.names[x][i] + " along " + C.morphism(f).id;
                        if (C.cod(f) == x && cocone_fail.empty() &&
                            g.phi[oa[C.dom(f)] + g.left.act(f, i)][u] != C.compose(f, phi))
                            cocone_fail = g.right.names[y][j] + " along " + C.morphism(f).id;
                    }
                }
    r.add("cone_in_right", cone_fail.empty(), cone_fail);
    r.add("cocone_in_left", cocone_fail.empty(), cocone_fail);
    return r;
}

EqMap gap_lower(const Gap& g, const ConeSpace& ran_b) {
    EqMap out;
    out.comp.resize(g.left.num_objects());
    int s = 0;
    for (int x = 0; x < g.left.num_objects(); ++x)
        for (int i = 0; i < g.left.fiber_size(x); ++i, ++s) out.comp[x].push_back(must_find(ran_b, x, g.phi[s]));
    return out;
}

EqMap gap_upper(const Gap& g, const ConeSpace& lan_a) {
    EqMap out;
    out.comp.resize(g.right.num_objects());
    int u = 0;
    for (int y = 0; y < g.right.num_objects(); ++y)
        for (int j = 0; j < g.right.fiber_size(y); ++j, ++u) {
            Components fam;
            for (const auto& row : g.phi) fam.push_back(row[u]);
            out.comp[y].push_back(must_find(lan_a, y, fam));
        }
    return out;
}

Gap gap_from_lower(const LeftAction& a, const ConeSpace& ran_b, const EqMap& lower) {
    Gap g{a, ran_b.source, {}};
    for (int x = 0; x < a.num_objects(); ++x)
        for (int v : lower.comp[x]) g.phi.push_back(ran_b.comps[x][v]);
    return g;
}

Gap gap_from_upper(const ConeSpace& lan_a, const RightAction& b, const EqMap& upper) {
    const int na = lan_a.source.total();
    Gap g{lan_a.source, b, std::vector<std::vector<int>>(na)};
    for (int y = 0; y < b.num_objects(); ++y)
        for (int v : upper.comp[y])
            for (int s = 0; s < na; ++s) g.phi[s].push_back(lan_a.comps[y][v][s]);
    return g;
}

Report check_gap_morphism(const GapMorphism& f, const Gap& g1, const Gap& g2, const Options& opt) {
    Report r;
    bool typed = is_equivariant(g1.left, g2.left, f.lower) && is_equivariant(g2.right, g1.right, f.upper);
    r.add("components_equivariant", typed);
    if (!typed) return r;
    auto ran1 = ran(g1.right, opt), ran2 = ran(g2.right, opt);
    bool primal = after(gap_lower(g2, ran2), f.lower) == after(ran_map(ran1, ran2, f.upper), gap_lower(g1, ran1));
    auto lan1 = lan(g1.left, opt), lan2 = lan(g2.left, opt);
    bool dual = after(gap_upper(g1, lan1), f.upper) == after(lan_map(lan2, lan1, f.lower), gap_upper(g2, lan2));
    r.add("square", primal, "lower transpose square");
    r.add("dual_square_agrees", primal == dual, dual ? "dual square holds" : "dual square fails");
    return r;
}

Coalgebra nucleus_to_coalgebra(const Algebra&, const MonadTower& t) {
    return {t.l[0].action, lan_map(t.l[1], t.l[0], t.eta)};
}

Algebra nucleus_to_algebra(const Coalgebra&, const ComonadTower& t) {
    return {t.r[0].action, ran_map(t.r[1], t.r[0], t.eps)};
}

std::vector<EqMap> algebra_homs(const Algebra& x, const MonadTower& tx, const Algebra& y, const MonadTower& ty,
                                const Options& opt) {
    std::vector<EqMap> out;
    for_each_equivariant_map(
        x.carrier, y.carrier,
        [&](const EqMap& h) {
            EqMap lifted = ran_map(tx.r[0], ty.r[0], lan_map(ty.l[0], tx.l[0], h));
            if (after(h, x.structure) == after(y.structure, lifted)) out.push_back(h);
            return true;
        },
        opt);
    return out;
}

std::vector<EqMap> coalgebra_homs(const Coalgebra& x, const ComonadTower& tx, const Coalgebra& y,
                                  const ComonadTower& ty, const Options& opt) {
    // A coalgebra morphism x -> y is carried by a covariant map y -> x.
    std::vector<EqMap> out;
    for_each_equivariant_map(
        y.carrier, x.carrier,
        [&](const EqMap& k) {
            EqMap lifted = lan_map(ty.l[0], tx.l[0], ran_map(tx.r[0], ty.r[0], k));
            if (after(x.structure, lifted) == after(k, y.structure)) out.push_back(k);
            return true;
        },
        opt);
    return out;
}

}  // namespace tightcat
