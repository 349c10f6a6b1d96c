#include "tightcat/action.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tightcat/error.hpp"

namespace tightcat {

int Action::total() const {
    int n = 0;
    for (const auto& f : names) n += static_cast<int>(f.size());
    return n;
}

std::vector<int> Action::offsets() const {
    std::vector<int> off(names.size() + 1, 0);
    for (size_t x = 0; x < names.size(); ++x) off[x + 1] = off[x] + static_cast<int>(names[x].size());
    return off;
}

int Action::find_element(int x, const std::string& name) const {
    for (int i = 0; i < fiber_size(x); ++i)
        if (names[x][i] == name) return i;
    throw Error(ErrorKind::UnknownElement, "'" + name + "' in fiber of '" + base->object_name(x) + "'");
}

std::vector<int> hom_positions(const FinCategory& c) {
    std::vector<int> pos(c.num_morphisms(), -1);
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b) {
            const auto& h = c.hom(a, b);
            for (size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<int>(i);
        }
    return pos;
}

void check_action_laws(const Action& a) {
    const auto& C = *a.base;
    if (a.num_objects() != C.num_objects() || static_cast<int>(a.trans.size()) != C.num_morphisms())
        throw Error(ErrorKind::FiberMismatch, "action shape does not match its base");
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const auto& t = a.trans[f];
        if (static_cast<int>(t.size()) != a.fiber_size(a.input_object(f)))
            throw Error(ErrorKind::FiberMismatch, "transition of '" + C.morphism(f).id + "' is not total");
        for (int v : t)
            if (v < 0 || v >= a.fiber_size(a.output_object(f)))
                throw Error(ErrorKind::FiberMismatch, "transition of '" + C.morphism(f).id + "' leaves its fiber");
    }
    for (int x = 0; x < C.num_objects(); ++x) {
        const auto& t = a.trans[C.identity(x)];
        for (int i = 0; i < static_cast<int>(t.size()); ++i)
            if (t[i] != i)
                throw Error(ErrorKind::FunctorialityViolation, "identity of '" + C.object_name(x) + "' acts nontrivially");
    }
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g = 0; g < C.num_morphisms(); ++g) {
            int h = C.compose(f, g);
            if (h < 0) continue;
            // left: (f;g)*s = f*(g*s); right: u!(f;g) = (u!f)!g
            const auto& first = a.variance == Variance::Left ? a.trans[g] : a.trans[f];
            const auto& second = a.variance == Variance::Left ? a.trans[f] : a.trans[g];
            for (size_t e = 0; e < a.trans[h].size(); ++e)
                if (second[first[e]] != a.trans[h][e])
                    throw Error(ErrorKind::FunctorialityViolation,
                                "at " + C.morphism(f).id + " then " + C.morphism(g).id);
        }
}

Action validate_action(const CatPtr& base, const RawAction& raw) {
    const auto& C = *base;
    Action a;
    a.base = base;
    a.variance = raw.variance;
    a.names.assign(C.num_objects(), {});
    std::set<int> seen;
    for (const auto& [obj, elems] : raw.fibers) {
        int x = C.object_index(obj);
        if (!seen.insert(x).second) throw Error(ErrorKind::DuplicateId, "fiber of '" + obj + "' given twice");
        std::set<std::string> uniq(elems.begin(), elems.end());
        if (uniq.size() != elems.size()) throw Error(ErrorKind::DuplicateId, "element in fiber of '" + obj + "'");
        a.names[x] = elems;
    }
    a.trans.assign(C.num_morphisms(), {});
    std::vector<char> given(C.num_morphisms(), 0);
    for (const auto& [mid, table] : raw.maps) {
        int f = C.morphism_index(mid);
        if (given[f]) throw Error(ErrorKind::DuplicateId, "map of '" + mid + "' given twice");
        given[f] = 1;
        int in = a.input_object(f), out = a.output_object(f);
        std::vector<int> t(a.fiber_size(in), -1);
        for (const auto& [from, to] : table) {
            int i = -1, j = -1;
            for (int k = 0; k < a.fiber_size(in); ++k)
                if (a.names[in][k] == from) i = k;
            for (int k = 0; k < a.fiber_size(out); ++k)
                if (a.names[out][k] == to) j = k;
            if (i < 0 || j < 0)
                throw Error(ErrorKind::FiberMismatch, "map of '" + mid + "' sends " + from + " to " + to);
            t[i] = j;
        }
        for (int v : t)
            if (v < 0) throw Error(ErrorKind::FiberMismatch, "map of '" + mid + "' is not total");
        a.trans[f] = std::move(t);
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (given[f]) continue;
        if (C.is_identity(f)) {
            std::vector<int> t(a.fiber_size(C.dom(f)));
            for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
            a.trans[f] = std::move(t);
        } else if (a.fiber_size(a.input_object(f)) == 0) {
            a.trans[f] = {};
        } else {
            throw Error(ErrorKind::FiberMismatch, "no map given for '" + C.morphism(f).id + "'");
        }
    }
    check_action_laws(a);
    return a;
}

LeftAction validate_left_action(const CatPtr& base, const RawAction& raw) {
    if (raw.variance != Variance::Left) throw Error(ErrorKind::TypeMismatch, "expected a left action");
    return validate_action(base, raw);
}

RightAction validate_right_action(const CatPtr& base, const RawAction& raw) {
    if (raw.variance != Variance::Right) throw Error(ErrorKind::TypeMismatch, "expected a right action");
    return validate_action(base, raw);
}

Action empty_action(const CatPtr& base, Variance v) {
    Action a;
    a.base = base;
    a.variance = v;
    a.names.assign(base->num_objects(), {});
    a.trans.assign(base->num_morphisms(), {});
    return a;
}

Action terminal_action(const CatPtr& base, Variance v) {
    Action a;
    a.base = base;
    a.variance = v;
    a.names.assign(base->num_objects(), {"*"});
    a.trans.assign(base->num_morphisms(), {0});
    return a;
}

LeftAction yoneda_left(const CatPtr& cp, int x) {
    const auto& C = *cp;
    if (x < 0 || x >= C.num_objects()) throw Error(ErrorKind::UnknownObject, std::to_string(x));
    auto pos = hom_positions(C);
    Action a;
    a.base = cp;
    a.variance = Variance::Left;
    a.names.resize(C.num_objects());
    for (int b = 0; b < C.num_objects(); ++b)
        for (int m : C.hom(b, x)) a.names[b].push_back(C.morphism(m).id);
    a.trans.resize(C.num_morphisms());
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int m : C.hom(C.cod(f), x)) a.trans[f].push_back(pos[C.compose(f, m)]);
    return a;
}

RightAction yoneda_right(const CatPtr& cp, int x) {
    const auto& C = *cp;
    if (x < 0 || x >= C.num_objects()) throw Error(ErrorKind::UnknownObject, std::to_string(x));
    auto pos = hom_positions(C);
    Action a;
    a.base = cp;
    a.variance = Variance::Right;
    a.names.resize(C.num_objects());
    for (int b = 0; b < C.num_objects(); ++b)
        for (int m : C.hom(x, b)) a.names[b].push_back(C.morphism(m).id);
    a.trans.resize(C.num_morphisms());
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int m : C.hom(x, C.dom(f))) a.trans[f].push_back(pos[C.compose(m, f)]);
    return a;
}

EqMap identity_map(const Action& a) {
    EqMap m;
    m.comp.resize(a.num_objects());
    for (int x = 0; x < a.num_objects(); ++x)
        for (int i = 0; i < a.fiber_size(x); ++i) m.comp[x].push_back(i);
    return m;
}

EqMap after(const EqMap& g, const EqMap& f) {
    EqMap h;
    h.comp.resize(f.comp.size());
    for (size_t x = 0; x < f.comp.size(); ++x)
        for (int v : f.comp[x]) h.comp[x].push_back(g.comp[x][v]);
    return h;
}

bool is_equivariant(const Action& s, const Action& t, const EqMap& h) {
    if (s.variance != t.variance || static_cast<int>(h.comp.size()) != s.num_objects()) return false;
    for (int x = 0; x < s.num_objects(); ++x) {
        if (static_cast<int>(h.comp[x].size()) != s.fiber_size(x)) return false;
        for (int v : h.comp[x])
            if (v < 0 || v >= t.fiber_size(x)) return false;
    }
    for (int f = 0; f < s.base->num_morphisms(); ++f) {
        int in = s.input_object(f), out = s.output_object(f);
        for (int e = 0; e < s.fiber_size(in); ++e)
            if (h.comp[out][s.act(f, e)] != t.act(f, h.comp[in][e])) return false;
    }
    return true;
}

bool is_injective(const EqMap& h) {
    for (const auto& c : h.comp) {
        std::set<int> s(c.begin(), c.end());
        if (s.size() != c.size()) return false;
    }
    return true;
}

bool is_surjective(const EqMap& h, const Action& target) {
    for (int x = 0; x < target.num_objects(); ++x) {
        std::set<int> s(h.comp[x].begin(), h.comp[x].end());
        if (static_cast<int>(s.size()) != target.fiber_size(x)) return false;
    }
    return true;
}

bool is_bijective(const EqMap& h, const Action& target) { return is_injective(h) && is_surjective(h, target); }

std::optional<EqMap> inverse(const EqMap& h, const Action& target) {
    if (!is_bijective(h, target)) return std::nullopt;
    EqMap inv;
    inv.comp.resize(h.comp.size());
    for (size_t x = 0; x < h.comp.size(); ++x) {
        inv.comp[x].assign(h.comp[x].size(), -1);
        for (size_t i = 0; i < h.comp[x].size(); ++i) inv.comp[x][h.comp[x][i]] = static_cast<int>(i);
    }
    return inv;
}

bool is_idempotent(const EqMap& e) { return after(e, e) == e; }

SubAction fixed_points(const Action& a, const EqMap& e) {
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "endomap is not idempotent");
    SubAction sub;
    sub.action.base = a.base;
    sub.action.variance = a.variance;
    sub.action.names.resize(a.num_objects());
    sub.inclusion.comp.resize(a.num_objects());
    std::vector<std::vector<int>> local(a.num_objects());
    for (int x = 0; x < a.num_objects(); ++x) {
        local[x].assign(a.fiber_size(x), -1);
        for (int i = 0; i < a.fiber_size(x); ++i)
            if (e.comp[x][i] == i) {
                local[x][i] = static_cast<int>(sub.inclusion.comp[x].size());
                sub.inclusion.comp[x].push_back(i);
                sub.action.names[x].push_back(a.names[x][i]);
            }
    }
    sub.action.trans.resize(a.base->num_morphisms());
    for (int f = 0; f < a.base->num_morphisms(); ++f) {
        int out = a.output_object(f);
        for (int i : sub.inclusion.comp[a.input_object(f)]) {
            int v = local[out][a.act(f, i)];
            if (v < 0) throw Error(ErrorKind::FunctorialityViolation, "fixed points are not closed under the action");
            sub.action.trans[f].push_back(v);
        }
    }
    return sub;
}

namespace {

// Backtracking over the elements of the source in global order. Fixing the
// image of one element forces the images of everything reachable from it
// along transitions, so only orbit generators branch.
class MapSearch {
public:
    MapSearch(const Action& s, const Action& t, const SearchSpec& spec, std::size_t cap, std::atomic<std::size_t>& nodes)
        : s_(s), t_(t), spec_(spec), cap_(cap), nodes_(nodes) {
        if (s.variance != t.variance) throw Error(ErrorKind::TypeMismatch, "maps between actions of different variance");
        if (s.base.get() != t.base.get() && !(*s.base == *t.base))
            throw Error(ErrorKind::TypeMismatch, "maps between actions over different bases");
        off_ = s.offsets();
        n_ = off_.back();
        obj_.resize(n_);
        for (int x = 0; x < s.num_objects(); ++x)
            for (int i = off_[x]; i < off_[x + 1]; ++i) obj_[i] = x;
        out_.resize(s.num_objects());
        for (int f = 0; f < s.base->num_morphisms(); ++f)
            if (!s.base->is_identity(f)) out_[s.input_object(f)].push_back(f);
        val_.assign(n_, -1);
        if (spec_.injective) {
            used_.resize(t.num_objects());
            for (int x = 0; x < t.num_objects(); ++x) used_[x].assign(t.fiber_size(x), 0);
        }
    }

    int size() const { return n_; }

    bool admissible(int var, int v) const {
        int x = obj_[var];
        if (!spec_.allowed.empty() && !spec_.allowed[x][v]) return false;
        if (spec_.injective && used_[x][v]) return false;
        return true;
    }

    // Assigns var := v and propagates; returns false on conflict (state is
    // then rolled back to the entry trail size).
    bool assign(int var, int v) {
        if (++nodes_ > cap_) throw Error(ErrorKind::SizeLimit, "equivariant map search exceeded the cap");
        size_t mark = trail_.size();
        if (!admissible(var, v)) return false;
        set(var, v);
        size_t head = mark;
        while (head < trail_.size()) {
            int w = trail_[head++];
            int x = obj_[w];
            int e = w - off_[x];
            for (int f : out_[x]) {
                int y = s_.output_object(f);
                int w2 = off_[y] + s_.act(f, e);
                int v2 = t_.act(f, val_[w]);
                if (val_[w2] == -1) {
                    if (!admissible(w2, v2)) {
                        undo(mark);
                        return false;
                    }
                    set(w2, v2);
                } else if (val_[w2] != v2) {
                    undo(mark);
                    return false;
                }
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            int w = trail_.back();
            trail_.pop_back();
            if (spec_.injective) used_[obj_[w]][val_[w]] = 0;
            val_[w] = -1;
        }
    }

    size_t trail_size() const { return trail_.size(); }

    int next_free(int from) const {
        while (from < n_ && val_[from] != -1) ++from;
        return from;
    }

    std::vector<int> candidates(int var) const {
        std::vector<int> c;
        for (int v = 0; v < t_.fiber_size(obj_[var]); ++v)
            if (admissible(var, v)) c.push_back(v);
        return c;
    }

    EqMap current() const {
        EqMap m;
        m.comp.resize(s_.num_objects());
        for (int x = 0; x < s_.num_objects(); ++x) m.comp[x].assign(val_.begin() + off_[x], val_.begin() + off_[x + 1]);
        return m;
    }

    // Depth-first enumeration from the current partial state.
    bool run(int from, const std::function<bool(const EqMap&)>& visit) {
        int var = next_free(from);
        if (var == n_) return visit(current());
        int x = obj_[var];
        for (int v = 0; v < t_.fiber_size(x); ++v) {
            size_t mark = trail_.size();
            if (!assign(var, v)) continue;
            bool go = run(var + 1, visit);
            undo(mark);
            if (!go) return false;
        }
        return true;
    }

private:
    void set(int w, int v) {
        val_[w] = v;
        if (spec_.injective) used_[obj_[w]][v] = 1;
        trail_.push_back(w);
    }

    const Action& s_;
    const Action& t_;
    const SearchSpec& spec_;
    std::size_t cap_;
    std::atomic<std::size_t>& nodes_;
    std::vector<int> off_, obj_;
    int n_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<int> val_;
    std::vector<int> trail_;
    std::vector<std::vector<char>> used_;
};

}  // namespace

void for_each_equivariant_map(const Action& s, const Action& t, const std::function<bool(const EqMap&)>& visit,
                              const Options& opt, const SearchSpec& spec) {
    std::atomic<std::size_t> nodes{0};
    MapSearch search(s, t, spec, opt.cap, nodes);
    search.run(0, visit);
}

std::vector<EqMap> equivariant_maps_serial(const Action& s, const Action& t, const Options& opt,
                                           const SearchSpec& spec) {
    std::vector<EqMap> out;
    for_each_equivariant_map(
        s, t,
        [&](const EqMap& m) {
            out.push_back(m);
            if (out.size() > opt.cap) throw Error(ErrorKind::SizeLimit, "too many equivariant maps");
            return true;
        },
        opt, spec);
    return out;
}

std::vector<EqMap> equivariant_maps(const Action& s, const Action& t, const Options& opt, const SearchSpec& spec) {
    if (!opt.parallel) return equivariant_maps_serial(s, t, opt, spec);
    std::atomic<std::size_t> nodes{0};
    MapSearch root(s, t, spec, opt.cap, nodes);
    if (root.size() == 0) return {root.current()};
    const std::vector<int> branch = root.candidates(0);
    const int nb = static_cast<int>(branch.size());
    if (nb < 2) return equivariant_maps_serial(s, t, opt, spec);
    std::vector<std::vector<EqMap>> parts(nb);
    std::exception_ptr failure;
    std::atomic<std::size_t> produced{0};
#pragma omp parallel for schedule(dynamic, 1)
    for (int b = 0; b < nb; ++b) {
        try {
            MapSearch local(s, t, spec, opt.cap, nodes);
            if (local.assign(0, branch[b]))
                local.run(1, [&](const EqMap& m) {
                    parts[b].push_back(m);
                    if (++produced > opt.cap) throw Error(ErrorKind::SizeLimit, "too many equivariant maps");
                    return true;
                });
        } catch (...) {
#pragma omp critical(tightcat_search_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<EqMap> out;
    for (auto& p : parts)
        for (auto& m : p) out.push_back(std::move(m));
    return out;
}

std::size_t count_equivariant_maps(const Action& s, const Action& t, const Options& opt) {
    std::size_t n = 0;
    for_each_equivariant_map(
        s, t,
        [&](const EqMap&) {
            ++n;
            return true;
        },
        opt);
    return n;
}

std::optional<EqMap> find_isomorphism(const Action& s, const Action& t, const Options& opt) {
    if (s.variance != t.variance || s.num_objects() != t.num_objects()) return std::nullopt;
    for (int x = 0; x < s.num_objects(); ++x)
        if (s.fiber_size(x) != t.fiber_size(x)) return std::nullopt;
    SearchSpec spec;
    spec.injective = true;
    std::optional<EqMap> found;
    for_each_equivariant_map(
        s, t,
        [&](const EqMap& m) {
            found = m;
            return false;
        },
        opt, spec);
    return found;
}

namespace {

std::vector<Components> flatten_to_morphisms(const std::vector<EqMap>& maps, const Action& rep, int c, bool left) {
    const auto& C = *rep.base;
    std::vector<Components> out;
    out.reserve(maps.size());
    for (const auto& m : maps) {
        Components comp;
        for (size_t x = 0; x < m.comp.size(); ++x) {
            const auto& h = left ? C.hom(static_cast<int>(x), c) : C.hom(c, static_cast<int>(x));
            for (int v : m.comp[x]) comp.push_back(h[v]);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::vector<Components> cocones(const LeftAction& a, int c, const Options& opt) {
    if (a.variance != Variance::Left) throw Error(ErrorKind::TypeMismatch, "cocones over a right action");
    auto rep = yoneda_left(a.base, c);
    return flatten_to_morphisms(equivariant_maps(a, rep, opt), rep, c, true);
}

std::vector<Components> cones(int c, const RightAction& b, const Options& opt) {
    if (b.variance != Variance::Right) throw Error(ErrorKind::TypeMismatch, "cones under a left action");
    auto rep = yoneda_right(b.base, c);
    return flatten_to_morphisms(equivariant_maps(b, rep, opt), rep, c, false);
}

TotalCategory grothendieck(const Action& a) {
    const auto& C = *a.base;
    TotalCategory res;
    std::vector<std::string> names;
    auto off = a.offsets();
    for (int x = 0; x < a.num_objects(); ++x)
        for (int i = 0; i < a.fiber_size(x); ++i) {
            res.elements.push_back({x, i});
            names.push_back(C.object_name(x) + ":" + a.names[x][i]);
        }
    const int n = static_cast<int>(names.size());
    std::vector<Morphism> mors;
    std::vector<int> under;
    std::vector<int> identity(n, -1);
    std::map<std::tuple<int, int, int>, int> lookup;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, s] = res.elements[i];
            auto [y, t] = res.elements[j];
            for (int f : C.hom(x, y)) {
                bool ok = a.variance == Variance::Left ? a.act(f, t) == s : a.act(f, s) == t;
                if (!ok) continue;
                bool is_id = i == j && f == C.identity(x);
                if (is_id) identity[i] = static_cast<int>(mors.size());
                lookup[{i, j, f}] = static_cast<int>(mors.size());
                mors.push_back({is_id ? identity_id(names[i]) : C.morphism(f).id + ":" + names[i] + "->" + names[j], i, j});
                under.push_back(f);
            }
        }
    const size_t m = mors.size();
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f)
        for (size_t g = 0; g < m; ++g)
            if (mors[f].cod == mors[g].dom) comp[f * m + g] = lookup.at({mors[f].dom, mors[g].cod, C.compose(under[f], under[g])});
    res.category = std::make_shared<const FinCategory>(names, mors, identity, comp);
    res.proj = {res.category, a.base, {}, under};
    for (auto [x, s] : res.elements) res.proj.obj.push_back(x);
    return res;
}

namespace {

// Acting on a cocone by postcomposition (or on a cone by precomposition).
Components act_on(const Components& u, int f, const FinCategory& C, bool post) {
    Components out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = post ? C.compose(u[i], f) : C.compose(f, u[i]);
    return out;
}

}  // namespace

std::optional<Universal> find_representation(const CatPtr& cp, const std::vector<std::vector<Components>>& sets,
                                             bool colimit) {
    const auto& C = *cp;
    const int n = C.num_objects();
    std::vector<std::set<Components>> index(n);
    for (int c = 0; c < n; ++c) index[c] = std::set<Components>(sets[c].begin(), sets[c].end());
    for (int a = 0; a < n; ++a) {
        bool sizes = true;
        for (int c = 0; c < n && sizes; ++c)
            sizes = (colimit ? C.hom(a, c).size() : C.hom(c, a).size()) == sets[c].size();
        if (!sizes) continue;
        for (const auto& u : sets[a]) {
            bool universal = true;
            for (int c = 0; c < n && universal; ++c) {
                std::set<Components> image;
                for (int f : colimit ? C.hom(a, c) : C.hom(c, a)) {
                    auto v = act_on(u, f, C, colimit);
                    if (!index[c].count(v)) {
                        universal = false;
                        break;
                    }
                    image.insert(std::move(v));
                }
                universal = universal && image.size() == sets[c].size();
            }
            if (universal) return Universal{a, u};
        }
    }
    return std::nullopt;
}

bool check_representation(const CatPtr& cp, const std::vector<std::vector<Components>>& sets, const Universal& u,
                          bool colimit) {
    const auto& C = *cp;
    if (u.object < 0 || u.object >= C.num_objects()) return false;
    if (std::find(sets[u.object].begin(), sets[u.object].end(), u.arrows) == sets[u.object].end()) return false;
    for (int c = 0; c < C.num_objects(); ++c) {
        const auto& h = colimit ? C.hom(u.object, c) : C.hom(c, u.object);
        std::vector<Components> image;
        for (int f : h) image.push_back(act_on(u.arrows, f, C, colimit));
        std::vector<Components> sorted_image = image, target = sets[c];
        std::sort(sorted_image.begin(), sorted_image.end());
        std::sort(target.begin(), target.end());
        if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) != sorted_image.end()) return false;
        if (sorted_image != target) return false;
    }
    return true;
}

std::optional<Universal> loose_colimit(const LeftAction& a, const Options& opt) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < a.base->num_objects(); ++c) sets.push_back(cocones(a, c, opt));
    return find_representation(a.base, sets, true);
}

std::optional<Universal> loose_limit(const RightAction& b, const Options& opt) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < b.base->num_objects(); ++c) sets.push_back(cones(c, b, opt));
    return find_representation(b.base, sets, false);
}

bool is_loose_colimit(const LeftAction& a, const Universal& u, const Options& opt) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < a.base->num_objects(); ++c) sets.push_back(cocones(a, c, opt));
    return check_representation(a.base, sets, u, true);
}

bool is_loose_limit(const RightAction& b, const Universal& u, const Options& opt) {
    std::vector<std::vector<Components>> sets;
    for (int c = 0; c < b.base->num_objects(); ++c) sets.push_back(cones(c, b, opt));
    return check_representation(b.base, sets, u, false);
}

namespace {

Report lifting(const Functor& p, bool fibration) {
    Report r;
    const auto& E = *p.source;
    const auto& B = *p.target;
    std::string bad;
    for (int e = 0; e < E.num_objects() && bad.empty(); ++e)
        for (int b = 0; b < B.num_objects() && bad.empty(); ++b) {
            const auto& hb = fibration ? B.hom(b, p.obj[e]) : B.hom(p.obj[e], b);
            for (int m : hb) {
                int lifts = 0;
                for (int e2 = 0; e2 < E.num_objects(); ++e2)
                    for (int f : fibration ? E.hom(e2, e) : E.hom(e, e2))
                        if (p.mor[f] == m) ++lifts;
                if (lifts != 1) {
                    bad = E.object_name(e) + " along " + B.morphism(m).id + " has " + std::to_string(lifts) + " lifts";
                    break;
                }
            }
        }
    r.add(fibration ? "unique_lifting" : "unique_oplifting", bad.empty(), bad);
    return r;
}

}  // namespace

Report check_discrete_fibration(const Functor& p) { return lifting(p, true); }
Report check_discrete_opfibration(const Functor& p) { return lifting(p, false); }

}  // namespace tightcat
