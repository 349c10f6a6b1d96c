#include "tightcat/fincat.hpp"

#include <map>
#include <numeric>
#include <set>

#include "tightcat/error.hpp"

namespace tightcat {

std::string identity_id(const std::string& object) { return "id_" + object; }

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<int> identity, std::vector<int> comp)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
    const int n = num_objects();
    const int m = num_morphisms();
    for (int x = 0; x < n; ++x) {
        if (!object_ix_.emplace(objects_[x], x).second)
            throw Error(ErrorKind::DuplicateId, "object '" + objects_[x] + "'");
    }
    for (int f = 0; f < m; ++f) {
        if (!morphism_ix_.emplace(morphisms_[f].id, f).second)
            throw Error(ErrorKind::DuplicateId, "morphism '" + morphisms_[f].id + "'");
        if (morphisms_[f].dom < 0 || morphisms_[f].dom >= n || morphisms_[f].cod < 0 || morphisms_[f].cod >= n)
            throw Error(ErrorKind::UnknownObject, "endpoint of '" + morphisms_[f].id + "'");
    }
    if (static_cast<int>(identity_.size()) != n || comp_.size() != static_cast<size_t>(m) * m)
        throw Error(ErrorKind::TypeMismatch, "identity or composition table has the wrong size");
    hom_.assign(static_cast<size_t>(n) * n, {});
    for (int f = 0; f < m; ++f) hom_[static_cast<size_t>(dom(f)) * n + cod(f)].push_back(f);

    for (int x = 0; x < n; ++x) {
        int i = identity_[x];
        if (i < 0 || i >= m || dom(i) != x || cod(i) != x)
            throw Error(ErrorKind::UnitViolation, "identity of '" + objects_[x] + "' is not an endomorphism");
    }
    for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g) {
            int h = compose(f, g);
            if (cod(f) != dom(g)) {
                if (h != -1)
                    throw Error(ErrorKind::TypeMismatch,
                                "composite of non-composable " + morphisms_[f].id + ", " + morphisms_[g].id);
                continue;
            }
            if (h < 0)
                throw Error(ErrorKind::MissingComposite, morphisms_[f].id + " then " + morphisms_[g].id);
            if (h >= m || dom(h) != dom(f) || cod(h) != cod(g))
                throw Error(ErrorKind::TypeMismatch,
                            "composite of " + morphisms_[f].id + ", " + morphisms_[g].id + " has wrong type");
        }
        if (compose(identity_[dom(f)], f) != f || compose(f, identity_[cod(f)]) != f)
            throw Error(ErrorKind::UnitViolation, "at '" + morphisms_[f].id + "'");
    }
    for (int f = 0; f < m; ++f)
        for (int y = 0; y < n; ++y)
            for (int g : hom(cod(f), y))
                for (int z = 0; z < n; ++z)
                    for (int h : hom(y, z))
                        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                            throw Error(ErrorKind::AssociativityViolation, morphisms_[f].id + ", " + morphisms_[g].id +
                                                                               ", " + morphisms_[h].id);
}

int FinCategory::object_index(const std::string& name) const {
    auto it = object_ix_.find(name);
    if (it == object_ix_.end()) throw Error(ErrorKind::UnknownObject, "'" + name + "'");
    return it->second;
}

int FinCategory::morphism_index(const std::string& id) const {
    auto it = morphism_ix_.find(id);
    if (it == morphism_ix_.end()) throw Error(ErrorKind::UnknownReference, "morphism '" + id + "'");
    return it->second;
}

std::optional<int> FinCategory::find_object(const std::string& name) const {
    auto it = object_ix_.find(name);
    if (it == object_ix_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FinCategory::find_morphism(const std::string& id) const {
    auto it = morphism_ix_.find(id);
    if (it == morphism_ix_.end()) return std::nullopt;
    return it->second;
}

bool FinCategory::operator==(const FinCategory& o) const {
    if (objects_ != o.objects_ || identity_ != o.identity_ || comp_ != o.comp_) return false;
    if (morphisms_.size() != o.morphisms_.size()) return false;
    for (size_t i = 0; i < morphisms_.size(); ++i) {
        const auto &a = morphisms_[i], &b = o.morphisms_[i];
        if (a.id != b.id || a.dom != b.dom || a.cod != b.cod) return false;
    }
    return true;
}

CatPtr validate_category(const RawCategory& raw) {
    std::vector<std::string> objects = raw.objects;
    std::map<std::string, int> obj;
    for (size_t i = 0; i < objects.size(); ++i)
        if (!obj.emplace(objects[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::DuplicateId, "object '" + objects[i] + "'");
    auto object_of = [&](const std::string& s) {
        auto it = obj.find(s);
        if (it == obj.end()) throw Error(ErrorKind::UnknownObject, "'" + s + "'");
        return it->second;
    };

    std::vector<Morphism> mors;
    std::vector<int> identity;
    std::map<std::string, int> mix;
    for (size_t x = 0; x < objects.size(); ++x) {
        identity.push_back(static_cast<int>(mors.size()));
        mix[identity_id(objects[x])] = static_cast<int>(mors.size());
        mors.push_back({identity_id(objects[x]), static_cast<int>(x), static_cast<int>(x)});
    }
    for (const auto& a : raw.morphisms) {
        if (mix.count(a.id)) throw Error(ErrorKind::DuplicateId, "morphism '" + a.id + "'");
        mix[a.id] = static_cast<int>(mors.size());
        mors.push_back({a.id, object_of(a.dom), object_of(a.cod)});
    }
    auto morphism_of = [&](const std::string& s) {
        auto it = mix.find(s);
        if (it == mix.end()) throw Error(ErrorKind::UnknownReference, "morphism '" + s + "'");
        return it->second;
    };

    const size_t m = mors.size();
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f) {
        for (size_t g = 0; g < m; ++g) {
            if (mors[f].cod != mors[g].dom) continue;
            if (f == static_cast<size_t>(identity[mors[f].dom])) comp[f * m + g] = static_cast<int>(g);
            else if (g == static_cast<size_t>(identity[mors[g].cod])) comp[f * m + g] = static_cast<int>(f);
        }
    }
    for (const auto& e : raw.composition) {
        int f = morphism_of(e.first), g = morphism_of(e.second), h = morphism_of(e.result);
        if (mors[f].cod != mors[g].dom)
            throw Error(ErrorKind::TypeMismatch, "entry for non-composable " + e.first + ", " + e.second);
        int& slot = comp[static_cast<size_t>(f) * m + g];
        bool unit_pair = f == identity[mors[f].dom] || g == identity[mors[g].cod];
        if (slot != -1 && slot != h)
            throw Error(unit_pair ? ErrorKind::UnitViolation : ErrorKind::DuplicateId,
                        "conflicting entry " + e.first + " then " + e.second + " = " + e.result);
        slot = h;
    }
    return std::make_shared<const FinCategory>(objects, mors, identity, comp);
}

CatPtr opposite(const CatPtr& c) {
    std::vector<Morphism> mors;
    for (const auto& f : c->morphisms()) mors.push_back({f.id, f.cod, f.dom});
    const size_t m = mors.size();
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f)
        for (size_t g = 0; g < m; ++g) comp[f * m + g] = c->compose(static_cast<int>(g), static_cast<int>(f));
    std::vector<int> identity;
    for (int x = 0; x < c->num_objects(); ++x) identity.push_back(c->identity(x));
    return std::make_shared<const FinCategory>(c->objects(), mors, identity, comp);
}

CatPtr product(const CatPtr& c, const CatPtr& d) {
    const int nc = c->num_objects(), nd = d->num_objects();
    const int mc = c->num_morphisms(), md = d->num_morphisms();
    std::vector<std::string> objects;
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nd; ++y) objects.push_back("(" + c->object_name(x) + "," + d->object_name(y) + ")");
    std::vector<Morphism> mors;
    for (int f = 0; f < mc; ++f)
        for (int g = 0; g < md; ++g)
            mors.push_back({"(" + c->morphism(f).id + "," + d->morphism(g).id + ")", c->dom(f) * nd + d->dom(g),
                            c->cod(f) * nd + d->cod(g)});
    const size_t m = mors.size();
    std::vector<int> comp(m * m, -1);
    for (int f = 0; f < mc; ++f)
        for (int g = 0; g < md; ++g)
            for (int f2 = 0; f2 < mc; ++f2)
                for (int g2 = 0; g2 < md; ++g2) {
                    int a = c->compose(f, f2), b = d->compose(g, g2);
                    if (a < 0 || b < 0) continue;
                    comp[static_cast<size_t>(f * md + g) * m + (f2 * md + g2)] = a * md + b;
                }
    std::vector<int> identity;
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nd; ++y) identity.push_back(c->identity(x) * md + d->identity(y));
    return std::make_shared<const FinCategory>(objects, mors, identity, comp);
}

Functor identity_functor(const CatPtr& c) {
    Functor f{c, c, {}, {}};
    f.obj.resize(c->num_objects());
    std::iota(f.obj.begin(), f.obj.end(), 0);
    f.mor.resize(c->num_morphisms());
    std::iota(f.mor.begin(), f.mor.end(), 0);
    return f;
}

Functor constant_functor(const CatPtr& source, const CatPtr& target, int object) {
    Functor f{source, target, std::vector<int>(source->num_objects(), object),
              std::vector<int>(source->num_morphisms(), target->identity(object))};
    return f;
}

Functor compose_functors(const Functor& first, const Functor& second) {
    Functor f{first.source, second.target, {}, {}};
    for (int x : first.obj) f.obj.push_back(second.obj[x]);
    for (int m : first.mor) f.mor.push_back(second.mor[m]);
    return f;
}

Report check_functor(const Functor& F) {
    Report r;
    const auto& s = *F.source;
    const auto& t = *F.target;
    bool typed = static_cast<int>(F.obj.size()) == s.num_objects() && static_cast<int>(F.mor.size()) == s.num_morphisms();
    r.add("shape", typed);
    if (!typed) return r;
    std::string bad;
    for (int m = 0; m < s.num_morphisms() && bad.empty(); ++m)
        if (t.dom(F.mor[m]) != F.obj[s.dom(m)] || t.cod(F.mor[m]) != F.obj[s.cod(m)]) bad = s.morphism(m).id;
    r.add("dom_cod", bad.empty(), bad);
    bad.clear();
    for (int x = 0; x < s.num_objects() && bad.empty(); ++x)
        if (F.mor[s.identity(x)] != t.identity(F.obj[x])) bad = s.object_name(x);
    r.add("identities", bad.empty(), bad);
    bad.clear();
    for (int f = 0; f < s.num_morphisms() && bad.empty(); ++f)
        for (int g = 0; g < s.num_morphisms() && bad.empty(); ++g) {
            int h = s.compose(f, g);
            if (h >= 0 && t.compose(F.mor[f], F.mor[g]) != F.mor[h]) bad = s.morphism(f).id + ";" + s.morphism(g).id;
        }
    r.add("composition", bad.empty(), bad);
    return r;
}

Report check_nat_transform(const NatTransform& nt) {
    Report r;
    const auto& s = *nt.from.source;
    const auto& t = *nt.from.target;
    bool typed = static_cast<int>(nt.component.size()) == s.num_objects();
    for (int x = 0; typed && x < s.num_objects(); ++x) {
        int c = nt.component[x];
        typed = c >= 0 && c < t.num_morphisms() && t.dom(c) == nt.from.obj[x] && t.cod(c) == nt.to.obj[x];
    }
    r.add("components", typed);
    if (!typed) return r;
    std::string bad;
    for (int f = 0; f < s.num_morphisms() && bad.empty(); ++f) {
        int lhs = t.compose(nt.from.mor[f], nt.component[s.cod(f)]);
        int rhs = t.compose(nt.component[s.dom(f)], nt.to.mor[f]);
        if (lhs != rhs) bad = "square at " + s.morphism(f).id;
    }
    r.add("naturality", bad.empty(), bad);
    return r;
}

CommaResult comma(const Functor& F, const Functor& G) {
    if (F.target.get() != G.target.get() && !(*F.target == *G.target))
        throw Error(ErrorKind::TypeMismatch, "comma of functors with different targets");
    const auto& C = *F.target;
    const auto& A = *F.source;
    const auto& B = *G.source;
    CommaResult res;
    std::vector<std::string> names;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < B.num_objects(); ++b)
            for (int phi : C.hom(F.obj[a], G.obj[b])) {
                res.objects.push_back({a, b, phi});
                names.push_back("(" + A.object_name(a) + "," + B.object_name(b) + "," + C.morphism(phi).id + ")");
            }
    const int n = static_cast<int>(res.objects.size());
    std::vector<Morphism> mors;
    struct Pair {
        int u, v;
    };
    std::vector<Pair> parts;
    std::vector<int> identity(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto &x = res.objects[i], &y = res.objects[j];
            for (int u : A.hom(x.a, y.a))
                for (int v : B.hom(x.b, y.b)) {
                    if (C.compose(x.arrow, G.mor[v]) != C.compose(F.mor[u], y.arrow)) continue;
                    bool is_id = i == j && u == A.identity(x.a) && v == B.identity(x.b);
                    if (is_id) identity[i] = static_cast<int>(mors.size());
                    std::string id = is_id ? identity_id(names[i])
                                           : "(" + A.morphism(u).id + "," + B.morphism(v).id + "):" + names[i] +
                                                 "->" + names[j];
                    mors.push_back({id, i, j});
                    parts.push_back({u, v});
                }
        }
    const size_t m = mors.size();
    std::map<std::tuple<int, int, int, int>, int> lookup;
    for (size_t k = 0; k < m; ++k) lookup[{mors[k].dom, mors[k].cod, parts[k].u, parts[k].v}] = static_cast<int>(k);
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f)
        for (size_t g = 0; g < m; ++g) {
            if (mors[f].cod != mors[g].dom) continue;
            int u = A.compose(parts[f].u, parts[g].u), v = B.compose(parts[f].v, parts[g].v);
            comp[f * m + g] = lookup.at({mors[f].dom, mors[g].cod, u, v});
        }
    res.category = std::make_shared<const FinCategory>(names, mors, identity, comp);
    res.dom_proj = {res.category, F.source, {}, {}};
    res.cod_proj = {res.category, G.source, {}, {}};
    for (const auto& o : res.objects) {
        res.dom_proj.obj.push_back(o.a);
        res.cod_proj.obj.push_back(o.b);
    }
    for (const auto& p : parts) {
        res.dom_proj.mor.push_back(p.u);
        res.cod_proj.mor.push_back(p.v);
    }
    return res;
}

TwistedResult twisted_arrow(const CatPtr& cp) {
    const auto& C = *cp;
    const int n = C.num_morphisms();
    std::vector<std::string> names;
    for (const auto& f : C.morphisms()) names.push_back(f.id);
    std::vector<Morphism> mors;
    struct Pair {
        int u, v;
    };
    std::vector<Pair> parts;
    std::vector<int> identity(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u : C.hom(C.dom(x), C.dom(y)))
                for (int v : C.hom(C.cod(y), C.cod(x))) {
                    if (C.compose(C.compose(u, y), v) != x) continue;
                    bool is_id = x == y && u == C.identity(C.dom(x)) && v == C.identity(C.cod(x));
                    if (is_id) identity[x] = static_cast<int>(mors.size());
                    std::string id = is_id ? identity_id(names[x])
                                           : "(" + C.morphism(u).id + "," + C.morphism(v).id + "):" + names[x] +
                                                 "->" + names[y];
                    mors.push_back({id, x, y});
                    parts.push_back({u, v});
                }
    const size_t m = mors.size();
    std::map<std::tuple<int, int, int, int>, int> lookup;
    for (size_t k = 0; k < m; ++k) lookup[{mors[k].dom, mors[k].cod, parts[k].u, parts[k].v}] = static_cast<int>(k);
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f)
        for (size_t g = 0; g < m; ++g) {
            if (mors[f].cod != mors[g].dom) continue;
            int u = C.compose(parts[f].u, parts[g].u), v = C.compose(parts[g].v, parts[f].v);
            comp[f * m + g] = lookup.at({mors[f].dom, mors[g].cod, u, v});
        }
    TwistedResult res;
    res.category = std::make_shared<const FinCategory>(names, mors, identity, comp);
    auto target = product(cp, opposite(cp));
    res.proj = {res.category, target, {}, {}};
    const int no = C.num_objects(), nm = C.num_morphisms();
    for (int x = 0; x < n; ++x) res.proj.obj.push_back(C.dom(x) * no + C.cod(x));
    for (const auto& p : parts) res.proj.mor.push_back(p.u * nm + p.v);
    return res;
}

std::vector<std::vector<int>> connected_components(const FinCategory& c) {
    std::vector<int> parent(c.num_objects());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : c.morphisms()) {
        int a = find(f.dom), b = find(f.cod);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> classes;
    for (int x = 0; x < c.num_objects(); ++x) classes[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

std::optional<Splitting> split_idempotent(const FinCategory& c, int e) {
    if (c.dom(e) != c.cod(e) || c.compose(e, e) != e)
        throw Error(ErrorKind::NotIdempotent, "morphism '" + c.morphism(e).id + "'");
    const int x = c.dom(e);
    for (int r = 0; r < c.num_objects(); ++r)
        for (int q : c.hom(x, r))
            for (int i : c.hom(r, x))
                if (c.compose(q, i) == e && c.compose(i, q) == c.identity(r)) return Splitting{r, q, i};
    return std::nullopt;
}

CatPtr terminal_category() {
    RawCategory raw;
    raw.objects = {"*"};
    return validate_category(raw);
}

CatPtr discrete_category(int n) {
    RawCategory raw;
    for (int i = 0; i < n; ++i) raw.objects.push_back("d" + std::to_string(i));
    return validate_category(raw);
}

CatPtr walking_arrow() {
    RawCategory raw;
    raw.objects = {"a", "b"};
    raw.morphisms = {{"f", "a", "b"}};
    return validate_category(raw);
}

CatPtr monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table,
                       int unit) {
    const size_t m = elements.size();
    std::vector<Morphism> mors;
    for (const auto& e : elements) mors.push_back({e, 0, 0});
    std::vector<int> comp(m * m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) comp[a * m + b] = table[a][b];
    return std::make_shared<const FinCategory>(std::vector<std::string>{"o"}, mors, std::vector<int>{unit}, comp);
}

CatPtr cyclic_group_category(int n) {
    std::vector<std::string> el;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        el.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return monoid_category(el, t, 0);
}

}  // namespace tightcat
