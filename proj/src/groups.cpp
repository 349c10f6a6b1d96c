#include "tightcat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tightcat/error.hpp"
#include "tightcat/isbell.hpp"

namespace tightcat {

bool FinMonoid::is_group() const {
    for (int a = 0; a < size(); ++a) {
        bool found = false;
        for (int b = 0; b < size() && !found; ++b) found = op(a, b) == unit && op(b, a) == unit;
        if (!found) return false;
    }
    return true;
}

int FinMonoid::inverse(int a) const {
    for (int b = 0; b < size(); ++b)
        if (op(a, b) == unit && op(b, a) == unit) return b;
    throw Error(ErrorKind::TypeMismatch, "'" + elements[a] + "' is not invertible");
}

FinMonoid validate_monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw Error(ErrorKind::UnitViolation, "empty monoid");
    if (static_cast<int>(table.size()) != n) throw Error(ErrorKind::MissingComposite, "table has wrong row count");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MissingComposite, "table has a short row");
        for (int v : row)
            if (v < 0 || v >= n) throw Error(ErrorKind::UnknownElement, "table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorKind::AssociativityViolation,
                                "(" + elements[a] + elements[b] + ")" + elements[c]);
    for (int u = 0; u < n; ++u) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[u][a] == a && table[a][u] == a;
        if (ok) return {elements, table, u};
    }
    throw Error(ErrorKind::UnitViolation, "no two-sided unit");
}

FinMonoid cyclic_group(int n) {
    std::vector<std::string> el;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        el.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return {el, t, 0};
}

FinMonoid symmetric_group3() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> el;
    for (const auto& q : perms) el.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    // a.b: apply a first, then b
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return {el, t, 0};
}

FinMonoid idempotent_monoid() { return {{"1", "e"}, {{0, 1}, {1, 1}}, 0}; }

CatPtr as_category(const FinMonoid& m) { return monoid_category(m.elements, m.table, m.unit); }

void check_gaction(const GAction& x) {
    const auto& m = x.monoid;
    if (static_cast<int>(x.act.size()) != m.size()) throw Error(ErrorKind::FiberMismatch, "one row per element");
    for (const auto& row : x.act) {
        if (static_cast<int>(row.size()) != x.size) throw Error(ErrorKind::FiberMismatch, "row size differs");
        for (int v : row)
            if (v < 0 || v >= x.size) throw Error(ErrorKind::UnknownElement, "action value out of range");
    }
    for (int p = 0; p < x.size; ++p)
        if (x.act[m.unit][p] != p) throw Error(ErrorKind::UnitViolation, "unit moves " + std::to_string(p));
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            for (int p = 0; p < x.size; ++p) {
                int lhs = x.act[m.op(a, b)][p];
                int rhs = x.side == Variance::Left ? x.act[a][x.act[b][p]] : x.act[b][x.act[a][p]];
                if (lhs != rhs)
                    throw Error(ErrorKind::FunctorialityViolation,
                                m.elements[a] + "." + m.elements[b] + " at " + std::to_string(p));
            }
}

GAction regular_action(const FinMonoid& m, Variance side) { return free_action(m, 1, side); }

GAction free_action(const FinMonoid& m, int orbits, Variance side) {
    const int g = m.size();
    GAction x{m, side, g * orbits, std::vector<std::vector<int>>(g, std::vector<int>(g * orbits))};
    for (int a = 0; a < g; ++a)
        for (int o = 0; o < orbits; ++o)
            for (int b = 0; b < g; ++b)
                x.act[a][o * g + b] = o * g + (side == Variance::Left ? m.op(a, b) : m.op(b, a));
    return x;
}

GAction trivial_action(const FinMonoid& m, int points, Variance side) {
    GAction x{m, side, points, {}};
    std::vector<int> row(points);
    std::iota(row.begin(), row.end(), 0);
    x.act.assign(m.size(), row);
    return x;
}

GAction disjoint_union(const GAction& x, const GAction& y) {
    GAction u{x.monoid, x.side, x.size + y.size, x.act};
    for (int a = 0; a < x.monoid.size(); ++a)
        for (int v : y.act[a]) u.act[a].push_back(v + x.size);
    return u;
}

Action to_action(const GAction& x, const CatPtr& base) {
    Action a;
    a.base = base;
    a.variance = x.side;
    a.names.assign(1, {});
    for (int p = 0; p < x.size; ++p) a.names[0].push_back(std::to_string(p));
    a.trans = x.act;
    check_action_laws(a);
    return a;
}

Action to_action(const GAction& x) { return to_action(x, as_category(x.monoid)); }

GAction from_action(const Action& a, const FinMonoid& m) {
    if (a.num_objects() != 1 || a.base->num_morphisms() != m.size())
        throw Error(ErrorKind::TypeMismatch, "action is not over this monoid");
    GAction x{m, a.variance, a.fiber_size(0), a.trans};
    check_gaction(x);
    return x;
}

std::vector<std::vector<int>> orbits(const GAction& x) {
    std::vector<int> parent(x.size);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& row : x.act)
        for (int p = 0; p < x.size; ++p) {
            int r1 = find(p), r2 = find(row[p]);
            if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
        }
    std::map<int, std::vector<int>> classes;
    for (int p = 0; p < x.size; ++p) classes[find(p)].push_back(p);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

namespace {

std::optional<FreeDecomposition> try_decompose(const GAction& x) {
    const auto& m = x.monoid;
    std::vector<char> covered(x.size, 0);
    std::vector<char> invertible(m.size(), 0);
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.op(a, b) == m.unit && m.op(b, a) == m.unit) invertible[a] = 1;
    for (int a = 0; a < m.size(); ++a)
        if (!invertible[a])
            for (int p = 0; p < x.size; ++p) covered[x.act[a][p]] = 1;
    FreeDecomposition d;
    std::vector<char> taken(x.size, 0);
    for (int p = 0; p < x.size; ++p) {
        if (covered[p] || taken[p]) continue;
        d.roots.push_back(p);
        for (int a = 0; a < m.size(); ++a)
            if (invertible[a]) taken[x.act[a][p]] = 1;
    }
    d.element_of.assign(m.size(), std::vector<int>(d.roots.size()));
    std::vector<char> hit(x.size, 0);
    for (int a = 0; a < m.size(); ++a)
        for (size_t r = 0; r < d.roots.size(); ++r) {
            int p = x.act[a][d.roots[r]];
            if (hit[p]) return std::nullopt;
            hit[p] = 1;
            d.element_of[a][r] = p;
        }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return std::nullopt;
    return d;
}

}  // namespace

Freeness is_free(const GAction& x) {
    const auto& m = x.monoid;
    for (int a = 0; a < m.size(); ++a) {
        if (a == m.unit) continue;
        for (int p = 0; p < x.size; ++p)
            if (x.act[a][p] == p) return {false, a, m.unit, p};
    }
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < a; ++b)
            for (int p = 0; p < x.size; ++p)
                if (x.act[a][p] == x.act[b][p]) return {false, a, b, p};
    if (!try_decompose(x)) return {false, -1, -1, -1};
    return {};
}

FreeDecomposition decompose(const GAction& x) {
    if (!is_free(x).free) throw Error(ErrorKind::NotFree, "action is not free");
    return *try_decompose(x);
}

namespace {

long long checked_power(long long base, long long exp, const Options& opt) {
    long long v = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && v > static_cast<long long>(opt.cap) / base)
            throw Error(ErrorKind::SizeLimit, "tuple space exceeds the cap");
        v *= base;
    }
    return v;
}

}  // namespace

std::vector<int> decode_tuple(const FinMonoid& m, int n, long long index) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(index % m.size());
        index /= m.size();
    }
    return t;
}

long long encode_tuple(const FinMonoid& m, const std::vector<int>& t) {
    long long v = 0;
    for (int c : t) v = v * m.size() + c;
    return v;
}

std::vector<int> scale(const FinMonoid& m, const std::vector<int>& v, int a, Variance side) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = side == Variance::Right ? m.op(v[i], a) : m.op(a, v[i]);
    return out;
}

namespace {

// Pointwise action on M^n: right v.a, or left a.v.
GAction tuple_action(const FinMonoid& m, int n, Variance side, const Options& opt) {
    const long long total = checked_power(m.size(), n, opt);
    GAction x{m, side, static_cast<int>(total), std::vector<std::vector<int>>(m.size())};
    for (int a = 0; a < m.size(); ++a)
        for (long long i = 0; i < total; ++i)
            x.act[a].push_back(static_cast<int>(encode_tuple(m, scale(m, decode_tuple(m, n, i), a, side))));
    return x;
}

GAction empty_gaction(const FinMonoid& m, Variance side) {
    return {m, side, 0, std::vector<std::vector<int>>(m.size())};
}

}  // namespace

GAction group_lan(const GAction& x) {
    if (x.side != Variance::Left) throw Error(ErrorKind::TypeMismatch, "group_lan takes a left action");
    if (!is_free(x).free) return empty_gaction(x.monoid, Variance::Right);
    return tuple_action(x.monoid, static_cast<int>(decompose(x).roots.size()), Variance::Right, {});
}

GAction group_ran(const GAction& y) {
    if (y.side != Variance::Right) throw Error(ErrorKind::TypeMismatch, "group_ran takes a right action");
    if (!is_free(y).free) return empty_gaction(y.monoid, Variance::Left);
    return tuple_action(y.monoid, static_cast<int>(decompose(y).roots.size()), Variance::Left, {});
}

EqMap group_lan_comparison(const GAction& x, const Options& opt) {
    ConeSpace generic = lan(to_action(x), opt);
    EqMap m;
    m.comp.assign(1, {});
    if (generic.comps[0].empty()) return m;
    FreeDecomposition d = decompose(x);
    for (const auto& delta : generic.comps[0]) {
        std::vector<int> t;
        for (int r : d.roots) t.push_back(delta[r]);
        m.comp[0].push_back(static_cast<int>(encode_tuple(x.monoid, t)));
    }
    return m;
}

bool group_lan_agrees(const GAction& x, const Options& opt) {
    ConeSpace generic = lan(to_action(x), opt);
    Action closed = to_action(group_lan(x), generic.action.base);
    if (generic.action.total() != closed.total()) return false;
    if (closed.total() == 0) return true;
    EqMap m = group_lan_comparison(x, opt);
    return is_equivariant(generic.action, closed, m) && is_bijective(m, closed);
}

std::vector<int> normalize_ray(const FinMonoid& g, const std::vector<int>& v, Variance side) {
    if (v.empty()) return v;
    return scale(g, v, g.inverse(v[0]), side);
}

namespace {

std::vector<Ray> rays(const FinMonoid& m, int n, Variance side, const Options& opt) {
    const long long total = checked_power(m.size(), n, opt);
    std::vector<Ray> out;
    if (m.is_group()) {
        std::vector<int> t(n, m.unit);
        // tuples with unit first coordinate, in lexicographic order of the rest
        const long long count = n == 0 ? 1 : total / m.size();
        for (long long i = 0; i < count; ++i) {
            if (n > 0) {
                std::vector<int> rest = decode_tuple(m, n - 1, i);
                std::copy(rest.begin(), rest.end(), t.begin() + 1);
            }
            out.push_back({t, {}});
        }
        return out;
    }
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (long long i = 0; i < total; ++i) {
        std::vector<int> v = decode_tuple(m, n, i);
        for (int a = 0; a < m.size(); ++a) {
            int r1 = find(static_cast<int>(i)), r2 = find(static_cast<int>(encode_tuple(m, scale(m, v, a, side))));
            if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
        }
    }
    std::map<int, size_t> slot;
    for (long long i = 0; i < total; ++i) {
        int r = find(static_cast<int>(i));
        auto [it, fresh] = slot.emplace(r, out.size());
        if (fresh) out.push_back({decode_tuple(m, n, r), {}});
        out[it->second].members.push_back(decode_tuple(m, n, i));
    }
    return out;
}

}  // namespace

std::vector<Ray> projective_rays(const FinMonoid& m, int n, const Options& opt) {
    return rays(m, n, Variance::Right, opt);
}

std::vector<Ray> projective_rays_left(const FinMonoid& m, int n, const Options& opt) {
    return rays(m, n, Variance::Left, opt);
}

std::vector<Ray> projective_rays(const GAction& x, const Options& opt) {
    return projective_rays(x.monoid, static_cast<int>(decompose(x).roots.size()), opt);
}

int find_ray(const FinMonoid& m, const std::vector<Ray>& rs, const std::vector<int>& v, Variance side) {
    if (m.is_group()) {
        Ray key{normalize_ray(m, v, side), {}};
        auto it = std::lower_bound(rs.begin(), rs.end(), key);
        if (it == rs.end() || !(*it == key)) return -1;
        return static_cast<int>(it - rs.begin());
    }
    for (size_t i = 0; i < rs.size(); ++i)
        if (std::find(rs[i].members.begin(), rs[i].members.end(), v) != rs[i].members.end())
            return static_cast<int>(i);
    return -1;
}

KleisliMorphism kleisli_identity(const FinMonoid& m, int n) {
    KleisliMorphism k{n, n, std::vector<int>(n), std::vector<int>(n, m.unit)};
    std::iota(k.map.begin(), k.map.end(), 0);
    return k;
}

KleisliMorphism kleisli_compose(const FinMonoid& m, const KleisliMorphism& m1, const KleisliMorphism& m2) {
    if (m1.cod != m2.dom) throw Error(ErrorKind::TypeMismatch, "Kleisli morphisms do not compose");
    KleisliMorphism k{m1.dom, m2.cod, std::vector<int>(m1.dom), std::vector<int>(m1.dom)};
    for (int x = 0; x < m1.dom; ++x) {
        int y = m1.map[x];
        k.map[x] = m2.map[y];
        k.weight[x] = m.op(m1.weight[x], m2.weight[y]);
    }
    return k;
}

KleisliMorphism kleisli_compose_right(const FinMonoid& m, const KleisliMorphism& m1, const KleisliMorphism& m2) {
    if (m1.cod != m2.dom) throw Error(ErrorKind::TypeMismatch, "Kleisli morphisms do not compose");
    KleisliMorphism k{m1.dom, m2.cod, std::vector<int>(m1.dom), std::vector<int>(m1.dom)};
    for (int x = 0; x < m1.dom; ++x) {
        int y = m1.map[x];
        k.map[x] = m2.map[y];
        k.weight[x] = m.op(m2.weight[y], m1.weight[x]);
    }
    return k;
}

KleisliMorphism random_kleisli(const FinMonoid& m, int dom, int cod, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_b(0, std::max(cod - 1, 0)), pick_g(0, m.size() - 1);
    if (cod == 0 && dom > 0) throw Error(ErrorKind::TypeMismatch, "no maps into the empty set");
    KleisliMorphism k{dom, cod, {}, {}};
    for (int x = 0; x < dom; ++x) {
        k.map.push_back(pick_b(rng));
        k.weight.push_back(pick_g(rng));
    }
    return k;
}

namespace {

KleisliMorphism star(const FinMonoid& g, const KleisliMorphism& m, Variance side, const Options& opt) {
    auto src = rays(g, m.cod, side, opt);
    auto dst = rays(g, m.dom, side, opt);
    KleisliMorphism k{static_cast<int>(src.size()), static_cast<int>(dst.size()), {},
                      std::vector<int>(src.size(), g.unit)};
    auto apply = [&](const std::vector<int>& v) {
        std::vector<int> w(m.dom);
        for (int x = 0; x < m.dom; ++x)
            w[x] = side == Variance::Right ? g.op(m.weight[x], v[m.map[x]]) : g.op(v[m.map[x]], m.weight[x]);
        return find_ray(g, dst, w, side);
    };
    for (const auto& r : src) {
        int target = apply(r.coords);
        // the value may not depend on the chosen representative
        if (g.is_group()) {
            for (int a = 0; a < g.size(); ++a)
                if (apply(scale(g, r.coords, a, side)) != target)
                    throw Error(ErrorKind::TypeMismatch, "not invariant under scalar multiplication");
        } else {
            for (const auto& v : r.members)
                if (apply(v) != target) throw Error(ErrorKind::TypeMismatch, "not invariant under scalar multiplication");
        }
        k.map.push_back(target);
    }
    return k;
}

}  // namespace

KleisliMorphism kleisli_lan(const FinMonoid& g, const KleisliMorphism& m, const Options& opt) {
    return star(g, m, Variance::Right, opt);
}

KleisliMorphism kleisli_ran(const FinMonoid& g, const KleisliMorphism& m, const Options& opt) {
    return star(g, m, Variance::Left, opt);
}

KleisliMorphism kleisli_monad(const FinMonoid& g, const KleisliMorphism& m, const Options& opt) {
    return kleisli_lan(g, kleisli_lan(g, m, opt), opt);
}

std::vector<std::vector<int>> monoid_lan_tuples(const GAction& x, const Options& opt) {
    if (x.side != Variance::Left) throw Error(ErrorKind::TypeMismatch, "monoid_lan takes a left action");
    const auto& m = x.monoid;
    // constraints h(a*y) = a.h(y), checked once both ends are assigned
    std::vector<std::vector<std::pair<int, int>>> at(x.size);
    for (int a = 0; a < m.size(); ++a)
        for (int y = 0; y < x.size; ++y) at[std::max(y, x.act[a][y])].push_back({a, y});
    std::vector<std::vector<int>> out;
    std::vector<int> h(x.size);
    std::size_t nodes = 0;
    auto rec = [&](auto&& self, int p) -> void {
        if (p == x.size) {
            out.push_back(h);
            return;
        }
        for (int v = 0; v < m.size(); ++v) {
            if (++nodes > opt.cap) throw Error(ErrorKind::SizeLimit, "monoid_lan search exceeds the cap");
            h[p] = v;
            bool ok = true;
            for (auto [a, y] : at[p])
                if (h[x.act[a][y]] != m.op(a, h[y])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

GAction monoid_lan(const GAction& x, const Options& opt) {
    auto tuples = monoid_lan_tuples(x, opt);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
    const auto& m = x.monoid;
    GAction y{m, Variance::Right, static_cast<int>(tuples.size()), std::vector<std::vector<int>>(m.size())};
    for (int b = 0; b < m.size(); ++b)
        for (const auto& t : tuples) y.act[b].push_back(index.at(scale(m, t, b, Variance::Right)));
    return y;
}

GAction inverse_twist(const GAction& x) {
    const auto& m = x.monoid;
    GAction y{m, x.side == Variance::Left ? Variance::Right : Variance::Left, x.size, x.act};
    for (int a = 0; a < m.size(); ++a) y.act[a] = x.act[m.inverse(a)];
    return y;
}

std::vector<GAction> cyclic_actions(int n, int max_size) {
    FinMonoid g = cyclic_group(n);
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<GAction> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, size_t from, int used) -> void {
        GAction x = trivial_action(g, 0, Variance::Left);
        for (int d : parts) {
            GAction orbit{g, Variance::Left, d, std::vector<std::vector<int>>(n, std::vector<int>(d))};
            for (int a = 0; a < n; ++a)
                for (int i = 0; i < d; ++i) orbit.act[a][i] = (i + a) % d;
            x = disjoint_union(x, orbit);
        }
        out.push_back(x);
        for (size_t k = from; k < divisors.size(); ++k)
            if (used + divisors[k] <= max_size) {
                parts.push_back(divisors[k]);
                self(self, k, used + divisors[k]);
                parts.pop_back();
            }
    };
    rec(rec, 0, 0);
    return out;
}

Z4Demo z4_demo(const Options& opt) {
    Z4Demo demo;
    const FinMonoid g = cyclic_group(4);
    const CatPtr base = as_category(g);
    auto pow4 = [](int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= 4;
        return v;
    };

    bool free_sizes = true, monad_sizes = true;
    for (int n = 1; n <= 3; ++n) {
        GAction x = free_action(g, n, Variance::Left);
        ConeSpace generic = lan(to_action(x, base), opt);
        GAction closed = group_lan(x);
        Z4Row row{n, generic.action.total(), static_cast<long long>(orbits(from_action(generic.action, g)).size()),
                  std::nullopt};
        free_sizes = free_sizes && row.lan_size == pow4(n) && row.lan_orbits == pow4(n - 1) &&
                     closed.size == row.lan_size && group_lan_agrees(x, opt);
        if (n <= 2) {
            row.monad_size = monad_square(to_action(x, base), opt).total();
            monad_sizes = monad_sizes && *row.monad_size == pow4(static_cast<int>(pow4(n - 1)));
        }
        demo.table.push_back(row);
    }
    demo.report.add("lan_of_free", free_sizes, "4^n cocones in 4^(n-1) orbits");
    demo.report.add("monad_of_free", monad_sizes, "4^(4^(n-1)) elements");

    bool kills = true, terminal = true, twist = true;
    std::string kill_detail;
    auto actions = cyclic_actions(4, 6);
    for (const auto& x : actions) {
        Action a = to_action(x, base);
        if (x.size > 0 && !is_free(x).free) {
            if (lan(a, opt).action.total() != 0) {
                kills = false;
                kill_detail = "non-free action with " + std::to_string(x.size) + " elements has cocones";
            }
            if (monad_square(a, opt).total() != 1) terminal = false;
        }
        GAction y = inverse_twist(x);
        check_gaction(y);
        twist = twist && inverse_twist(y).act == x.act;
        for (const auto& z : actions) {
            if (count_equivariant_maps(a, to_action(z, base), opt) !=
                count_equivariant_maps(to_action(y, base), to_action(inverse_twist(z), base), opt))
                twist = false;
        }
    }
    demo.report.add("lan_kills_non_free", kills, kill_detail);
    demo.report.add("monad_of_non_free_is_terminal", terminal);
    demo.report.add("inverse_twist_equivalence", twist, std::to_string(actions.size()) + " actions");

    // free algebras on a coproduct are not coproducts of free algebras
    GAction regular = regular_action(g, Variance::Left);
    long long single = monad_square(to_action(regular, base), opt).total();
    demo.coproduct_monad = monad_square(to_action(disjoint_union(regular, regular), base), opt).total();
    demo.sum_of_monads = 2 * single;
    demo.product_of_monads = single * single;
    demo.report.add("coproduct_asymmetry",
                    demo.coproduct_monad != demo.sum_of_monads && demo.coproduct_monad != demo.product_of_monads,
                    std::to_string(demo.coproduct_monad) + " vs " + std::to_string(demo.sum_of_monads) + " and " +
                        std::to_string(demo.product_of_monads));
    return demo;
}

}  // namespace tightcat
