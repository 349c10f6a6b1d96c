#include "tightcat/poset.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <set>

#include "tightcat/error.hpp"

namespace tightcat {

FinPoset::FinPoset(std::vector<std::string> elements, std::vector<std::vector<char>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
    const size_t n = elements_.size();
    if (std::set<std::string>(elements_.begin(), elements_.end()).size() != n)
        throw Error(ErrorKind::DuplicateId, "poset element listed twice");
    if (leq_.size() != n) throw Error(ErrorKind::TypeMismatch, "order table has the wrong size");
    for (size_t i = 0; i < n; ++i) {
        if (leq_[i].size() != n) throw Error(ErrorKind::TypeMismatch, "order table has the wrong size");
        if (!leq_[i][i]) throw Error(ErrorKind::TypeMismatch, "order is not reflexive at " + elements_[i]);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw Error(ErrorKind::TypeMismatch, "order is not antisymmetric at " + elements_[i] + ", " + elements_[j]);
            for (size_t k = 0; k < n; ++k)
                if (leq_[i][j] && leq_[j][k] && !leq_[i][k])
                    throw Error(ErrorKind::TypeMismatch, "order is not transitive at " + elements_[i] + ", " +
                                                             elements_[j] + ", " + elements_[k]);
        }
}

int FinPoset::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[i] == name) return i;
    throw Error(ErrorKind::UnknownElement, "'" + name + "'");
}

Subset FinPoset::subset(const std::vector<std::string>& names) const {
    Subset s = empty_set();
    for (const auto& n : names) s.set(index(n));
    return s;
}

FinPoset make_poset(const std::vector<std::string>& elements,
                    const std::vector<std::pair<std::string, std::string>>& leq) {
    const size_t n = elements.size();
    std::vector<std::vector<char>> t(n, std::vector<char>(n, 0));
    auto find = [&](const std::string& s) {
        auto it = std::find(elements.begin(), elements.end(), s);
        if (it == elements.end()) throw Error(ErrorKind::UnknownElement, "'" + s + "'");
        return static_cast<size_t>(it - elements.begin());
    };
    for (size_t i = 0; i < n; ++i) t[i][i] = 1;
    for (const auto& [a, b] : leq) t[find(a)][find(b)] = 1;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (t[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (t[k][j]) t[i][j] = 1;
    return FinPoset(elements, t);
}

FinPoset chain_poset(int n) {
    std::vector<std::string> e;
    std::vector<std::vector<char>> t(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        e.push_back("c" + std::to_string(i));
        for (int j = i; j < n; ++j) t[i][j] = 1;
    }
    return FinPoset(e, t);
}

FinPoset antichain_poset(int n) {
    std::vector<std::string> e;
    std::vector<std::vector<char>> t(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        e.push_back("a" + std::to_string(i));
        t[i][i] = 1;
    }
    return FinPoset(e, t);
}

FinPoset powerset_lattice(int n) {
    const int m = 1 << n;
    std::vector<std::string> e;
    std::vector<std::vector<char>> t(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a) {
        std::string s = "{";
        for (int i = 0; i < n; ++i)
            if (a >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i);
        e.push_back(s + "}");
        for (int b = 0; b < m; ++b) t[a][b] = (a & b) == a;
    }
    return FinPoset(e, t);
}

FinPoset opposite(const FinPoset& p) {
    std::vector<std::vector<char>> t(p.size(), std::vector<char>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) t[i][j] = p.leq(j, i);
    return FinPoset(p.elements(), t);
}

Subset principal_down(const FinPoset& p, int x) {
    Subset s = p.empty_set();
    for (int i = 0; i < p.size(); ++i)
        if (p.leq(i, x)) s.set(i);
    return s;
}

Subset principal_up(const FinPoset& p, int x) {
    Subset s = p.empty_set();
    for (int i = 0; i < p.size(); ++i)
        if (p.leq(x, i)) s.set(i);
    return s;
}

Subset lower_closure(const FinPoset& p, const Subset& s) {
    Subset r = p.empty_set();
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) r |= principal_down(p, static_cast<int>(i));
    return r;
}

Subset upper_closure(const FinPoset& p, const Subset& s) {
    Subset r = p.empty_set();
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) r |= principal_up(p, static_cast<int>(i));
    return r;
}

Subset upper_bounds(const FinPoset& p, const Subset& s) {
    Subset r = p.full_set();
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) r &= principal_up(p, static_cast<int>(i));
    return r;
}

Subset lower_bounds(const FinPoset& p, const Subset& s) {
    Subset r = p.full_set();
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) r &= principal_down(p, static_cast<int>(i));
    return r;
}

bool cut_before(const PosetCut& a, const PosetCut& b) {
    auto ca = a.lower.count(), cb = b.lower.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < a.lower.size(); ++i)
        if (a.lower[i] != b.lower[i]) return a.lower[i];
    return false;
}

std::string describe(const FinPoset& p, const Subset& s) {
    std::string out = "{";
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
        if (out.size() > 1) out += ",";
        out += p.name(static_cast<int>(i));
    }
    return out + "}";
}

FinPoset cut_poset(const FinPoset& p, const std::vector<PosetCut>& cuts) {
    const size_t m = cuts.size();
    std::vector<std::string> names;
    std::vector<std::vector<char>> t(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        names.push_back(describe(p, cuts[i].lower));
        for (size_t j = 0; j < m; ++j) t[i][j] = cuts[i].lower.is_subset_of(cuts[j].lower);
    }
    return FinPoset(names, t);
}

DMCompletion dm_completion(const FinPoset& p) {
    // Closed down-sets are exactly the intersections of principal ideals.
    std::set<Subset> closed{p.full_set()};
    std::vector<Subset> frontier{p.full_set()};
    while (!frontier.empty()) {
        std::vector<Subset> next;
        for (const auto& s : frontier)
            for (int x = 0; x < p.size(); ++x) {
                Subset t = s & principal_down(p, x);
                if (closed.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    std::vector<PosetCut> cuts;
    for (const auto& l : closed) cuts.push_back({l, upper_bounds(p, l)});
    std::sort(cuts.begin(), cuts.end(), cut_before);
    std::vector<int> embed(p.size(), -1);
    for (int x = 0; x < p.size(); ++x) {
        Subset down = principal_down(p, x);
        for (size_t i = 0; i < cuts.size(); ++i)
            if (cuts[i].lower == down) embed[x] = static_cast<int>(i);
    }
    FinPoset lattice = cut_poset(p, cuts);
    return {std::move(cuts), std::move(embed), std::move(lattice)};
}

PosetCut cut_join(const FinPoset& p, const std::vector<PosetCut>& cuts) {
    Subset upper = p.full_set();
    for (const auto& c : cuts) upper &= c.upper;
    return {lower_bounds(p, upper), upper};
}

PosetCut cut_meet(const FinPoset& p, const std::vector<PosetCut>& cuts) {
    Subset lower = p.full_set();
    for (const auto& c : cuts) lower &= c.lower;
    return {lower, upper_bounds(p, lower)};
}

namespace {

Subset from_mask(std::uint64_t mask, int n) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.set(i);
    return s;
}

void check_oracle_size(const FinPoset& p, const Options& opt) {
    if (p.size() >= 63 || (std::uint64_t{1} << p.size()) > opt.cap)
        throw Error(ErrorKind::SizeLimit, "powerset of " + std::to_string(p.size()) + " elements exceeds the cap");
}

std::optional<PosetCut> oracle_candidate(const FinPoset& p, std::uint64_t mask) {
    Subset l = from_mask(mask, p.size());
    Subset u = upper_bounds(p, l);
    if (lower_bounds(p, u) != l) return std::nullopt;
    return PosetCut{l, u};
}

}  // namespace

std::vector<PosetCut> oracle_dm_serial(const FinPoset& p, const Options& opt) {
    check_oracle_size(p, opt);
    std::vector<PosetCut> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m)
        if (auto c = oracle_candidate(p, m)) out.push_back(*c);
    std::sort(out.begin(), out.end(), cut_before);
    return out;
}

std::vector<PosetCut> oracle_dm(const FinPoset& p, const Options& opt) {
    if (!opt.parallel) return oracle_dm_serial(p, opt);
    check_oracle_size(p, opt);
    const std::int64_t total = std::int64_t{1} << p.size();
    std::vector<std::optional<PosetCut>> slots(total);
#pragma omp parallel for schedule(static) if (total >= 256)
    for (std::int64_t m = 0; m < total; ++m) slots[m] = oracle_candidate(p, static_cast<std::uint64_t>(m));
    std::vector<PosetCut> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    std::sort(out.begin(), out.end(), cut_before);
    return out;
}

std::optional<int> join(const FinPoset& p, int x, int y) {
    for (int z = 0; z < p.size(); ++z) {
        if (!p.leq(x, z) || !p.leq(y, z)) continue;
        bool least = true;
        for (int w = 0; w < p.size() && least; ++w)
            if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
        if (least) return z;
    }
    return std::nullopt;
}

std::optional<int> meet(const FinPoset& p, int x, int y) {
    for (int z = 0; z < p.size(); ++z) {
        if (!p.leq(z, x) || !p.leq(z, y)) continue;
        bool greatest = true;
        for (int w = 0; w < p.size() && greatest; ++w)
            if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
        if (greatest) return z;
    }
    return std::nullopt;
}

bool is_complete_lattice(const FinPoset& p) {
    if (p.size() == 0) return false;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (!join(p, x, y) || !meet(p, x, y)) return false;
    // a top and a bottom exist: the empty join and meet
    bool has_bottom = false, has_top = false;
    for (int x = 0; x < p.size(); ++x) {
        has_bottom = has_bottom || principal_up(p, x).all();
        has_top = has_top || principal_down(p, x).all();
    }
    return has_bottom && has_top;
}

std::optional<std::vector<int>> order_isomorphism(const FinPoset& p, const FinPoset& q) {
    const int n = p.size();
    if (q.size() != n) return std::nullopt;
    auto profile = [](const FinPoset& r, int x) {
        return std::pair{principal_down(r, x).count(), principal_up(r, x).count()};
    };
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || profile(p, x) != profile(q, y)) continue;
            bool ok = true;
            for (int z = 0; z < x && ok; ++z)
                ok = p.leq(z, x) == q.leq(image[z], y) && p.leq(x, z) == q.leq(y, image[z]);
            if (!ok) continue;
            image[x] = y;
            used[y] = 1;
            if (self(self, x + 1)) return true;
            used[y] = 0;
        }
        image[x] = -1;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return image;
}

CatPtr thin_category(const FinPoset& p) {
    const int n = p.size();
    std::vector<Morphism> mors;
    std::vector<int> identity(n, -1);
    std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(x, y)) {
                arrow[x][y] = static_cast<int>(mors.size());
                if (x == y) identity[x] = arrow[x][y];
                mors.push_back({x == y ? identity_id(p.name(x)) : p.name(x) + "<=" + p.name(y), x, y});
            }
    const size_t m = mors.size();
    std::vector<int> comp(m * m, -1);
    for (size_t f = 0; f < m; ++f)
        for (size_t g = 0; g < m; ++g)
            if (mors[f].cod == mors[g].dom) comp[f * m + g] = arrow[mors[f].dom][mors[g].cod];
    return std::make_shared<const FinCategory>(p.elements(), mors, identity, comp);
}

namespace {

// Canonical code of a relation on n points: the least adjacency bit string
// over all relabelings.
std::uint32_t canonical_code(const std::vector<std::vector<char>>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) code = code << 1 | static_cast<std::uint32_t>(t[perm[i]][perm[j]] != 0);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::string> point_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

}  // namespace

std::vector<FinPoset> all_posets_up_to_iso(int max_n) {
    std::vector<FinPoset> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> off;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) off.push_back({i, j});
        std::set<std::uint32_t> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
            std::vector<std::vector<char>> t(n, std::vector<char>(n, 0));
            for (int i = 0; i < n; ++i) t[i][i] = 1;
            for (size_t b = 0; b < off.size(); ++b)
                if (mask >> b & 1) t[off[b].first][off[b].second] = 1;
            bool order = true;
            for (int i = 0; i < n && order; ++i)
                for (int j = 0; j < n && order; ++j) {
                    if (i != j && t[i][j] && t[j][i]) order = false;
                    for (int k = 0; k < n && order; ++k)
                        if (t[i][j] && t[j][k] && !t[i][k]) order = false;
                }
            if (!order || !seen.insert(canonical_code(t)).second) continue;
            out.emplace_back(point_names(n), t);
        }
    }
    return out;
}

FinPoset random_poset(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution edge(density);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::string, std::string>> pairs;
    auto names = point_names(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) pairs.push_back({names[perm[i]], names[perm[j]]});
    return make_poset(names, pairs);
}

std::vector<FinPoset> poset_corpus(std::uint32_t seed, int random_count, int max_random_n) {
    std::vector<FinPoset> out = all_posets_up_to_iso(4);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(1, max_random_n);
    std::uniform_real_distribution<double> density(0.1, 0.6);
    for (int i = 0; i < random_count; ++i) {
        int n = size(rng);
        out.push_back(random_poset(n, density(rng), rng));
    }
    return out;
}

}  // namespace tightcat
