#include "tightcat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "tightcat/corpus.hpp"
#include "tightcat/error.hpp"
#include "tightcat/factorization.hpp"
#include "tightcat/groups.hpp"
#include "tightcat/poset.hpp"
#include "tightcat/tight.hpp"

namespace tightcat {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    // Records the first failure only.
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::vector<std::string> sorted_lowers(const FinPoset& p, std::vector<PosetCut> cuts) {
    std::vector<std::string> out;
    for (const auto& c : cuts) out.push_back(describe(p, c.lower));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome dm_oracle(const AcceptanceConfig& cfg) {
    Outcome o;
    auto corpus = poset_corpus(cfg.seed);
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& p = corpus[i];
        DMCompletion dm = dm_completion(p);
        auto oracle = oracle_dm(p, cfg.opt);
        if (sorted_lowers(p, dm.cuts) != sorted_lowers(p, oracle))
            o.fail("cut sets differ on poset " + std::to_string(i));
        else if (!order_isomorphism(dm.lattice, cut_poset(p, oracle)))
            o.fail("orders differ on poset " + std::to_string(i));
    }
    if (o.pass) o.detail = std::to_string(corpus.size()) + " posets";
    return o;
}

Outcome dm_idempotence(const AcceptanceConfig& cfg) {
    Outcome o;
    auto corpus = poset_corpus(cfg.seed);
    for (size_t i = 0; i < corpus.size(); ++i) {
        DMCompletion once = dm_completion(corpus[i]);
        DMCompletion twice = dm_completion(once.lattice);
        if (!order_isomorphism(twice.lattice, once.lattice)) o.fail("poset " + std::to_string(i));
    }
    if (o.pass) o.detail = std::to_string(corpus.size()) + " posets";
    return o;
}

Outcome dm_tightness(const AcceptanceConfig& cfg) {
    Outcome o;
    auto corpus = poset_corpus(cfg.seed);
    long long checked = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& p = corpus[i];
        DMCompletion dm = dm_completion(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                std::vector<PosetCut> pair{dm.cuts[dm.embed[x]], dm.cuts[dm.embed[y]]};
                if (auto z = join(p, x, y)) {
                    ++checked;
                    if (!(cut_join(p, pair) == dm.cuts[dm.embed[*z]])) o.fail("join in poset " + std::to_string(i));
                }
                if (auto z = meet(p, x, y)) {
                    ++checked;
                    if (!(cut_meet(p, pair) == dm.cuts[dm.embed[*z]])) o.fail("meet in poset " + std::to_string(i));
                }
            }
    }
    if (o.pass) o.detail = std::to_string(checked) + " joins and meets";
    return o;
}

Outcome isbell_adjunction(const AcceptanceConfig& cfg) {
    Outcome o;
    long long pairs = 0;
    for (const auto& nc : category_corpus()) {
        auto lefts = enumerate_left_actions(nc.category, 3, cfg.opt);
        auto rights = enumerate_right_actions(nc.category, 3, cfg.opt);
        std::vector<ConeSpace> lans, rans;
        for (const auto& a : lefts) {
            lans.push_back(lan(a, cfg.opt));
            if (!check_triangles_left(a, cfg.opt).pass()) o.fail(nc.name + ": left triangle");
        }
        for (const auto& b : rights) {
            rans.push_back(ran(b, cfg.opt));
            if (!check_triangles_right(b, cfg.opt).pass()) o.fail(nc.name + ": right triangle");
        }
        for (size_t i = 0; i < lefts.size(); ++i)
            for (size_t j = 0; j < rights.size(); ++j) {
                ++pairs;
                auto gaps = gaps_enumerate(lefts[i], rights[j], cfg.opt);
                auto lower_maps = equivariant_maps(lefts[i], rans[j].action, cfg.opt);
                auto upper_maps = count_equivariant_maps(rights[j], lans[i].action, cfg.opt);
                if (gaps.size() != lower_maps.size() || gaps.size() != upper_maps) {
                    o.fail(nc.name + ": counts " + std::to_string(gaps.size()) + "/" +
                           std::to_string(lower_maps.size()) + "/" + std::to_string(upper_maps));
                    continue;
                }
                for (const auto& g : gaps) {
                    if (gap_from_lower(lefts[i], rans[j], gap_lower(g, rans[j])).phi != g.phi ||
                        gap_from_upper(lans[i], rights[j], gap_upper(g, lans[i])).phi != g.phi)
                        o.fail(nc.name + ": gap round trip");
                }
                for (const auto& h : lower_maps)
                    if (gap_lower(gap_from_lower(lefts[i], rans[j], h), rans[j]) != h)
                        o.fail(nc.name + ": map round trip");
            }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " action pairs";
    return o;
}

long long pow_ll(long long b, int e) {
    long long v = 1;
    while (e-- > 0) v *= b;
    return v;
}

Outcome z4_closed_forms(const AcceptanceConfig& cfg) {
    Outcome o;
    const FinMonoid g = cyclic_group(4);
    const CatPtr base = as_category(g);
    for (int n = 1; n <= 3; ++n) {
        ConeSpace sp = lan(to_action(free_action(g, n, Variance::Left), base), cfg.opt);
        long long size = sp.action.total();
        long long orb = static_cast<long long>(orbits(from_action(sp.action, g)).size());
        if (size != pow_ll(4, n) || orb != pow_ll(4, n - 1))
            o.fail(std::to_string(n) + " orbits: " + std::to_string(size) + " cocones in " + std::to_string(orb) +
                   " orbits");
    }
    int non_free = 0;
    for (const auto& x : cyclic_actions(4, 6)) {
        if (x.size == 0 || is_free(x).free) continue;
        ++non_free;
        Action a = to_action(x, base);
        if (lan(a, cfg.opt).action.total() != 0) o.fail("non-free action with cocones");
        Action sq = monad_square(a, cfg.opt);
        if (sq.total() != 1 || !find_isomorphism(sq, terminal_action(base, Variance::Left), cfg.opt))
            o.fail("monad of a non-free action is not terminal");
    }
    if (o.pass) o.detail = "free n=1..3 and " + std::to_string(non_free) + " non-free actions";
    return o;
}

std::vector<NamedCategory> kan_corpus() {
    auto cats = category_corpus();
    for (const auto& np : lattice_corpus()) cats.push_back({np.name, thin_category(np.poset)});
    cats.push_back({"z4", cyclic_group_category(4)});
    return cats;
}

Outcome kan_yoneda(const AcceptanceConfig& cfg) {
    Outcome o;
    int objects = 0;
    for (const auto& nc : kan_corpus())
        for (int x = 0; x < nc.category->num_objects(); ++x) {
            ++objects;
            LeftAction rep_l = yoneda_left(nc.category, x);
            RightAction rep_r = yoneda_right(nc.category, x);
            if (!find_isomorphism(lan(rep_l, cfg.opt).action, rep_r, cfg.opt))
                o.fail(nc.name + ": lan of representable at " + nc.category->object_name(x));
            if (!find_isomorphism(ran(rep_r, cfg.opt).action, rep_l, cfg.opt))
                o.fail(nc.name + ": ran of corepresentable at " + nc.category->object_name(x));
        }
    if (o.pass) o.detail = std::to_string(objects) + " objects";
    return o;
}

struct CutSource {
    std::string name;
    CatPtr category;
    int cap;
};

std::vector<CutSource> cut_sources() {
    std::vector<CutSource> out;
    for (const auto& np : lattice_corpus()) out.push_back({np.name, thin_category(np.poset), 1});
    out.push_back({"z4", cyclic_group_category(4), 4});
    return out;
}

Outcome cut_round_trips(const AcceptanceConfig& cfg) {
    Outcome o;
    int count = 0;
    for (const auto& src : cut_sources())
        for (const auto& cut : enumerate_cuts(src.category, src.cap, cfg.opt)) {
            ++count;
            const std::string where = src.name + " cut " + std::to_string(count);
            CutSpaces sp = cut_spaces(cut.left, cut.right, true, cfg.opt);
            if (!check_absolute_cut(cut, sp, cfg.opt).pass()) o.fail(where + ": absolute check");
            SimpleCut simple = absolute_to_simple(cut, sp, cfg.opt);
            if (!check_simple_cut(simple, sp).pass()) o.fail(where + ": simple check");
            AbsoluteCut back = simple_to_absolute(simple, sp);
            if (back.a_lower != cut.a_lower || back.a_upper != cut.a_upper || back.phi_lower != cut.phi_lower ||
                back.phi_upper != cut.phi_upper)
                o.fail(where + ": simple to absolute round trip");
            FullCut full = simple_to_full(simple, sp);
            Report fr = check_full_cut(full, sp);
            if (!fr.pass()) o.fail(where + ": full check " + fr.first_failure());
            if (full_cut_first_pair(full, sp) != full_cut_second_pair(full, sp)) o.fail(where + ": pair equivalence");
            SimpleCut again = full_to_simple(full);
            if (again.g_lower != simple.g_lower || again.g_upper != simple.g_upper ||
                again.j_lower != simple.j_lower || again.j_upper != simple.j_upper)
                o.fail(where + ": full to simple round trip");
            FullCut full_again = simple_to_full(again, sp);
            if (full_again.interval.alg != full.interval.alg || full_again.interval.coalg != full.interval.coalg ||
                full_again.g_lower != full.g_lower || full_again.g_upper != full.g_upper)
                o.fail(where + ": simple to full round trip");
        }
    if (o.pass) o.detail = std::to_string(count) + " cuts";
    return o;
}

Outcome tight_colimits(const AcceptanceConfig& cfg) {
    Outcome o;
    int reps = 0, lattice_diagrams = 0, cuts = 0;
    // (a) representables
    for (const auto& nc : kan_corpus())
        for (int x = 0; x < nc.category->num_objects(); ++x) {
            ++reps;
            LeftTightDiagram d = identity_diagram(yoneda_left(nc.category, x), cfg.opt);
            auto u = tight_colimit(d, cfg.opt);
            bool identity_cocone = u && u->object == x;
            if (identity_cocone) {
                const auto off = d.diagram.offsets();
                for (int y = 0; y < nc.category->num_objects(); ++y)
                    for (int i = 0; i < d.diagram.fiber_size(y); ++i)
                        identity_cocone = identity_cocone && u->arrows[off[y] + i] == nc.category->hom(y, x)[i];
            }
            if (!identity_cocone) o.fail(nc.name + ": representable at " + nc.category->object_name(x));
        }
    // (b) complete lattices
    for (const auto& np : lattice_corpus()) {
        CatPtr c = thin_category(np.poset);
        for (const auto& d : enumerate_tight_diagrams(c, np.poset.size() <= 5 ? 2 : 1, cfg.opt)) {
            ++lattice_diagrams;
            auto u = tight_colimit(d, cfg.opt);
            if (!u) {
                o.fail(np.name + ": missing tight colimit");
                continue;
            }
            if (!is_tight_colimit(d, *u, cfg.opt)) o.fail(np.name + ": certificate");
            Universal v = tight_colimit_via_split(d, cfg.opt);
            if (v.object != u->object || v.arrows != u->arrows) o.fail(np.name + ": split path disagrees");
        }
    }
    // (c) two free orbits over Z4
    {
        const FinMonoid g = cyclic_group(4);
        LeftTightDiagram d = identity_diagram(to_action(free_action(g, 2, Variance::Left)), cfg.opt);
        if (tight_colimit(d, cfg.opt)) o.fail("z4 free 2-orbit diagram has a tight colimit");
    }
    // (d) generation by representables
    for (const auto& src : cut_sources())
        for (const auto& cut : enumerate_cuts(src.category, src.cap, cfg.opt)) {
            ++cuts;
            Report r = representable_generation_check(cut, cfg.opt);
            if (!r.pass()) o.fail(src.name + ": generation " + r.first_failure());
        }
    if (o.pass)
        o.detail = std::to_string(reps) + " representables, " + std::to_string(lattice_diagrams) +
                   " lattice diagrams, " + std::to_string(cuts) + " cuts";
    return o;
}

Outcome factorization(const AcceptanceConfig& cfg) {
    Outcome o;
    long long count = 0;
    auto shapes = diagram_shapes(4);
    for (const auto& np : lattice_corpus()) {
        CatPtr c = thin_category(np.poset);
        for (const auto& shape : shapes)
            for (const auto& d : diagrams_into_thin(shape.category, c)) {
                ++count;
                Factorization f = comprehensive_factorization(d);
                auto direct = diagram_colimit(d);
                auto via = loose_colimit(f.left, cfg.opt);
                if (direct.has_value() != via.has_value() || (direct && direct->object != via->object))
                    o.fail(np.name + "/" + shape.name + ": colimit");
                auto direct_l = diagram_limit(d);
                auto via_l = loose_limit(f.right, cfg.opt);
                if (direct_l.has_value() != via_l.has_value() || (direct_l && direct_l->object != via_l->object))
                    o.fail(np.name + "/" + shape.name + ": limit");
            }
    }
    if (o.pass) o.detail = std::to_string(count) + " diagrams";
    return o;
}

Outcome group_oracle(const AcceptanceConfig& cfg) {
    Outcome o;
    int actions = 0;
    for (int n : {2, 3, 4}) {
        const CatPtr base = as_category(cyclic_group(n));
        for (const auto& x : cyclic_actions(n, 8)) {
            ++actions;
            if (!group_lan_agrees(x, cfg.opt)) o.fail("z" + std::to_string(n) + ": group_lan");
            GAction closed = group_lan(x);
            GAction general = monoid_lan(x, cfg.opt);
            if (closed.size != general.size ||
                !find_isomorphism(to_action(closed, base), to_action(general, base), cfg.opt))
                o.fail("z" + std::to_string(n) + ": monoid_lan");
        }
    }
    std::vector<FinMonoid> groups;
    for (int n = 1; n <= 6; ++n) groups.push_back(cyclic_group(n));
    groups.push_back(symmetric_group3());
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> size(1, 4);
    for (const auto& g : groups) {
        for (int t = 0; t < 1000; ++t) {
            int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
            KleisliMorphism f = random_kleisli(g, a, b, rng), h = random_kleisli(g, b, c, rng),
                            k = random_kleisli(g, c, d, rng);
            if (kleisli_compose(g, kleisli_compose(g, f, h), k) != kleisli_compose(g, f, kleisli_compose(g, h, k)))
                o.fail("associativity over group of order " + std::to_string(g.size()));
            if (kleisli_compose(g, kleisli_identity(g, a), f) != f || kleisli_compose(g, f, kleisli_identity(g, b)) != f)
                o.fail("unit over group of order " + std::to_string(g.size()));
        }
    }
    if (o.pass) o.detail = std::to_string(actions) + " actions, " + std::to_string(groups.size()) + "x1000 triples";
    return o;
}

Outcome full_faithfulness(const AcceptanceConfig& cfg) {
    Outcome o;
    int pairs = 0, diagrams = 0;
    for (const auto& nc : kan_corpus()) {
        const CatPtr& c = nc.category;
        std::vector<CutView> views;
        for (int x = 0; x < c->num_objects(); ++x) views.push_back(cut_view(embed_object(c, x, cfg.opt), cfg.opt));
        for (int x = 0; x < c->num_objects(); ++x)
            for (int y = 0; y < c->num_objects(); ++y) {
                ++pairs;
                if (cut_homs(views[x], views[y], cfg.opt).size() != c->hom(x, y).size())
                    o.fail(nc.name + ": homs " + c->object_name(x) + " -> " + c->object_name(y));
            }
    }
    for (const auto& np : lattice_corpus()) {
        CatPtr c = thin_category(np.poset);
        auto targets = enumerate_cuts(c, 1, cfg.opt);
        for (const auto& d : enumerate_tight_diagrams(c, 1, cfg.opt)) {
            ++diagrams;
            Report r = tight_preservation_check(c, d, targets, cfg.opt);
            if (!r.pass()) o.fail(np.name + ": preservation " + r.first_failure());
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " object pairs, " + std::to_string(diagrams) + " diagrams";
    return o;
}

struct Spec {
    const char* name;
    double budget;
    std::function<Outcome(const AcceptanceConfig&)> run;
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s{
        {"dm_oracle_equivalence", 30, dm_oracle},
        {"dm_idempotence", 30, dm_idempotence},
        {"dm_embedding_tightness", 0, dm_tightness},
        {"isbell_adjunction", 120, isbell_adjunction},
        {"z4_closed_forms", 60, z4_closed_forms},
        {"kan_yoneda", 0, kan_yoneda},
        {"cut_round_trips", 120, cut_round_trips},
        {"tight_colimits", 120, tight_colimits},
        {"comprehensive_factorization", 0, factorization},
        {"group_generic_agreement", 60, group_oracle},
        {"embedding_full_faithfulness", 0, full_faithfulness},
    };
    return s;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
    if (id < 1 || id > acceptance_count) throw Error(ErrorKind::UnknownReference, "criterion " + std::to_string(id));
    const Spec& s = specs()[id - 1];
    CriterionResult r{id, s.name, false, 0, s.budget, {}};
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = s.run(cfg);
    } catch (const std::exception& e) {
        o.fail(e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.detail = o.detail;
    if (r.pass && s.budget > 0 && r.seconds >= s.budget) {
        r.pass = false;
        r.detail = "over the time budget";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= acceptance_count; ++id) out.push_back(run_criterion(id, cfg));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    std::string line = std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + " " + buf;
    if (r.budget > 0) {
        std::snprintf(buf, sizeof buf, " (budget %.0fs)", r.budget);
        line += buf;
    }
    if (!r.detail.empty()) line += " - " + r.detail;
    return line;
}

}  // namespace tightcat
