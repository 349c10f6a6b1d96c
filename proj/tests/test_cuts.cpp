#include "helpers.hpp"
#include "tightcat/corpus.hpp"
#include "tightcat/cuts.hpp"
#include "tightcat/groups.hpp"
#include "tightcat/isbell.hpp"
#include "tightcat/tight.hpp"

using namespace tightcat;

TEST_SUITE("cuts") {
    TEST_CASE("a single object has exactly one cut") {
        // lan and ran of any set over a point are a point, so both sides retract onto it
        CHECK(enumerate_cuts(terminal_category(), 3).size() == 1);
    }

    TEST_CASE("cuts over a poset are its completion") {
        for (const auto& p : all_posets_up_to_iso(4)) {
            if (p.size() == 0) continue;
            CHECK(enumerate_cuts(thin_category(p), 1).size() == dm_completion(p).cuts.size());
        }
    }

    TEST_CASE("embedded objects are cuts with one endomorphism per arrow") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            std::vector<CutView> views;
            for (int x = 0; x < c->num_objects(); ++x) {
                AbsoluteCut cut = embed_object(c, x);
                CHECK(check_absolute_cut(cut).pass());
                views.push_back(cut_view(cut));
            }
            for (int x = 0; x < c->num_objects(); ++x)
                for (int y = 0; y < c->num_objects(); ++y)
                    CHECK(cut_homs(views[x], views[y]).size() == c->hom(x, y).size());
        }
    }

    TEST_CASE("presentations round trip") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& cut : enumerate_cuts(c, 2)) {
                CutSpaces sp = cut_spaces(cut.left, cut.right, true);
                REQUIRE(check_absolute_cut(cut, sp).pass());
                SimpleCut s = absolute_to_simple(cut, sp);
                CHECK(check_simple_cut(s, sp).pass());
                AbsoluteCut back = simple_to_absolute(s, sp);
                CHECK(back.a_lower == cut.a_lower);
                CHECK(back.a_upper == cut.a_upper);
                CHECK(back.phi_lower == cut.phi_lower);
                CHECK(back.phi_upper == cut.phi_upper);
                FullCut f = simple_to_full(s, sp);
                CHECK(check_full_cut(f, sp).pass());
                CHECK(full_cut_first_pair(f, sp) == full_cut_second_pair(f, sp));
                SimpleCut again = full_to_simple(f);
                CHECK(again.g_lower == s.g_lower);
                CHECK(again.j_upper == s.j_upper);
            }
        }
    }

    TEST_CASE("cut algebras and coalgebras") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& cut : enumerate_cuts(c, 2)) {
                CHECK(check_cut_algebra(cut_algebra_of(cut)).pass());
                CHECK(check_cut_coalgebra(cut_coalgebra_of(cut)).pass());
                CutView v = cut_view(cut);
                AbsoluteCut from_coalg = coalgebra_to_cut(cut_to_coalgebra(v));
                AbsoluteCut from_alg = algebra_to_cut(cut_to_algebra(v));
                CHECK(check_absolute_cut(from_coalg).pass());
                CHECK(check_absolute_cut(from_alg).pass());
                CHECK(find_isomorphism(from_coalg.left, cut.left).has_value());
                CHECK(find_isomorphism(from_alg.right, cut.right).has_value());
            }
        }
    }

    TEST_CASE("identity is a cut morphism and reconstruction is inverse") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& cut : enumerate_cuts(c, 2)) {
                CutView v = cut_view(cut);
                CutMorphism id{identity_map(cut.left), identity_map(cut.right)};
                CHECK(cut_morphism_check(id, v, v).pass());
                CHECK(reconstruct_upper(id.lower, v, v) == id.upper);
                CHECK(reconstruct_lower(id.upper, v, v) == id.lower);
                for (const auto& f : cut_homs(v, v)) {
                    CHECK(reconstruct_upper(f.lower, v, v) == f.upper);
                    CHECK(reconstruct_lower(f.upper, v, v) == f.lower);
                }
            }
        }
    }

    TEST_CASE("Z4 cuts with fibers up to four") {
        CatPtr z4 = as_category(cyclic_group(4));
        auto cuts = enumerate_cuts(z4, 4);
        // (empty, point), (point, empty) and the regular pair: other orbits have no cocone
        CHECK(cuts.size() == 3);
        CHECK(enumerate_cuts(z4, 1).size() == 2);
        for (const auto& cut : cuts) CHECK(check_absolute_cut(cut).pass());
    }

    TEST_CASE("broken retraction fails the simple cut check") {
        AbsoluteCut cut = embed_object(as_category(cyclic_group(4)), 0);
        CutSpaces sp = cut_spaces(cut.left, cut.right, true);
        SimpleCut s = absolute_to_simple(cut, sp);
        REQUIRE(check_simple_cut(s, sp).pass());
        bool found = false;
        for (const auto& g : equivariant_maps(s.left, sp.ran_b.action))
            if (g != s.g_lower) {
                SimpleCut bad = s;
                bad.g_lower = g;
                CHECK_FALSE(check_simple_cut(bad, sp).pass());
                found = true;
            }
        CHECK(found);
    }
}

namespace {

EqMap zero_map(const Action& s) {
    EqMap m;
    for (int x = 0; x < s.num_objects(); ++x) m.comp.push_back(std::vector<int>(s.fiber_size(x), 0));
    return m;
}

Subset support(const Action& a) {
    Subset s(a.num_objects());
    for (int x = 0; x < a.num_objects(); ++x)
        if (a.fiber_size(x) > 0) s.set(x);
    return s;
}

}  // namespace

TEST_SUITE("cuts") {
    TEST_CASE("intervals of embedded objects") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                AbsoluteCut cut = embed_object(c, x);
                CutSpaces sp = cut_spaces(cut.left, cut.right, true);
                SimpleCut s = absolute_to_simple(cut, sp);
                CHECK(check_interval(simple_to_full(s, sp).interval, sp).pass());
                CHECK(cut.a_lower == identity_map(sp.ran_b.action));
                CHECK(cut.a_upper == identity_map(sp.lan_a.action));
            }
        }
    }

    TEST_CASE("a perturbed interval fails") {
        CatPtr z4 = as_category(cyclic_group(4));
        AbsoluteCut cut = embed_object(z4, 0);
        CutSpaces sp = cut_spaces(cut.left, cut.right, true);
        Interval i = simple_to_full(absolute_to_simple(cut, sp), sp).interval;
        REQUIRE(check_interval(i, sp).pass());
        bool failed = false;
        for (const auto& j : equivariant_maps(sp.ran_b.action, sp.ran_lan_a.action)) {
            if (j == i.j_lower) continue;
            Interval bad = i;
            bad.j_lower = j;
            failed = true;
            CHECK_FALSE(check_interval(bad, sp).pass());
        }
        CHECK(failed);
    }

    TEST_CASE("lattice cuts pass every presentation") {
        for (const auto& [name, l] : lattice_corpus()) {
            if (l.size() > 5) continue;
            CAPTURE(name);
            CatPtr thin = thin_category(l);
            auto cuts = enumerate_cuts(thin, 1);
            auto dm = dm_completion(l);
            CHECK(cuts.size() == dm.cuts.size());
            std::vector<CutView> views;
            for (const auto& cut : cuts) {
                CutSpaces sp = cut_spaces(cut.left, cut.right, true);
                SimpleCut s = absolute_to_simple(cut, sp);
                CHECK(check_simple_cut(s, sp).pass());
                CHECK(check_full_cut(simple_to_full(s, sp), sp).pass());
                CHECK(check_cut_algebra(cut_algebra_of(cut)).pass());
                // the lower set is the support of the left action and is closed
                Subset lower = support(cut.left);
                CHECK(lower_bounds(l, upper_bounds(l, lower)) == lower);
                CHECK(support(cut.right) == upper_bounds(l, lower));
                views.push_back(cut_view(cut));
            }
            // thin: one morphism exactly when the lower sets are included
            for (size_t x = 0; x < cuts.size(); ++x)
                for (size_t y = 0; y < cuts.size(); ++y) {
                    bool below = support(cuts[x].left).is_subset_of(support(cuts[y].left));
                    CHECK(cut_homs(views[x], views[y]).size() == (below ? 1u : 0u));
                }
        }
    }

    TEST_CASE("fiber sizes can rule out a retraction") {
        FinMonoid z2 = cyclic_group(2);
        Action a = to_action(free_action(z2, 2, Variance::Left));
        Action b = to_action(regular_action(z2, Variance::Right), a.base);
        CutSpaces sp = cut_spaces(a, b, true);
        // four elements cannot embed into two cones
        SimpleCut s{a, b, zero_map(a), zero_map(b), zero_map(sp.ran_b.action), zero_map(sp.lan_a.action)};
        CHECK_THROWS_KIND(check_simple_cut(s, sp), RetractionFailure);
    }

    TEST_CASE("an idempotent with the wrong image does not split onto the action") {
        FinMonoid z2 = cyclic_group(2);
        Action a = to_action(free_action(z2, 2, Variance::Left));
        Action b = to_action(regular_action(z2, Variance::Right), a.base);
        CutSpaces sp = cut_spaces(a, b, true);
        AbsoluteCut cut{a, b, identity_map(sp.ran_b.action), identity_map(sp.lan_a.action),
                        identity_map(sp.ran_lan_a.action), identity_map(sp.lan_ran_b.action)};
        CHECK_THROWS_KIND(absolute_to_simple(cut, sp), SplitMismatch);
    }

    TEST_CASE("cut algebra whose image is too small") {
        // two fixed points over Z4 have no cones, so nothing can split back onto them
        FinMonoid z4 = cyclic_group(4);
        Action b = to_action(trivial_action(z4, 2, Variance::Right));
        CutAlgebra k{b, identity_map(ran(b).action)};
        CHECK_THROWS_KIND(check_cut_algebra(k), SplitMismatch);
        Action y = to_action(regular_action(z4, Variance::Right));
        CHECK(check_cut_algebra({y, identity_map(ran(y).action)}).pass());
    }

    TEST_CASE("Z4 cuts have free or cocone-less left parts") {
        FinMonoid z4 = cyclic_group(4);
        CatPtr c = as_category(z4);
        for (const auto& cut : enumerate_cuts(c, 4)) {
            GAction x = from_action(cut.left, z4);
            bool free = is_free(x).free;
            CHECK((free || lan(cut.left).action.total() == 0));
            MonadTower t = monad_tower(cut.left, 1);
            CHECK(is_injective(t.eta));
        }
    }

    TEST_CASE("coalgebra round trip through a cut") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                ComonadTower t = comonad_tower(yoneda_right(c, x), 2);
                Coalgebra cofree = cofree_coalgebra(t);
                AbsoluteCut cut = coalgebra_to_cut(nucleus_to_coalgebra(free_algebra(monad_tower(yoneda_left(c, x), 2)),
                                                                        monad_tower(monad_tower(yoneda_left(c, x), 1).r[0].action, 2)));
                Coalgebra back = cut_to_coalgebra(cut_view(cut));
                CHECK(find_isomorphism(back.carrier, cofree.carrier).has_value());
                CHECK(check_coalgebra(back).pass());
            }
        }
    }
}
