#include <algorithm>

#include "helpers.hpp"
#include "tightcat/corpus.hpp"
#include "tightcat/cuts.hpp"
#include "tightcat/groups.hpp"

using namespace tightcat;

TEST_SUITE("action") {
    TEST_CASE("representables have hom-sets as fibers") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                LeftAction y = yoneda_left(c, x);
                RightAction z = yoneda_right(c, x);
                for (int w = 0; w < c->num_objects(); ++w) {
                    CHECK(y.fiber_size(w) == static_cast<int>(c->hom(w, x).size()));
                    CHECK(z.fiber_size(w) == static_cast<int>(c->hom(x, w).size()));
                }
                CHECK_NOTHROW(check_action_laws(y));
                CHECK_NOTHROW(check_action_laws(z));
            }
        }
    }

    TEST_CASE("maps out of a representable are its fiber") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& a : enumerate_left_actions(c, 2))
                for (int x = 0; x < c->num_objects(); ++x)
                    CHECK(count_equivariant_maps(yoneda_left(c, x), a) == static_cast<size_t>(a.fiber_size(x)));
        }
    }

    TEST_CASE("parallel and serial searches agree") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            auto acts = enumerate_left_actions(c, 2);
            for (size_t i = 0; i < acts.size(); i += 2)
                for (size_t j = 0; j < acts.size(); j += 3)
                    CHECK(equivariant_maps(acts[i], acts[j]) == equivariant_maps_serial(acts[i], acts[j]));
        }
    }

    TEST_CASE("every found map is equivariant and composition stays equivariant") {
        CatPtr c = category_corpus()[4].category;  // parallel pair
        auto acts = enumerate_left_actions(c, 2);
        for (const auto& a : acts)
            for (const auto& b : acts) {
                auto ab = equivariant_maps(a, b);
                for (const auto& h : ab) CHECK(is_equivariant(a, b, h));
                for (const auto& h : ab)
                    for (const auto& k : equivariant_maps(b, a)) CHECK(is_equivariant(a, a, after(k, h)));
            }
    }

    TEST_CASE("regular Z4 action has four endomorphisms, all invertible") {
        Action r = to_action(regular_action(cyclic_group(4), Variance::Left));
        auto ends = equivariant_maps(r, r);
        CHECK(ends.size() == 4);
        for (const auto& e : ends) CHECK(inverse(e, r).has_value());
        CHECK(find_isomorphism(r, r).has_value());


    }

    TEST_CASE("fixed points of an idempotent form a retract") {
        CatPtr c = category_corpus()[3].category;  // arrow
        for (const auto& a : enumerate_left_actions(c, 3))
            for (const auto& e : equivariant_maps(a, a)) {
                if (!is_idempotent(e)) continue;
                SubAction s = fixed_points(a, e);
                CHECK(is_injective(s.inclusion));
                CHECK(is_equivariant(s.action, a, s.inclusion));
                int fixed = 0;
                for (int x = 0; x < a.num_objects(); ++x)
                    for (int i = 0; i < a.fiber_size(x); ++i) fixed += e.comp[x][i] == i;
                CHECK(s.action.total() == fixed);
            }
    }

    TEST_CASE("functoriality is enforced") {
        // e acts as a swap, but e;e = e needs an idempotent
        CatPtr c = as_category(idempotent_monoid());
        RawAction raw;
        raw.fibers = {{"o", {"p", "q"}}};
        raw.maps = {{"e", {{"p", "q"}, {"q", "p"}}}};
        CHECK_THROWS_KIND(validate_action(c, raw), FunctorialityViolation);
        raw.maps = {{"e", {{"p", "p"}, {"q", "p"}}}};
        CHECK(validate_action(c, raw).total() == 2);
    }

    TEST_CASE("representables have themselves as loose colimit") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                auto u = loose_colimit(yoneda_left(c, x));
                REQUIRE(u);
                CHECK(is_loose_colimit(yoneda_left(c, x), *u));
                // apex isomorphic to x: the legs contain an invertible arrow into it
                CHECK(c->hom(x, u->object).size() >= 1);
                CHECK(c->hom(u->object, x).size() >= 1);
                auto v = loose_limit(yoneda_right(c, x));
                REQUIRE(v);
                CHECK(is_loose_limit(yoneda_right(c, x), *v));
            }
        }
    }

    TEST_CASE("the search cap is enforced") {
        Action r = to_action(free_action(cyclic_group(4), 3, Variance::Left));
        Options tight;
        tight.cap = 2;
        CHECK_THROWS_KIND(equivariant_maps(r, r, tight), SizeLimit);
    }

    TEST_CASE("total category projects as a discrete fibration") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& a : enumerate_left_actions(c, 2)) {
                TotalCategory t = grothendieck(a);
                CHECK(t.category->num_objects() == a.total());
                CHECK(check_discrete_fibration(t.proj).pass());
            }
        }
    }
}

#include "tightcat/factorization.hpp"

TEST_SUITE("action") {
    TEST_CASE("empty and regular actions") {
        CatPtr w = walking_arrow();
        RawAction empty;
        CHECK(validate_left_action(w, empty).total() == 0);
        CatPtr z4 = cyclic_group_category(4);
        RawAction reg;
        reg.fibers = {{"o", {"0", "1", "2", "3"}}};
        for (int a = 1; a < 4; ++a) {
            std::vector<std::pair<std::string, std::string>> t;
            for (int x = 0; x < 4; ++x) t.push_back({std::to_string(x), std::to_string((a + x) % 4)});
            reg.maps.push_back({std::to_string(a), t});
        }
        CHECK(validate_left_action(z4, reg).total() == 4);
        CHECK(yoneda_left(z4, 0).fiber_size(0) == 4);
        CHECK(yoneda_left(terminal_category(), 0).fiber_size(0) == 1);
    }

    TEST_CASE("functoriality on the walking arrow extended by a composite") {
        // a -f-> b -g-> c with h = f;g, but h acts differently from f after g
        RawCategory rc;
        rc.objects = {"a", "b", "c"};
        rc.morphisms = {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}};
        rc.composition = {{"f", "g", "h"}};
        CatPtr c = validate_category(rc);
        RawAction raw;
        raw.fibers = {{"a", {"p", "q"}}, {"b", {"r"}}, {"c", {"s"}}};
        raw.maps = {{"f", {{"r", "p"}}}, {"g", {{"s", "r"}}}, {"h", {{"s", "q"}}}};
        CHECK_THROWS_KIND(validate_left_action(c, raw), FunctorialityViolation);
        raw.maps[2] = {"h", {{"s", "p"}}};
        CHECK_NOTHROW(validate_left_action(c, raw));
    }

    TEST_CASE("fibers of representables are symmetric") {
        for (const auto& [name, c] : category_corpus())
            for (int x = 0; x < c->num_objects(); ++x)
                for (int a = 0; a < c->num_objects(); ++a)
                    CHECK(yoneda_left(c, x).fiber_size(a) == yoneda_right(c, a).fiber_size(x));
    }

    TEST_CASE("Yoneda for maps and cocones") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                LeftAction y = yoneda_left(c, x);
                auto ends = equivariant_maps(y, y);
                CHECK(std::find(ends.begin(), ends.end(), identity_map(y)) != ends.end());
                for (int z = 0; z < c->num_objects(); ++z) {
                    CHECK(count_equivariant_maps(y, yoneda_left(c, z)) == c->hom(x, z).size());
                    CHECK(cocones(y, z).size() == c->hom(x, z).size());
                    CHECK(cones(z, yoneda_right(c, x)).size() == c->hom(z, x).size());
                }
                CHECK(cocones(empty_action(c, Variance::Left), x).size() == 1);
            }
        }
        CatPtr z4 = cyclic_group_category(4);
        CHECK(cocones(terminal_action(z4, Variance::Left), 0).empty());
    }

    TEST_CASE("total category of the regular Z4 action") {
        LeftAction r = yoneda_left(cyclic_group_category(4), 0);
        TotalCategory t = grothendieck(r);
        CHECK(t.category->num_objects() == 4);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) CHECK(t.category->hom(x, y).size() == 1);
    }

    TEST_CASE("factorizing the projection recovers the action") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (const auto& a : enumerate_left_actions(c, 2)) {
                TotalCategory t = grothendieck(a);
                auto f = comprehensive_factorization(t.proj);
                CHECK(find_isomorphism(f.left, a).has_value());
            }
        }
    }

    TEST_CASE("loose colimits on lattices are joins") {
        FinPoset p = pentagon_lattice();
        CatPtr thin = thin_category(p);
        // every down-set as a left action with singleton fibers
        for (unsigned m = 0; m < (1u << p.size()); ++m) {
            Subset s(p.size());
            for (int i = 0; i < p.size(); ++i)
                if (m >> i & 1u) s.set(i);
            if (lower_closure(p, s) != s) continue;
            RawAction raw;
            for (int i = 0; i < p.size(); ++i)
                if (s[i]) raw.fibers.push_back({p.name(i), {"*"}});
            for (int i = 0; i < p.size(); ++i)
                for (int j = 0; j < p.size(); ++j)
                    if (i != j && s[i] && s[j] && p.leq(i, j)) raw.maps.push_back({p.name(i) + "<=" + p.name(j), {{"*", "*"}}});
            LeftAction a = validate_left_action(thin, raw);
            auto u = loose_colimit(a);
            REQUIRE(u);
            // join: least element above all of s
            int lub = -1;
            Subset ub = upper_bounds(p, s);
            for (int i = 0; i < p.size(); ++i)
                if (ub[i] && (lower_bounds(p, ub))[i]) lub = i;
            CHECK(u->object == lub);
        }
    }

    TEST_CASE("two free Z4 orbits have no loose colimit") {
        LeftAction a = to_action(free_action(cyclic_group(4), 2, Variance::Left));
        CHECK_FALSE(loose_colimit(a).has_value());
        CHECK(cocones(a, 0).size() == 16);
    }
}
