#include "helpers.hpp"
#include "tightcat/corpus.hpp"
#include "tightcat/fincat.hpp"

using namespace tightcat;

namespace {

RawCategory chain_of_two_arrows() {
    RawCategory r;
    r.objects = {"a", "b", "c"};
    r.morphisms = {{"f", "a", "b"}, {"g", "b", "c"}};
    return r;
}

}  // namespace

TEST_SUITE("fincat") {
    TEST_CASE("identities are added and named after their object") {
        auto r = chain_of_two_arrows();
        r.morphisms.push_back({"h", "a", "c"});
        r.composition.push_back({"f", "g", "h"});
        CatPtr c = validate_category(r);
        CHECK(c->num_objects() == 3);
        CHECK(c->num_morphisms() == 6);
        CHECK(c->morphism(c->identity(0)).id == "id_a");
        int f = c->morphism_index("f"), g = c->morphism_index("g");
        CHECK(c->morphism(c->compose(f, g)).id == "h");
        CHECK(c->compose(g, f) == -1);
        CHECK(c->hom(0, 2).size() == 1);
    }

    TEST_CASE("missing composite is rejected") {
        CHECK_THROWS_KIND(validate_category(chain_of_two_arrows()), MissingComposite);
    }

    TEST_CASE("duplicate ids are rejected") {
        RawCategory r;
        r.objects = {"a", "b"};
        r.morphisms = {{"f", "a", "b"}, {"f", "a", "b"}};
        CHECK_THROWS_KIND(validate_category(r), DuplicateId);
    }

    TEST_CASE("non-associative tables are rejected") {
        // e, s on one object: s;s = e, e;e = e, e;s = s, s;e = e breaks (s;s);s = s;(s;s)
        RawCategory r;
        r.objects = {"o"};
        r.morphisms = {{"e", "o", "o"}, {"s", "o", "o"}};
        r.composition = {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "e"}, {"s", "s", "e"}};
        CHECK_THROWS_KIND(validate_category(r), AssociativityViolation);
    }

    TEST_CASE("opposite is an involution that swaps ends") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            CatPtr op = opposite(c);
            CHECK(*opposite(op) == *c);
            for (int m = 0; m < c->num_morphisms(); ++m) {
                CHECK(op->dom(m) == c->cod(m));
                CHECK(op->cod(m) == c->dom(m));
                for (int n = 0; n < c->num_morphisms(); ++n) CHECK(op->compose(n, m) == c->compose(m, n));
            }
        }
    }

    TEST_CASE("category laws hold across the corpus") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            const int n = c->num_morphisms();
            for (int f = 0; f < n; ++f) {
                CHECK(c->compose(c->identity(c->dom(f)), f) == f);
                CHECK(c->compose(f, c->identity(c->cod(f))) == f);
                for (int g = 0; g < n; ++g) {
                    int fg = c->compose(f, g);
                    CHECK((fg >= 0) == (c->cod(f) == c->dom(g)));
                    if (fg < 0) continue;
                    for (int h = 0; h < n; ++h)
                        if (c->cod(g) == c->dom(h)) CHECK(c->compose(fg, h) == c->compose(f, c->compose(g, h)));
                }
            }
        }
    }

    TEST_CASE("product multiplies objects and morphisms") {
        auto corpus = category_corpus();
        for (size_t i = 0; i < corpus.size(); i += 3)
            for (size_t j = 0; j < corpus.size(); j += 4) {
                const auto& c = corpus[i].category;
                const auto& d = corpus[j].category;
                CatPtr p = product(c, d);
                CHECK(p->num_objects() == c->num_objects() * d->num_objects());
                CHECK(p->num_morphisms() == c->num_morphisms() * d->num_morphisms());
            }
    }

    TEST_CASE("functor checks") {
        CatPtr c = category_corpus()[3].category;
        CHECK(check_functor(identity_functor(c)).pass());
        CatPtr t = terminal_category();
        CHECK(check_functor(constant_functor(c, t, 0)).pass());
        Functor bad = identity_functor(c);
        if (c->num_morphisms() > c->num_objects()) {
            for (int m = 0; m < c->num_morphisms(); ++m)
                if (!c->is_identity(m)) bad.mor[m] = c->identity(c->dom(m));
            CHECK_FALSE(check_functor(bad).pass());
        }
    }
}

#include "tightcat/factorization.hpp"

namespace {

int mor(const CatPtr& c, const std::string& id) { return c->morphism_index(id); }

// x = u then y then v, counted by brute force over all pairs
int twisted_hom_count(const FinCategory& c, int x, int y) {
    int n = 0;
    for (int u = 0; u < c.num_morphisms(); ++u)
        for (int v = 0; v < c.num_morphisms(); ++v) {
            int uy = c.compose(u, y);
            if (uy >= 0 && c.compose(uy, v) == x) ++n;
        }
    return n;
}

}  // namespace

TEST_SUITE("fincat") {
    TEST_CASE("walking arrow and a table with a hole") {
        CatPtr w = walking_arrow();
        CHECK(w->num_morphisms() == 3);
        std::vector<int> comp(9, -1);
        // identities 0, 1, f = 2; every entry except id_a then f
        comp[0 * 3 + 0] = 0;
        comp[1 * 3 + 1] = 1;
        comp[2 * 3 + 1] = 2;
        CHECK_THROWS_KIND(FinCategory({"a", "b"}, {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}}, {0, 1}, comp),
                          MissingComposite);
        comp[0 * 3 + 2] = 2;
        CHECK_NOTHROW(FinCategory({"a", "b"}, {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}}, {0, 1}, comp));
    }

    TEST_CASE("cyclic group of order four") {
        CatPtr z4 = cyclic_group_category(4);
        REQUIRE(z4->num_morphisms() == 4);
        int triples = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                CHECK(z4->compose(a, b) == (a + b) % 4);
                for (int c = 0; c < 4; ++c, ++triples)
                    CHECK(z4->compose(z4->compose(a, b), c) == z4->compose(a, z4->compose(b, c)));
            }
        CHECK(triples == 64);
        // negation is an isomorphism onto the opposite
        CatPtr op = opposite(z4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK((4 - z4->compose(a, b)) % 4 == op->compose((4 - a) % 4, (4 - b) % 4));
    }

    TEST_CASE("opposite of the walking arrow points back") {
        CatPtr op = opposite(walking_arrow());
        int f = mor(op, "f");
        CHECK(op->object_name(op->dom(f)) == "b");
        CHECK(op->object_name(op->cod(f)) == "a");
    }

    TEST_CASE("comma categories") {
        CatPtr w = walking_arrow();
        auto arrows = comma(identity_functor(w), identity_functor(w));
        CHECK(arrows.category->num_objects() == 3);
        CHECK(check_functor(arrows.dom_proj).pass());
        CHECK(check_functor(arrows.cod_proj).pass());
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            CatPtr t = terminal_category();
            for (int x = 0; x < c->num_objects(); ++x) {
                int out = 0;
                for (int y = 0; y < c->num_objects(); ++y) out += static_cast<int>(c->hom(x, y).size());
                CHECK(comma(constant_functor(t, c, x), identity_functor(c)).category->num_objects() == out);
            }
        }
        FinPoset p = pentagon_lattice();
        CatPtr thin = thin_category(p);
        for (int x = 0; x < p.size(); ++x) {
            auto slice = comma(identity_functor(thin), constant_functor(terminal_category(), thin, x));
            CHECK(slice.category->num_objects() == static_cast<int>(principal_down(p, x).count()));
        }
    }

    TEST_CASE("twisted arrows") {
        auto t = twisted_arrow(terminal_category());
        CHECK(t.category->num_objects() == 1);
        CHECK(t.category->num_morphisms() == 1);
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            auto tw = twisted_arrow(c);
            REQUIRE(tw.category->num_objects() == c->num_morphisms());
            for (int x = 0; x < c->num_morphisms(); ++x)
                for (int y = 0; y < c->num_morphisms(); ++y)
                    CHECK(static_cast<int>(tw.category->hom(x, y).size()) == twisted_hom_count(*c, x, y));
            CHECK(check_discrete_fibration(tw.proj).pass());
        }
        CHECK(twisted_arrow(walking_arrow()).category->num_objects() == 3);
    }

    TEST_CASE("connected components") {
        for (int n = 0; n <= 4; ++n) CHECK(connected_components(*discrete_category(n)).size() == static_cast<size_t>(n));
        CHECK(connected_components(*walking_arrow()).size() == 1);
        CHECK(connected_components(*opposite(category_corpus()[5].category)).size() == 1);
    }

    TEST_CASE("comprehensive factorization of small diagrams") {
        CatPtr t = terminal_category();
        auto f = comprehensive_factorization(identity_functor(t));
        CHECK(f.left.total() == 1);
        // discrete two picking a <= b: arrows into a are {id_a}; into b are {a<=b, id_b}, quotiented
        CatPtr chain = thin_category(chain_poset(2));
        Functor d{discrete_category(2), chain, {0, 1}, {chain->identity(0), chain->identity(1)}};
        REQUIRE(check_functor(d).pass());
        auto g = comprehensive_factorization(d);
        CHECK(g.left.fiber_size(0) == 2);
        CHECK(g.left.fiber_size(1) == 1);
    }

    TEST_CASE("splitting idempotents") {
        for (const auto& [name, c] : category_corpus()) {
            CAPTURE(name);
            for (int x = 0; x < c->num_objects(); ++x) {
                auto s = split_idempotent(*c, c->identity(x));
                REQUIRE(s);
                CHECK(c->compose(s->q, s->i) == c->identity(x));
            }
        }
        CatPtr z4 = cyclic_group_category(4);
        for (int a = 1; a < 4; ++a) CHECK_THROWS_KIND(split_idempotent(*z4, a), NotIdempotent);
        CatPtr ns = nonsplit_idempotent_category();
        CHECK_FALSE(split_idempotent(*ns, ns->morphism_index("e")).has_value());
    }

    TEST_CASE("natural transformations") {
        CatPtr w = walking_arrow();
        NatTransform id{identity_functor(w), identity_functor(w), {w->identity(0), w->identity(1)}};
        CHECK(check_nat_transform(id).pass());
        // into the parallel pair along f and along g with identity components: the square at f fails
        CatPtr par = category_corpus()[4].category;
        Functor via_f{w, par, {0, 1}, {par->identity(0), par->identity(1), mor(par, "f")}};
        Functor via_g{w, par, {0, 1}, {par->identity(0), par->identity(1), mor(par, "g")}};
        REQUIRE(check_functor(via_f).pass());
        Report r = check_nat_transform({via_f, via_g, {par->identity(0), par->identity(1)}});
        CHECK_FALSE(r.pass());
        bool named = false;
        for (const auto& c : r.checks)
            if (!c.pass) named = named || c.name.find('f') != std::string::npos || c.detail.find('f') != std::string::npos;
        CHECK(named);
    }
}
