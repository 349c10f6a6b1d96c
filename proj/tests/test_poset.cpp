#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "tightcat/corpus.hpp"
#include "tightcat/poset.hpp"

using namespace tightcat;

namespace {

std::vector<PosetCut> sorted(std::vector<PosetCut> v) {
    std::sort(v.begin(), v.end(), cut_before);
    return v;
}

FinPoset zigzag() {
    return make_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
}

}  // namespace

TEST_SUITE("poset") {
    TEST_CASE("antichains complete with a bottom and a top") {
        for (int n = 2; n <= 6; ++n) CHECK(dm_completion(antichain_poset(n)).cuts.size() == static_cast<size_t>(n + 2));
        CHECK(dm_completion(antichain_poset(1)).cuts.size() == 1);
    }

    TEST_CASE("zigzag has six cuts") {
        // closed lower sets found by hand: {}, {a}, {b}, {b,d}, {a,b,c}, all
        FinPoset p = zigzag();
        auto dm = dm_completion(p);
        REQUIRE(dm.cuts.size() == 6);
        std::vector<Subset> expected = {p.subset({}), p.subset({"a"}), p.subset({"b"}),
                                        p.subset({"b", "d"}), p.subset({"a", "b", "c"}), p.full_set()};
        for (const auto& s : expected)
            CHECK(std::any_of(dm.cuts.begin(), dm.cuts.end(), [&](const PosetCut& c) { return c.lower == s; }));
        CHECK(is_complete_lattice(dm.lattice));
        CHECK_FALSE(is_complete_lattice(p));
    }

    TEST_CASE("complete lattices are their own completion") {
        for (const auto& [name, l] : lattice_corpus()) {
            CAPTURE(name);
            REQUIRE(is_complete_lattice(l));
            auto dm = dm_completion(l);
            CHECK(order_isomorphism(dm.lattice, l).has_value());
        }
    }

    TEST_CASE("poset counts up to isomorphism") {
        // 1, 1, 2, 5, 16 posets on 0..4 elements
        auto all = all_posets_up_to_iso(4);
        std::vector<int> count(5, 0);
        for (const auto& p : all) ++count[p.size()];
        CHECK(count == std::vector<int>{1, 1, 2, 5, 16});
    }

    TEST_CASE("powerset oracle agrees with the closure construction") {
        for (const auto& p : poset_corpus(7, 60, 6)) {
            auto dm = dm_completion(p);
            auto oracle = oracle_dm(p);
            CHECK(sorted(oracle) == sorted(dm.cuts));
            CHECK(oracle == oracle_dm_serial(p));
        }
    }

    TEST_CASE("cuts are closed and the embedding is order preserving and reflecting") {
        for (const auto& p : poset_corpus(3, 60, 6)) {
            auto dm = dm_completion(p);
            for (const auto& c : dm.cuts) {
                CHECK(upper_bounds(p, c.lower) == c.upper);
                CHECK(lower_bounds(p, c.upper) == c.lower);
                CHECK(lower_bounds(p, upper_bounds(p, c.lower)) == c.lower);
            }
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y)
                    CHECK(p.leq(x, y) == dm.lattice.leq(dm.embed[x], dm.embed[y]));
        }
    }

    TEST_CASE("completion is idempotent") {
        for (const auto& p : poset_corpus(5, 40, 6)) {
            auto once = dm_completion(p);
            auto twice = dm_completion(once.lattice);
            CHECK(twice.cuts.size() == once.cuts.size());
            CHECK(order_isomorphism(twice.lattice, once.lattice).has_value());
        }
    }

    TEST_CASE("joins and meets are preserved by the embedding") {
        FinPoset p = pentagon_lattice();
        auto dm = dm_completion(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                auto j = join(p, x, y);
                REQUIRE(j);
                CHECK(join(dm.lattice, dm.embed[x], dm.embed[y]) == dm.embed[*j]);
                auto m = meet(p, x, y);
                REQUIRE(m);
                CHECK(meet(dm.lattice, dm.embed[x], dm.embed[y]) == dm.embed[*m]);
            }
    }

    TEST_CASE("antisymmetry is enforced") {
        CHECK_THROWS_KIND(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), TypeMismatch);
    }

    TEST_CASE("opposite order reverses the completion") {
        FinPoset p = zigzag();
        CHECK(dm_completion(opposite(p)).cuts.size() == dm_completion(p).cuts.size());
    }
}

namespace {

std::vector<FinPoset> random_sample(std::uint32_t seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(1, 7);
    std::vector<FinPoset> out;
    for (int i = 0; i < count; ++i) out.push_back(random_poset(size(rng), 0.35, rng));
    return out;
}

Subset subset_from_mask(int n, unsigned mask) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s.set(i);
    return s;
}

}  // namespace

TEST_SUITE("poset") {
    TEST_CASE("closures and bounds on small cases") {
        FinPoset c = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK(lower_closure(c, c.subset({"b"})) == c.subset({"a", "b"}));
        CHECK(lower_closure(c, c.empty_set()) == c.empty_set());
        CHECK(upper_closure(c, c.empty_set()) == c.empty_set());
        CHECK(upper_bounds(c, c.empty_set()) == c.full_set());
        FinPoset ab = antichain_poset(2);
        CHECK(upper_bounds(ab, principal_down(ab, 0)) == principal_up(ab, 0));
        CHECK(upper_bounds(ab, principal_down(ab, 0)).count() == 1);
    }

    TEST_CASE("closure keeps the upper bounds, and the Galois law") {
        for (const auto& p : random_sample(17, 200)) {
            const int n = p.size();
            for (unsigned m = 0; m < (1u << n); m += 3) {
                Subset s = subset_from_mask(n, m);
                CHECK(upper_bounds(p, lower_closure(p, s)) == upper_bounds(p, s));
                for (unsigned k = 0; k < (1u << n); k += 5) {
                    Subset u = subset_from_mask(n, k);
                    CHECK(u.is_subset_of(upper_bounds(p, s)) == s.is_subset_of(lower_bounds(p, u)));
                }
            }
        }
    }

    TEST_CASE("degenerate and tiny posets") {
        FinPoset empty = make_poset({}, {});
        auto dm = dm_completion(empty);
        REQUIRE(dm.cuts.size() == 1);
        CHECK(dm.cuts[0].lower.none());
        CHECK(dm.cuts[0].upper.none());
        CHECK(oracle_dm(chain_poset(1)).size() == 1);
        auto two = dm_completion(chain_poset(2));
        CHECK(two.cuts.size() == 2);
        CHECK(order_isomorphism(two.lattice, chain_poset(2)).has_value());
    }

    TEST_CASE("the two-crown has seven cuts") {
        // by hand: {}, {a}, {b}, {a,b}, {a,b,c}, {a,b,d}, all; {a,b} is the new middle
        FinPoset crown = make_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
        CHECK(oracle_dm(crown).size() == 7);
        auto dm = dm_completion(crown);
        CHECK(dm.cuts.size() == 7);
        CHECK(std::any_of(dm.cuts.begin(), dm.cuts.end(),
                          [&](const PosetCut& c) { return c.lower == crown.subset({"a", "b"}); }));
    }

    TEST_CASE("cut joins and meets") {
        FinPoset ab = antichain_poset(2);
        auto dm = dm_completion(ab);
        PosetCut bottom = cut_join(ab, {});
        CHECK(bottom.lower.none());
        PosetCut top = cut_meet(ab, {});
        CHECK(top.lower == ab.full_set());
        PosetCut j = cut_join(ab, {dm.cuts[dm.embed[0]], dm.cuts[dm.embed[1]]});
        CHECK(j.lower == ab.full_set());
        CHECK(j.upper.none());
        for (const auto& p : random_sample(23, 40)) {
            auto d = dm_completion(p);
            const int n = static_cast<int>(d.cuts.size());
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    PosetCut cj = cut_join(p, {d.cuts[x], d.cuts[y]});
                    PosetCut cm = cut_meet(p, {d.cuts[x], d.cuts[y]});
                    auto lj = join(d.lattice, x, y);
                    auto lm = meet(d.lattice, x, y);
                    REQUIRE(lj);
                    REQUIRE(lm);
                    CHECK(cj.lower == d.cuts[*lj].lower);
                    CHECK(cm.lower == d.cuts[*lm].lower);
                }
        }
    }

    TEST_CASE("oracle matches on every poset up to four elements") {
        for (const auto& p : all_posets_up_to_iso(4)) CHECK(sorted(oracle_dm(p)) == sorted(dm_completion(p).cuts));
    }
}
