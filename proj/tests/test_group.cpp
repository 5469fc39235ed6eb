#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "sis/errors.hpp"
#include "sis/group.hpp"
#include "test_support.hpp"

using namespace sis;
using sis::testing::el;

TEST_CASE("make_group orders and rejects bad moduli") {
    CHECK(make_group({8}).order() == 8);
    CHECK(make_group({2, 4}).order() == 8);
    CHECK(make_group({1}).order() == 1);
    CHECK(make_group({2, 4}).exponent() == 4);
    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({-3}), std::invalid_argument);
}

TEST_CASE("flat index follows lexicographic order") {
    const Group g({2, 3});
    for (std::size_t i = 0; i + 1 < g.order(); ++i) CHECK(g.element(i) < g.element(i + 1));
    CHECK(g.index(el({1, 2})) == 5);
    CHECK(g.reduce(std::vector<std::int64_t>{-1, 7}) == el({1, 1}));
    CHECK_THROWS_AS(g.index(el({2, 0})), std::invalid_argument);
    CHECK_THROWS_AS(g.index(el({1})), std::invalid_argument);
}

TEST_CASE("subgroup_closure") {
    const Group g({8});
    CHECK(subgroup_closure(g, {el({4})}).elements() == std::vector<std::size_t>{0, 4});
    CHECK(subgroup_closure(g, {}).elements() == std::vector<std::size_t>{0});
    CHECK(subgroup_closure(g, {el({2}), el({4})}).elements() == std::vector<std::size_t>{0, 2, 4, 6});

    SUBCASE("idempotent") {
        const Group g2({3, 9});
        std::mt19937_64 rng(7);
        for (int t = 0; t < 30; ++t) {
            const auto s = sis::testing::random_subgroup(g2, rng);
            std::vector<Element> all;
            for (auto x : s.elements()) all.push_back(g2.element(x));
            CHECK(subgroup_closure(g2, all) == s);
            CHECK(is_subgroup(g2, s.elements()));
        }
    }
}

TEST_CASE("annihilator examples") {
    const Group g({8});
    CHECK(annihilator(g, trivial_subgroup(g)).order() == 8);
    CHECK(annihilator(g, whole_group(g)).elements() == std::vector<std::size_t>{0});
    CHECK(annihilator(g, subgroup_closure(g, {el({4})})).elements() == std::vector<std::size_t>{0, 2, 4, 6});
}

TEST_CASE("transversal examples") {
    const Group g({8});
    const auto evens = subgroup_closure(g, {el({2})});
    CHECK(transversal(g, evens).reps() == std::vector<std::size_t>{0, 1});
    const auto k = subgroup_closure(g, {el({4})});
    CHECK(transversal(evens, k).reps() == std::vector<std::size_t>{0, 2});
    CHECK(transversal(g, whole_group(g)).reps() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(transversal(k, evens), std::invalid_argument);
}

TEST_CASE("character values") {
    const Group g({8});
    CHECK(std::abs(character(g, el({0}), el({5})) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(character(g, el({4}), el({2})) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(character(g, el({1}), el({1})) - std::polar(1.0, std::numbers::pi / 4)) < 1e-12);
}

TEST_CASE("subgroups_between examples") {
    const Group g({8});
    CHECK(subgroups_between(g, whole_group(g)).size() == 1);
    const auto above = subgroups_between(g, subgroup_closure(g, {el({4})}));
    REQUIRE(above.size() == 3);
    CHECK(above[0].elements() == std::vector<std::size_t>{0, 4});
    CHECK(above[1].elements() == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(above[2].order() == 8);
    const Group klein({2, 2});
    CHECK(subgroups_between(klein, trivial_subgroup(klein)).size() == 5);
}

// Reference enumeration: close H together with every subset of a transversal.
TEST_CASE("subgroups_between matches subset enumeration") {
    for (auto moduli : {std::vector<std::int64_t>{12}, {2, 4}, {2, 2, 2}, {3, 3}}) {
        const Group g(moduli);
        for (const auto& h : subgroups_between(g, trivial_subgroup(g))) {
            const auto reps = transversal(g, h).reps();
            std::set<std::vector<std::size_t>> expected;
            for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
                auto gens = h.generators();
                for (std::size_t b = 0; b < reps.size(); ++b) {
                    if (mask & (std::size_t{1} << b)) gens.push_back(g.element(reps[b]));
                }
                expected.insert(subgroup_closure(g, gens).elements());
            }
            std::set<std::vector<std::size_t>> got;
            for (const auto& m : subgroups_between(g, h)) got.insert(m.elements());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("annihilator duality, order identity, tiling and character membership") {
    for (auto moduli : {std::vector<std::int64_t>{12}, {16}, {2, 4}, {2, 2, 2}, {3, 9}, {1}}) {
        const Group g(moduli);
        for (const auto& k : subgroups_between(g, trivial_subgroup(g))) {
            const auto ks = annihilator(g, k);
            CHECK(k.order() * ks.order() == g.order());
            CHECK(annihilator(g, ks) == k);
            for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
                bool kills = true;
                for (auto x : k.elements()) kills = kills && std::abs(g.character(x, gamma) - 1.0) <= 1e-12;
                CHECK(kills == ks.contains(gamma));
            }
            const auto t = transversal(g, k);
            CHECK(t.size() * k.order() == g.order());
            std::vector<int> hits(g.order(), 0);
            for (auto r : t.reps()) {
                CHECK(t.rep_position(r) == t.find_rep(r));
                for (auto x : k.elements()) hits[g.add(r, x)] += 1;
            }
            CHECK(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
            // Each representative is the minimum of its coset.
            for (std::size_t x = 0; x < g.order(); ++x) CHECK(t.reps()[t.rep_position(x)] <= x);
        }
    }
}

TEST_CASE("character bilinearity") {
    const Group g({3, 9});
    for (std::size_t x = 0; x < g.order(); x += 4) {
        for (std::size_t y = 0; y < g.order(); y += 5) {
            for (std::size_t gamma = 0; gamma < g.order(); gamma += 3) {
                const auto lhs = g.character(g.add(x, y), gamma);
                CHECK(std::abs(lhs - g.character(x, gamma) * g.character(y, gamma)) < 1e-12);
                CHECK(std::abs(std::abs(lhs) - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("subgroup_from_elements rejects non-subgroups") {
    const Group g({8});
    CHECK(subgroup_from_elements(g, {0, 4}).order() == 2);
    CHECK_THROWS_AS(subgroup_from_elements(g, {0, 2}), InconsistencyError);
    CHECK_THROWS_AS(subgroup_from_elements(g, {4}), InconsistencyError);
}
