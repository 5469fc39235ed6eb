#include <random>

#include "doctest.h"
#include "sis/oracle.hpp"
#include "test_support.hpp"

using namespace sis;
using sis::testing::el;

TEST_CASE("span basis has |Phi| * |H| columns") {
    sis::testing::RunningExample ex;
    const auto basis = oracle::make_span_basis(ex.g, ex.h, {ex.phi, Signal::delta(ex.g, 3)});
    CHECK(basis.columns.size() == 4);
}

TEST_CASE("brute_span_membership examples") {
    sis::testing::RunningExample ex;
    const auto basis = oracle::make_span_basis(ex.g, ex.h, {ex.phi});
    for (const auto& col : basis.columns) CHECK(oracle::brute_span_membership(basis, Signal(ex.g, col)));

    // Complement of S: spectrum supported off {0,1,4,5}.
    const auto outside = idft(Spectrum::indicator(ex.g, {2, 7}));
    CHECK_FALSE(oracle::brute_span_membership(basis, outside));
    CHECK(oracle::brute_span_residual(basis, outside) > 0.99);

    CHECK_FALSE(oracle::brute_span_membership(basis, translate(ex.phi, el({1}))));
    CHECK(oracle::brute_span_membership(basis, translate(ex.phi, el({2}))));
    CHECK(oracle::brute_span_membership(basis, Signal::zero(ex.g)));
}

TEST_CASE("brute_invariance_set examples") {
    sis::testing::RunningExample ex;
    CHECK(oracle::brute_invariance_set(ex.g, ex.h, {ex.phi}).elements() == std::vector<std::size_t>{0, 2, 4, 6});
    const Group z4({4});
    CHECK(oracle::brute_invariance_set(z4, trivial_subgroup(z4), {Signal::delta(z4, 0)}).elements() ==
          std::vector<std::size_t>{0});
    std::vector<Signal> all;
    for (std::size_t i = 0; i < 4; ++i) all.push_back(Signal::delta(z4, i));
    CHECK(oracle::brute_invariance_set(z4, trivial_subgroup(z4), all).is_whole_group());
}

TEST_CASE("brute_decomposition_check examples") {
    sis::testing::RunningExample ex;
    const auto yes = oracle::brute_decomposition_check(ex.g, ex.h, ex.m, {ex.phi});
    CHECK(yes.holds);
    CHECK(yes.dim_s == 2);
    CHECK(yes.dim_sum == 2);

    const auto no = oracle::brute_decomposition_check(ex.g, ex.h, whole_group(ex.g), {ex.phi});
    CHECK_FALSE(no.holds);
    CHECK(no.worst_residual > 0.1);

    CHECK(oracle::brute_decomposition_check(ex.g, ex.h, whole_group(ex.g), {Signal::zero(ex.g)}).holds);
    CHECK_THROWS_AS(oracle::brute_decomposition_check(ex.g, ex.m, ex.h, {ex.phi}), std::invalid_argument);
}

TEST_CASE("orthonormal set stays orthonormal") {
    std::mt19937_64 rng(31);
    const Group g({12});
    oracle::OrthonormalSet q(g.order());
    for (int i = 0; i < 20; ++i) q.add(sis::testing::random_signal(g, rng).values, 1e-9);
    CHECK(q.size() == 12);
    CHECK(q.relative_residual(sis::testing::random_signal(g, rng).values) < 1e-12);
}
