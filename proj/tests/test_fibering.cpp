#include <random>

#include "doctest.h"
#include "sis/fibering.hpp"
#include "sis/oracle.hpp"
#include "test_support.hpp"

using namespace sis;
using sis::testing::el;

TEST_CASE("make_fiber_context examples") {
    const Group g({8});
    const auto c1 = make_fiber_context(g, subgroup_closure(g, {el({4})}));
    CHECK(c1.kstar.elements() == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(c1.section.reps() == std::vector<std::size_t>{0, 1});
    const auto c2 = make_fiber_context(g, whole_group(g));
    CHECK(c2.kstar.elements() == std::vector<std::size_t>{0});
    CHECK(c2.section.size() == 8);
    const auto c3 = make_fiber_context(g, subgroup_closure(g, {el({2})}));
    CHECK(c3.kstar.elements() == std::vector<std::size_t>{0, 4});
    CHECK(c3.section.reps() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(c3.section_size() * c3.fiber_length() == g.order());
}

TEST_CASE("fiberize examples") {
    sis::testing::RunningExample ex;
    const auto ctx = make_fiber_context(ex.g, ex.h);
    const auto fm = fiberize(ctx, ex.phi);
    const std::vector<Complex> expected{1.0, 0.0, 1.0, 0.0};
    for (int j = 0; j < 4; ++j) CHECK(std::abs(fm.columns(j, 0) - expected[static_cast<std::size_t>(j)]) < 1e-12);
    CHECK(fiberize(ctx, Signal::zero(ex.g)).columns.norm() == 0.0);

    const auto full = make_fiber_context(ex.g, whole_group(ex.g));
    const auto fs = fiberize(full, ex.phi_hat);
    CHECK(fs.columns.rows() == 1);
    for (int w = 0; w < 8; ++w) CHECK(fs.columns(0, w) == ex.phi_hat.values[static_cast<std::size_t>(w)]);
}

TEST_CASE("fiberize is an isometry up to 1/|G|") {
    std::mt19937_64 rng(11);
    for (auto moduli : {std::vector<std::int64_t>{12}, {2, 4}, {3, 9}}) {
        const Group g(moduli);
        for (const auto& k : subgroups_between(g, trivial_subgroup(g))) {
            const auto ctx = make_fiber_context(g, k);
            const auto f = sis::testing::random_signal(g, rng);
            const double lhs = fiberize(ctx, f).norm_squared();
            const double rhs = norm_squared(f) / static_cast<double>(g.order());
            CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
        }
    }
}

TEST_CASE("gramian examples") {
    sis::testing::RunningExample ex;
    const auto ctx = make_fiber_context(ex.g, ex.h);
    const auto g0 = gramian(ctx, {ex.phi}, el({0}));
    REQUIRE(g0.matrix.rows() == 1);
    CHECK(std::abs(g0.matrix(0, 0) - 0.25) < 1e-12);
    CHECK(std::abs(gramian(ctx, {ex.phi}, el({1})).matrix(0, 0) - 0.25) < 1e-12);
    CHECK(gramian(ctx, {Signal::zero(ex.g)}, el({0})).matrix.norm() == 0.0);
    CHECK_THROWS_AS(gramian(ctx, {ex.phi}, el({2})), std::invalid_argument);
    CHECK_THROWS_AS(gramian(ctx, {}, el({0})), std::invalid_argument);
}

TEST_CASE("numerical_rank examples") {
    CHECK(numerical_rank(ComplexMatrix::Zero(3, 3)) == 0);
    CHECK(numerical_rank(ComplexMatrix::Identity(2, 2)) == 2);
    ComplexMatrix q(1, 1);
    q(0, 0) = 0.25;
    CHECK(numerical_rank(q) == 1);
    ComplexMatrix r(2, 2);
    r << 1.0, 2.0, 2.0, 4.0;
    CHECK(numerical_rank(r) == 1);
}

TEST_CASE("dim_function examples") {
    sis::testing::RunningExample ex;
    const auto ctx = make_fiber_context(ex.g, ex.h);
    CHECK(dim_function(ctx, std::vector<Signal>{ex.phi}) == std::vector<int>{1, 1});
    CHECK(dim_function(ctx, std::vector<Signal>{Signal::zero(ex.g)}) == std::vector<int>{0, 0});
    CHECK(dim_function(ctx, std::vector<Signal>{Signal::delta(ex.g, 0)}) == std::vector<int>{1, 1});
}

TEST_CASE("gramians are Hermitian PSD and their rank equals the raw fiber rank") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        const auto inst = sis::testing::random_instance(rng);
        const auto ctx = make_fiber_context(inst.g, inst.h);
        for (std::size_t w = 0; w < ctx.section_size(); ++w) {
            const auto gm = gramian_at(ctx, inst.spectra, w);
            CHECK((gm - gm.adjoint()).norm() <= 1e-12 * std::max(1.0, gm.norm()));
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gm);
            const auto& ev = eig.eigenvalues();
            CHECK(ev.minCoeff() >= -1e-10 * std::max(1e-300, ev.cwiseAbs().maxCoeff()));
            CHECK(numerical_rank(gm) == numerical_rank(fiber_columns(ctx, inst.spectra, w)));
        }
    }
}

TEST_CASE("fiber_membership examples") {
    sis::testing::RunningExample ex;
    const auto ctx = make_fiber_context(ex.g, ex.h);
    const std::vector<Signal> phi{ex.phi};
    const auto self = fiber_membership(ctx, phi, ex.phi);
    CHECK(self.member);
    for (auto r : self.residuals) CHECK(r < 1e-12);
    CHECK(fiber_membership(ctx, phi, translate(ex.phi, el({4}))).member);
    const auto shifted = fiber_membership(ctx, phi, translate(ex.phi, el({1})));
    CHECK_FALSE(shifted.member);
    CHECK(fiber_membership(ctx, phi, translate(ex.phi, el({2}))).member);
    CHECK(fiber_membership(ctx, phi, Signal::zero(ex.g)).member);
}

TEST_CASE("fiber_membership agrees with dense span membership on 200 instances") {
    std::mt19937_64 rng(13);
    int members = 0;
    for (int t = 0; t < 200; ++t) {
        const auto inst = sis::testing::random_instance(rng);
        const auto ctx = make_fiber_context(inst.g, inst.h);
        const auto basis = oracle::make_span_basis(inst.g, inst.h, inst.signals);

        Signal g = Signal::zero(inst.g);
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_int_distribution<std::size_t> pick(0, inst.g.order() - 1);
        std::uniform_int_distribution<std::size_t> gen(0, inst.signals.size() - 1);
        switch (kind(rng)) {
            case 0: {
                std::normal_distribution<double> nd;
                for (const auto& col : basis.columns) {
                    const Complex c{nd(rng), nd(rng)};
                    for (std::size_t i = 0; i < col.size(); ++i) g.values[i] += c * col[i];
                }
                break;
            }
            case 1:
                g = translate(inst.signals[gen(rng)], pick(rng));
                break;
            default:
                g = idft(sis::testing::random_integer_spectrum(inst.g, 0.5, rng));
        }
        const bool fiber_side = fiber_membership(ctx, inst.signals, g).member;
        const bool dense_side = oracle::brute_span_membership(basis, g);
        CHECK(fiber_side == dense_side);
        members += fiber_side ? 1 : 0;
    }
    // Both outcomes must be represented.
    CHECK(members > 20);
    CHECK(members < 180);
}
