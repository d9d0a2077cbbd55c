#include <gtest/gtest.h>

#include "varfix/errors.hpp"
#include "varfix/hypotheses.hpp"
#include "varfix/models.hpp"
#include "varfix/solver.hpp"

#include <cmath>
#include <limits>

using namespace varfix;

namespace {

PotentialOperatorSpec zero_op(int n)
{
    return PotentialOperatorSpec::create("zero", n, [n](const H1Vector&) { return H1Vector(n); }, {});
}

} // namespace

TEST(SolverConfig, Validation)
{
    EXPECT_NO_THROW(SolverConfig{}.validate());
    SolverConfig c;
    c.armijo_c = 1.0;
    EXPECT_THROW(c.validate(), DomainError);
    c = {};
    c.armijo_shrink = 0.0;
    EXPECT_THROW(c.validate(), DomainError);
    c = {};
    c.grad_tol = -1.0;
    EXPECT_THROW(c.validate(), DomainError);
    c = {};
    c.max_iter = 0;
    EXPECT_THROW(c.validate(), DomainError);
}

TEST(Descend, OneDimensionalModel)
{
    const PotentialOperatorSpec A = power_model(2.0, 0.5);
    const CriticalPoint p = descend(A, H1Vector{1.0}, SolverConfig{});
    EXPECT_TRUE(p.converged);
    EXPECT_NEAR(p.u[0], 4.0, 1e-8);
    EXPECT_LE(p.fp_residual, 1e-8);
    EXPECT_NEAR(p.j_value, -8.0 / 3.0, 1e-8);
    EXPECT_EQ(p.grad_norm, p.fp_residual);

    const CriticalPoint n = descend(A, H1Vector{-1.0}, SolverConfig{});
    EXPECT_NEAR(n.u[0], -4.0, 1e-8);
}

TEST(Descend, ZeroOperatorGoesToOrigin)
{
    const CriticalPoint p = descend(zero_op(3), H1Vector{1.0, -2.0, 0.5}, SolverConfig{});
    EXPECT_TRUE(p.converged);
    EXPECT_LE(norm(p.u), 1e-10);
}

TEST(Descend, MonotoneArmijoDecrease)
{
    const PotentialOperatorSpec A = truncated_cubic_model(2.0, 2.0, 2, 1);
    SolverConfig cfg;
    const CriticalPoint p = descend(A, H1Vector{0.3, 0.1}, cfg);
    ASSERT_GE(p.trace.size(), 2u);
    for (std::size_t k = 0; k + 1 < p.trace.size(); ++k) {
        const auto& a = p.trace[k];
        const auto& b = p.trace[k + 1];
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a.j_value));
        EXPECT_LE(b.j_value, a.j_value - cfg.armijo_c * a.step * a.grad_norm * a.grad_norm + floor) << k;
    }
}

TEST(Descend, BlowupIsReported)
{
    const PotentialOperatorSpec bad = PotentialOperatorSpec::create(
        "bad", 1,
        [](const H1Vector& u) {
            return std::abs(u[0]) > 1.5 ? H1Vector{std::numeric_limits<double>::quiet_NaN()} : H1Vector{2.0 * u[0]};
        },
        {.odd = true, .theta = 0.0, .closed_form_potential = {}, .validation_seed = 0, .validation_samples = 10,
         .validation_radius = 1.0});
    EXPECT_THROW(descend(bad, H1Vector{1.0}, SolverConfig{}), NumericalBlowup);
}

TEST(FindPairs, OneDimensionalModelHasExactlyOnePair)
{
    const PotentialOperatorSpec A = power_model(2.0, 0.5);
    const SolveReport rep = find_pairs(A, seeds_pair(H1Vector{1.0}, 0.5), SolverConfig{});
    ASSERT_EQ(rep.n_pairs, 1);
    EXPECT_NEAR(rep.pairs[0].u[0], 4.0, 1e-8);
    EXPECT_GT(rep.pairs[0].u[0], 0.0);
    EXPECT_LT(rep.pairs[0].j_value, 0.0);
    EXPECT_EQ(rep.ps_trace.size(), 2u);
}

TEST(FindPairs, ZeroOperatorRejectsAllStarts)
{
    const SolveReport rep = find_pairs(zero_op(2), seeds_circle(H1Vector{1.0, 0.0}, H1Vector{0.0, 1.0}, 0.5, 4),
                                       SolverConfig{});
    EXPECT_EQ(rep.n_pairs, 0);
    EXPECT_EQ(rep.rejected_trivial, 8);
    EXPECT_FALSE(rep.diagnostic.empty());
}

TEST(FindPairs, TruncatedCubicFindsDistinctPairs)
{
    const PotentialOperatorSpec A = truncated_cubic_model(2.0, 2.0, 2, 1);
    const SolverConfig cfg;
    const SolveReport rep = find_pairs(A, seeds_circle(H1Vector{1.0, 0.0}, H1Vector{0.0, 1.0}, 0.5, 16), cfg);
    ASSERT_GE(rep.n_pairs, 2);
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& p = rep.pairs[i];
        EXPECT_LT(p.j_value, 0.0);
        for (int k = 0; k < 2; ++k) {
            const double c = std::abs(p.u[k]);
            EXPECT_TRUE(c < 1e-6 || std::abs(c - 1.0) < 1e-6) << c;
        }
        // canonical sign
        const int lead = std::abs(p.u[0]) > cfg.dedup_tol ? 0 : 1;
        EXPECT_GT(p.u[lead], 0.0);
        EXPECT_LE(p.fp_residual_neg, 2.0 * p.fp_residual + 1e-12);
        for (std::size_t j = 0; j < i; ++j) {
            const auto& q = rep.pairs[j].u;
            EXPECT_GT(std::min(norm(p.u - q), norm(p.u + q)), cfg.dedup_tol);
        }
        if (i > 0) {
            EXPECT_LE(rep.pairs[i - 1].j_value, p.j_value);
        }
    }
}

TEST(FindPairs, Deterministic)
{
    const PotentialOperatorSpec A = truncated_cubic_model(2.0, 2.0, 2, 1);
    const auto seeds = seeds_circle(H1Vector{1.0, 0.0}, H1Vector{0.0, 1.0}, 0.5, 16);
    const SolveReport a = find_pairs(A, seeds, SolverConfig{});
    const SolveReport b = find_pairs(A, seeds, SolverConfig{});
    ASSERT_EQ(a.n_pairs, b.n_pairs);
    for (int i = 0; i < a.n_pairs; ++i) {
        EXPECT_EQ(a.pairs[i].u.to_std(), b.pairs[i].u.to_std());
        EXPECT_EQ(a.pairs[i].j_value, b.pairs[i].j_value);
    }
}

TEST(FindPairs, TheoremLevelPropertyOneDimensional)
{
    const PotentialOperatorSpec A = power_model(2.0, 0.5);
    const LinearOperatorSpec B = LinearOperatorSpec::scaled_identity(1, 1.5);
    const H1Vector e1{1.0};
    const double r1 = 0.5;
    ASSERT_TRUE(check_H1(B, e1).passed());
    ASSERT_TRUE(check_H2(A, B, e1, r1).passed());
    const SolveReport rep = find_pairs(A, seeds_pair(e1, r1), SolverConfig{});
    ASSERT_GE(rep.n_pairs, 1);
    EXPECT_LT(rep.pairs[0].j_value, 0.0);
}

TEST(Deflation, BumpIsCompactAndGradientMatchesFiniteDifference)
{
    Deflation d;
    d.centers.push_back(H1Vector{1.0, 0.0});
    d.radii.push_back(0.2);
    d.heights.push_back(3.0);
    EXPECT_EQ(d.value(H1Vector{1.5, 0.0}), 0.0);
    EXPECT_EQ(norm(d.gradient(H1Vector{1.5, 0.0})), 0.0);
    EXPECT_DOUBLE_EQ(d.value(H1Vector{1.0, 0.0}), 3.0);
    EXPECT_TRUE(d.inside(H1Vector{1.1, 0.0}));
    const H1Vector u{1.05, 0.07};
    const H1Vector g = d.gradient(u);
    const double h = 1e-6;
    for (int k = 0; k < 2; ++k) {
        H1Vector e(2);
        e[k] = h;
        EXPECT_NEAR((d.value(u + e) - d.value(u - e)) / (2 * h), g[k], 1e-6);
    }
}

TEST(PsCheck, TriangleInequality)
{
    const PotentialOperatorSpec A = power_model(2.0, 0.5);
    const CriticalPoint p = descend(A, H1Vector{1.0}, SolverConfig{});
    const H1Vector v = A.apply(p.tail.back());
    EXPECT_LE(ps_check(p.tail, v, A), 1e-12);
    const std::vector<H1Vector> constant(5, H1Vector{4.0});
    EXPECT_NEAR(ps_check(constant, A.apply(H1Vector{4.0}), A), 0.0, 1e-15);
}

TEST(CanonicalSign, FirstSignificantCoefficientPositive)
{
    EXPECT_EQ(canonical_sign(H1Vector{-1e-9, -2.0}, 1e-6).to_std(), (std::vector<double>{1e-9, 2.0}));
    EXPECT_EQ(canonical_sign(H1Vector{0.5, -2.0}, 1e-6).to_std(), (std::vector<double>{0.5, -2.0}));
}

TEST(Seeds, CircleAndPair)
{
    const auto pair = seeds_pair(H1Vector{0.0, 1.0}, 0.5);
    ASSERT_EQ(pair.size(), 1u);
    EXPECT_DOUBLE_EQ(norm(pair[0]), 0.5);
    const auto circle = seeds_circle(H1Vector{1.0, 0.0}, H1Vector{0.0, 1.0}, 0.5, 16);
    ASSERT_EQ(circle.size(), 16u);
    for (const auto& s : circle) {
        EXPECT_NEAR(norm(s), 0.5, 1e-15);
    }
}
