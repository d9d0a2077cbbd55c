#include <gtest/gtest.h>

#include "varfix/bvp.hpp"
#include "varfix/errors.hpp"
#include "varfix/operators.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace varfix;
using namespace varfix::bvp;

namespace {

constexpr double pi = std::numbers::pi;

Nonlinearity custom(std::string name, PointwiseMap f)
{
    Nonlinearity nl;
    nl.name = std::move(name);
    nl.f = std::move(f);
    nl.a1 = [](double) { return 1.0; };
    nl.a2 = [](double) { return 1.0; };
    nl.a3 = [](double) { return 0.0; };
    return nl;
}

} // namespace

TEST(GreenKernel, Examples)
{
    EXPECT_DOUBLE_EQ(green_kernel(0.3, 0.6), 0.12);
    EXPECT_EQ(green_kernel(0.0, 0.4), 0.0);
    EXPECT_EQ(green_kernel(1.0, 0.4), 0.0);
    EXPECT_DOUBLE_EQ(green_kernel(0.5, 0.5), 0.25);
    EXPECT_THROW(green_kernel(1.2, 0.5), DomainError);
}

TEST(GreenOperator, KernelInvariants)
{
    const Discretization disc;
    const GreenOperator G(disc);
    const Eigen::MatrixXd& K = G.kernel();
    EXPECT_EQ((K - K.transpose()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_GE(K.minCoeff(), 0.0);
    EXPECT_LE(K.maxCoeff(), 0.25);
}

TEST(GreenOperator, LiftOfConstantIsParabola)
{
    const Discretization disc;
    const GreenOperator G(disc);
    for (double t : {0.0, 0.1, 0.5, 0.77, 1.0}) {
        EXPECT_NEAR(G.evaluate([](double) { return 2.0; }, t), t * (1.0 - t), 1e-15);
    }
}

TEST(ApplyA, Examples)
{
    const Discretization disc;
    const H1Vector e1 = H1Vector::basis(32, 1);
    EXPECT_EQ(norm(apply_A(zero_nonlinearity(), e1, disc)), 0.0);

    const Nonlinearity forcing =
        custom("forcing", [](double t, double) { return pi * pi * std::sqrt(2.0) / pi * std::sin(pi * t); });
    EXPECT_LE(norm(apply_A(forcing, H1Vector(32), disc) - e1), 1e-11);

    const H1Vector a = apply_A(linear_nonlinearity(5.0), e1, disc);
    EXPECT_LE(norm(a - e1 * (5.0 / (pi * pi))), 1e-11);
}

TEST(ApplyA, SatisfiesTheOdeAndBoundaryConditions)
{
    const Discretization disc;
    const Nonlinearity nl = tanh_nonlinearity(5.0, 0.5);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10; ++i) {
        const H1Vector u = random_vector(32, rng, 1.0, 2.0);
        EXPECT_LE(ode_residual(nl, u, disc), 1e-6);
        const std::vector<double> prof = solution_profile(nl, u, {0.0, 1.0});
        EXPECT_EQ(prof[0], 0.0);
        EXPECT_EQ(prof[1], 0.0);
    }
}

TEST(ApplyA, ProfileMatchesTruncatedSeriesForSmoothForcing)
{
    const Discretization disc;
    const Nonlinearity nl = tanh_nonlinearity(2.0, 0.5);
    std::mt19937_64 rng(2);
    const H1Vector u = random_vector(32, rng, 1.0, 2.0);
    const H1Vector au = apply_A(nl, u, disc);
    const std::vector<double> ts = uniform_output_grid(101);
    const std::vector<double> prof = solution_profile(nl, u, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_NEAR(prof[i], evaluate(au, ts[i]), 1e-5);
    }
}

TEST(ApplyA, BlowupOnNonFiniteF)
{
    const Discretization disc;
    const Nonlinearity nl = custom("bad", [](double, double u) { return u > 0.1 ? INFINITY : 0.0; });
    EXPECT_THROW(apply_A(nl, H1Vector::basis(32, 1), disc), NumericalBlowup);
}

TEST(ApplyB, Examples)
{
    const Discretization disc;
    const H1Vector e1 = H1Vector::basis(32, 1);
    EXPECT_LE(norm(apply_B([](double) { return pi * pi; }, e1, disc) - e1), 1e-11);
    EXPECT_EQ(norm(apply_B([](double) { return 3.0; }, H1Vector(32), disc)), 0.0);
    const double m = 1.7;
    EXPECT_NEAR(inner(apply_B([m](double) { return m; }, e1, disc), e1), m / (pi * pi), 1e-15);
}

TEST(ApplyB, SelfAdjointAndMatrixForm)
{
    const Discretization disc;
    const Nonlinearity nl = example_5_3(0.5, 0.5);
    const LinearOperatorSpec B = b_operator(nl.a1, disc);
    EXPECT_TRUE(B.self_adjoint());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const H1Vector u = random_vector(32, rng, 1.0, 1.0);
        const H1Vector v = random_vector(32, rng, 1.0, 1.0);
        EXPECT_LE(std::abs(inner(apply_B(nl.a1, u, disc), v) - inner(u, apply_B(nl.a1, v, disc))), 1e-10);
        EXPECT_LE(norm(B.apply(u) - apply_B(nl.a1, u, disc)), 1e-13);
    }
}

TEST(BvpFunctional, Examples)
{
    const Discretization disc;
    const H1Vector e1 = H1Vector::basis(32, 1);
    EXPECT_EQ(bvp_functional(example_5_3(0.5, 0.5), H1Vector(32), disc), 0.0);
    EXPECT_NEAR(bvp_functional(linear_nonlinearity(5.0), e1, disc), 0.5 - 5.0 / (2.0 * pi * pi), 1e-14);
    EXPECT_NEAR(bvp_functional(linear_nonlinearity(5.0), e1, disc), 0.24670, 1e-5);
}

TEST(BvpFunctional, AgreesWithAvezFunctional)
{
    const Discretization disc;
    const Nonlinearity nl = example_5_3(0.5, 0.5);
    const PotentialOperatorSpec A = make_bvp_operator(nl, disc);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const H1Vector u = random_vector(32, rng, 1.0, 1.0);
        EXPECT_LE(std::abs(functional_J(A, u) - bvp_functional(nl, u, disc)), 1e-8);
        // closed-form primitive gives the same value
        EXPECT_LE(std::abs(objective_J(A, u) - bvp_functional(nl, u, disc)), 1e-10);
    }
}

TEST(BvpOperator, GradientIdentity)
{
    // (J'(u), v) = int u'v' - int f(t,u) v
    const Discretization disc;
    const Nonlinearity nl = example_5_3(0.5, 0.5);
    const PotentialOperatorSpec A = make_bvp_operator(nl, disc);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const H1Vector u = random_vector(32, rng, 1.0, 1.0);
        const H1Vector v = random_vector(32, rng, 1.0, 1.0);
        const Eigen::VectorXd uu = disc.synthesize(u);
        const Eigen::VectorXd vv = disc.synthesize(v);
        std::vector<double> fv;
        const auto nodes = disc.nodes();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            fv.push_back(nl.f(nodes[j], uu[jj]) * vv[jj]);
        }
        EXPECT_NEAR(inner(gradient_J(A, u), v), inner(u, v) - disc.integrate(fv), 1e-8);
    }
}

TEST(BvpOperator, GrowthChainWithIntegralConstants)
{
    const Discretization disc;
    const double r1 = 0.5;
    const Nonlinearity nl = example_5_3(r1, 0.5);
    const PotentialOperatorSpec A = make_bvp_operator(nl, disc);
    const double c1 = std::sqrt(r1) * 1.5;   // int (1+t) r1^(1/2)
    const double c2 = 0.5;                   // int t
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(1e3));
    for (int i = 0; i < 1000; ++i) {
        const H1Vector u = random_unit(32, rng) * std::exp(logr(rng));
        EXPECT_LE(norm(A.apply(u)), c1 * std::pow(norm(u), 0.5) + c2);
    }
}

TEST(Example53, Values)
{
    const Nonlinearity nl = example_5_3(0.25, 0.5);
    EXPECT_EQ(nl.f(0.3, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(nl.f(0.5, 1.0), 0.75);
    for (double t : {0.1, 0.5, 0.9}) {
        for (double u : {0.01, 0.3, 2.0, 50.0}) {
            EXPECT_EQ(nl.f(t, -u), -nl.f(t, u));
        }
    }
    const CoefficientBounds b = estimate_bounds(nl.a1, Discretization{});
    EXPECT_DOUBLE_EQ(b.m, 1.0);
    EXPECT_DOUBLE_EQ(b.M, 2.0);
}

TEST(CheckD1, PowerFamilyTouchesZeroAtR1)
{
    const HypothesisReport r = check_D1(example_5_3(0.5, 0.5), 0.5);
    EXPECT_EQ(r.verdict, Verdict::sampled_pass);
    EXPECT_EQ(r.margin, 0.0);
    EXPECT_THROW(check_D1(example_5_3(0.5, 0.5), 1.5), DomainError);
    EXPECT_EQ(check_D1(linear_nonlinearity(1.0), 0.5).margin, 0.0);
    EXPECT_EQ(check_D1(tanh_nonlinearity(1.0, 0.5), 0.5).verdict, Verdict::sampled_pass);
}

TEST(CheckD1, FailsWhenBelowA1)
{
    Nonlinearity nl = linear_nonlinearity(1.0);
    nl.a1 = [](double) { return 2.0; };
    EXPECT_EQ(check_D1(nl, 0.5).verdict, Verdict::fail);
}

TEST(CheckD2, Examples)
{
    const HypothesisReport r = check_D2(example_5_3(0.5, 0.5));
    EXPECT_EQ(r.verdict, Verdict::sampled_pass);
    EXPECT_GE(r.margin, 0.0);
    Nonlinearity nl = power_nonlinearity(3.0, 0.5, 0.5);
    nl.a2 = [](double) { return 1.0; };
    EXPECT_EQ(check_D2(nl).verdict, Verdict::fail);
}

TEST(CheckD3, PoincareCeilingMakesItInfeasible)
{
    const D3Result r = check_D3(1.0, 32);
    EXPECT_EQ(r.statement.verdict, Verdict::fail);
    EXPECT_EQ(r.proof.verdict, Verdict::fail);
    EXPECT_NEAR(r.ceiling, 1.0 / pi, 1e-16);
    EXPECT_NEAR(r.ceiling_sq, 1.0 / (pi * pi), 1e-16);
    EXPECT_LE(r.best_l2, r.ceiling + 1e-15);
    EXPECT_LE(r.best_l2_sq, r.ceiling_sq + 1e-15);
    // best orthonormal pair: rotated modes 1 and 2, min |e_i|^2 = 5 / (8 pi^2)
    EXPECT_NEAR(r.best_l2_sq, 5.0 / (8.0 * pi * pi), 1e-12);
    EXPECT_NEAR(std::abs(inner(r.e1, r.e2)), 0.0, 1e-12);
    EXPECT_FALSE(r.statement.note.empty());
}

TEST(CheckD3, LargeMPasses)
{
    EXPECT_EQ(check_D3(5.0, 32).statement.verdict, Verdict::pass);
    EXPECT_EQ(check_D3(5.0, 32).proof.verdict, Verdict::fail);
    EXPECT_EQ(check_D3(20.0, 32).proof.verdict, Verdict::pass);
}

TEST(CheckD4, Examples)
{
    const HypothesisReport r = check_D4(1.0, 2.0);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_NEAR(r.margin, std::pow(pi, 4) + 1.0 - 4.0 - 2.0 * pi * pi, 1e-12);
    EXPECT_EQ(check_D4(5.0, 5.0).verdict, Verdict::fail);
    EXPECT_THROW(check_D4(0.0, 1.0), DomainError);
    EXPECT_THROW(check_D4(2.0, 1.0), DomainError);
}

TEST(FirstEigenvalue, SpectralAndFiniteDifference)
{
    EXPECT_EQ(first_eigenvalue(EigenMethod::spectral), pi * pi);
    EXPECT_NEAR(first_eigenvalue(EigenMethod::spectral, 0, 2), 4.0 * pi * pi, 1e-12);
    EXPECT_NEAR(first_eigenvalue(EigenMethod::spectral), 9.8696044, 1e-7);
    for (int n : {4, 10, 100, 1000}) {
        const double h = 1.0 / n;
        EXPECT_NEAR(first_eigenvalue(EigenMethod::finite_difference, n), 2.0 * (1.0 - std::cos(pi * h)) / (h * h),
                    1e-9 * pi * pi)
            << n;
    }
    EXPECT_LE(std::abs(first_eigenvalue(EigenMethod::finite_difference, 1000) - pi * pi) / (pi * pi), 1e-4);
    EXPECT_GT(std::abs(first_eigenvalue(EigenMethod::finite_difference, 4) - pi * pi) / (pi * pi), 1e-4);
    EXPECT_THROW(first_eigenvalue(EigenMethod::finite_difference, 2), DomainError);
}

TEST(FirstEigenvalue, FiniteDifferenceSecondEigenvalue)
{
    const int n = 50;
    const double h = 1.0 / n;
    EXPECT_NEAR(first_eigenvalue(EigenMethod::finite_difference, n, 2), 2.0 * (1.0 - std::cos(2 * pi * h)) / (h * h),
                1e-8);
}

TEST(Shooting, ZeroForcingOnlyTrivial)
{
    const ShootingResult r = shooting_oracle(zero_nonlinearity(), -2.0, 2.0, 41, 1e-10);
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_TRUE(r.solutions[0].trivial);
    EXPECT_NEAR(r.solutions[0].sigma, 0.0, 1e-10);
    EXPECT_FALSE(r.degenerate);
}

TEST(Shooting, ResonanceIsDegenerate)
{
    const ShootingResult r = shooting_oracle(linear_nonlinearity(pi * pi), 0.5, 3.0, 20, 1e-6);
    EXPECT_TRUE(r.degenerate);
    EXPECT_TRUE(r.solutions.empty());
    EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Shooting, SublinearPowerHasSymmetricPair)
{
    const ShootingResult r = shooting_oracle(power_nonlinearity(10.0, 0.5, 0.5), 1.0, 10.0, 91, 1e-10);
    ASSERT_FALSE(r.solutions.empty());
    bool found = false;
    for (const auto& s : r.solutions) {
        if (std::abs(s.sigma - 4.331285399) < 1e-6) {
            found = true;
            EXPECT_LE(std::abs(s.end_value), 1e-10);
            EXPECT_EQ(s.profile.size(), 1001u);
        }
    }
    EXPECT_TRUE(found);
    const ShootingResult neg = shooting_oracle(power_nonlinearity(10.0, 0.5, 0.5), -10.0, -1.0, 91, 1e-10);
    ASSERT_EQ(neg.solutions.size(), r.solutions.size());
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        EXPECT_NEAR(neg.solutions[neg.solutions.size() - 1 - i].sigma, -r.solutions[i].sigma, 1e-9);
    }
}

TEST(Shooting, LinearHasClosedFormProfile)
{
    // with lambda != k^2 pi^2 only sigma = 0 solves; the IVP solution is sigma sin(w t)/w
    const ShootingResult r = shooting_oracle(linear_nonlinearity(4.0), -1.0, 1.0, 21, 1e-10);
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_TRUE(r.solutions[0].trivial);
}

TEST(UniformGrid, Points)
{
    const auto g = uniform_output_grid();
    ASSERT_EQ(g.size(), 1001u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_DOUBLE_EQ(g[500], 0.5);
}
