#include <gtest/gtest.h>

#include "varfix/errors.hpp"
#include "varfix/quadrature.hpp"

#include <cmath>
#include <numeric>

using namespace varfix;

TEST(GaussLegendre, IntegratesPolynomialsOfDegreeTwoNMinusOneExactly)
{
    for (int n : {2, 3, 5, 8, 16}) {
        const QuadratureRule rule = gauss_legendre(n);
        for (int p = 0; p < 2 * n; ++p) {
            const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
            EXPECT_NEAR(rule.integrate([p](double x) { return std::pow(x, p); }), exact, 1e-13) << n << " " << p;
        }
    }
}

TEST(GaussLegendre, NodesSymmetricAndWeightsSumToTwo)
{
    const QuadratureRule rule = gauss_legendre(9);
    const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
    EXPECT_NEAR(total, 2.0, 1e-14);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        EXPECT_NEAR(rule.nodes[i], -rule.nodes[rule.size() - 1 - i], 1e-15);
        EXPECT_GT(rule.weights[i], 0.0);
    }
}

TEST(GaussLegendre, RejectsOrderBelowOne)
{
    EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(CompositeGaussLegendre, NodesIncreasingInsideIntervalAndWeightsSumToLength)
{
    const QuadratureRule rule = composite_gauss_legendre(0.0, 1.0, 8, 16);
    ASSERT_EQ(rule.size(), 128u);
    EXPECT_GT(rule.nodes.front(), 0.0);
    EXPECT_LT(rule.nodes.back(), 1.0);
    for (std::size_t i = 1; i < rule.size(); ++i) {
        EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    }
    EXPECT_NEAR(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0), 1.0, 1e-14);
}

TEST(CompositeGaussLegendre, SmoothIntegrand)
{
    const QuadratureRule rule = composite_gauss_legendre(0.0, 1.0, 8, 16);
    EXPECT_NEAR(rule.integrate([](double t) { return std::exp(t); }), std::exp(1.0) - 1.0, 1e-14);
}

TEST(GradedGaussLegendre, AlgebraicEndpointSingularity)
{
    const QuadratureRule rule = graded_gauss_legendre(0.0, 1.0, 16, 24);
    for (double theta : {0.0, 0.25, 0.5, 0.9}) {
        EXPECT_NEAR(rule.integrate([theta](double s) { return std::pow(s, theta); }), 1.0 / (theta + 1.0), 1e-13);
    }
}

TEST(GradedGaussLegendre, BothEnds)
{
    const QuadratureRule rule = graded_gauss_legendre(0.0, 1.0, 16, 20, true, true);
    const double v = rule.integrate([](double s) { return std::sqrt(s) * std::sqrt(1.0 - s); });
    EXPECT_NEAR(v, M_PI / 8.0, 1e-12);
}
