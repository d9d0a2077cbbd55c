#include "varfix/quadrature.hpp"

#include "varfix/errors.hpp"

#include <cmath>
#include <numbers>

namespace varfix {

QuadratureRule gauss_legendre(int order)
{
    VARFIX_THROW_IF(order < 1, DomainError, "gauss_legendre: order must be >= 1");
    const int n = order;
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess for the i-th root, refined by Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged root
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

namespace {

void append_panel(QuadratureRule& out, const QuadratureRule& ref, double a, double b)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        out.nodes.push_back(mid + half * ref.nodes[i]);
        out.weights.push_back(half * ref.weights[i]);
    }
}

} // namespace

QuadratureRule composite_gauss_legendre(double a, double b, int order, int panels)
{
    VARFIX_THROW_IF(panels < 1, DomainError, "composite_gauss_legendre: panels must be >= 1");
    VARFIX_THROW_IF(!(b > a), DomainError, "composite_gauss_legendre: need a < b");
    const QuadratureRule ref = gauss_legendre(order);
    QuadratureRule out;
    out.nodes.reserve(static_cast<std::size_t>(order) * panels);
    out.weights.reserve(static_cast<std::size_t>(order) * panels);
    for (int p = 0; p < panels; ++p) {
        const double lo = a + (b - a) * p / panels;
        const double hi = (p + 1 == panels) ? b : a + (b - a) * (p + 1) / panels;
        append_panel(out, ref, lo, hi);
    }
    return out;
}

QuadratureRule graded_gauss_legendre(double a, double b, int order, int levels,
                                     bool grade_left, bool grade_right)
{
    VARFIX_THROW_IF(levels < 1, DomainError, "graded_gauss_legendre: levels must be >= 1");
    QuadratureRule out;
    if (!(b > a)) {
        return out;
    }
    const QuadratureRule ref = gauss_legendre(order);

    // Breakpoints in [0, 1], refined toward 0 and/or 1.
    std::vector<double> breaks;
    const double split = (grade_left && grade_right) ? 0.5 : (grade_left ? 1.0 : 0.0);
    breaks.push_back(0.0);
    if (grade_left) {
        for (int j = levels; j >= 1; --j) {
            breaks.push_back(split * std::ldexp(1.0, -j));
        }
        if (split < 1.0) {
            breaks.push_back(split);
        }
    }
    if (grade_right) {
        for (int j = 1; j <= levels; ++j) {
            breaks.push_back(1.0 - (1.0 - split) * std::ldexp(1.0, -j));
        }
    }
    breaks.push_back(1.0);

    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const double lo = a + (b - a) * breaks[j];
        const double hi = a + (b - a) * breaks[j + 1];
        if (hi > lo) {
            append_panel(out, ref, lo, hi);
        }
    }
    return out;
}

} // namespace varfix
