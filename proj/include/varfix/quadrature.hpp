#pragma once

#include <functional>
#include <vector>

namespace varfix {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(nodes[i]);
        }
        return sum;
    }
};

// Gauss-Legendre rule with `order` points on [-1, 1]; Newton iteration on P_n.
QuadratureRule gauss_legendre(int order);

// `order`-point Gauss-Legendre on each of `panels` equal subintervals of [a, b].
QuadratureRule composite_gauss_legendre(double a, double b, int order, int panels);

/**
 * Composite Gauss-Legendre on [a, b] with panels refined geometrically (ratio 2)
 * toward the endpoints selected by `grade_left` / `grade_right`, `levels` panels
 * per graded end. Integrands with algebraic endpoint behaviour such as s^theta,
 * theta in [0, 1), are integrated to near machine precision.
 */
QuadratureRule graded_gauss_legendre(double a, double b, int order, int levels,
                                     bool grade_left = true, bool grade_right = false);

} // namespace varfix
