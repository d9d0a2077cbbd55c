#pragma once

#include "varfix/operators.hpp"

#include <cstdint>

namespace varfix {

// Componentwise A(u)_i = coef * sign(u_i) |u_i|^theta. With n_modes = 1 the
// nontrivial fixed points are +/- coef^(1/(1-theta)).
PotentialOperatorSpec power_model(double coef, double theta, int n_modes = 1, std::uint64_t seed = 0);

/**
 * Componentwise A(u)_i = g(u_i) with g(x) = slope*x - x^3 for |x| <= cutoff and a
 * bounded C^1 continuation g(x) = sign(x) (g(a) + g'(a) y/(1+y)), y = |x| - a,
 * beyond. Fixed points per coordinate are 0 and +/- sqrt(slope - 1).
 */
PotentialOperatorSpec truncated_cubic_model(double slope = 2.0, double cutoff = 2.0, int n_modes = 2,
                                            std::uint64_t seed = 0);

double truncated_cubic_scalar(double x, double slope, double cutoff);

} // namespace varfix
