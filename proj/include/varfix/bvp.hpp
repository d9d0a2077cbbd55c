#pragma once

#include "varfix/hypotheses.hpp"
#include "varfix/operators.hpp"
#include "varfix/space.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace varfix::bvp {

using PointwiseMap = std::function<double(double t, double u)>;
using CoefficientFn = std::function<double(double t)>;

/**
 * Right-hand side f(t, u) of -u'' = f(t, u), u(0) = u(1) = 0, together with the
 * coefficient functions of the hypothesis checks: a1 bounds f(t,u)/u from below
 * near u = 0, a2 and a3 bound f from above by a2 |u|^theta + a3.
 */
struct Nonlinearity {
    std::string name;
    PointwiseMap f;
    PointwiseMap primitive;   // optional closed form of F(t, u) = int_0^u f(t, v) dv
    double theta = 0.0;
    CoefficientFn a1;
    CoefficientFn a2;
    CoefficientFn a3;
    double r1 = 0.5;          // radius where the family's (D1) bound is designed to hold
};

Nonlinearity example_5_3(double r1, double theta);
Nonlinearity power_nonlinearity(double coef, double theta, double r1 = 0.5);
Nonlinearity linear_nonlinearity(double lambda);
Nonlinearity tanh_nonlinearity(double coef, double r1 = 0.5);
Nonlinearity zero_nonlinearity();

// F(t, u) by graded Gauss-Legendre in v on [0, u].
double primitive_by_quadrature(const Nonlinearity& nl, double t, double u);

// G(t,s) = t(1-s) for t <= s, s(1-t) for s <= t.
double green_kernel(double t, double s);

/**
 * Green's function of -d^2/dt^2 with Dirichlet data. The kernel is tabulated on
 * the quadrature grid; `evaluate` computes int_0^1 G(t,s) g(s) ds at arbitrary t
 * by splitting at s = t, where the kernel has its kink.
 */
class GreenOperator {
public:
    explicit GreenOperator(const Discretization& disc);

    const Eigen::MatrixXd& kernel() const { return kernel_; }
    std::span<const double> weights() const { return weights_; }

    double evaluate(const std::function<double(double)>& g, double t) const;

private:
    Eigen::MatrixXd kernel_;
    std::vector<double> weights_;
};

// Coefficients of Au = int G(.,s) f(s,u(s)) ds in the basis: (Au, e_k) = int f(s,u(s)) e_k(s) ds.
H1Vector apply_A(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc);

// Bu = int G(.,s) a1(s) u(s) ds.
H1Vector apply_B(const CoefficientFn& a1, const H1Vector& u, const Discretization& disc);
LinearOperatorSpec b_operator(const CoefficientFn& a1, const Discretization& disc);

// J(u) = ||u||^2/2 - int_0^1 F(t, u(t)) dt, F by quadrature in v.
double bvp_functional(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc);

// A as a potential operator; the closed-form potential int F(t,u) dt is attached
// when the nonlinearity provides its primitive.
PotentialOperatorSpec make_bvp_operator(const Nonlinearity& nl, const Discretization& disc, std::uint64_t seed = 0);

// u(t) = int G(t,s) f(s, u_N(s)) ds on the given points: the solution profile of a
// Galerkin fixed point u_N.
std::vector<double> solution_profile(const Nonlinearity& nl, const H1Vector& u, const std::vector<double>& ts);
std::vector<double> uniform_output_grid(int n_points = 1001);

// max over quadrature nodes of |-(second difference of Au) - f(t,u(t))|, Au by the Green lift.
double ode_residual(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc, double h = 1e-4);

struct CoefficientBounds {
    double m = 0.0;
    double M = 0.0;
};

// Min/max of a1 over the quadrature nodes and the closed uniform output grid; non-finite values are skipped.
CoefficientBounds estimate_bounds(const CoefficientFn& a1, const Discretization& disc);

HypothesisReport check_D1(const Nonlinearity& nl, double r1, int n_t = 64, int n_u = 64);
HypothesisReport check_D2(const Nonlinearity& nl, int n_t = 64, int n_u = 64, double u_max = 100.0);

struct D3Result {
    HypothesisReport statement;   // m |e_i|_{L2} > 1
    HypothesisReport proof;       // m |e_i|^2_{L2} > 1, the form used when bounding (B e_i, e_i)
    double best_l2 = 0.0;         // best min_i |e_i|_{L2} over the searched pairs
    double best_l2_sq = 0.0;
    double ceiling = 0.0;         // m / pi
    double ceiling_sq = 0.0;      // m / pi^2
    H1Vector e1;
    H1Vector e2;
};

D3Result check_D3(double m, int n_modes, int mode_budget = 8, int n_random = 200, std::uint64_t seed = 0);
HypothesisReport check_D4(double m, double M);

enum class EigenMethod { spectral, finite_difference };

// which-th Dirichlet eigenvalue of -u'' on (0,1); n is the number of FD intervals.
double first_eigenvalue(EigenMethod method, int n = 1000, int which = 1);

struct ShootingSolution {
    double sigma = 0.0;        // u'(0)
    double end_value = 0.0;    // u(1)
    bool trivial = false;
    std::vector<double> profile;   // on uniform_output_grid()
};

struct ShootingResult {
    std::vector<ShootingSolution> solutions;
    bool degenerate = false;
    std::string diagnostic;
};

/**
 * Integrates u'' = -f(t,u), u(0) = 0, u'(0) = sigma with classical RK4 over a
 * uniform sigma grid and bisects sign changes of u(1). Three or more consecutive
 * grid slopes with |u(1)| < tol are reported as a degenerate (resonant) case.
 */
ShootingResult shooting_oracle(const Nonlinearity& nl, double sigma_lo, double sigma_hi, int n_slopes, double tol,
                               int steps_per_cell = 20);

} // namespace varfix::bvp
