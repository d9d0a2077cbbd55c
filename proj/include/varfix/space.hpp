#pragma once

#include "varfix/quadrature.hpp"

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <span>
#include <vector>

namespace varfix {

/**
 * Truncation and quadrature parameters for the discrete model of H^1_0(0,1).
 *
 * Functions are represented by their first `n_modes` coefficients in the
 * H^1_0-orthonormal basis e_k(t) = sqrt(2)/(k pi) sin(k pi t); integrals over
 * (0,1) use `quad_nodes`-point Gauss-Legendre on `n_panels` equal panels.
 */
struct SpaceConfig {
    int n_modes = 32;
    int quad_nodes = 8;
    int n_panels = 16;

    void validate() const;
    bool operator==(const SpaceConfig&) const = default;
};

/// Element of the truncated space, stored as basis coefficients.
class H1Vector {
public:
    H1Vector() = default;
    explicit H1Vector(int n_modes);
    explicit H1Vector(Eigen::VectorXd coeffs);
    H1Vector(std::initializer_list<double> coeffs);

    // k is 1-based, matching e_k.
    static H1Vector basis(int n_modes, int k);

    int size() const { return static_cast<int>(coeffs_.size()); }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    Eigen::VectorXd& coeffs() { return coeffs_; }
    double operator[](int i) const { return coeffs_[i]; }
    double& operator[](int i) { return coeffs_[i]; }
    std::vector<double> to_std() const;

    bool all_finite() const { return coeffs_.allFinite(); }

    H1Vector& operator+=(const H1Vector& o);
    H1Vector& operator-=(const H1Vector& o);
    H1Vector& operator*=(double s);

    friend H1Vector operator+(H1Vector a, const H1Vector& b) { return a += b; }
    friend H1Vector operator-(H1Vector a, const H1Vector& b) { return a -= b; }
    friend H1Vector operator*(H1Vector a, double s) { return a *= s; }
    friend H1Vector operator*(double s, H1Vector a) { return a *= s; }
    friend H1Vector operator-(H1Vector a) { return a *= -1.0; }

private:
    Eigen::VectorXd coeffs_;
};

void require_same_size(const H1Vector& u, const H1Vector& v, const char* where);

// (u, v) = int u'v' dt, which is the coefficient dot product.
double inner(const H1Vector& u, const H1Vector& v);
double norm(const H1Vector& u);

// |u|^2_{L^2} = sum c_k^2 / (k pi)^2.
double l2_norm_sq(const H1Vector& u);

double basis_function(int k, double t);

// Pointwise synthesis; vanishes at t = 0 and t = 1.
double evaluate(const H1Vector& u, double t);

// ||u|| bounds max_t |u(t)| on H^1_0(0,1). The sharp constant is 1/2; the
// unit constant is kept because the hypothesis checks are stated with it.
double sup_norm_bound(const H1Vector& u);

struct GridSample {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> values;
};

/**
 * Immutable quadrature grid plus the table of basis values on it. Construction
 * is O(n_modes * nodes); all queries are pure.
 */
class Discretization {
public:
    explicit Discretization(SpaceConfig cfg = {});

    const SpaceConfig& config() const { return cfg_; }
    int n_modes() const { return cfg_.n_modes; }
    std::size_t n_nodes() const { return rule_.size(); }
    std::span<const double> nodes() const { return rule_.nodes; }
    std::span<const double> weights() const { return rule_.weights; }

    // basis_table()(i, k-1) = e_k(t_i).
    const Eigen::MatrixXd& basis_table() const { return table_; }

    Eigen::VectorXd synthesize(const H1Vector& u) const;
    GridSample sample(const H1Vector& u) const;
    GridSample sample(const std::function<double(double)>& fn) const;

    // c_k = sum_i w_i g(t_i) e_k(t_i): the H^1_0 Riesz representer of v -> int g v.
    H1Vector load_vector(std::span<const double> g_on_nodes) const;

    // c_k = (k pi)^2 int u e_k dt (integration by parts under Dirichlet data), evaluated as the
    // weighted least-squares fit on the grid so that sampled basis functions are reproduced exactly.
    H1Vector project(const GridSample& samples) const;

    double integrate(std::span<const double> values_on_nodes) const;

private:
    SpaceConfig cfg_;
    QuadratureRule rule_;
    Eigen::MatrixXd table_;
    Eigen::LLT<Eigen::MatrixXd> gram_;
    bool gram_ok_ = false;
};

H1Vector project(const GridSample& samples, const SpaceConfig& cfg);

// Uniformly random direction on the unit sphere of the coefficient space.
H1Vector random_unit(int n_modes, std::mt19937_64& rng);

// Gaussian coefficients scaled by (1/k)^decay.
H1Vector random_vector(int n_modes, std::mt19937_64& rng, double scale = 1.0, double decay = 0.0);

} // namespace varfix
