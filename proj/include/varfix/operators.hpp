#pragma once

#include "varfix/space.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace varfix {

using OperatorMap = std::function<H1Vector(const H1Vector&)>;
using ScalarMap = std::function<double(const H1Vector&)>;

/**
 * Odd compact potential operator A on the truncated space.
 *
 * `theta` is the declared exponent of the sublinear growth condition
 * limsup ||Au|| / ||u||^theta < infinity. When the operator is flagged odd the
 * flag is checked on random samples at construction, never trusted.
 */
class PotentialOperatorSpec {
public:
    struct Options {
        bool odd = true;
        double theta = 0.0;
        ScalarMap closed_form_potential;   // optional T(u) with T' = A
        std::uint64_t validation_seed = 0;
        int validation_samples = 100;
        double validation_radius = 2.0;
    };

    static PotentialOperatorSpec create(std::string name, int n_modes, OperatorMap apply, Options opts);

    const std::string& name() const { return name_; }
    int n_modes() const { return n_modes_; }
    bool odd() const { return odd_; }
    double theta() const { return theta_; }
    bool has_closed_form_potential() const { return static_cast<bool>(potential_); }

    H1Vector apply(const H1Vector& u) const;
    H1Vector operator()(const H1Vector& u) const { return apply(u); }
    double closed_form_potential(const H1Vector& u) const;

    // Largest ||A(-u) + A(u)|| seen during construction.
    double oddness_defect() const { return oddness_defect_; }

private:
    PotentialOperatorSpec() = default;

    std::string name_;
    int n_modes_ = 0;
    OperatorMap apply_;
    bool odd_ = true;
    double theta_ = 0.0;
    ScalarMap potential_;
    double oddness_defect_ = 0.0;
};

/// Bounded linear operator given by its matrix in the e_k basis.
class LinearOperatorSpec {
public:
    LinearOperatorSpec(Eigen::MatrixXd matrix, bool self_adjoint);

    static LinearOperatorSpec scaled_identity(int n_modes, double scale);
    static LinearOperatorSpec diagonal(const std::vector<double>& diag);

    const Eigen::MatrixXd& matrix() const { return matrix_; }
    bool self_adjoint() const { return self_adjoint_; }
    int n_modes() const { return static_cast<int>(matrix_.rows()); }

    H1Vector apply(const H1Vector& u) const;
    // (B u, v)
    double form(const H1Vector& u, const H1Vector& v) const;

    // The linear map as a potential operator, T(u) = (Bu, u) / 2.
    PotentialOperatorSpec as_potential(std::string name, std::uint64_t seed = 0) const;

private:
    Eigen::MatrixXd matrix_;
    bool self_adjoint_;
};

/**
 * Sampled envelope ||Au|| <= c ||u||^theta + b. This certifies only the sampled
 * radii and directions; the limsup in the growth condition is not decidable by
 * a finite procedure.
 */
struct GrowthCertificate {
    double c = 0.0;
    double b = 0.0;
    double theta = 0.0;
    double sampled_max_ratio = 0.0;
    std::vector<double> radii_tested;
    std::vector<double> max_norm_per_radius;
    // log-slope of max ||Au|| between the two largest radii
    double tail_exponent = 0.0;
    bool sampled = true;
};

inline constexpr int kDefaultAvezOrder = 16;

// T(u) = int_0^1 (A(su), u) ds by graded composite Gauss-Legendre in s.
double avez_potential(const PotentialOperatorSpec& A, const H1Vector& u, int s_order = kDefaultAvezOrder);

// J(u) = ||u||^2/2 - T(u) with T from the Avez integral.
double functional_J(const PotentialOperatorSpec& A, const H1Vector& u);

// Same functional, using the closed-form potential when the operator has one.
double objective_J(const PotentialOperatorSpec& A, const H1Vector& u);

// J'(u) = u - A(u).
H1Vector gradient_J(const PotentialOperatorSpec& A, const H1Vector& u);

// |(J'(u), v) - (J(u+hv) - J(u-hv)) / 2h| with J = functional_J.
double fd_gradient_check(const PotentialOperatorSpec& A, const H1Vector& u, const H1Vector& v, double h);

// r^2/2 - c r^(theta+1)/(theta+1) - b r.
double lower_bound_J(const GrowthCertificate& cert, double r);

GrowthCertificate growth_fit(const PotentialOperatorSpec& A, const std::vector<double>& radii,
                             int dirs_per_radius, std::uint64_t seed);

std::vector<double> geometric_radii(double r_min, double r_max, int count);

} // namespace varfix
