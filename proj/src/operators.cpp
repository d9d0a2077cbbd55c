#include "varfix/operators.hpp"

#include "varfix/errors.hpp"

#include <algorithm>
#include <cmath>

namespace varfix {

namespace {

constexpr int kAvezLevels = 24;

const QuadratureRule& avez_rule(int order)
{
    static const QuadratureRule default_rule = graded_gauss_legendre(0.0, 1.0, kDefaultAvezOrder, kAvezLevels);
    if (order == kDefaultAvezOrder) {
        return default_rule;
    }
    thread_local int cached_order = -1;
    thread_local QuadratureRule cached;
    if (cached_order != order) {
        cached = graded_gauss_legendre(0.0, 1.0, order, kAvezLevels);
        cached_order = order;
    }
    return cached;
}

} // namespace

PotentialOperatorSpec PotentialOperatorSpec::create(std::string name, int n_modes, OperatorMap apply, Options opts)
{
    VARFIX_THROW_IF(n_modes < 1, DomainError, "PotentialOperatorSpec: n_modes must be >= 1");
    VARFIX_THROW_IF(!apply, DomainError, "PotentialOperatorSpec: apply map is empty");
    VARFIX_THROW_IF(!(opts.theta >= 0.0 && opts.theta < 1.0), DomainError,
                    "PotentialOperatorSpec: theta must lie in [0, 1)");

    PotentialOperatorSpec spec;
    spec.name_ = std::move(name);
    spec.n_modes_ = n_modes;
    spec.apply_ = std::move(apply);
    spec.odd_ = opts.odd;
    spec.theta_ = opts.theta;
    spec.potential_ = std::move(opts.closed_form_potential);

    if (spec.odd_) {
        const H1Vector zero(n_modes);
        const double at_zero = norm(spec.apply(zero));
        VARFIX_THROW_IF(at_zero > 1e-10, DomainError,
                        "PotentialOperatorSpec '" + spec.name_ + "': flagged odd but A(0) != 0");
        std::mt19937_64 rng(opts.validation_seed);
        std::uniform_real_distribution<double> radius(0.0, opts.validation_radius);
        for (int i = 0; i < opts.validation_samples; ++i) {
            const H1Vector u = random_unit(n_modes, rng) * radius(rng);
            const H1Vector au = spec.apply(u);
            const double defect = norm(spec.apply(-u) + au);
            spec.oddness_defect_ = std::max(spec.oddness_defect_, defect);
            VARFIX_THROW_IF(defect > 1e-10 * std::max(1.0, norm(au)), DomainError,
                            "PotentialOperatorSpec '" + spec.name_ + "': flagged odd but A(-u) != -A(u)");
        }
    }
    return spec;
}

H1Vector PotentialOperatorSpec::apply(const H1Vector& u) const
{
    VARFIX_THROW_IF(u.size() != n_modes_, DimensionMismatch,
                    "operator '" + name_ + "': input has " + std::to_string(u.size()) + " modes, expected " +
                        std::to_string(n_modes_));
    return apply_(u);
}

double PotentialOperatorSpec::closed_form_potential(const H1Vector& u) const
{
    VARFIX_THROW_IF(!potential_, Error, "operator '" + name_ + "' has no closed-form potential");
    return potential_(u);
}

LinearOperatorSpec::LinearOperatorSpec(Eigen::MatrixXd matrix, bool self_adjoint)
    : matrix_(std::move(matrix))
    , self_adjoint_(self_adjoint)
{
    VARFIX_THROW_IF(matrix_.rows() != matrix_.cols() || matrix_.rows() < 1, DimensionMismatch,
                    "LinearOperatorSpec: matrix must be square and nonempty");
    VARFIX_THROW_IF(!matrix_.allFinite(), NumericalBlowup, "LinearOperatorSpec: non-finite entries");
    if (self_adjoint_) {
        const double asym = (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
        VARFIX_THROW_IF(asym > 1e-12, DomainError,
                        "LinearOperatorSpec: flagged self-adjoint but max |m_ij - m_ji| = " + std::to_string(asym));
    }
}

LinearOperatorSpec LinearOperatorSpec::scaled_identity(int n_modes, double scale)
{
    return {Eigen::MatrixXd::Identity(n_modes, n_modes) * scale, true};
}

LinearOperatorSpec LinearOperatorSpec::diagonal(const std::vector<double>& diag)
{
    Eigen::VectorXd d(static_cast<Eigen::Index>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) {
        d[static_cast<Eigen::Index>(i)] = diag[i];
    }
    return {Eigen::MatrixXd(d.asDiagonal()), true};
}

H1Vector LinearOperatorSpec::apply(const H1Vector& u) const
{
    VARFIX_THROW_IF(u.size() != n_modes(), DimensionMismatch, "LinearOperatorSpec::apply: size mismatch");
    return H1Vector(Eigen::VectorXd(matrix_ * u.coeffs()));
}

double LinearOperatorSpec::form(const H1Vector& u, const H1Vector& v) const
{
    return inner(apply(u), v);
}

PotentialOperatorSpec LinearOperatorSpec::as_potential(std::string name, std::uint64_t seed) const
{
    VARFIX_THROW_IF(!self_adjoint_, DomainError, "as_potential: a linear potential operator must be self-adjoint");
    const Eigen::MatrixXd m = matrix_;
    PotentialOperatorSpec::Options opts;
    opts.odd = true;
    opts.theta = 0.0;
    opts.validation_seed = seed;
    opts.closed_form_potential = [m](const H1Vector& u) { return 0.5 * u.coeffs().dot(m * u.coeffs()); };
    return PotentialOperatorSpec::create(
        std::move(name), n_modes(), [m](const H1Vector& u) { return H1Vector(Eigen::VectorXd(m * u.coeffs())); },
        std::move(opts));
}

double avez_potential(const PotentialOperatorSpec& A, const H1Vector& u, int s_order)
{
    VARFIX_THROW_IF(s_order < 1, DomainError, "avez_potential: s_order must be >= 1");
    const QuadratureRule& rule = avez_rule(s_order);
    double t = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        t += rule.weights[i] * inner(A.apply(u * rule.nodes[i]), u);
    }
    return t;
}

double functional_J(const PotentialOperatorSpec& A, const H1Vector& u)
{
    return 0.5 * inner(u, u) - avez_potential(A, u);
}

double objective_J(const PotentialOperatorSpec& A, const H1Vector& u)
{
    if (A.has_closed_form_potential()) {
        return 0.5 * inner(u, u) - A.closed_form_potential(u);
    }
    return functional_J(A, u);
}

H1Vector gradient_J(const PotentialOperatorSpec& A, const H1Vector& u)
{
    return u - A.apply(u);
}

double fd_gradient_check(const PotentialOperatorSpec& A, const H1Vector& u, const H1Vector& v, double h)
{
    VARFIX_THROW_IF(!(h > 0.0), DomainError, "fd_gradient_check: h must be positive");
    const double vn = norm(v);
    if (vn == 0.0 && norm(u) == 0.0) {
        return 0.0;
    }
    VARFIX_THROW_IF(std::abs(vn - 1.0) > 1e-10, DomainError, "fd_gradient_check: direction must have unit norm");
    const double analytic = inner(gradient_J(A, u), v);
    const double fd = (functional_J(A, u + h * v) - functional_J(A, u - h * v)) / (2.0 * h);
    return std::abs(analytic - fd);
}

double lower_bound_J(const GrowthCertificate& cert, double r)
{
    VARFIX_THROW_IF(!(r >= 0.0), DomainError, "lower_bound_J: r must be >= 0");
    return 0.5 * r * r - cert.c / (cert.theta + 1.0) * std::pow(r, cert.theta + 1.0) - cert.b * r;
}

GrowthCertificate growth_fit(const PotentialOperatorSpec& A, const std::vector<double>& radii,
                             int dirs_per_radius, std::uint64_t seed)
{
    VARFIX_THROW_IF(radii.empty(), DomainError, "growth_fit: radii must be nonempty");
    VARFIX_THROW_IF(dirs_per_radius < 1, DomainError, "growth_fit: dirs_per_radius must be >= 1");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        VARFIX_THROW_IF(!(radii[i] > 0.0), DomainError, "growth_fit: radii must be positive");
        VARFIX_THROW_IF(i > 0 && !(radii[i] > radii[i - 1]), DomainError, "growth_fit: radii must be increasing");
    }
    constexpr double slack = 1.1;

    GrowthCertificate cert;
    cert.theta = A.theta();
    cert.radii_tested = radii;

    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> norms(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double max_norm = 0.0;
        for (int d = 0; d < dirs_per_radius; ++d) {
            const H1Vector u = random_unit(A.n_modes(), rng) * radii[i];
            const H1Vector au = A.apply(u);
            VARFIX_THROW_IF(!au.all_finite(), NumericalBlowup, "growth_fit: operator returned non-finite values");
            const double n = norm(au);
            norms[i].push_back(n);
            max_norm = std::max(max_norm, n);
            cert.sampled_max_ratio = std::max(cert.sampled_max_ratio, n / std::pow(radii[i], cert.theta));
        }
        cert.max_norm_per_radius.push_back(max_norm);
    }

    // c from the largest radius (the limsup surrogate), b covers the excess below it.
    const double tail_ratio = cert.max_norm_per_radius.back() / std::pow(radii.back(), cert.theta);
    cert.c = slack * tail_ratio;
    double excess = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (double n : norms[i]) {
            excess = std::max(excess, n - cert.c * std::pow(radii[i], cert.theta));
        }
    }
    cert.b = slack * excess;

    if (radii.size() >= 2) {
        const std::size_t last = radii.size() - 1;
        const double hi = cert.max_norm_per_radius[last];
        const double lo = cert.max_norm_per_radius[last - 1];
        if (hi > 0.0 && lo > 0.0) {
            cert.tail_exponent = std::log(hi / lo) / std::log(radii[last] / radii[last - 1]);
        }
    }
    return cert;
}

std::vector<double> geometric_radii(double r_min, double r_max, int count)
{
    VARFIX_THROW_IF(!(r_min > 0.0 && r_max > r_min) || count < 2, DomainError, "geometric_radii: invalid range");
    std::vector<double> r(count);
    const double ratio = std::log(r_max / r_min);
    for (int i = 0; i < count; ++i) {
        r[i] = r_min * std::exp(ratio * i / (count - 1));
    }
    r.back() = r_max;
    return r;
}

} // namespace varfix
