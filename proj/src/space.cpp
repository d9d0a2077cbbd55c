#include "varfix/space.hpp"

#include "varfix/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace varfix {

namespace {
constexpr double pi = std::numbers::pi;
}

void SpaceConfig::validate() const
{
    VARFIX_THROW_IF(n_modes < 1, DomainError, "SpaceConfig: n_modes must be >= 1");
    VARFIX_THROW_IF(quad_nodes < 2, DomainError, "SpaceConfig: quad_nodes must be >= 2");
    VARFIX_THROW_IF(n_panels < 1, DomainError, "SpaceConfig: n_panels must be >= 1");
}

H1Vector::H1Vector(int n_modes)
    : coeffs_(Eigen::VectorXd::Zero(n_modes))
{
    VARFIX_THROW_IF(n_modes < 1, DomainError, "H1Vector: n_modes must be >= 1");
}

H1Vector::H1Vector(Eigen::VectorXd coeffs)
    : coeffs_(std::move(coeffs))
{
}

H1Vector::H1Vector(std::initializer_list<double> coeffs)
    : coeffs_(static_cast<Eigen::Index>(coeffs.size()))
{
    Eigen::Index i = 0;
    for (double c : coeffs) {
        coeffs_[i++] = c;
    }
}

H1Vector H1Vector::basis(int n_modes, int k)
{
    VARFIX_THROW_IF(k < 1 || k > n_modes, DomainError,
                    "H1Vector::basis: mode index " + std::to_string(k) + " out of range");
    H1Vector e(n_modes);
    e.coeffs_[k - 1] = 1.0;
    return e;
}

std::vector<double> H1Vector::to_std() const
{
    return {coeffs_.data(), coeffs_.data() + coeffs_.size()};
}

H1Vector& H1Vector::operator+=(const H1Vector& o)
{
    require_same_size(*this, o, "H1Vector::operator+=");
    coeffs_ += o.coeffs_;
    return *this;
}

H1Vector& H1Vector::operator-=(const H1Vector& o)
{
    require_same_size(*this, o, "H1Vector::operator-=");
    coeffs_ -= o.coeffs_;
    return *this;
}

H1Vector& H1Vector::operator*=(double s)
{
    coeffs_ *= s;
    return *this;
}

void require_same_size(const H1Vector& u, const H1Vector& v, const char* where)
{
    if (u.size() != v.size()) {
        throw DimensionMismatch(std::string(where) + ": sizes " + std::to_string(u.size()) +
                                " and " + std::to_string(v.size()));
    }
}

double inner(const H1Vector& u, const H1Vector& v)
{
    require_same_size(u, v, "inner");
    return u.coeffs().dot(v.coeffs());
}

double norm(const H1Vector& u)
{
    return u.coeffs().norm();
}

double l2_norm_sq(const H1Vector& u)
{
    double s = 0.0;
    for (int k = 1; k <= u.size(); ++k) {
        const double c = u[k - 1] / (k * pi);
        s += c * c;
    }
    return s;
}

double basis_function(int k, double t)
{
    return std::numbers::sqrt2 / (k * pi) * std::sin(k * pi * t);
}

double evaluate(const H1Vector& u, double t)
{
    VARFIX_THROW_IF(!(t >= 0.0 && t <= 1.0), DomainError,
                    "evaluate: t = " + std::to_string(t) + " outside [0, 1]");
    if (t == 0.0 || t == 1.0) {
        return 0.0;
    }
    // sin(k pi t) by the Chebyshev recurrence, 2 cos(pi t) sin(k pi t) = sin((k+1) pi t) + sin((k-1) pi t)
    const double c2 = 2.0 * std::cos(pi * t);
    double s_prev = 0.0;
    double s_cur = std::sin(pi * t);
    double sum = 0.0;
    for (int k = 1; k <= u.size(); ++k) {
        sum += u[k - 1] * s_cur / k;
        const double s_next = c2 * s_cur - s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    return std::numbers::sqrt2 / pi * sum;
}

double sup_norm_bound(const H1Vector& u)
{
    return norm(u);
}

Discretization::Discretization(SpaceConfig cfg)
    : cfg_(cfg)
{
    cfg_.validate();
    rule_ = composite_gauss_legendre(0.0, 1.0, cfg_.quad_nodes, cfg_.n_panels);
    const auto n = static_cast<Eigen::Index>(rule_.size());
    table_.resize(n, cfg_.n_modes);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (int k = 1; k <= cfg_.n_modes; ++k) {
            table_(i, k - 1) = basis_function(k, rule_.nodes[i]);
        }
    }
    if (n >= cfg_.n_modes) {
        const Eigen::Map<const Eigen::VectorXd> w(rule_.weights.data(), n);
        const Eigen::MatrixXd gram = table_.transpose() * w.asDiagonal() * table_;
        gram_.compute(gram);
        gram_ok_ = gram_.info() == Eigen::Success;
    }
}

Eigen::VectorXd Discretization::synthesize(const H1Vector& u) const
{
    VARFIX_THROW_IF(u.size() != cfg_.n_modes, DimensionMismatch,
                    "Discretization::synthesize: vector has " + std::to_string(u.size()) +
                        " modes, grid expects " + std::to_string(cfg_.n_modes));
    return table_ * u.coeffs();
}

GridSample Discretization::sample(const H1Vector& u) const
{
    const Eigen::VectorXd v = synthesize(u);
    return {rule_.nodes, rule_.weights, std::vector<double>(v.data(), v.data() + v.size())};
}

GridSample Discretization::sample(const std::function<double(double)>& fn) const
{
    GridSample g{rule_.nodes, rule_.weights, {}};
    g.values.reserve(rule_.size());
    for (double t : rule_.nodes) {
        g.values.push_back(fn(t));
    }
    return g;
}

H1Vector Discretization::load_vector(std::span<const double> g) const
{
    VARFIX_THROW_IF(g.size() != rule_.size(), DimensionMismatch,
                    "Discretization::load_vector: value count does not match grid");
    Eigen::VectorXd wg(static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        wg[static_cast<Eigen::Index>(i)] = rule_.weights[i] * g[i];
    }
    return H1Vector(Eigen::VectorXd(table_.transpose() * wg));
}

H1Vector Discretization::project(const GridSample& s) const
{
    VARFIX_THROW_IF(s.values.size() != rule_.size() || s.nodes.size() != rule_.size(),
                    DimensionMismatch, "project: grid sample does not match the space configuration");
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        VARFIX_THROW_IF(std::abs(s.nodes[i] - rule_.nodes[i]) > 1e-14, DimensionMismatch,
                        "project: grid nodes do not match the space configuration");
    }
    H1Vector c = load_vector(s.values);
    if (gram_ok_) {
        // discrete L2 projection; reproduces band-limited samples exactly
        return H1Vector(Eigen::VectorXd(gram_.solve(c.coeffs())));
    }
    for (int k = 1; k <= cfg_.n_modes; ++k) {
        c[k - 1] *= (k * pi) * (k * pi);
    }
    return c;
}

double Discretization::integrate(std::span<const double> values) const
{
    VARFIX_THROW_IF(values.size() != rule_.size(), DimensionMismatch,
                    "Discretization::integrate: value count does not match grid");
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += rule_.weights[i] * values[i];
    }
    return s;
}

H1Vector project(const GridSample& samples, const SpaceConfig& cfg)
{
    return Discretization(cfg).project(samples);
}

H1Vector random_unit(int n_modes, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    H1Vector u(n_modes);
    double nrm = 0.0;
    while (nrm < 1e-12) {
        for (int i = 0; i < n_modes; ++i) {
            u[i] = gauss(rng);
        }
        nrm = norm(u);
    }
    return u * (1.0 / nrm);
}

H1Vector random_vector(int n_modes, std::mt19937_64& rng, double scale, double decay)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    H1Vector u(n_modes);
    for (int k = 1; k <= n_modes; ++k) {
        u[k - 1] = scale * gauss(rng) * std::pow(1.0 / k, decay);
    }
    return u;
}

} // namespace varfix
