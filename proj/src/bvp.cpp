#include "varfix/bvp.hpp"

#include "varfix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace varfix::bvp {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kPrimitiveOrder = 16;
constexpr int kPrimitiveLevels = 32;
constexpr int kGreenOrder = 16;
constexpr int kGreenLevels = 20;

double signed_power(double u, double theta)
{
    if (u == 0.0) {
        return 0.0;
    }
    return std::copysign(std::pow(std::abs(u), theta), u);
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) {
        g[j] = lo * std::pow(hi / lo, n == 1 ? 1.0 : static_cast<double>(j) / (n - 1));
    }
    g.back() = hi;
    return g;
}

} // namespace

Nonlinearity example_5_3(double r1, double theta)
{
    VARFIX_THROW_IF(!(r1 > 0.0 && r1 < 1.0), DomainError, "example_5_3: r1 must lie in (0, 1)");
    VARFIX_THROW_IF(!(theta >= 0.0 && theta < 1.0), DomainError, "example_5_3: theta must lie in [0, 1)");
    const double scale = std::pow(r1, 1.0 - theta);
    Nonlinearity nl;
    nl.name = "example53";
    nl.theta = theta;
    nl.r1 = r1;
    nl.a1 = [](double t) { return 1.0 + t; };
    nl.a2 = [scale](double t) { return scale * (1.0 + t); };
    nl.a3 = [](double t) { return t; };
    nl.f = [scale, theta](double t, double u) { return scale * (1.0 + t) * signed_power(u, theta); };
    nl.primitive = [scale, theta](double t, double u) {
        return scale * (1.0 + t) * std::pow(std::abs(u), theta + 1.0) / (theta + 1.0);
    };
    return nl;
}

Nonlinearity power_nonlinearity(double coef, double theta, double r1)
{
    VARFIX_THROW_IF(!(coef >= 0.0), DomainError, "power_nonlinearity: coef must be >= 0");
    VARFIX_THROW_IF(!(theta >= 0.0 && theta < 1.0), DomainError, "power_nonlinearity: theta must lie in [0, 1)");
    VARFIX_THROW_IF(!(r1 > 0.0 && r1 < 1.0), DomainError, "power_nonlinearity: r1 must lie in (0, 1)");
    Nonlinearity nl;
    nl.name = "power";
    nl.theta = theta;
    nl.r1 = r1;
    // f(t,u)/u = coef |u|^(theta-1) is smallest at |u| = r1
    const double a1 = coef * std::pow(r1, theta - 1.0);
    nl.a1 = [a1](double) { return a1; };
    nl.a2 = [coef](double) { return coef; };
    nl.a3 = [](double) { return 0.0; };
    nl.f = [coef, theta](double, double u) { return coef * signed_power(u, theta); };
    nl.primitive = [coef, theta](double, double u) {
        return coef * std::pow(std::abs(u), theta + 1.0) / (theta + 1.0);
    };
    return nl;
}

Nonlinearity linear_nonlinearity(double lambda)
{
    Nonlinearity nl;
    nl.name = "linear";
    nl.theta = 0.0;
    nl.a1 = [lambda](double) { return lambda; };
    nl.a2 = [lambda](double) { return std::abs(lambda); };
    nl.a3 = [](double) { return 0.0; };
    nl.f = [lambda](double, double u) { return lambda * u; };
    nl.primitive = [lambda](double, double u) { return 0.5 * lambda * u * u; };
    return nl;
}

Nonlinearity tanh_nonlinearity(double coef, double r1)
{
    VARFIX_THROW_IF(!(r1 > 0.0 && r1 < 1.0), DomainError, "tanh_nonlinearity: r1 must lie in (0, 1)");
    Nonlinearity nl;
    nl.name = "tanh";
    nl.theta = 0.0;
    nl.r1 = r1;
    const double ratio = std::tanh(r1) / r1;
    nl.a1 = [coef, ratio](double t) { return coef * (1.0 + t) * ratio; };
    nl.a2 = [coef](double t) { return coef * (1.0 + t); };
    nl.a3 = [](double) { return 0.0; };
    nl.f = [coef](double t, double u) { return coef * (1.0 + t) * std::tanh(u); };
    nl.primitive = [coef](double t, double u) {
        const double a = std::abs(u);
        // log cosh(u) without overflow
        return coef * (1.0 + t) * (a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2);
    };
    return nl;
}

Nonlinearity zero_nonlinearity()
{
    Nonlinearity nl;
    nl.name = "zero";
    nl.theta = 0.0;
    nl.a1 = [](double) { return 0.0; };
    nl.a2 = [](double) { return 0.0; };
    nl.a3 = [](double) { return 0.0; };
    nl.f = [](double, double) { return 0.0; };
    nl.primitive = [](double, double) { return 0.0; };
    return nl;
}

double primitive_by_quadrature(const Nonlinearity& nl, double t, double u)
{
    if (u == 0.0) {
        return 0.0;
    }
    // F(t,u) = u int_0^1 f(t, s u) ds, graded toward s = 0 for sublinear f
    static const QuadratureRule rule = graded_gauss_legendre(0.0, 1.0, kPrimitiveOrder, kPrimitiveLevels);
    return u * rule.integrate([&](double s) { return nl.f(t, s * u); });
}

double green_kernel(double t, double s)
{
    VARFIX_THROW_IF(!(t >= 0.0 && t <= 1.0 && s >= 0.0 && s <= 1.0), DomainError,
                    "green_kernel: arguments must lie in [0, 1]");
    return t <= s ? t * (1.0 - s) : s * (1.0 - t);
}

GreenOperator::GreenOperator(const Discretization& disc)
    : weights_(disc.weights().begin(), disc.weights().end())
{
    const auto nodes = disc.nodes();
    const auto n = static_cast<Eigen::Index>(nodes.size());
    kernel_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            kernel_(i, j) = green_kernel(nodes[i], nodes[j]);
        }
    }
}

namespace {

const QuadratureRule& green_reference_rule()
{
    static const QuadratureRule rule = graded_gauss_legendre(0.0, 1.0, kGreenOrder, kGreenLevels, true, true);
    return rule;
}

double green_lift(const std::function<double(double)>& g, double t)
{
    VARFIX_THROW_IF(!(t >= 0.0 && t <= 1.0), DomainError, "Green operator: t outside [0, 1]");
    if (t == 0.0 || t == 1.0) {
        return 0.0;
    }
    const QuadratureRule& ref = green_reference_rule();
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double sl = t * ref.nodes[i];
        left += t * ref.weights[i] * sl * g(sl);
        const double sr = t + (1.0 - t) * ref.nodes[i];
        right += (1.0 - t) * ref.weights[i] * (1.0 - sr) * g(sr);
    }
    return (1.0 - t) * left + t * right;
}

} // namespace

double GreenOperator::evaluate(const std::function<double(double)>& g, double t) const
{
    return green_lift(g, t);
}

H1Vector apply_A(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc)
{
    const Eigen::VectorXd values = disc.synthesize(u);
    const auto nodes = disc.nodes();
    std::vector<double> g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g[i] = nl.f(nodes[i], values[static_cast<Eigen::Index>(i)]);
        VARFIX_THROW_IF(!std::isfinite(g[i]), NumericalBlowup,
                        "apply_A: f is not finite at t = " + std::to_string(nodes[i]));
    }
    return disc.load_vector(g);
}

H1Vector apply_B(const CoefficientFn& a1, const H1Vector& u, const Discretization& disc)
{
    const Eigen::VectorXd values = disc.synthesize(u);
    const auto nodes = disc.nodes();
    std::vector<double> g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g[i] = a1(nodes[i]) * values[static_cast<Eigen::Index>(i)];
    }
    return disc.load_vector(g);
}

LinearOperatorSpec b_operator(const CoefficientFn& a1, const Discretization& disc)
{
    const auto nodes = disc.nodes();
    const auto w = disc.weights();
    Eigen::VectorXd wa(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        wa[static_cast<Eigen::Index>(i)] = w[i] * a1(nodes[i]);
    }
    const Eigen::MatrixXd& e = disc.basis_table();
    Eigen::MatrixXd m = e.transpose() * wa.asDiagonal() * e;
    m = 0.5 * (m + m.transpose()).eval();
    return {m, true};
}

double bvp_functional(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc)
{
    const Eigen::VectorXd values = disc.synthesize(u);
    const auto nodes = disc.nodes();
    std::vector<double> big_f(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        big_f[i] = primitive_by_quadrature(nl, nodes[i], values[static_cast<Eigen::Index>(i)]);
    }
    return 0.5 * inner(u, u) - disc.integrate(big_f);
}

PotentialOperatorSpec make_bvp_operator(const Nonlinearity& nl, const Discretization& disc, std::uint64_t seed)
{
    PotentialOperatorSpec::Options opts;
    opts.odd = true;
    opts.theta = nl.theta;
    opts.validation_seed = seed;
    if (nl.primitive) {
        opts.closed_form_potential = [nl, disc](const H1Vector& u) {
            const Eigen::VectorXd values = disc.synthesize(u);
            const auto nodes = disc.nodes();
            std::vector<double> big_f(nodes.size());
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                big_f[i] = nl.primitive(nodes[i], values[static_cast<Eigen::Index>(i)]);
            }
            return disc.integrate(big_f);
        };
    }
    return PotentialOperatorSpec::create(
        "bvp-" + nl.name, disc.n_modes(), [nl, disc](const H1Vector& u) { return apply_A(nl, u, disc); },
        std::move(opts));
}

std::vector<double> uniform_output_grid(int n_points)
{
    VARFIX_THROW_IF(n_points < 2, DomainError, "uniform_output_grid: need at least 2 points");
    std::vector<double> t(n_points);
    for (int i = 0; i < n_points; ++i) {
        t[i] = static_cast<double>(i) / (n_points - 1);
    }
    return t;
}

std::vector<double> solution_profile(const Nonlinearity& nl, const H1Vector& u, const std::vector<double>& ts)
{
    auto g = [&](double s) { return nl.f(s, evaluate(u, s)); };
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        out.push_back(green_lift(g, t));
    }
    return out;
}

double ode_residual(const Nonlinearity& nl, const H1Vector& u, const Discretization& disc, double h)
{
    VARFIX_THROW_IF(!(h > 0.0), DomainError, "ode_residual: h must be positive");
    auto g = [&](double s) { return nl.f(s, evaluate(u, s)); };
    double worst = 0.0;
    for (double t : disc.nodes()) {
        if (t - h <= 0.0 || t + h >= 1.0) {
            continue;
        }
        const double second = (green_lift(g, t + h) - 2.0 * green_lift(g, t) + green_lift(g, t - h)) / (h * h);
        worst = std::max(worst, std::abs(-second - g(t)));
    }
    return worst;
}

CoefficientBounds estimate_bounds(const CoefficientFn& a1, const Discretization& disc)
{
    CoefficientBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    auto take = [&b](double v) {
        if (std::isfinite(v)) {
            b.m = std::min(b.m, v);
            b.M = std::max(b.M, v);
        }
    };
    for (double t : disc.nodes()) {
        take(a1(t));
    }
    for (double t : uniform_output_grid()) {
        take(a1(t));
    }
    return b;
}

HypothesisReport check_D1(const Nonlinearity& nl, double r1, int n_t, int n_u)
{
    VARFIX_THROW_IF(!(r1 > 0.0 && r1 < 1.0), DomainError, "check_D1: r1 must lie in (0, 1)");
    VARFIX_THROW_IF(n_t < 1 || n_u < 2, DomainError, "check_D1: grid too small");
    const std::vector<double> ts = open_unit_grid(n_t);
    const std::vector<double> us = log_grid(1e-6 * r1, r1, n_u);
    double worst = std::numeric_limits<double>::infinity();
    Witness w{"(t, u) at minimum of f(t,u)/u - a1(t)", {}, 0.0};
    for (double t : ts) {
        const double a = nl.a1(t);
        for (double mag : us) {
            for (double u : {mag, -mag}) {
                const double ratio = nl.f(t, u) / u;
                const double m = snap_margin(ratio - a, std::max(std::abs(ratio), std::abs(a)));
                if (m < worst) {
                    worst = m;
                    w.point = {t, u};
                    w.value = m;
                }
            }
        }
    }
    HypothesisReport rep;
    rep.name = "(D1)";
    rep.margin = worst;
    rep.verdict = nonstrict_verdict(worst, true);
    rep.witnesses.push_back(std::move(w));
    rep.grid["n_t"] = n_t;
    rep.grid["n_u"] = 2 * n_u;
    return rep;
}

HypothesisReport check_D2(const Nonlinearity& nl, int n_t, int n_u, double u_max)
{
    VARFIX_THROW_IF(n_t < 1 || n_u < 2 || !(u_max > 0.0), DomainError, "check_D2: invalid grid");
    const std::vector<double> ts = open_unit_grid(n_t);
    std::vector<double> us = log_grid(1e-6, u_max, n_u);
    double worst = std::numeric_limits<double>::infinity();
    Witness w{"(t, u) at minimum of a2|u|^theta + a3 - f", {}, 0.0};
    for (double t : ts) {
        const double a2 = nl.a2(t);
        const double a3 = nl.a3(t);
        auto visit = [&](double u) {
            const double bound = a2 * std::pow(std::abs(u), nl.theta) + a3;
            const double fv = nl.f(t, u);
            const double m = snap_margin(bound - fv, std::max(std::abs(bound), std::abs(fv)));
            if (m < worst) {
                worst = m;
                w.point = {t, u};
                w.value = m;
            }
        };
        visit(0.0);
        for (double mag : us) {
            visit(mag);
            visit(-mag);
        }
    }
    HypothesisReport rep;
    rep.name = "(D2)";
    rep.margin = worst;
    rep.verdict = nonstrict_verdict(worst, true);
    rep.witnesses.push_back(std::move(w));
    rep.grid["n_t"] = n_t;
    rep.grid["n_u"] = 2 * n_u + 1;
    return rep;
}

D3Result check_D3(double m, int n_modes, int mode_budget, int n_random, std::uint64_t seed)
{
    VARFIX_THROW_IF(n_modes < 2, DomainError, "check_D3: need at least two modes");
    VARFIX_THROW_IF(mode_budget < 2, DomainError, "check_D3: mode_budget must be >= 2");
    const int budget = std::min(mode_budget, n_modes);

    D3Result out;
    double best = -1.0;
    auto consider = [&](const H1Vector& a, const H1Vector& b) {
        const double score = std::min(l2_norm_sq(a), l2_norm_sq(b));
        if (score > best) {
            best = score;
            out.e1 = a;
            out.e2 = b;
        }
    };

    constexpr int n_rot = 64;
    for (int i = 1; i <= budget; ++i) {
        for (int j = i + 1; j <= budget; ++j) {
            const H1Vector ei = H1Vector::basis(n_modes, i);
            const H1Vector ej = H1Vector::basis(n_modes, j);
            for (int r = 0; r <= n_rot; ++r) {
                const double phi = 0.5 * pi * r / n_rot;
                consider(ei * std::cos(phi) + ej * std::sin(phi), ej * std::cos(phi) - ei * std::sin(phi));
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < n_random; ++k) {
        H1Vector a(n_modes);
        H1Vector b(n_modes);
        const H1Vector ra = random_unit(budget, rng);
        const H1Vector rb = random_unit(budget, rng);
        for (int i = 0; i < budget; ++i) {
            a[i] = ra[i];
            b[i] = rb[i];
        }
        b -= a * inner(a, b);
        const double nb = norm(b);
        if (nb < 1e-8) {
            continue;
        }
        b *= 1.0 / nb;
        consider(a, b);
    }

    out.best_l2_sq = best;
    out.best_l2 = std::sqrt(best);
    out.ceiling = m / pi;
    out.ceiling_sq = m / (pi * pi);

    auto fill = [&](HypothesisReport& rep, const char* name, double value, double ceiling, const char* ceiling_label) {
        rep.name = name;
        rep.margin = snap_margin(value - 1.0, value);
        rep.verdict = strict_verdict(rep.margin);
        rep.witnesses.push_back({"best pair e1", out.e1.to_std(), value});
        rep.witnesses.push_back({"best pair e2", out.e2.to_std(), value});
        rep.witnesses.push_back({ceiling_label, {}, ceiling});
        rep.grid["mode_budget"] = budget;
        rep.grid["random_pairs"] = n_random;
        if (ceiling <= 1.0) {
            rep.note = std::string("infeasible: Poincare inequality |e|_L2 <= ||e||/pi caps the left side at ") +
                       ceiling_label + " <= 1 for every unit e";
        }
    };
    fill(out.statement, "(D3)", m * out.best_l2, out.ceiling, "m/pi");
    fill(out.proof, "(D3) squared", m * out.best_l2_sq, out.ceiling_sq, "m/pi^2");
    return out;
}

HypothesisReport check_D4(double m, double M)
{
    VARFIX_THROW_IF(!(m > 0.0), DomainError, "check_D4: m must be positive");
    VARFIX_THROW_IF(!(M >= m), DomainError, "check_D4: need M >= m");
    const double p2 = pi * pi;
    const double lhs = M * M + 2.0 * p2 * m;
    const double rhs = p2 * p2 + m * m;
    HypothesisReport rep;
    rep.name = "(D4)";
    rep.margin = snap_margin(rhs - lhs, std::max(lhs, rhs));
    rep.verdict = strict_verdict(rep.margin);
    rep.witnesses.push_back({"(m, M)", {m, M}, rep.margin});
    return rep;
}

namespace {

// Number of eigenvalues below x of the (n-1)x(n-1) matrix tridiag(-1, 2, -1)/h^2.
int sturm_count(int n, double x)
{
    const double h = 1.0 / n;
    const double diag = 2.0 / (h * h);
    const double off2 = 1.0 / (h * h * h * h);
    int count = 0;
    double q = diag - x;
    for (int i = 0; i < n - 1; ++i) {
        if (i > 0) {
            q = diag - x - off2 / q;
        }
        if (q == 0.0) {
            q = -std::numeric_limits<double>::epsilon() * diag;
        }
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace

double first_eigenvalue(EigenMethod method, int n, int which)
{
    VARFIX_THROW_IF(which < 1, DomainError, "first_eigenvalue: which must be >= 1");
    if (method == EigenMethod::spectral) {
        return which * which * pi * pi;
    }
    VARFIX_THROW_IF(n < 3, DomainError, "first_eigenvalue: finite-difference grid needs n >= 3");
    VARFIX_THROW_IF(which > n - 1, DomainError, "first_eigenvalue: grid has only n - 1 eigenvalues");
    double lo = 0.0;
    double hi = 4.0 * n * n;
    for (int it = 0; it < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(n, mid) >= which) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

struct OdeState {
    double u;
    double du;
};

OdeState rk4_step(const Nonlinearity& nl, double t, OdeState y, double h)
{
    auto rhs = [&](double tt, OdeState s) { return OdeState{s.du, -nl.f(tt, s.u)}; };
    const OdeState k1 = rhs(t, y);
    const OdeState k2 = rhs(t + 0.5 * h, {y.u + 0.5 * h * k1.u, y.du + 0.5 * h * k1.du});
    const OdeState k3 = rhs(t + 0.5 * h, {y.u + 0.5 * h * k2.u, y.du + 0.5 * h * k2.du});
    const OdeState k4 = rhs(t + h, {y.u + h * k3.u, y.du + h * k3.du});
    return {y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            y.du + h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du)};
}

constexpr int kOutputCells = 1000;

double shoot(const Nonlinearity& nl, double sigma, int steps_per_cell, std::vector<double>* profile)
{
    const int n_steps = kOutputCells * steps_per_cell;
    const double h = 1.0 / n_steps;
    OdeState y{0.0, sigma};
    if (profile) {
        profile->assign(1, 0.0);
        profile->reserve(kOutputCells + 1);
    }
    for (int i = 0; i < n_steps; ++i) {
        y = rk4_step(nl, i * h, y, h);
        VARFIX_THROW_IF(!std::isfinite(y.u) || !std::isfinite(y.du), NumericalBlowup,
                        "shooting_oracle: trajectory blew up");
        if (profile && (i + 1) % steps_per_cell == 0) {
            profile->push_back(y.u);
        }
    }
    return y.u;
}

} // namespace

ShootingResult shooting_oracle(const Nonlinearity& nl, double sigma_lo, double sigma_hi, int n_slopes, double tol,
                               int steps_per_cell)
{
    VARFIX_THROW_IF(!(sigma_hi > sigma_lo), DomainError, "shooting_oracle: empty slope range");
    VARFIX_THROW_IF(n_slopes < 2, DomainError, "shooting_oracle: need at least 2 slopes");
    VARFIX_THROW_IF(!(tol > 0.0), DomainError, "shooting_oracle: tol must be positive");
    VARFIX_THROW_IF(steps_per_cell < 1, DomainError, "shooting_oracle: steps_per_cell must be >= 1");

    std::vector<double> sig(n_slopes);
    std::vector<double> end(n_slopes);
    for (int j = 0; j < n_slopes; ++j) {
        sig[j] = sigma_lo + (sigma_hi - sigma_lo) * j / (n_slopes - 1);
        end[j] = shoot(nl, sig[j], steps_per_cell, nullptr);
    }

    ShootingResult res;
    int run = 0;
    for (int j = 0; j < n_slopes; ++j) {
        run = std::abs(end[j]) < tol ? run + 1 : 0;
        if (run >= 3) {
            res.degenerate = true;
            res.diagnostic = "u(1) vanishes on a continuum of slopes near sigma = " + std::to_string(sig[j]) +
                             " (resonant linear part); roots are not isolated";
            return res;
        }
    }

    std::vector<double> roots;
    for (int j = 0; j < n_slopes; ++j) {
        if (std::abs(end[j]) <= tol) {
            roots.push_back(sig[j]);
            continue;
        }
        if (j + 1 < n_slopes && std::abs(end[j + 1]) > tol && std::signbit(end[j]) != std::signbit(end[j + 1])) {
            double a = sig[j];
            double b = sig[j + 1];
            double fa = end[j];
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) {
                    break;
                }
                const double fm = shoot(nl, mid, steps_per_cell, nullptr);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
    }

    for (double s : roots) {
        ShootingSolution sol;
        sol.sigma = s;
        sol.end_value = shoot(nl, s, steps_per_cell, &sol.profile);
        if (std::abs(sol.end_value) > tol) {
            continue;
        }
        double peak = 0.0;
        for (double v : sol.profile) {
            peak = std::max(peak, std::abs(v));
        }
        sol.trivial = peak <= 1e-12;
        res.solutions.push_back(std::move(sol));
    }
    if (res.solutions.empty()) {
        res.diagnostic = "no sign change of u(1) on the slope grid";
    }
    return res;
}

} // namespace varfix::bvp
