#include "varfix/models.hpp"

#include "varfix/errors.hpp"

#include <cmath>

namespace varfix {

PotentialOperatorSpec power_model(double coef, double theta, int n_modes, std::uint64_t seed)
{
    VARFIX_THROW_IF(!(coef >= 0.0), DomainError, "power_model: coef must be >= 0");
    PotentialOperatorSpec::Options opts;
    opts.odd = true;
    opts.theta = theta;
    opts.validation_seed = seed;
    opts.closed_form_potential = [coef, theta](const H1Vector& u) {
        double t = 0.0;
        for (int i = 0; i < u.size(); ++i) {
            t += coef * std::pow(std::abs(u[i]), theta + 1.0) / (theta + 1.0);
        }
        return t;
    };
    auto apply = [coef, theta](const H1Vector& u) {
        H1Vector a(u.size());
        for (int i = 0; i < u.size(); ++i) {
            const double x = u[i];
            a[i] = x == 0.0 ? 0.0 : std::copysign(coef * std::pow(std::abs(x), theta), x);
        }
        return a;
    };
    return PotentialOperatorSpec::create("power", n_modes, apply, std::move(opts));
}

double truncated_cubic_scalar(double x, double slope, double cutoff)
{
    const double ax = std::abs(x);
    if (ax <= cutoff) {
        return slope * x - x * x * x;
    }
    const double ga = slope * cutoff - cutoff * cutoff * cutoff;
    const double dga = slope - 3.0 * cutoff * cutoff;
    const double y = ax - cutoff;
    const double g = ga + dga * y / (1.0 + y);
    return x > 0.0 ? g : -g;
}

namespace {

double truncated_cubic_primitive(double x, double slope, double cutoff)
{
    const double ax = std::abs(x);
    if (ax <= cutoff) {
        return 0.5 * slope * x * x - 0.25 * x * x * x * x;
    }
    const double a = cutoff;
    const double ga = slope * a - a * a * a;
    const double dga = slope - 3.0 * a * a;
    const double y = ax - a;
    return 0.5 * slope * a * a - 0.25 * a * a * a * a + ga * y + dga * (y - std::log1p(y));
}

} // namespace

PotentialOperatorSpec truncated_cubic_model(double slope, double cutoff, int n_modes, std::uint64_t seed)
{
    VARFIX_THROW_IF(!(slope > 1.0), DomainError, "truncated_cubic_model: slope must exceed 1");
    VARFIX_THROW_IF(!(cutoff * cutoff > slope - 1.0), DomainError,
                    "truncated_cubic_model: cutoff must exceed sqrt(slope - 1)");
    // g(cutoff) < cutoff keeps the continuation free of fixed points
    VARFIX_THROW_IF(!(slope * cutoff - cutoff * cutoff * cutoff < cutoff), DomainError,
                    "truncated_cubic_model: need slope < cutoff^2 + 1");
    PotentialOperatorSpec::Options opts;
    opts.odd = true;
    opts.theta = 0.0;
    opts.validation_seed = seed;
    opts.validation_radius = 2.0 * cutoff;
    opts.closed_form_potential = [slope, cutoff](const H1Vector& u) {
        double t = 0.0;
        for (int i = 0; i < u.size(); ++i) {
            t += truncated_cubic_primitive(u[i], slope, cutoff);
        }
        return t;
    };
    auto apply = [slope, cutoff](const H1Vector& u) {
        H1Vector a(u.size());
        for (int i = 0; i < u.size(); ++i) {
            a[i] = truncated_cubic_scalar(u[i], slope, cutoff);
        }
        return a;
    };
    return PotentialOperatorSpec::create("truncated-cubic", n_modes, apply, std::move(opts));
}

} // namespace varfix
