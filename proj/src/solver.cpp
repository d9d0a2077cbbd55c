#include "varfix/solver.hpp"

#include "varfix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace varfix {

namespace {

constexpr std::size_t kTailLength = 10;
constexpr double kMinStep = 1e-20;

double rounding_floor(double j, const H1Vector& u)
{
    return 64.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(j), 0.5 * inner(u, u), 1e-300});
}

double min_pair_distance(const H1Vector& u, const H1Vector& p)
{
    return std::min(norm(u - p), norm(u + p));
}

} // namespace

void SolverConfig::validate() const
{
    VARFIX_THROW_IF(max_iter < 1, DomainError, "SolverConfig: max_iter must be >= 1");
    VARFIX_THROW_IF(!(grad_tol > 0.0), DomainError, "SolverConfig: grad_tol must be positive");
    VARFIX_THROW_IF(!(armijo_c > 0.0 && armijo_c < 1.0), DomainError, "SolverConfig: armijo_c must lie in (0, 1)");
    VARFIX_THROW_IF(!(armijo_shrink > 0.0 && armijo_shrink < 1.0), DomainError,
                    "SolverConfig: armijo_shrink must lie in (0, 1)");
    VARFIX_THROW_IF(!(init_step > 0.0), DomainError, "SolverConfig: init_step must be positive");
    VARFIX_THROW_IF(trivial_threshold && !(*trivial_threshold > 0.0), DomainError,
                    "SolverConfig: trivial_threshold must be positive");
    VARFIX_THROW_IF(!(dedup_tol > 0.0), DomainError, "SolverConfig: dedup_tol must be positive");
    VARFIX_THROW_IF(!(deflation_radius > 0.0), DomainError, "SolverConfig: deflation_radius must be positive");
}

double Deflation::value(const H1Vector& u) const
{
    double p = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double d2 = inner(u - centers[i], u - centers[i]);
        const double r2 = radii[i] * radii[i];
        if (d2 < r2) {
            const double w = 1.0 - d2 / r2;
            p += heights[i] * w * w;
        }
    }
    return p;
}

H1Vector Deflation::gradient(const H1Vector& u) const
{
    H1Vector g(u.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const H1Vector diff = u - centers[i];
        const double d2 = inner(diff, diff);
        const double r2 = radii[i] * radii[i];
        if (d2 < r2) {
            g += diff * (-4.0 * heights[i] * (1.0 - d2 / r2) / r2);
        }
    }
    return g;
}

bool Deflation::inside(const H1Vector& u) const
{
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (norm(u - centers[i]) < radii[i]) {
            return true;
        }
    }
    return false;
}

CriticalPoint descend(const PotentialOperatorSpec& A, const H1Vector& u0, const SolverConfig& cfg,
                      const Deflation* deflation)
{
    cfg.validate();
    VARFIX_THROW_IF(u0.size() != A.n_modes(), DimensionMismatch, "descend: start vector has the wrong size");
    const bool deflated = deflation != nullptr && !deflation->empty();

    auto objective = [&](const H1Vector& u) {
        double j = objective_J(A, u);
        if (deflated) {
            j += deflation->value(u);
        }
        VARFIX_THROW_IF(!std::isfinite(j), NumericalBlowup,
                        "descend: non-finite J encountered (operator '" + A.name() + "' blew up)");
        return j;
    };
    auto gradient = [&](const H1Vector& u) {
        H1Vector g = gradient_J(A, u);
        if (deflated) {
            g += deflation->gradient(u);
        }
        VARFIX_THROW_IF(!g.all_finite(), NumericalBlowup,
                        "descend: non-finite gradient encountered (operator '" + A.name() + "' blew up)");
        return g;
    };

    CriticalPoint cp;
    H1Vector u = u0;
    double j = objective(u);
    H1Vector g = gradient(u);
    int it = 0;
    for (; it < cfg.max_iter; ++it) {
        const double gn = norm(g);
        cp.trace.push_back({j, gn, 0.0});
        cp.tail.push_back(u);
        if (cp.tail.size() > kTailLength) {
            cp.tail.erase(cp.tail.begin());
        }
        if (gn < cfg.grad_tol) {
            cp.converged = true;
            break;
        }

        double alpha = cfg.init_step;
        bool accepted = false;
        H1Vector trial;
        double j_trial = 0.0;
        H1Vector g_trial;
        while (alpha >= kMinStep) {
            trial = u - g * alpha;
            j_trial = objective(trial);
            const double target = j - cfg.armijo_c * alpha * gn * gn;
            if (j_trial <= target) {
                g_trial = gradient(trial);
                accepted = true;
                break;
            }
            // Below the rounding floor of J the decrease cannot be resolved; fall
            // back to requiring a smaller gradient.
            if (j_trial <= target + rounding_floor(j, u)) {
                g_trial = gradient(trial);
                if (norm(g_trial) < gn) {
                    accepted = true;
                    break;
                }
            }
            alpha *= cfg.armijo_shrink;
        }
        if (!accepted) {
            break;
        }
        cp.trace.back().step = alpha;
        u = std::move(trial);
        j = j_trial;
        g = std::move(g_trial);
    }
    if (it == cfg.max_iter) {
        cp.trace.push_back({j, norm(g), 0.0});
        cp.tail.push_back(u);
        if (cp.tail.size() > kTailLength) {
            cp.tail.erase(cp.tail.begin());
        }
        cp.converged = norm(g) < cfg.grad_tol;
    }

    cp.iterations = it;
    cp.u = u;
    cp.j_value = objective_J(A, u);
    const H1Vector au = A.apply(u);
    cp.fp_residual = norm(u - au);
    cp.grad_norm = norm(gradient_J(A, u));
    return cp;
}

double ps_check(const std::vector<H1Vector>& tail, const H1Vector& v, const PotentialOperatorSpec& A)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const H1Vector& un : tail) {
        const H1Vector aun = A.apply(un);
        const double lhs = norm(un - v);
        const double rhs = norm(gradient_J(A, un)) + norm(aun - v);
        worst = std::max(worst, lhs - rhs);
    }
    return tail.empty() ? 0.0 : worst;
}

H1Vector canonical_sign(const H1Vector& u, double tol)
{
    for (int k = 0; k < u.size(); ++k) {
        if (std::abs(u[k]) > tol) {
            return u[k] < 0.0 ? -u : u;
        }
    }
    return u;
}

SolveReport find_pairs(const PotentialOperatorSpec& A, const std::vector<H1Vector>& seeds, const SolverConfig& cfg)
{
    VARFIX_THROW_IF(seeds.empty(), DomainError, "find_pairs: seed list is empty");
    cfg.validate();

    double max_seed = 0.0;
    for (const auto& s : seeds) {
        max_seed = std::max(max_seed, norm(s));
    }
    const double trivial = cfg.trivial_threshold.value_or(std::max(1e-4 * max_seed, 1e-12));

    SolveReport rep;
    auto is_duplicate = [&](const H1Vector& u) {
        return std::any_of(rep.pairs.begin(), rep.pairs.end(),
                           [&](const SolutionPair& p) { return min_pair_distance(u, p.u) <= cfg.dedup_tol; });
    };
    auto accept = [&](const CriticalPoint& cp, bool via_deflation) {
        SolutionPair p;
        p.u = canonical_sign(cp.u, cfg.dedup_tol);
        p.j_value = cp.j_value;
        p.grad_norm = cp.grad_norm;
        p.fp_residual = cp.fp_residual;
        const H1Vector neg = -cp.u;
        p.fp_residual_neg = norm(neg - A.apply(neg));
        p.iterations = cp.iterations;
        p.via_deflation = via_deflation;
        rep.pairs.push_back(std::move(p));
    };
    auto usable = [&](const CriticalPoint& cp) { return cp.converged && norm(cp.u) > trivial; };

    int start = 0;
    for (const H1Vector& seed : seeds) {
        for (double sign : {1.0, -1.0}) {
            const H1Vector s = seed * sign;
            CriticalPoint cp = descend(A, s, cfg);
            StartTrace tr;
            tr.start = start++;
            tr.seed = s.to_std();
            tr.records = cp.trace;
            tr.ps_defect = ps_check(cp.tail, A.apply(cp.u), A);

            if (norm(cp.u) <= trivial) {
                ++rep.rejected_trivial;
                tr.outcome = "trivial";
            } else if (!cp.converged) {
                ++rep.unconverged;
                tr.outcome = "unconverged";
            } else if (!is_duplicate(cp.u)) {
                accept(cp, false);
                tr.outcome = "new";
            } else {
                ++rep.duplicates;
                tr.outcome = "duplicate";
                Deflation defl;
                for (const auto& p : rep.pairs) {
                    const double rho = cfg.deflation_radius * norm(p.u);
                    const double eta = 2.0 * std::abs(p.j_value) + rho * rho;
                    for (double sg : {1.0, -1.0}) {
                        defl.centers.push_back(p.u * sg);
                        defl.radii.push_back(rho);
                        defl.heights.push_back(eta);
                    }
                }
                CriticalPoint retry = descend(A, s, cfg, &defl);
                if (defl.inside(retry.u) || !retry.converged) {
                    // critical point of the deflated functional only; polish on J itself
                    retry = descend(A, retry.u, cfg);
                }
                if (usable(retry) && !is_duplicate(retry.u)) {
                    accept(retry, true);
                    tr.outcome = "new-after-deflation";
                }
            }
            rep.ps_trace.push_back(std::move(tr));
        }
    }

    std::stable_sort(rep.pairs.begin(), rep.pairs.end(), [](const SolutionPair& a, const SolutionPair& b) {
        if (a.j_value != b.j_value) {
            return a.j_value < b.j_value;
        }
        return std::lexicographical_compare(a.u.coeffs().begin(), a.u.coeffs().end(), b.u.coeffs().begin(),
                                            b.u.coeffs().end());
    });
    rep.n_pairs = static_cast<int>(rep.pairs.size());
    if (rep.n_pairs == 0) {
        rep.diagnostic = rep.rejected_trivial == 2 * static_cast<int>(seeds.size())
                             ? "all starts converged to the trivial fixed point; existence hypotheses are likely not satisfied"
                             : "no nontrivial converged critical point found";
    }
    return rep;
}

std::vector<H1Vector> seeds_pair(const H1Vector& e1, double r1)
{
    return {e1 * r1};
}

std::vector<H1Vector> seeds_circle(const H1Vector& e2, const H1Vector& e3, double r2, int n_angles)
{
    VARFIX_THROW_IF(n_angles < 1, DomainError, "seeds_circle: need at least one angle");
    std::vector<H1Vector> seeds;
    seeds.reserve(n_angles);
    for (int j = 0; j < n_angles; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / n_angles;
        seeds.push_back((e2 * std::cos(phi) + e3 * std::sin(phi)) * r2);
    }
    return seeds;
}

} // namespace varfix
