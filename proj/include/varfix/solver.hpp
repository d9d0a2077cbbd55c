#pragma once

#include "varfix/operators.hpp"
#include "varfix/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace varfix {

struct SolverConfig {
    int max_iter = 5000;
    double grad_tol = 1e-10;
    double armijo_c = 1e-4;
    double armijo_shrink = 0.5;
    double init_step = 1.0;
    // Unset: 1e-4 * largest seed norm.
    std::optional<double> trivial_threshold;
    double dedup_tol = 1e-6;
    // Bump radius for deflation, relative to ||u*||.
    double deflation_radius = 0.1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TraceRecord {
    double j_value = 0.0;
    double grad_norm = 0.0;
    double step = 0.0;   // accepted step leaving this iterate; 0 on the last record
};

struct CriticalPoint {
    H1Vector u;
    double j_value = 0.0;
    double grad_norm = 0.0;
    double fp_residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<TraceRecord> trace;
    // last few iterates, oldest first, for the Palais-Smale monitor
    std::vector<H1Vector> tail;
};

struct SolutionPair {
    H1Vector u;   // canonical representative; -u is its partner
    double j_value = 0.0;
    double grad_norm = 0.0;
    double fp_residual = 0.0;
    double fp_residual_neg = 0.0;
    int iterations = 0;
    bool via_deflation = false;
};

struct StartTrace {
    int start = 0;
    std::vector<double> seed;
    std::string outcome;
    std::vector<TraceRecord> records;
    double ps_defect = 0.0;
};

struct SolveReport {
    std::vector<SolutionPair> pairs;
    int n_pairs = 0;
    int rejected_trivial = 0;
    int duplicates = 0;
    int unconverged = 0;
    std::vector<StartTrace> ps_trace;
    std::string diagnostic;
};

// Extra term added to J during a deflated search, with its gradient.
struct Deflation {
    std::vector<H1Vector> centers;
    std::vector<double> radii;
    std::vector<double> heights;

    bool empty() const { return centers.empty(); }
    double value(const H1Vector& u) const;
    H1Vector gradient(const H1Vector& u) const;
    bool inside(const H1Vector& u) const;
};

/**
 * Gradient descent on J with J'(u) = u - A(u) and Armijo backtracking.
 * Accepted steps satisfy J(u_next) <= J(u) - armijo_c * step * ||J'(u)||^2 up
 * to the rounding floor of the J evaluation. Throws NumericalBlowup when J or
 * A(u) stops being finite.
 */
CriticalPoint descend(const PotentialOperatorSpec& A, const H1Vector& u0, const SolverConfig& cfg,
                      const Deflation* deflation = nullptr);

// Descends from every seed and its negation, folds results into +/- pairs.
SolveReport find_pairs(const PotentialOperatorSpec& A, const std::vector<H1Vector>& seeds, const SolverConfig& cfg);

// max over the tail of ||u_n - v|| - (||J'(u_n)|| + ||A(u_n) - v||).
double ps_check(const std::vector<H1Vector>& tail, const H1Vector& v, const PotentialOperatorSpec& A);

// Sign convention: first coefficient with |c_k| > tol is positive.
H1Vector canonical_sign(const H1Vector& u, double tol);

std::vector<H1Vector> seeds_pair(const H1Vector& e1, double r1);
std::vector<H1Vector> seeds_circle(const H1Vector& e2, const H1Vector& e3, double r2, int n_angles = 16);

} // namespace varfix
