#pragma once

#include "varfix/operators.hpp"
#include "varfix/space.hpp"

#include <map>
#include <string>
#include <vector>

namespace varfix {

enum class Verdict { pass, fail, sampled_pass };

const char* to_string(Verdict v);

struct Witness {
    std::string label;
    std::vector<double> point;
    double value = 0.0;
};

/**
 * Outcome of one hypothesis check. `margin` is positive when the condition
 * holds; sampled_pass marks conditions quantified over a continuum that were
 * only verified on a grid.
 */
struct HypothesisReport {
    std::string name;
    Verdict verdict = Verdict::fail;
    double margin = 0.0;
    std::vector<Witness> witnesses;
    std::map<std::string, int> grid;
    std::string note;

    bool passed() const { return verdict != Verdict::fail; }
};

// Margins with |margin| <= kRoundingTolerance * scale are reported as exactly 0.
inline constexpr double kRoundingTolerance = 1e-12;

double snap_margin(double margin, double scale);

// Verdict for `margin > 0` (strict) or `margin >= 0`.
Verdict strict_verdict(double margin);
Verdict nonstrict_verdict(double margin, bool sampled);

struct QuadraticFormData {
    double b22 = 0.0;
    double b23 = 0.0;
    double b33 = 0.0;
    double discriminant = 0.0;
    // largest eigenvalue of [[(1-b22)/2, -b23/2], [-b23/2, (1-b33)/2]]
    double circle_max = 0.0;
};

struct QuadraticFormResult {
    QuadraticFormData data;
    HypothesisReport report;
};

HypothesisReport check_H1(const LinearOperatorSpec& B1, const H1Vector& e1);

HypothesisReport check_H2(const PotentialOperatorSpec& A, const LinearOperatorSpec& B1, const H1Vector& e1,
                          double r1, int n_s = 256);

QuadraticFormResult quadratic_form_margin(const LinearOperatorSpec& B2, const H1Vector& e2, const H1Vector& e3);

HypothesisReport check_H2prime(const PotentialOperatorSpec& A, const LinearOperatorSpec& B2, const H1Vector& e2,
                               const H1Vector& e3, double r2, int n_angle = 256, int n_s = 256);

// Growth condition from a sampled certificate: margin = 1 - tail exponent.
HypothesisReport check_growth(const GrowthCertificate& cert);

// Genus of the sphere of radius r in span{e_1..e_d}.
int genus_of_sphere(int subspace_dim);

/**
 * Sign probe for the n-dimensional sphere K_n = {u in span(e_1..e_n), ||u|| = r}:
 * eigenvalues of the form (I - G)/2 with G_ij = (B e_i, e_j). A negative maximum
 * means ||u||^2/2 - (Bu, u)/2 < 0 on K_n. Experimental; no existence claim.
 */
struct SphereFormProbe {
    std::vector<double> eigenvalues;
    double max_eigenvalue = 0.0;
    bool negative_definite = false;
};

SphereFormProbe probe_sphere_form(const LinearOperatorSpec& B, const std::vector<H1Vector>& basis);

// Uniform grid of n points in the open interval (0, 1).
std::vector<double> open_unit_grid(int n);

// Gram-Schmidt on a pair that is orthonormal within 1e-10; throws otherwise.
std::pair<H1Vector, H1Vector> orthonormalize_pair(const H1Vector& e2, const H1Vector& e3);

} // namespace varfix
