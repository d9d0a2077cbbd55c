#include "varfix/hypotheses.hpp"

#include "varfix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace varfix {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::sampled_pass:
        return "sampled-pass";
    }
    return "fail";
}

double snap_margin(double margin, double scale)
{
    return std::abs(margin) <= kRoundingTolerance * std::max(1.0, std::abs(scale)) ? 0.0 : margin;
}

Verdict strict_verdict(double margin)
{
    return margin > 0.0 ? Verdict::pass : Verdict::fail;
}

Verdict nonstrict_verdict(double margin, bool sampled)
{
    if (margin < 0.0) {
        return Verdict::fail;
    }
    return sampled ? Verdict::sampled_pass : Verdict::pass;
}

namespace {

void require_unit(const H1Vector& e, const char* where)
{
    VARFIX_THROW_IF(std::abs(norm(e) - 1.0) > 1e-10, DomainError, std::string(where) + ": vector must have unit norm");
}

void require_grid(int n, const char* where)
{
    VARFIX_THROW_IF(n < 10, DomainError, std::string(where) + ": grid needs at least 10 points");
}

} // namespace

std::vector<double> open_unit_grid(int n)
{
    std::vector<double> s(n);
    for (int j = 0; j < n; ++j) {
        s[j] = (j + 1.0) / (n + 1.0);
    }
    return s;
}

std::pair<H1Vector, H1Vector> orthonormalize_pair(const H1Vector& e2, const H1Vector& e3)
{
    require_same_size(e2, e3, "orthonormalize_pair");
    require_unit(e2, "orthonormalize_pair");
    require_unit(e3, "orthonormalize_pair");
    VARFIX_THROW_IF(std::abs(inner(e2, e3)) > 1e-10, DomainError, "orthonormalize_pair: vectors are not orthogonal");
    H1Vector a = e2 * (1.0 / norm(e2));
    H1Vector b = e3 - a * inner(a, e3);
    b *= 1.0 / norm(b);
    return {a, b};
}

HypothesisReport check_H1(const LinearOperatorSpec& B1, const H1Vector& e1)
{
    require_unit(e1, "check_H1");
    const double b11 = B1.form(e1, e1);
    HypothesisReport rep;
    rep.name = "(H1)";
    rep.margin = snap_margin(b11 - 1.0, b11);
    rep.verdict = strict_verdict(rep.margin);
    rep.witnesses.push_back({"(B1 e1, e1)", e1.to_std(), b11});
    if (rep.margin == 0.0) {
        rep.note = "margin is zero; the condition is a strict inequality";
    }
    return rep;
}

HypothesisReport check_H2(const PotentialOperatorSpec& A, const LinearOperatorSpec& B1, const H1Vector& e1,
                          double r1, int n_s)
{
    require_unit(e1, "check_H2");
    VARFIX_THROW_IF(!(r1 > 0.0), DomainError, "check_H2: r1 must be positive");
    require_grid(n_s, "check_H2");

    const double b11 = B1.form(e1, e1);
    const H1Vector base = e1 * r1;
    double worst = std::numeric_limits<double>::infinity();
    double worst_s = 0.0;
    for (double s : open_unit_grid(n_s)) {
        const double lhs = inner(A.apply(base * s), base);
        const double rhs = s * r1 * r1 * b11;
        const double m = snap_margin(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)));
        if (m < worst) {
            worst = m;
            worst_s = s;
        }
    }
    HypothesisReport rep;
    rep.name = "(H2)";
    rep.margin = worst;
    rep.verdict = nonstrict_verdict(worst, true);
    rep.witnesses.push_back({"s at minimum margin", {worst_s}, worst});
    rep.grid["n_s"] = n_s;
    return rep;
}

QuadraticFormResult quadratic_form_margin(const LinearOperatorSpec& B2, const H1Vector& e2_in, const H1Vector& e3_in)
{
    VARFIX_THROW_IF(!B2.self_adjoint(), DomainError, "quadratic_form_margin: B2 must be self-adjoint");
    const auto [e2, e3] = orthonormalize_pair(e2_in, e3_in);

    QuadraticFormResult out;
    auto& d = out.data;
    d.b22 = B2.form(e2, e2);
    d.b33 = B2.form(e3, e3);
    d.b23 = B2.form(e2, e3);
    d.discriminant = d.b23 * d.b23 - (1.0 - d.b22) * (1.0 - d.b33);

    const double a = 0.5 * (1.0 - d.b22);
    const double c = 0.5 * (1.0 - d.b33);
    const double b = -0.5 * d.b23;
    d.circle_max = 0.5 * (a + c) + std::hypot(0.5 * (a - c), b);

    const double m22 = snap_margin(d.b22 - 1.0, d.b22);
    const double m33 = snap_margin(d.b33 - 1.0, d.b33);
    const double mdisc = snap_margin(-d.discriminant, d.b23 * d.b23 + std::abs((1.0 - d.b22) * (1.0 - d.b33)));

    auto& rep = out.report;
    rep.name = "(H1)'";
    rep.margin = std::min({m22, m33, mdisc});
    rep.verdict = strict_verdict(rep.margin);
    rep.witnesses.push_back({"b22", {}, d.b22});
    rep.witnesses.push_back({"b23", {}, d.b23});
    rep.witnesses.push_back({"b33", {}, d.b33});
    rep.witnesses.push_back({"discriminant", {}, d.discriminant});
    rep.witnesses.push_back({"circle_max", {}, d.circle_max});
    if (rep.margin == 0.0) {
        rep.note = "margin is zero; the conditions are strict inequalities";
    }
    return out;
}

HypothesisReport check_H2prime(const PotentialOperatorSpec& A, const LinearOperatorSpec& B2, const H1Vector& e2_in,
                               const H1Vector& e3_in, double r2, int n_angle, int n_s)
{
    VARFIX_THROW_IF(!(r2 > 0.0), DomainError, "check_H2prime: r2 must be positive");
    require_grid(n_angle, "check_H2prime");
    require_grid(n_s, "check_H2prime");
    const auto [e2, e3] = orthonormalize_pair(e2_in, e3_in);

    const std::vector<double> s_grid = open_unit_grid(n_s);
    double worst = std::numeric_limits<double>::infinity();
    double worst_phi = 0.0;
    double worst_s = 0.0;
    for (int j = 0; j < n_angle; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / n_angle;
        const H1Vector u = (e2 * std::cos(phi) + e3 * std::sin(phi)) * r2;
        const H1Vector bu = B2.apply(u);
        const double bu_u = inner(bu, u);
        for (double s : s_grid) {
            const double lhs = inner(A.apply(u * s), u);
            const double rhs = s * bu_u;
            const double m = snap_margin(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)));
            if (m < worst) {
                worst = m;
                worst_phi = phi;
                worst_s = s;
            }
        }
    }
    HypothesisReport rep;
    rep.name = "(H2)'";
    rep.margin = worst;
    rep.verdict = nonstrict_verdict(worst, true);
    rep.witnesses.push_back({"(phi, s) at minimum margin", {worst_phi, worst_s}, worst});
    rep.grid["n_angle"] = n_angle;
    rep.grid["n_s"] = n_s;
    return rep;
}

HypothesisReport check_growth(const GrowthCertificate& cert)
{
    HypothesisReport rep;
    rep.name = "(H)";
    rep.margin = snap_margin(1.0 - cert.tail_exponent, 1.0);
    // growth exponent must stay strictly below 1 (theta = 1 is quasiboundedness)
    rep.verdict = rep.margin > 0.0 ? Verdict::sampled_pass : Verdict::fail;
    rep.witnesses.push_back({"c", {}, cert.c});
    rep.witnesses.push_back({"b", {}, cert.b});
    rep.witnesses.push_back({"sampled_max_ratio", {}, cert.sampled_max_ratio});
    rep.witnesses.push_back({"tail_exponent", {}, cert.tail_exponent});
    rep.grid["radii"] = static_cast<int>(cert.radii_tested.size());
    rep.note = "sampled envelope ||Au|| <= c||u||^theta + b on the tested radii; not a proof of the limsup bound";
    return rep;
}

int genus_of_sphere(int subspace_dim)
{
    VARFIX_THROW_IF(subspace_dim < 1, DomainError, "genus_of_sphere: dimension must be >= 1");
    // x -> x/||x|| is an odd homeomorphism onto S^{d-1}, the boundary of a bounded
    // neighbourhood of 0 in R^d.
    return subspace_dim;
}

SphereFormProbe probe_sphere_form(const LinearOperatorSpec& B, const std::vector<H1Vector>& basis)
{
    VARFIX_THROW_IF(basis.empty(), DomainError, "probe_sphere_form: basis must be nonempty");
    const auto n = static_cast<Eigen::Index>(basis.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double expect = (i == j) ? 1.0 : 0.0;
            VARFIX_THROW_IF(std::abs(inner(basis[i], basis[j]) - expect) > 1e-10, DomainError,
                            "probe_sphere_form: basis must be orthonormal");
        }
    }
    Eigen::MatrixXd q(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double g = 0.5 * (B.form(basis[i], basis[j]) + B.form(basis[j], basis[i]));
            q(i, j) = 0.5 * ((i == j ? 1.0 : 0.0) - g);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    SphereFormProbe probe;
    for (Eigen::Index i = 0; i < n; ++i) {
        probe.eigenvalues.push_back(es.eigenvalues()[i]);
    }
    probe.max_eigenvalue = probe.eigenvalues.back();
    probe.negative_definite = probe.max_eigenvalue < 0.0;
    return probe;
}

} // namespace varfix
