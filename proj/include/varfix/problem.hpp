#pragma once

#include "varfix/bvp.hpp"
#include "varfix/operators.hpp"
#include "varfix/solver.hpp"
#include "varfix/space.hpp"

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace varfix {

/**
 * Problem definition read from a line-oriented `key = value` file with the
 * sections [space], [problem], [solver] and [hypotheses]. Unknown sections or
 * keys are errors. Every key is listed in README.md.
 */
struct ProblemConfig {
    SpaceConfig space;
    int fd_grid = 1000;

    std::string kind = "bvp";          // bvp | model1d | cubic2d
    int theorem = 1;                   // 1: one pair from +/- r1 e1, 2: two pairs from a circle
    std::optional<int> expected_pairs;
    std::string family = "example53";  // example53 | power | linear | tanh | zero
    double coef = 2.0;
    double theta = 0.5;
    double r1 = 0.5;
    double lambda = 5.0;
    double slope = 2.0;
    double cutoff = 2.0;

    SolverConfig solver;
    std::optional<double> grad_tol;
    int circle_seeds = 16;
    std::string trace_csv;

    double b_scale = 1.5;
    std::optional<double> hyp_r1;
    double hyp_r2 = 0.5;
    int n_s = 256;
    int n_angle = 256;
    int mode_budget = 8;
    int d3_random = 200;
    int d1_n_t = 64;
    int d1_n_u = 64;
    double growth_r_min = 1e-3;
    double growth_r_max = 1e3;
    int growth_radii = 13;
    int growth_dirs = 16;

    std::uint64_t seed() const { return solver.seed; }
};

ProblemConfig parse_problem(std::istream& in, const std::string& source = "<input>");
ProblemConfig load_problem(const std::string& path);

// "section.key=value"
void apply_override(ProblemConfig& cfg, const std::string& assignment);

nlohmann::ordered_json to_json(const ProblemConfig& cfg);

// Operator, comparison operator and unit vectors assembled from a configuration.
struct Problem {
    ProblemConfig cfg;
    std::optional<Discretization> disc;
    std::optional<bvp::Nonlinearity> nl;
    std::optional<PotentialOperatorSpec> op;
    std::optional<LinearOperatorSpec> b;
    std::vector<H1Vector> directions;   // e1 (theorem 1) or e2, e3 (theorem 2)
    double radius = 0.0;                // r1 or r2
    int expected_pairs = 1;
    SolverConfig solver;

    bool is_bvp() const { return nl.has_value(); }
    std::vector<H1Vector> seeds() const;
};

Problem build_problem(const ProblemConfig& cfg);

} // namespace varfix
