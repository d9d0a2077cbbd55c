#include <gtest/gtest.h>

#include "varfix/errors.hpp"
#include "varfix/problem.hpp"

#include <sstream>

using namespace varfix;

namespace {

ProblemConfig parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_problem(in, "test");
}

} // namespace

TEST(ParseProblem, SectionsCommentsAndDefaults)
{
    const ProblemConfig cfg = parse(R"(
# comment
[space]
n_modes = 16   # trailing comment
[problem]
kind = cubic2d
theorem = 2
[solver]
max_iter = 100
grad_tol = 1e-9
[hypotheses]
r2 = 0.25
)");
    EXPECT_EQ(cfg.space.n_modes, 16);
    EXPECT_EQ(cfg.space.quad_nodes, 8);
    EXPECT_EQ(cfg.kind, "cubic2d");
    EXPECT_EQ(cfg.theorem, 2);
    EXPECT_EQ(cfg.solver.max_iter, 100);
    ASSERT_TRUE(cfg.grad_tol.has_value());
    EXPECT_DOUBLE_EQ(*cfg.grad_tol, 1e-9);
    EXPECT_DOUBLE_EQ(cfg.hyp_r2, 0.25);
}

TEST(ParseProblem, Errors)
{
    EXPECT_THROW(parse("[space]\nbogus = 1\n"), ConfigError);
    EXPECT_THROW(parse("[nowhere]\n"), ConfigError);
    EXPECT_THROW(parse("n_modes = 3\n"), ConfigError);
    EXPECT_THROW(parse("[space]\nn_modes 3\n"), ConfigError);
    EXPECT_THROW(parse("[space]\nn_modes = three\n"), ConfigError);
    EXPECT_THROW(parse("[space]\nn_modes = 3.5\n"), ConfigError);
    EXPECT_THROW(parse("[problem]\nkind = pde\n"), ConfigError);
    EXPECT_THROW(parse("[space\n"), ConfigError);
    EXPECT_THROW(load_problem("/nonexistent/path.cfg"), ConfigError);
}

TEST(ParseProblem, ErrorMessageNamesLine)
{
    try {
        parse("[space]\n\nbogus = 1\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("test:3"), std::string::npos);
    }
}

TEST(Overrides, ApplyAndReject)
{
    ProblemConfig cfg;
    apply_override(cfg, "solver.seed=42");
    apply_override(cfg, "problem.family = power");
    EXPECT_EQ(cfg.seed(), 42u);
    EXPECT_EQ(cfg.family, "power");
    EXPECT_THROW(apply_override(cfg, "seed=1"), ConfigError);
    EXPECT_THROW(apply_override(cfg, "solver.seed"), ConfigError);
    EXPECT_THROW(apply_override(cfg, "solver.nope=1"), ConfigError);
}

TEST(ConfigJson, EchoesEveryKey)
{
    const auto j = to_json(ProblemConfig{});
    EXPECT_EQ(j.at("space").at("n_modes"), 32);
    EXPECT_EQ(j.at("problem").at("kind"), "bvp");
    EXPECT_TRUE(j.at("solver").at("grad_tol").is_null());
    EXPECT_EQ(j.at("hypotheses").at("n_s"), 256);
}

TEST(BuildProblem, DefaultsPerKind)
{
    ProblemConfig cfg;
    const Problem bvp = build_problem(cfg);
    EXPECT_TRUE(bvp.is_bvp());
    EXPECT_DOUBLE_EQ(bvp.solver.grad_tol, 1e-8);
    EXPECT_EQ(bvp.op->n_modes(), 32);
    EXPECT_EQ(bvp.seeds().size(), 1u);
    EXPECT_EQ(bvp.expected_pairs, 1);

    cfg.kind = "cubic2d";
    cfg.theorem = 2;
    const Problem cubic = build_problem(cfg);
    EXPECT_FALSE(cubic.is_bvp());
    EXPECT_DOUBLE_EQ(cubic.solver.grad_tol, 1e-10);
    EXPECT_EQ(cubic.seeds().size(), 16u);
    EXPECT_EQ(cubic.expected_pairs, 2);
    EXPECT_EQ(cubic.directions.size(), 2u);
}

TEST(BuildProblem, InvalidParametersAreConfigErrors)
{
    ProblemConfig cfg;
    cfg.kind = "model1d";
    cfg.theorem = 2;
    EXPECT_THROW(build_problem(cfg), ConfigError);
    cfg = {};
    cfg.r1 = 2.0;
    EXPECT_THROW(build_problem(cfg), ConfigError);
    cfg = {};
    cfg.solver.armijo_c = 2.0;
    EXPECT_THROW(build_problem(cfg), ConfigError);
    cfg = {};
    cfg.theorem = 3;
    EXPECT_THROW(build_problem(cfg), ConfigError);
}
