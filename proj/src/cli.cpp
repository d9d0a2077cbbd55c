#include "varfix/cli.hpp"

#include "varfix/bvp.hpp"
#include "varfix/errors.hpp"
#include "varfix/hypotheses.hpp"
#include "varfix/problem.hpp"
#include "varfix/report.hpp"
#include "varfix/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace varfix {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string problem;
    std::string output;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
    std::string method = "both";
};

struct Outcome {
    json doc;
    int code = exit_code::ok;
    std::string csv;   // filled when --format csv
};

ProblemConfig resolve_config(const RunConfig& rc)
{
    ProblemConfig cfg = rc.problem.empty() ? ProblemConfig{} : load_problem(rc.problem);
    for (const auto& o : rc.overrides) {
        apply_override(cfg, o);
    }
    if (rc.seed) {
        cfg.solver.seed = *rc.seed;
    }
    return cfg;
}

json envelope(const RunConfig& rc, const ProblemConfig& cfg)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = rc.command;
    j["seed"] = cfg.seed();
    j["config"] = to_json(cfg);
    return j;
}

HypothesisReport failed_report(const std::string& name, const std::string& note)
{
    HypothesisReport rep;
    rep.name = name;
    rep.verdict = Verdict::fail;
    rep.margin = -std::numeric_limits<double>::infinity();
    rep.note = note;
    return rep;
}

Outcome run_check(const Problem& p)
{
    std::vector<HypothesisReport> reports;
    json extra = json::object();
    const ProblemConfig& cfg = p.cfg;
    const PotentialOperatorSpec& A = *p.op;

    const GrowthCertificate cert =
        growth_fit(A, geometric_radii(cfg.growth_r_min, cfg.growth_r_max, cfg.growth_radii), cfg.growth_dirs, cfg.seed());
    reports.push_back(check_growth(cert));
    extra["growth_certificate"] = to_json(cert);

    if (cfg.theorem == 1) {
        reports.push_back(check_H1(*p.b, p.directions[0]));
        reports.push_back(check_H2(A, *p.b, p.directions[0], p.radius, cfg.n_s));
    } else {
        const QuadraticFormResult qf = quadratic_form_margin(*p.b, p.directions[0], p.directions[1]);
        reports.push_back(qf.report);
        extra["quadratic_form"] = to_json(qf.data);
        reports.push_back(check_H2prime(A, *p.b, p.directions[0], p.directions[1], p.radius, cfg.n_angle, cfg.n_s));
        extra["genus"] = genus_of_sphere(2);
    }
    if (cfg.theorem == 1) {
        extra["genus"] = genus_of_sphere(1);
    }

    if (p.is_bvp()) {
        const bvp::Nonlinearity& nl = *p.nl;
        reports.push_back(bvp::check_D1(nl, cfg.r1, cfg.d1_n_t, cfg.d1_n_u));
        reports.push_back(bvp::check_D2(nl, cfg.d1_n_t, cfg.d1_n_u));
        const bvp::CoefficientBounds bounds = bvp::estimate_bounds(nl.a1, *p.disc);
        extra["a1_bounds"] = {{"m", bounds.m}, {"M", bounds.M}};
        if (bounds.m > 0.0) {
            const bvp::D3Result d3 = bvp::check_D3(bounds.m, cfg.space.n_modes, cfg.mode_budget, cfg.d3_random, cfg.seed());
            reports.push_back(d3.statement);
            reports.push_back(d3.proof);
            extra["d3"] = to_json(d3);
            reports.push_back(bvp::check_D4(bounds.m, bounds.M));
        } else {
            const std::string note = "a1 is not bounded away from zero on the grid";
            reports.push_back(failed_report("(D3)", note));
            reports.push_back(failed_report("(D4)", note));
        }
    }

    Outcome out;
    json list = json::array();
    std::ostringstream csv;
    csv << "name,verdict,margin\n";
    csv.precision(17);
    for (const auto& r : reports) {
        list.push_back(to_json(r));
        csv << r.name << ',' << to_string(r.verdict) << ',' << r.margin << '\n';
        if (!r.passed()) {
            out.code = exit_code::failed;
        }
    }
    out.doc["hypotheses"] = std::move(list);
    out.doc["details"] = std::move(extra);
    out.csv = csv.str();
    return out;
}

Outcome run_solve(const Problem& p)
{
    Outcome out;
    SolveReport rep;
    try {
        rep = find_pairs(*p.op, p.seeds(), p.solver);
    } catch (const NumericalBlowup& e) {
        out.code = exit_code::blowup;
        out.doc["error"] = e.what();
        out.csv = std::string("error\n") + e.what() + "\n";
        return out;
    }
    out.doc["expected_pairs"] = p.expected_pairs;
    out.doc["solve"] = to_json(rep);
    out.code = rep.n_pairs >= p.expected_pairs ? exit_code::ok : exit_code::failed;

    std::ostringstream csv;
    if (p.is_bvp()) {
        const std::vector<double> ts = bvp::uniform_output_grid();
        std::vector<std::vector<double>> profiles;
        for (const auto& pair : rep.pairs) {
            std::vector<double> u = bvp::solution_profile(*p.nl, pair.u, ts);
            std::vector<double> neg(u.size());
            std::transform(u.begin(), u.end(), neg.begin(), [](double x) { return 0.0 - x; });
            profiles.push_back(std::move(u));
            profiles.push_back(std::move(neg));
        }
        write_profiles_csv(csv, ts, profiles);
    } else {
        write_coefficients_csv(csv, rep);
    }
    out.csv = csv.str();

    if (!p.cfg.trace_csv.empty()) {
        std::ofstream trace(p.cfg.trace_csv);
        VARFIX_THROW_IF(!trace, ConfigError, "cannot open trace file '" + p.cfg.trace_csv + "'");
        write_trace_csv(trace, rep);
    }
    return out;
}

Outcome run_gradcheck(const Problem& p)
{
    constexpr int n_pairs = 20;
    constexpr double h = 1e-5;
    constexpr double tol = 1e-6;
    const PotentialOperatorSpec& A = *p.op;
    std::mt19937_64 rng(p.cfg.seed());

    double worst = 0.0;
    json samples = json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "pair,abs,rel\n";
    for (int i = 0; i < n_pairs; ++i) {
        const H1Vector u = random_vector(A.n_modes(), rng, p.radius > 0.0 ? p.radius : 1.0, 1.0);
        const H1Vector v = random_unit(A.n_modes(), rng);
        const double abs_err = fd_gradient_check(A, u, v, h);
        const double rel = abs_err / std::max(1.0, std::abs(functional_J(A, u)));
        worst = std::max(worst, rel);
        samples.push_back({{"abs", abs_err}, {"rel", rel}});
        csv << i << ',' << abs_err << ',' << rel << '\n';
    }
    Outcome out;
    out.doc["h"] = h;
    out.doc["pairs"] = n_pairs;
    out.doc["max_relative_discrepancy"] = worst;
    out.doc["tolerance"] = tol;
    out.doc["samples"] = std::move(samples);
    out.code = worst <= tol ? exit_code::ok : exit_code::failed;
    out.csv = csv.str();
    return out;
}

Outcome run_eigen(const ProblemConfig& cfg, const std::string& method)
{
    constexpr double tol = 1e-4;
    const double exact = std::numbers::pi * std::numbers::pi;
    Outcome out;
    std::ostringstream csv;
    csv.precision(17);
    csv << "method,n,lambda1,rel_error\n";
    bool ok = true;
    auto record = [&](const std::string& name, double value, int n) {
        const double rel = std::abs(value - exact) / exact;
        json entry = {{"lambda1", value}, {"rel_error", rel}};
        if (n > 0) {
            entry["n"] = n;
        }
        out.doc[name] = std::move(entry);
        csv << name << ',' << n << ',' << value << ',' << rel << '\n';
        ok = ok && rel <= tol;
    };
    if (method == "spectral" || method == "both") {
        record("spectral", bvp::first_eigenvalue(bvp::EigenMethod::spectral), 0);
    }
    if (method == "fd" || method == "both") {
        VARFIX_THROW_IF(cfg.fd_grid < 2, ConfigError, "space.fd_grid must be >= 2");
        record("finite_difference", bvp::first_eigenvalue(bvp::EigenMethod::finite_difference, cfg.fd_grid),
               cfg.fd_grid);
    }
    out.doc["tolerance"] = tol;
    out.code = ok ? exit_code::ok : exit_code::failed;
    out.csv = csv.str();
    return out;
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out)
{
    if (rc.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(rc.output);
    VARFIX_THROW_IF(!file, ConfigError, "cannot open output file '" + rc.output + "'");
    file << text;
}

int execute(const RunConfig& rc, std::ostream& out)
{
    const ProblemConfig cfg = resolve_config(rc);
    json doc = envelope(rc, cfg);
    Outcome result;

    if (rc.command == "eigen") {
        result = run_eigen(cfg, rc.method);
        doc["eigen"] = result.doc;
    } else {
        const Problem p = build_problem(cfg);
        if (rc.command == "check") {
            result = run_check(p);
            doc["check"] = result.doc;
        } else if (rc.command == "solve") {
            result = run_solve(p);
            doc["solve"] = result.doc;
        } else if (rc.command == "gradcheck") {
            result = run_gradcheck(p);
            doc["gradcheck"] = result.doc;
        } else {
            const Outcome check = run_check(p);
            const Outcome solve = run_solve(p);
            doc["check"] = check.doc;
            doc["solve"] = solve.doc;
            result.code = std::max(check.code, solve.code);
            result.csv = solve.csv;
        }
    }
    doc["exit_code"] = result.code;

    if (rc.format == "csv") {
        emit(rc, result.csv, out);
    } else {
        emit(rc, doc.dump(2) + "\n", out);
    }
    return result.code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Symmetric fixed-point pairs of odd potential operators"};
    app.require_subcommand(1, 1);
    RunConfig rc;

    auto add_common = [&rc](CLI::App* sub, bool needs_problem) {
        auto* opt = sub->add_option("--problem", rc.problem, "problem configuration file");
        if (needs_problem) {
            opt->required();
        }
        sub->add_option("--output", rc.output, "write the report here instead of stdout");
        sub->add_option("--format", rc.format, "report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", rc.seed, "override solver.seed");
        sub->add_option("--set", rc.overrides, "override section.key=value (repeatable)");
    };
    add_common(app.add_subcommand("check", "verify the hypotheses on the configured problem"), true);
    add_common(app.add_subcommand("solve", "find symmetric pairs of fixed points"), true);
    add_common(app.add_subcommand("gradcheck", "finite-difference check of J' = I - A"), true);
    add_common(app.add_subcommand("report", "check followed by solve"), true);
    CLI::App* eigen = app.add_subcommand("eigen", "first Dirichlet eigenvalue of -u''");
    add_common(eigen, false);
    eigen->add_option("--method", rc.method, "spectral, fd or both")
        ->check(CLI::IsMember({"spectral", "fd", "both"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    }
    rc.command = app.get_subcommands().front()->get_name();

    try {
        return execute(rc, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    } catch (const NumericalBlowup& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::blowup;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config_error;
    }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, out, err);
}

} // namespace varfix
