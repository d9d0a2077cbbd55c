#include "varfix/problem.hpp"

#include "varfix/errors.hpp"
#include "varfix/models.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace varfix {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v)
{
    double x = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    VARFIX_THROW_IF(res.ec != std::errc() || res.ptr != v.data() + v.size(), ConfigError,
                    "config: key '" + key + "' expects a number, got '" + v + "'");
    return x;
}

long long parse_int(const std::string& key, const std::string& v)
{
    long long x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    VARFIX_THROW_IF(res.ec != std::errc() || res.ptr != v.data() + v.size(), ConfigError,
                    "config: key '" + key + "' expects an integer, got '" + v + "'");
    return x;
}

struct KeyEntry {
    std::function<void(ProblemConfig&, const std::string& key, const std::string& value)> set;
    std::function<nlohmann::ordered_json(const ProblemConfig&)> get;
};

template <class Field>
KeyEntry double_key(Field field)
{
    return {[field](ProblemConfig& c, const std::string& k, const std::string& v) { field(c) = parse_double(k, v); },
            [field](const ProblemConfig& c) { return nlohmann::ordered_json(field(const_cast<ProblemConfig&>(c))); }};
}

template <class Field>
KeyEntry int_key(Field field)
{
    return {[field](ProblemConfig& c, const std::string& k, const std::string& v) {
                field(c) = static_cast<std::remove_reference_t<decltype(field(c))>>(parse_int(k, v));
            },
            [field](const ProblemConfig& c) { return nlohmann::ordered_json(field(const_cast<ProblemConfig&>(c))); }};
}

template <class Field>
KeyEntry optional_double_key(Field field)
{
    return {[field](ProblemConfig& c, const std::string& k, const std::string& v) { field(c) = parse_double(k, v); },
            [field](const ProblemConfig& c) {
                const auto& o = field(const_cast<ProblemConfig&>(c));
                return o ? nlohmann::ordered_json(*o) : nlohmann::ordered_json(nullptr);
            }};
}

KeyEntry choice_key(std::string ProblemConfig::*member, std::vector<std::string> allowed)
{
    return {[member, allowed](ProblemConfig& c, const std::string& k, const std::string& v) {
                VARFIX_THROW_IF(std::find(allowed.begin(), allowed.end(), v) == allowed.end(), ConfigError,
                                "config: key '" + k + "' has unknown value '" + v + "'");
                c.*member = v;
            },
            [member](const ProblemConfig& c) { return nlohmann::ordered_json(c.*member); }};
}

const std::map<std::string, KeyEntry>& registry()
{
    static const std::map<std::string, KeyEntry> keys = {
        {"space.n_modes", int_key([](ProblemConfig& c) -> int& { return c.space.n_modes; })},
        {"space.quad_nodes", int_key([](ProblemConfig& c) -> int& { return c.space.quad_nodes; })},
        {"space.n_panels", int_key([](ProblemConfig& c) -> int& { return c.space.n_panels; })},
        {"space.fd_grid", int_key([](ProblemConfig& c) -> int& { return c.fd_grid; })},

        {"problem.kind", choice_key(&ProblemConfig::kind, {"bvp", "model1d", "cubic2d"})},
        {"problem.theorem", int_key([](ProblemConfig& c) -> int& { return c.theorem; })},
        {"problem.expected_pairs",
         {[](ProblemConfig& c, const std::string& k, const std::string& v) {
              c.expected_pairs = static_cast<int>(parse_int(k, v));
          },
          [](const ProblemConfig& c) {
              return c.expected_pairs ? nlohmann::ordered_json(*c.expected_pairs) : nlohmann::ordered_json(nullptr);
          }}},
        {"problem.family", choice_key(&ProblemConfig::family, {"example53", "power", "linear", "tanh", "zero"})},
        {"problem.coef", double_key([](ProblemConfig& c) -> double& { return c.coef; })},
        {"problem.theta", double_key([](ProblemConfig& c) -> double& { return c.theta; })},
        {"problem.r1", double_key([](ProblemConfig& c) -> double& { return c.r1; })},
        {"problem.lambda", double_key([](ProblemConfig& c) -> double& { return c.lambda; })},
        {"problem.slope", double_key([](ProblemConfig& c) -> double& { return c.slope; })},
        {"problem.cutoff", double_key([](ProblemConfig& c) -> double& { return c.cutoff; })},

        {"solver.max_iter", int_key([](ProblemConfig& c) -> int& { return c.solver.max_iter; })},
        {"solver.grad_tol", optional_double_key([](ProblemConfig& c) -> std::optional<double>& { return c.grad_tol; })},
        {"solver.armijo_c", double_key([](ProblemConfig& c) -> double& { return c.solver.armijo_c; })},
        {"solver.armijo_shrink", double_key([](ProblemConfig& c) -> double& { return c.solver.armijo_shrink; })},
        {"solver.init_step", double_key([](ProblemConfig& c) -> double& { return c.solver.init_step; })},
        {"solver.trivial_threshold",
         optional_double_key([](ProblemConfig& c) -> std::optional<double>& { return c.solver.trivial_threshold; })},
        {"solver.dedup_tol", double_key([](ProblemConfig& c) -> double& { return c.solver.dedup_tol; })},
        {"solver.deflation_radius", double_key([](ProblemConfig& c) -> double& { return c.solver.deflation_radius; })},
        {"solver.seed", int_key([](ProblemConfig& c) -> std::uint64_t& { return c.solver.seed; })},
        {"solver.circle_seeds", int_key([](ProblemConfig& c) -> int& { return c.circle_seeds; })},
        {"solver.trace_csv",
         {[](ProblemConfig& c, const std::string&, const std::string& v) { c.trace_csv = v; },
          [](const ProblemConfig& c) { return nlohmann::ordered_json(c.trace_csv); }}},

        {"hypotheses.b_scale", double_key([](ProblemConfig& c) -> double& { return c.b_scale; })},
        {"hypotheses.r1", optional_double_key([](ProblemConfig& c) -> std::optional<double>& { return c.hyp_r1; })},
        {"hypotheses.r2", double_key([](ProblemConfig& c) -> double& { return c.hyp_r2; })},
        {"hypotheses.n_s", int_key([](ProblemConfig& c) -> int& { return c.n_s; })},
        {"hypotheses.n_angle", int_key([](ProblemConfig& c) -> int& { return c.n_angle; })},
        {"hypotheses.mode_budget", int_key([](ProblemConfig& c) -> int& { return c.mode_budget; })},
        {"hypotheses.d3_random", int_key([](ProblemConfig& c) -> int& { return c.d3_random; })},
        {"hypotheses.d1_n_t", int_key([](ProblemConfig& c) -> int& { return c.d1_n_t; })},
        {"hypotheses.d1_n_u", int_key([](ProblemConfig& c) -> int& { return c.d1_n_u; })},
        {"hypotheses.growth_r_min", double_key([](ProblemConfig& c) -> double& { return c.growth_r_min; })},
        {"hypotheses.growth_r_max", double_key([](ProblemConfig& c) -> double& { return c.growth_r_max; })},
        {"hypotheses.growth_radii", int_key([](ProblemConfig& c) -> int& { return c.growth_radii; })},
        {"hypotheses.growth_dirs", int_key([](ProblemConfig& c) -> int& { return c.growth_dirs; })},
    };
    return keys;
}

void set_key(ProblemConfig& cfg, const std::string& full_key, const std::string& value, const std::string& where)
{
    const auto& keys = registry();
    const auto it = keys.find(full_key);
    VARFIX_THROW_IF(it == keys.end(), ConfigError, where + ": unknown key '" + full_key + "'");
    it->second.set(cfg, full_key, value);
}

} // namespace

ProblemConfig parse_problem(std::istream& in, const std::string& source)
{
    static const std::vector<std::string> sections = {"space", "problem", "solver", "hypotheses"};
    ProblemConfig cfg;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno);
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            VARFIX_THROW_IF(line.back() != ']', ConfigError, where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            VARFIX_THROW_IF(std::find(sections.begin(), sections.end(), section) == sections.end(), ConfigError,
                            where + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        VARFIX_THROW_IF(eq == std::string::npos, ConfigError, where + ": expected 'key = value'");
        VARFIX_THROW_IF(section.empty(), ConfigError, where + ": key outside of a section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        VARFIX_THROW_IF(key.empty() || value.empty(), ConfigError, where + ": empty key or value");
        set_key(cfg, section + "." + key, value, where);
    }
    return cfg;
}

ProblemConfig load_problem(const std::string& path)
{
    std::ifstream in(path);
    VARFIX_THROW_IF(!in, ConfigError, "cannot open problem file '" + path + "'");
    return parse_problem(in, path);
}

void apply_override(ProblemConfig& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    VARFIX_THROW_IF(eq == std::string::npos, ConfigError, "--set expects section.key=value, got '" + assignment + "'");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    VARFIX_THROW_IF(key.find('.') == std::string::npos, ConfigError, "--set key must be section.key, got '" + key + "'");
    set_key(cfg, key, value, "--set");
}

nlohmann::ordered_json to_json(const ProblemConfig& cfg)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, entry] : registry()) {
        const auto dot = key.find('.');
        j[key.substr(0, dot)][key.substr(dot + 1)] = entry.get(cfg);
    }
    return j;
}

std::vector<H1Vector> Problem::seeds() const
{
    if (cfg.theorem == 1) {
        return seeds_pair(directions.at(0), radius);
    }
    return seeds_circle(directions.at(0), directions.at(1), radius, cfg.circle_seeds);
}

Problem build_problem(const ProblemConfig& cfg)
{
    VARFIX_THROW_IF(cfg.theorem != 1 && cfg.theorem != 2, ConfigError, "problem.theorem must be 1 or 2");
    VARFIX_THROW_IF(cfg.circle_seeds < 1, ConfigError, "solver.circle_seeds must be >= 1");

    Problem p;
    p.cfg = cfg;
    p.solver = cfg.solver;
    const std::uint64_t seed = cfg.seed();

    try {
        int n_modes = 0;
        if (cfg.kind == "bvp") {
            p.disc.emplace(cfg.space);
            n_modes = cfg.space.n_modes;
            if (cfg.family == "example53") {
                p.nl = bvp::example_5_3(cfg.r1, cfg.theta);
            } else if (cfg.family == "power") {
                p.nl = bvp::power_nonlinearity(cfg.coef, cfg.theta, cfg.r1);
            } else if (cfg.family == "linear") {
                p.nl = bvp::linear_nonlinearity(cfg.lambda);
            } else if (cfg.family == "tanh") {
                p.nl = bvp::tanh_nonlinearity(cfg.coef, cfg.r1);
            } else {
                p.nl = bvp::zero_nonlinearity();
            }
            p.op = bvp::make_bvp_operator(*p.nl, *p.disc, seed);
            p.b = bvp::b_operator(p.nl->a1, *p.disc);
            p.solver.grad_tol = cfg.grad_tol.value_or(1e-8);
            p.radius = cfg.theorem == 1 ? cfg.hyp_r1.value_or(cfg.r1) : cfg.hyp_r2;
        } else if (cfg.kind == "model1d") {
            n_modes = 1;
            p.op = power_model(cfg.coef, cfg.theta, 1, seed);
            p.b = LinearOperatorSpec::scaled_identity(1, cfg.b_scale);
            p.solver.grad_tol = cfg.grad_tol.value_or(1e-10);
            p.radius = cfg.theorem == 1 ? cfg.hyp_r1.value_or(0.5) : cfg.hyp_r2;
        } else {
            n_modes = 2;
            p.op = truncated_cubic_model(cfg.slope, cfg.cutoff, 2, seed);
            p.b = LinearOperatorSpec::scaled_identity(2, cfg.b_scale);
            p.solver.grad_tol = cfg.grad_tol.value_or(1e-10);
            p.radius = cfg.theorem == 1 ? cfg.hyp_r1.value_or(0.5) : cfg.hyp_r2;
        }
        VARFIX_THROW_IF(cfg.theorem == 2 && n_modes < 2, ConfigError,
                        "problem.theorem = 2 needs at least two modes");
        p.directions.push_back(H1Vector::basis(n_modes, 1));
        if (cfg.theorem == 2) {
            p.directions.push_back(H1Vector::basis(n_modes, 2));
        }
        p.expected_pairs = cfg.expected_pairs.value_or(cfg.theorem);
        p.solver.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid problem parameters: ") + e.what());
    }
    return p;
}

} // namespace varfix
