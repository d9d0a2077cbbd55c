#include "varfix/report.hpp"

#include <iomanip>
#include <limits>

namespace varfix {

using nlohmann::ordered_json;

namespace {

// JSON has no inf/nan; encode them as strings so reports stay parseable.
ordered_json number(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

ordered_json numbers(const std::vector<double>& xs)
{
    ordered_json a = ordered_json::array();
    for (double x : xs) {
        a.push_back(number(x));
    }
    return a;
}

} // namespace

ordered_json to_json(const HypothesisReport& rep)
{
    ordered_json j;
    j["name"] = rep.name;
    j["verdict"] = to_string(rep.verdict);
    j["margin"] = number(rep.margin);
    ordered_json w = ordered_json::array();
    for (const auto& wit : rep.witnesses) {
        w.push_back({{"label", wit.label}, {"point", numbers(wit.point)}, {"value", number(wit.value)}});
    }
    j["witnesses"] = std::move(w);
    ordered_json g = ordered_json::object();
    for (const auto& [k, v] : rep.grid) {
        g[k] = v;
    }
    j["grid"] = std::move(g);
    if (!rep.note.empty()) {
        j["note"] = rep.note;
    }
    return j;
}

ordered_json to_json(const QuadraticFormData& d)
{
    return {{"b22", number(d.b22)},
            {"b23", number(d.b23)},
            {"b33", number(d.b33)},
            {"discriminant", number(d.discriminant)},
            {"circle_max", number(d.circle_max)}};
}

ordered_json to_json(const GrowthCertificate& cert)
{
    return {{"c", number(cert.c)},
            {"b", number(cert.b)},
            {"theta", number(cert.theta)},
            {"sampled_max_ratio", number(cert.sampled_max_ratio)},
            {"tail_exponent", number(cert.tail_exponent)},
            {"radii_tested", numbers(cert.radii_tested)},
            {"max_norm_per_radius", numbers(cert.max_norm_per_radius)},
            {"sampled", cert.sampled}};
}

ordered_json to_json(const SolveReport& rep, bool include_trace)
{
    ordered_json j;
    j["n_pairs"] = rep.n_pairs;
    ordered_json pairs = ordered_json::array();
    for (const auto& p : rep.pairs) {
        pairs.push_back({{"u", numbers(p.u.to_std())},
                         {"j_value", number(p.j_value)},
                         {"grad_norm", number(p.grad_norm)},
                         {"fp_residual", number(p.fp_residual)},
                         {"fp_residual_neg", number(p.fp_residual_neg)},
                         {"norm", number(norm(p.u))},
                         {"iterations", p.iterations},
                         {"via_deflation", p.via_deflation}});
    }
    j["pairs"] = std::move(pairs);
    j["rejected_trivial"] = rep.rejected_trivial;
    j["duplicates"] = rep.duplicates;
    j["unconverged"] = rep.unconverged;
    if (!rep.diagnostic.empty()) {
        j["diagnostic"] = rep.diagnostic;
    }
    if (include_trace) {
        ordered_json tr = ordered_json::array();
        for (const auto& st : rep.ps_trace) {
            ordered_json records = ordered_json::array();
            for (const auto& r : st.records) {
                records.push_back(ordered_json::array({number(r.j_value), number(r.grad_norm)}));
            }
            tr.push_back({{"start", st.start},
                          {"seed", numbers(st.seed)},
                          {"outcome", st.outcome},
                          {"ps_defect", number(st.ps_defect)},
                          {"records", std::move(records)}});
        }
        j["ps_trace"] = std::move(tr);
    }
    return j;
}

ordered_json to_json(const bvp::D3Result& d3)
{
    return {{"statement", to_json(d3.statement)},
            {"proof", to_json(d3.proof)},
            {"best_l2", number(d3.best_l2)},
            {"best_l2_sq", number(d3.best_l2_sq)},
            {"ceiling", number(d3.ceiling)},
            {"ceiling_sq", number(d3.ceiling_sq)}};
}

void write_trace_csv(std::ostream& os, const SolveReport& rep)
{
    os << "start,iter,J,grad_norm\n";
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& st : rep.ps_trace) {
        for (std::size_t i = 0; i < st.records.size(); ++i) {
            os << st.start << ',' << i << ',' << st.records[i].j_value << ',' << st.records[i].grad_norm << '\n';
        }
    }
}

void write_profiles_csv(std::ostream& os, const std::vector<double>& ts,
                        const std::vector<std::vector<double>>& profiles)
{
    os << 't';
    for (std::size_t p = 0; p < profiles.size(); ++p) {
        os << ",u" << p;
    }
    os << '\n';
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        os << ts[i];
        for (const auto& prof : profiles) {
            os << ',' << prof[i];
        }
        os << '\n';
    }
}

void write_coefficients_csv(std::ostream& os, const SolveReport& rep)
{
    os << "pair";
    const int n = rep.pairs.empty() ? 0 : rep.pairs.front().u.size();
    for (int k = 1; k <= n; ++k) {
        os << ",c" << k;
    }
    os << '\n';
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t p = 0; p < rep.pairs.size(); ++p) {
        os << p;
        for (int k = 0; k < n; ++k) {
            os << ',' << rep.pairs[p].u[k];
        }
        os << '\n';
    }
}

} // namespace varfix
