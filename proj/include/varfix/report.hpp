#pragma once

#include "varfix/bvp.hpp"
#include "varfix/hypotheses.hpp"
#include "varfix/operators.hpp"
#include "varfix/solver.hpp"

#include <json.hpp>

#include <ostream>
#include <vector>

namespace varfix {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json to_json(const HypothesisReport& rep);
nlohmann::ordered_json to_json(const QuadraticFormData& d);
nlohmann::ordered_json to_json(const GrowthCertificate& cert);
nlohmann::ordered_json to_json(const SolveReport& rep, bool include_trace = true);
nlohmann::ordered_json to_json(const bvp::D3Result& d3);

// Columns: start, iter, J, grad_norm.
void write_trace_csv(std::ostream& os, const SolveReport& rep);

// Columns: t, then one column per profile.
void write_profiles_csv(std::ostream& os, const std::vector<double>& ts,
                        const std::vector<std::vector<double>>& profiles);

// Columns: pair, then one column per coefficient.
void write_coefficients_csv(std::ostream& os, const SolveReport& rep);

} // namespace varfix
