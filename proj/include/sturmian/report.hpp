#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmian/cf_core.hpp"
#include "sturmian/experiments.hpp"
#include "sturmian/targets.hpp"
#include "sturmian/verify.hpp"

namespace sturmian {

using Json = nlohmann::ordered_json;

// Exact values go out as decimal strings; "float" is a 15-digit rendering
// for eyeballing only.
Json rational_json(const Rational& x);
Json alpha_json(const Alpha& alpha);

/// {"config": ..., "result": ...}, dumped with two-space indent and a final LF.
std::string json_document(const std::string& config, const Json& result);
/// "# config: ..." line followed by the CSV body.
std::string csv_document(const std::string& config, const std::string& body);

Json cf_json(const Alpha& alpha);
std::string cf_csv(const Alpha& alpha);

Json per_step_json(std::span<const PerStepRow> rows);
std::string per_step_csv(std::span<const PerStepRow> rows);

Json count_json(const CountReport& report);
std::string count_csv(const CountReport& report);

Json verify_json(std::span<const VerifyReport> reports);
std::string verify_csv(std::span<const VerifyReport> reports);

Json thm_a_json(const ThmASummary& summary);
std::string thm_a_csv(const ThmASummary& summary);
/// Two columns "N ratio", one block per x separated by blank lines.
std::string thm_a_plot(const ThmASummary& summary);

Json thm_b_json(const ThmBReport& report);
std::string thm_b_csv(const ThmBReport& report);
Json oscillation_json(const OscillationReport& report);

Json wn_json(const WnEstimate& estimate);
std::string wn_csv(const WnEstimate& estimate);

Json bigtime_json(const BigTimeStats& stats);
std::string bigtime_csv(const BigTimeStats& stats);
Json growth_json(const GrowthTable& table);
std::string growth_csv(const GrowthTable& table);

}  // namespace sturmian
