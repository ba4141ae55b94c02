#ifndef BICOEFF_REPORT_HPP
#define BICOEFF_REPORT_HPP

#include "bicoeff/bounds.hpp"
#include "bicoeff/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bicoeff {

/// Shortest round-trip decimal representation (deterministic).
std::string double_repr(double value);

nlohmann::json to_json(const ClassParams& params);
nlohmann::json to_json(const FamilySpec& family);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const SchwarzSpec& spec);
nlohmann::json to_json(const SampleRecord& record);
nlohmann::json to_json(const IdentityVerdict& verdict);
nlohmann::json to_json(const SampleSummary& summary);

std::string bound_report_text(const BoundReport& report);

/// Fixed-schema CSV:
/// trial,family,lambda,mu,delta,order,a2_abs,a3_abs,a2_bound,a3_bound,accepted,margin_z,margin_w,violation
std::string sample_csv(const std::vector<SampleRecord>& records);

std::string summary_line(const SampleSummary& summary);

std::string verdict_table(const std::vector<IdentityVerdict>& verdicts);

}  // namespace bicoeff

#endif
