#pragma once

#include <string>

#include <json.hpp>

#include "sqf/survey.hpp"

namespace sqf {

// Reports hold only deterministic content; wall-clock time goes to a
// separate timing record.
void to_json(nlohmann::json& j, const SurveyStats& s);
void to_json(nlohmann::json& j, const SEntry& e);
void to_json(nlohmann::json& j, const CoverageReport& r);
void to_json(nlohmann::json& j, const FamilyReport& r);
void to_json(nlohmann::json& j, const CountSeries& s);

namespace survey {

/// One row per prime: p, exceptional flag, covered count, residues.
std::string coverage_csv(const CoverageReport& r);
nlohmann::json timing_record(const std::string& command, double seconds, unsigned threads);

}  // namespace survey
}  // namespace sqf
