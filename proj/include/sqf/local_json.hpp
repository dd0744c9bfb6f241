#pragma once

#include <json.hpp>

#include "sqf/local.hpp"

namespace sqf {

// Integers are written as decimal strings and rationals as "a/b" so that
// values of any size round-trip.
void to_json(nlohmann::json& j, const HenselPoint& p);
void from_json(const nlohmann::json& j, HenselPoint& p);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const TwistLocalReport& r);
void from_json(const nlohmann::json& j, TwistLocalReport& r);
void to_json(nlohmann::json& j, const EverywhereLocalTwist& t);

}  // namespace sqf
