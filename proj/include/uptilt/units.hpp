#pragma once

#include <cmath>
#include <numbers>

namespace uptilt {

constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm) * 1e-3; }
inline double watts_to_dbm(double watts) { return linear_to_db(watts * 1e3); }

}  // namespace uptilt
