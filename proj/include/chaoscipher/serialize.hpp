#pragma once

#include <string>

#include "chaoscipher/analysis.hpp"
#include "chaoscipher/maps.hpp"

namespace chaoscipher {

// CSV has a header row; JSON uses stable key order so output is byte-exact
// for identical inputs.

std::string orbit_to_csv(const Orbit3& orbit);
std::string orbit_to_csv(const Orbit2& orbit);
std::string orbit_to_json(const Orbit3& orbit);
std::string orbit_to_json(const Orbit2& orbit);

std::string spectrum_to_csv(const LyapunovSpectrum& spectrum);
std::string spectrum_to_json(const LyapunovSpectrum& spectrum);

std::string bifurcation_to_csv(const BifurcationTable& table);
std::string bifurcation_to_json(const BifurcationTable& table);

std::string report_to_csv(const AnalysisReport& report);
std::string report_to_json(const AnalysisReport& report);

}  // namespace chaoscipher
