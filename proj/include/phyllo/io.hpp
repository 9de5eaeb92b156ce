#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "phyllo/analysis.hpp"

namespace phyllo {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// 17 significant digits; non-finite values become `null` in JSON and an
// empty field in CSV.
std::string format_double(double v);
std::string dump_json(const Json& j);

Json pattern_to_json(const PhylloPattern& pattern);
// Regenerates the pattern from its surface parameters and checks that the
// stored sites agree with it; throws std::runtime_error naming the first
// mismatching field.
PhylloPattern pattern_from_json(const Json& j);
PhylloPattern parse_pattern(const std::string& text);
std::string pattern_to_csv(const PhylloPattern& pattern);

Json tessellation_to_json(const Tessellation& tess);

Json boundary_to_json(const GrainBoundary& g, const Tessellation& tess);
Json series_to_json(const SeriesReport& report);

// One row per ring; columns listed in boundary_csv_header().
std::string boundary_csv_header();
std::string boundaries_to_csv(const std::vector<GrainBoundary>& boundaries, const Tessellation& tess);
// One row per site with up to five outward links.
std::string series_csv_header();
std::string series_to_csv(const SeriesReport& report);

}  // namespace phyllo
