#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lgb/instance.hpp"
#include "lgb/lgb.hpp"
#include "lgb/monomial_ideal.hpp"
#include "lgb/series.hpp"

namespace lgb::io {

using nlohmann::json;

// JSON schemas used by the CLI. Round trips are lossless.

json to_json(const BracketSeries& s);  // {"coeffs":[...], "finite":bool}
BracketSeries bracket_series_from_json(const json& j);

json to_json(const MonomialIdeal& ideal);  // {"n":int, "generators":[...]}
MonomialIdeal monomial_ideal_from_json(const json& j);

json to_json(const InstanceSpec& spec);  // {"n":int,"m":int,"degrees":[...]}
InstanceSpec instance_from_json(const json& j);

json to_json(const DegreeTrace& t);
DegreeTrace degree_trace_from_json(const json& j);

// {"spec":{...}, "D":int, "L_G":[{"d":int,"monomials":[...]}], "traces":[...]}
json to_json(const LgbResult& r);
LgbResult lgb_result_from_json(const json& j);

/// One row per degree: d,candidates_checked,b_d_size,n_d,relevant_generators
std::string traces_to_csv(const std::vector<DegreeTrace>& traces);

/// "1 + 3z + 4z^2 + 3z^3" in ascending degree.
std::string series_to_text(const BracketSeries& s);

/// Degree list grammar: comma-separated entries, each "v" or "v^count"
/// (e.g. "2,2,3,4" or "2^19"). Throws std::invalid_argument on bad input.
std::vector<int> parse_degree_list(std::string_view text);

}  // namespace lgb::io
