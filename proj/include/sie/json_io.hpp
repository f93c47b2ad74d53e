#pragma once

#include <json.hpp>

#include <string_view>

#include "sie/difference_table.hpp"
#include "sie/hypergeometric.hpp"
#include "sie/power_series.hpp"
#include "sie/sequence.hpp"
#include "sie/simulate.hpp"
#include "sie/subset.hpp"
#include "sie/urns.hpp"

namespace sie {

// Rationals serialize as the string "num/den"; bare integer literals and
// JSON numbers are accepted on input.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Sequence& s);
nlohmann::json to_json(const DifferenceTriangle& t);
nlohmann::json to_json(const SubsetFunction& f);
nlohmann::json to_json(const UrnSpec& spec);
nlohmann::json to_json(const SimulationReport& r);
nlohmann::json to_json(const HypergeometricSpec& spec);
nlohmann::json to_json(const PowerSeries& s);

Rational rational_from_json(const nlohmann::json& j);
Sequence sequence_from_json(const nlohmann::json& j);
DifferenceTriangle triangle_from_json(const nlohmann::json& j);
SubsetFunction subset_function_from_json(const nlohmann::json& j);
UrnSpec urn_spec_from_json(const nlohmann::json& j);

// Inline text forms used by the CLI.
Sequence parse_sequence(std::string_view csv);         // "1,0,1/3"
UrnSpec parse_urns(std::string_view text);             // "r1:b1,r2:b2"
FiniteIndexSet parse_index_set(std::string_view csv);  // "1,2,5"

}  // namespace sie
