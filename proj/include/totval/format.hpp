// Text and JSON renderings of total valencies.
//
//   text:  [3,8; 1/8 + 1/8 + 3/4]       (empty multiset: [g,n;])
//   json:  {"genus":3,"order":8,"valencies":[{"theta":1,"lambda":8,"count":2},
//           {"theta":3,"lambda":4,"count":1}],"quotient_genus":0}
//
// Both renderings list valencies in canonical order; parsing either form and
// rendering it again reproduces the canonical string byte for byte.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "totval/valency.hpp"

namespace totval {

using Json = nlohmann::ordered_json;

std::string to_text(const TotalValency& t);
std::string to_text(std::span<const Valency> valencies);  // "1/8 + 1/8 + 3/4"

/// Throws ValidationError on malformed input (with a one-line message).
TotalValency parse_text(std::string_view text);
std::vector<Valency> parse_valency_sum(std::string_view text);

Json to_json(const TotalValency& t);
TotalValency from_json(const Json& j);

/// Accepts either the bracket text form or a JSON object.
TotalValency parse_total_valency(std::string_view text);

std::vector<Int> parse_int_list(std::string_view text);  // "8,8,4"

}  // namespace totval
