#pragma once
#include <json.hpp>

#include "ssok/operad.hpp"

namespace ssok {

// Schema:
//   { "colors": ["*"],
//     "ops": { "<arity>": { "(*,..,*)→*": ["names"] } },
//     "compose": [ [[n, "f"], [[m1, "g1"], ...], "result"], ... ],
//     "sym_action": [ [[n, "f"], [p1, .., pn], "result"], ... ] }
// Only single-color operads are accepted; composition and symmetric action
// are explicit tables.
nlohmann::json operad_to_json(const DiscreteOperad& O);
DiscreteOperad operad_from_json(const nlohmann::json& j);  // throws on bad input

}  // namespace ssok
