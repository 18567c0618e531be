#pragma once
#include <json.hpp>
#include <string>

#include "ssok/sset.hpp"

namespace ssok {

nlohmann::json sset_to_json(const SimplicialSet& S);
SimplicialSet sset_from_json(const nlohmann::json& j);

std::string sset_to_dot(const SimplicialSet& S);  // 1-skeleton

}  // namespace ssok
