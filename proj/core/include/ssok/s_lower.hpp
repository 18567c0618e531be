#pragma once
#include "ssok/colim.hpp"

namespace ssok {

// s_*(X): left Kan extension of [n] -> [n] * [n]^op, as the colimit of
// Delta^k * (Delta^k)^op over the simplices of X.
SimplicialSet s_lower(const SimplicialSet& X);

}  // namespace ssok
