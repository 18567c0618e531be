#include "ssok/s_lower.hpp"

namespace ssok {

SimplicialSet s_lower(const SimplicialSet& X) {
  return el_colim(X, PieceShape::JoinOp).colim.sset;
}

}  // namespace ssok
