#pragma once
#include "ssok/colim.hpp"
#include "ssok/ops.hpp"

namespace ssok {

enum class ShapeKind { F0, F1, F2, F3, G };

struct ShapeDiagram {
  ShapeKind kind = ShapeKind::F0;
  SimplicialSet sset;                     // marked per recipe
  std::vector<std::string> vertex_label;  // per cell; empty for non-vertices
};

// The five interpolating shapes on the cone K^< together with the
// comparison maps F0+ -> F1+ <- F2+ -> F3+ <- G+.
struct ZigzagShapes {
  ShapeDiagram f0, f1, f2, f3, g;
  SimplicialMap i0;  // f0 -> f1
  SimplicialMap i1;  // f2 -> f1
  SimplicialMap i2;  // f2 -> f3
  SimplicialMap p;   // g  -> f3
  // section of p (available when K is a standard simplex in canonical form)
  bool has_section = false;
  SimplicialMap e;  // f3 -> g, with p o e = id
};

ZigzagShapes zigzag_shapes(const SimplicialSet& K);
ShapeDiagram shape(ShapeKind kind, const SimplicialSet& K);

// the flattening square -> triangle map (vertex map (x,y) -> x+y), with the
// marked square as source
SimplicialMap square_to_triangle();

// the marked square: Delta^1 x Delta^1 with Delta^1 x {1} marked
SimplicialSet marked_square();

}  // namespace ssok
