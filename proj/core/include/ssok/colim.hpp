#pragma once
#include <functional>
#include <map>

#include "ssok/smap.hpp"

namespace ssok {

// Finite diagram of standard simplices: object o contributes Delta^{arity[o]},
// an arrow glues along a monotone map [arity[src]] -> [arity[dst]].
struct StdDiagram {
  struct Arrow {
    int src = 0, dst = 0;
    Ord map;
  };
  std::vector<int> arity;
  std::vector<Arrow> arrows;
  // optional cell labels, called on class representatives
  std::function<std::string(int obj, const Ord& t)> label;
};

struct ColimResult {
  SimplicialSet sset;
  int top = -1;
  // representative (object, piece simplex) of each nondegenerate cell
  std::vector<std::pair<int, Ord>> rep;

  // the class of the simplex t : [n] -> [arity[obj]] of piece obj
  SimplexTerm resolve(int obj, const Ord& t) const;

  std::vector<int> arity;
  std::vector<std::vector<int>> offset;          // [n][obj] element offsets
  std::vector<std::vector<int>> cls;             // [n][element] -> class
  std::vector<std::vector<SimplexTerm>> term_of; // [n][class]
  std::map<std::pair<int, int>, std::map<Ord, int>> rank;  // (n, m) -> t -> rank
};

ColimResult colim_std(const StdDiagram& D);

// piece shapes used by the twisted-arrow machinery: a k-simplex contributes
// Delta^k * Delta^k, resp. Delta^k * (Delta^k)^op
enum class PieceShape { JoinSame, JoinOp };

// functorial action on pieces: f : [j] -> [k] becomes [2j+1] -> [2k+1]
Ord shape_map(PieceShape kind, const Ord& f, int cod_dim);

// Colimit of pieces over the category of elements of X (all simplices of
// dimension <= dim X, glued along elementary faces and degeneracies).
struct ElColim {
  ColimResult colim;
  PieceShape kind = PieceShape::JoinOp;
  std::vector<SimplexTerm> objects;  // simplices of X in dimension order
  std::map<SimplexTerm, int> obj_index;

  // the class of the simplex t of the piece over x (any simplex of X)
  SimplexTerm resolve(const SimplexTerm& x, const Ord& t) const;
  // representative of a nondegenerate cell, as (simplex of X, piece simplex)
  std::pair<SimplexTerm, Ord> cell_rep(int nd) const;
};

// min_top extends the object list to simplices of dimension up to
// max(dim X, min_top); the extra (degenerate) objects do not change the
// colimit but make induced maps from higher-dimensional sources resolvable
ElColim el_colim(
    const SimplicialSet& X, PieceShape kind,
    std::function<std::string(const SimplexTerm&, const Ord&)> label = {},
    int min_top = -1);

// map between two el-colimits of the same piece shape, induced by a map on
// simplices of the underlying simplicial sets (e.g. g.apply for g : X -> Y)
SimplicialMap el_induced(const ElColim& EX, const ElColim& EY,
                         std::function<SimplexTerm(const SimplexTerm&)> f);

}  // namespace ssok
