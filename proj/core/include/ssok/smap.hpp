#pragma once
#include <memory>

#include "ssok/sset.hpp"

namespace ssok {

// Map of simplicial sets, by the images of nondegenerate cells.
struct SimplicialMap {
  std::shared_ptr<const SimplicialSet> src, tgt;
  std::vector<SimplexTerm> img;  // per source cell

  SimplexTerm apply(const SimplexTerm& t) const {
    return act(*tgt, img[t.nd], t.sur);
  }
};

SimplicialMap make_map(SimplicialSet src, SimplicialSet tgt,
                       std::vector<SimplexTerm> img);
SimplicialMap make_map(std::shared_ptr<const SimplicialSet> src,
                       std::shared_ptr<const SimplicialSet> tgt,
                       std::vector<SimplexTerm> img);
SimplicialMap identity_smap(SimplicialSet A);

// g after f
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

// commutes with all faces?
std::optional<std::string> validate_map(const SimplicialMap& f);
// marked edges land on marked-or-degenerate edges?
bool preserves_marking(const SimplicialMap& f);
bool is_mono(const SimplicialMap& f);

// classifying map Delta^{dim t} -> X of a simplex t
SimplicialMap map_of_simplex(const SimplicialSet& X, const SimplexTerm& t);

// All simplicial maps A -> X (up to `limit` results; 0 = unlimited).
std::vector<SimplicialMap> enumerate_simplicial_maps(const SimplicialSet& A,
                                                     const SimplicialSet& X,
                                                     size_t limit = 0);

// extend partial: maps A -> X extending a map defined on the subcomplex
// given by `fixed` (cell id -> term, -1 entries free)
std::vector<SimplicialMap> enumerate_extensions(const SimplicialSet& A,
                                                const SimplicialSet& X,
                                                const std::vector<SimplexTerm>& partial,
                                                const std::vector<bool>& fixed,
                                                size_t limit = 0);

}  // namespace ssok
