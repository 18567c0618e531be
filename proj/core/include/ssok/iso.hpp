#pragma once
#include "ssok/smap.hpp"

namespace ssok {

enum class IsoStatus { Iso, NotIso, BudgetExceeded };

struct IsoResult {
  IsoStatus status;
  std::optional<SimplicialMap> witness;  // present iff status == Iso
};

// Isomorphism of (marked) simplicial sets by backtracking over cell
// assignments, dimension by dimension, pruned by vertex degree profiles.
// `budget` caps the total nondegenerate cell count of each input.
IsoResult is_isomorphic(const SimplicialSet& A, const SimplicialSet& B,
                        int budget = 5000, bool respect_marking = true);

// Isomorphism of arrows: phi with phi(img of f) = img of g, requiring f, g
// mono. Finds target iso carrying the f-subcomplex onto the g-subcomplex.
IsoResult maps_isomorphic(const SimplicialMap& f, const SimplicialMap& g,
                          int budget = 5000, bool respect_marking = true);

}  // namespace ssok
