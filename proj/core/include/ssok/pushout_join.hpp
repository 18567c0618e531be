#pragma once
#include "ssok/smap.hpp"

namespace ssok {

// For monomorphisms i : A -> B and j : K -> L of marked simplicial sets,
// the pushout-join A*L u_{A*K} B*K -> B*L, realized as the inclusion of a
// subcomplex of join(B, L) with the restricted marking.
SimplicialMap pushout_join(const SimplicialMap& i, const SimplicialMap& j);

// inclusion of a subcomplex given by generator names in the ambient complex
SimplicialMap named_subcomplex_map(const SimplicialSet& A,
                                   const SimplicialSet& B);

struct PushoutJoinReport {
  bool ok = true;
  int checked = 0;
  std::string failure;
};

// verifies (Lambda_j^n c D^n) box* (dD^k c D^k) = (Lambda_j^{n+1+k} c
// D^{n+1+k}) and (dD^k c D^k) box* (Lambda_j^n c D^n) = (Lambda_{k+1+j}^{n+1+k}
// c D^{n+1+k}) for all instances with n+1+k <= total_dim_max
PushoutJoinReport check_pushout_join_identities(int total_dim_max);

}  // namespace ssok
