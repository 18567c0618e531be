#pragma once
#include "ssok/anodyne_search.hpp"

namespace ssok {

// the inclusion Delta^m x Delta^1 -> Delta^m * Delta^m, marked so that the
// sharp copy of Delta^m embeds at height 1
SimplicialMap prism_to_join_inclusion(int m);
// intermediate stage from the proof filtration: the prism together with the
// extra top simplex on {m, bar 0, ..., bar m}
std::vector<std::vector<int>> prism_to_join_guide(int m);

// K~ c Delta^7 with only the edge 6 -> 7 marked
SimplicialMap seven_simplex_inclusion();
std::vector<std::vector<int>> seven_simplex_guide();

// (Delta^I)^flat * (Delta^{J0})^sharp -> (Delta^I)^flat * (Delta^J)^sharp,
// parameters by sizes and the subset of positions J0 in J
SimplicialMap order_join_inclusion(int isize, int jsize,
                                   const std::vector<int>& j0);
// the pushout-join form: Delta^J# u_{Delta^J0#} (Delta^I * Delta^J0#) -> ...
SimplicialMap order_pushout_join_inclusion(int isize, int jsize,
                                           const std::vector<int>& j0);

struct AppendixReport {
  bool ok = true;
  int identities_checked = 0;
  int certificates_found = 0;
  std::string failure;
};

// pushout-join identity families up to total dimension n_max, then
// marked-anodyne certificates for the order-join inclusions with |I|, |J| <= 3
AppendixReport run_appendix_suite(int n_max, SearchBudget budget = {});

}  // namespace ssok
