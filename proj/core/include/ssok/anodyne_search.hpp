#pragma once
#include "ssok/anodyne.hpp"
#include "ssok/category.hpp"

namespace ssok {

struct SearchBudget {
  int max_steps = 10000;
  long max_nodes = 1000000;
};

// lifting problem against the nerve of a finite category with no solution,
// certifying that the inclusion is not inner anodyne
struct NerveWitness {
  FiniteCategory cat;
  SimplicialMap problem;  // source of the inclusion into the truncated nerve
};

enum class SearchStatus { Found, NoneWitnessed, NoneWithinBudget };

struct SearchResult {
  SearchStatus status = SearchStatus::NoneWithinBudget;
  std::optional<AttachmentCertificate> cert;
  std::optional<NerveWitness> witness;
  SearchBudget budget;  // the budget the run was given
  long nodes = 0;
  int steps_tried = 0;
  std::string detail;
};

// Bounded backtracking search for a decomposition of the monomorphism into
// pushouts of generators of the given class. `guide` optionally lists
// intermediate subcomplexes of the target (as generating cell ids); the
// search then decomposes window by window and concatenates.
SearchResult search_decomposition(
    const SimplicialMap& incl, AnodyneClass cls, SearchBudget budget = {},
    const std::vector<std::vector<int>>& guide = {});

// tries the builtin category corpus for an unfillable lifting problem
std::optional<NerveWitness> inner_rejection_witness(const SimplicialMap& incl,
                                                    size_t map_limit = 2000);

}  // namespace ssok
