#pragma once
#include <map>

#include "ssok/category.hpp"
#include "ssok/sset.hpp"

namespace ssok {

// chain of composable morphisms (identities allowed) with its start object;
// for 0-simplices the morphism list is empty
using MorChain = std::pair<int, std::vector<int>>;

struct NerveResult {
  SimplicialSet sset;
  std::vector<std::vector<MorChain>> chains;       // [k][idx]
  std::vector<std::map<MorChain, int>> idx;        // chain -> idx
  std::vector<std::vector<SimplexTerm>> term_of;   // [k][idx]
  std::vector<MorChain> cell_chain;                // per nondegenerate cell

  SimplexTerm chain_term(const MorChain& c) const;
  // chain presented by an arbitrary term of sset
  MorChain chain_of_term(const FiniteCategory& C, const SimplexTerm& t) const;
};

// Nerve of C truncated at dimension d: nondegenerate k-simplices are the
// composable chains of non-identity morphisms, k <= d.
NerveResult nerve_full(const FiniteCategory& C, int d);
SimplicialSet nerve_truncated(const FiniteCategory& C, int d);

}  // namespace ssok
