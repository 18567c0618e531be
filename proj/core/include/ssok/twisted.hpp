#pragma once
#include <map>
#include <tuple>

#include "ssok/category.hpp"
#include "ssok/colim.hpp"
#include "ssok/nerve.hpp"

namespace ssok {

// Twisted arrow category: objects are morphisms of C, a morphism f ~> g is
// a pair (a, b) with f = b o g o a.
struct TwCat {
  FiniteCategory cat;
  // (f, g, a, b) -> morphism index
  std::map<std::tuple<int, int, int, int>, int> arrow;
};
TwCat twisted_arrow_cat_full(const FiniteCategory& C);
FiniteCategory twisted_arrow_cat(const FiniteCategory& C);

// Tw(X) truncated at dimension d: k-simplices of the result are the
// (2k+1)-simplices of X, restructured along [k] * [k]^op.
struct TwResult {
  SimplicialSet sset;
  std::vector<SimplexTerm> x_simplex;  // per cell: its (2 dim + 1)-simplex of X
};
TwResult tw_full(const SimplicialSet& X, int d);
SimplicialSet tw_simplicial(const SimplicialSet& X, int d);

// canonical comparison Tw(N(C)) -> N(Tw(C)) through dimension d
SimplicialMap tw_nerve_compare(const FiniteCategory& C, int d);

}  // namespace ssok
