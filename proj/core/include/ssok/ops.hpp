#pragma once
#include <map>
#include <tuple>

#include "ssok/smap.hpp"

namespace ssok {

struct JoinResult {
  SimplicialSet sset;
  std::vector<int> from_a, from_b;          // cell reindexing
  std::vector<std::vector<int>> from_pair;  // [a][b] -> cell id
  // term of the join cell of (ta, tb); either side may be "absent"
  SimplexTerm pair_term(const SimplexTerm& ta, const SimplexTerm& tb) const;
  SimplicialMap incl_a(const SimplicialSet& A) const;
  SimplicialMap incl_b(const SimplicialSet& B) const;
};
JoinResult join(const SimplicialSet& A, const SimplicialSet& B);

struct ProductResult {
  SimplicialSet sset;
  // components of each product cell
  std::vector<SimplexTerm> comp_a, comp_b;
  // normal form of a pair of terms of equal dimension
  SimplexTerm pair_term(const SimplexTerm& ta, const SimplexTerm& tb) const;
  SimplicialMap proj_a(const SimplicialSet& A) const;
  SimplicialMap proj_b(const SimplicialSet& B) const;
 private:
  friend ProductResult product(const SimplicialSet&, const SimplicialSet&);
  std::map<std::tuple<int, int, Ord, Ord>, int> index;
};
ProductResult product(const SimplicialSet& A, const SimplicialSet& B);

struct PushoutResult {
  SimplicialSet sset;
  SimplicialMap from_b, from_c;  // cocone B -> P, C -> P
};
// B <-f- A -g-> C with f a monomorphism
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);

SimplicialSet opposite(const SimplicialSet& A);
// Delta^0 * K with cone vertex labeled "<"
JoinResult cone_left(const SimplicialSet& K);
// K * Delta^0 with cone vertex labeled ">"
JoinResult cone_right(const SimplicialSet& K);

}  // namespace ssok
