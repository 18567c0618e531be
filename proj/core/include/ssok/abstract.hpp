#pragma once
#include <functional>

#include "ssok/sset.hpp"

namespace ssok {

// Abstract presentation of a truncated simplicial set: for each dimension a
// finite list of simplices (indexed 0..counts[d]-1) together with face and
// degeneracy actions. The builder recovers EZ normal form by itself: a
// simplex x is degenerate iff x == s_i(d_i(x)) for some i.
struct AbstractComplex {
  int top = 0;
  std::vector<int> counts;
  // d_i : dim d -> dim d-1, for 1 <= d <= top, 0 <= i <= d
  std::function<int(int d, int idx, int i)> face;
  // s_i : dim d -> dim d+1, for 0 <= d < top, 0 <= i <= d
  std::function<int(int d, int idx, int i)> deg;
  std::function<std::string(int d, int idx)> name;  // optional
};

struct AbstractBuild {
  SimplicialSet sset;
  // term_of[d][idx]: the abstract simplex as a term of sset
  std::vector<std::vector<SimplexTerm>> term_of;
};

AbstractBuild build_from_abstract(const AbstractComplex& A);

}  // namespace ssok
