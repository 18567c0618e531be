#pragma once
#include "ssok/sset.hpp"

namespace ssok {

struct KanVerdict {
  bool kan = false;
  int dim_bound = 0;
  std::string counterexample;  // unfillable horn, when not Kan
};

// checks that every horn Lambda_k^n -> K with n <= dim_bound has a filler
KanVerdict kan_check(const SimplicialSet& K, int dim_bound);

}  // namespace ssok
