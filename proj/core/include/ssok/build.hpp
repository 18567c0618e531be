#pragma once
#include "ssok/sset.hpp"

namespace ssok {

SimplicialSet empty_sset();

// Delta^n; cells are the nonempty subsets of {0..n}, named by their
// vertex labels (default "0","1",...).
SimplicialSet standard_simplex(int n, const std::vector<std::string>& labels = {});

SimplicialSet boundary(int n);
// Lambda^n_k, union of all faces except the one opposite vertex k
SimplicialSet horn(int n, int k);
// Sp^n, the consecutive edges
SimplicialSet spine(int n);

// Subcomplex spanned by the given cells (closed under faces); keeps names
// and markings. Also returns the cell reindexing old->new.
struct Subcomplex {
  SimplicialSet sset;
  std::vector<int> old_of_new;
  std::vector<int> new_of_old;  // -1 where absent
};
Subcomplex subcomplex(const SimplicialSet& B, const std::vector<int>& generators);

// nonempty subsets of {0..n} in the standard_simplex cell order
std::vector<std::vector<int>> subsets_by_size(int n);

// name helper for standard-simplex subsets
std::string subset_name(const std::vector<int>& vs,
                        const std::vector<std::string>& labels);

}  // namespace ssok
