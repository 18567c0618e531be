#include "ssok/kan.hpp"

#include "ssok/build.hpp"
#include "ssok/smap.hpp"

namespace ssok {

KanVerdict kan_check(const SimplicialSet& K, int dim_bound) {
  KanVerdict V;
  V.dim_bound = dim_bound;
  for (int n = 1; n <= dim_bound; ++n) {
    auto D = standard_simplex(n);
    for (int k = 0; k <= n; ++k) {
      auto H = horn(n, k);
      // cell of Delta^n carrying each horn cell, by name
      std::vector<int> in_full(H.total());
      for (int c = 0; c < H.total(); ++c)
        in_full[c] = *D.id_by_name(H.cells[c].name);
      for (auto& h : enumerate_simplicial_maps(H, K)) {
        std::vector<SimplexTerm> partial(D.total());
        std::vector<bool> fixed(D.total(), false);
        for (int c = 0; c < H.total(); ++c) {
          partial[in_full[c]] = h.img[c];
          fixed[in_full[c]] = true;
        }
        if (enumerate_extensions(D, K, partial, fixed, 1).empty()) {
          V.counterexample = "Lambda_" + std::to_string(k) + "^" +
                             std::to_string(n) + " without filler";
          return V;
        }
      }
    }
  }
  V.kan = true;
  return V;
}

}  // namespace ssok
