#include "ssok/abstract.hpp"

namespace ssok {

AbstractBuild build_from_abstract(const AbstractComplex& A) {
  AbstractBuild R;
  R.term_of.assign(A.top + 1, {});
  for (int d = 0; d <= A.top; ++d) {
    R.term_of[d].resize(A.counts[d]);
    for (int idx = 0; idx < A.counts[d]; ++idx) {
      bool degen = false;
      for (int i = 0; i < d && !degen; ++i) {
        int y = A.face(d, idx, i);
        if (A.deg(d - 1, y, i) == idx) {
          const SimplexTerm& ty = R.term_of[d - 1][y];
          R.term_of[d][idx] = SimplexTerm{comp(ty.sur, sigma(i, d - 1)), ty.nd};
          degen = true;
        }
      }
      if (degen) continue;
      std::vector<SimplexTerm> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i)
          faces.push_back(R.term_of[d - 1][A.face(d, idx, i)]);
      std::string nm = A.name ? A.name(d, idx)
                              : "c" + std::to_string(d) + "_" + std::to_string(idx);
      int id = R.sset.add_cell(nm, d, std::move(faces));
      R.term_of[d][idx] = R.sset.term(id);
    }
  }
  return R;
}

}  // namespace ssok
