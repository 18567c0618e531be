#include "ssok/pushout_join.hpp"

#include <stdexcept>

#include "ssok/build.hpp"
#include "ssok/iso.hpp"
#include "ssok/ops.hpp"

namespace ssok {

SimplicialMap named_subcomplex_map(const SimplicialSet& A,
                                   const SimplicialSet& B) {
  std::vector<SimplexTerm> img;
  for (auto& c : A.cells) {
    auto id = B.id_by_name(c.name);
    if (!id)
      throw std::invalid_argument("named_subcomplex_map: missing " + c.name);
    img.push_back(SimplexTerm{identity_map(c.dim), *id});
  }
  return make_map(A, B, std::move(img));
}

SimplicialMap pushout_join(const SimplicialMap& i, const SimplicialMap& j) {
  if (!is_mono(i) || !is_mono(j))
    throw std::invalid_argument("pushout_join: inputs must be monomorphisms");
  const SimplicialSet& B = *i.tgt;
  const SimplicialSet& L = *j.tgt;
  auto J = join(B, L);
  std::vector<char> inB(B.total(), 0), inL(L.total(), 0);
  for (auto& t : i.img) inB[t.nd] = 1;
  for (auto& t : j.img) inL[t.nd] = 1;
  std::vector<int> gens;
  for (int b = 0; b < B.total(); ++b) gens.push_back(J.from_a[b]);
  for (int l = 0; l < L.total(); ++l) gens.push_back(J.from_b[l]);
  for (int b = 0; b < B.total(); ++b)
    for (int l = 0; l < L.total(); ++l)
      if (inB[b] || inL[l]) gens.push_back(J.from_pair[b][l]);
  auto sub = subcomplex(J.sset, gens);
  std::vector<SimplexTerm> img;
  for (int c = 0; c < sub.sset.total(); ++c)
    img.push_back(
        SimplexTerm{identity_map(sub.sset.cells[c].dim), sub.old_of_new[c]});
  return make_map(sub.sset, J.sset, std::move(img));
}

PushoutJoinReport check_pushout_join_identities(int total_dim_max) {
  PushoutJoinReport R;
  auto fail = [&](const std::string& what) {
    R.ok = false;
    R.failure = what;
    return R;
  };
  for (int n = 1; n <= total_dim_max - 1; ++n)
    for (int k = 0; n + 1 + k <= total_dim_max; ++k)
      for (int jj = 0; jj <= n; ++jj) {
        int N = n + 1 + k;
        auto horn_incl = named_subcomplex_map(horn(n, jj), standard_simplex(n));
        SimplicialMap cell_incl =
            k == 0 ? make_map(empty_sset(), standard_simplex(0), {})
                   : named_subcomplex_map(boundary(k), standard_simplex(k));
        auto lhs1 = pushout_join(horn_incl, cell_incl);
        auto rhs1 = named_subcomplex_map(horn(N, jj), standard_simplex(N));
        ++R.checked;
        if (maps_isomorphic(lhs1, rhs1).status != IsoStatus::Iso)
          return fail("horn box* cell at n=" + std::to_string(n) +
                      " j=" + std::to_string(jj) + " k=" + std::to_string(k));
        auto lhs2 = pushout_join(cell_incl, horn_incl);
        auto rhs2 =
            named_subcomplex_map(horn(N, k + 1 + jj), standard_simplex(N));
        ++R.checked;
        if (maps_isomorphic(lhs2, rhs2).status != IsoStatus::Iso)
          return fail("cell box* horn at n=" + std::to_string(n) +
                      " j=" + std::to_string(jj) + " k=" + std::to_string(k));
      }
  return R;
}

}  // namespace ssok
