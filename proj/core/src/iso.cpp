#include "ssok/iso.hpp"

#include <algorithm>
#include <functional>

namespace ssok {

namespace {

std::vector<std::vector<int>> vertex_profiles(const SimplicialSet& A,
                                              bool respect_marking) {
  int top = std::max(A.dim(), 1);
  std::vector<std::vector<int>> prof(A.cells.size(),
                                     std::vector<int>(top + 2, 0));
  for (int x = 0; x < (int)A.cells.size(); ++x) {
    for (int v : A.vertices_of(x)) prof[v][A.cells[x].dim]++;
    if (respect_marking && A.cells[x].dim == 1 && A.marked.count(x))
      for (int v : A.vertices_of(x)) prof[v][top + 1]++;
  }
  return prof;
}

IsoResult search(const SimplicialSet& A, const SimplicialSet& B, int budget,
                 bool respect_marking, const std::vector<int>& flagA,
                 const std::vector<int>& flagB) {
  if (A.total() > budget || B.total() > budget)
    return {IsoStatus::BudgetExceeded, std::nullopt};
  if (A.total() != B.total()) return {IsoStatus::NotIso, std::nullopt};
  for (int d = 0; d <= std::max(A.dim(), B.dim()); ++d)
    if (A.count(d) != B.count(d)) return {IsoStatus::NotIso, std::nullopt};
  if (respect_marking && A.marked.size() != B.marked.size())
    return {IsoStatus::NotIso, std::nullopt};

  auto profA = vertex_profiles(A, respect_marking);
  auto profB = vertex_profiles(B, respect_marking);

  std::vector<int> assign(A.cells.size(), -1);
  std::vector<bool> used(B.cells.size(), false);
  long long nodes = 0;
  const long long node_budget = 4000000;
  bool exhausted = false;

  std::function<bool(int)> go = [&](int idx) -> bool {
    if (idx == (int)A.cells.size()) return true;
    if (++nodes > node_budget) {
      exhausted = true;
      return false;
    }
    int d = A.cells[idx].dim;
    for (int z = 0; z < (int)B.cells.size(); ++z) {
      if (used[z] || B.cells[z].dim != d) continue;
      if (flagA[idx] != flagB[z]) continue;
      if (d == 0) {
        if (profA[idx] != profB[z]) continue;
      } else {
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i) {
          const SimplexTerm& ft = A.cells[idx].faces[i];
          const SimplexTerm& gt = B.cells[z].faces[i];
          if (gt.sur != ft.sur || gt.nd != assign[ft.nd]) ok = false;
        }
        if (!ok) continue;
        if (respect_marking && d == 1 &&
            (A.marked.count(idx) > 0) != (B.marked.count(z) > 0))
          continue;
      }
      assign[idx] = z;
      used[z] = true;
      if (go(idx + 1)) return true;
      assign[idx] = -1;
      used[z] = false;
      if (exhausted) return false;
    }
    return false;
  };

  if (go(0)) {
    std::vector<SimplexTerm> img;
    for (int x = 0; x < (int)A.cells.size(); ++x)
      img.push_back(SimplexTerm{identity_map(A.cells[x].dim), assign[x]});
    return {IsoStatus::Iso, make_map(A, B, img)};
  }
  return {exhausted ? IsoStatus::BudgetExceeded : IsoStatus::NotIso,
          std::nullopt};
}

}  // namespace

IsoResult is_isomorphic(const SimplicialSet& A, const SimplicialSet& B,
                        int budget, bool respect_marking) {
  std::vector<int> fa(A.cells.size(), 0), fb(B.cells.size(), 0);
  return search(A, B, budget, respect_marking, fa, fb);
}

IsoResult maps_isomorphic(const SimplicialMap& f, const SimplicialMap& g,
                          int budget, bool respect_marking) {
  std::vector<int> fa(f.tgt->cells.size(), 0), fb(g.tgt->cells.size(), 0);
  for (auto& t : f.img) fa[t.nd] = 1;
  for (auto& t : g.img) fb[t.nd] = 1;
  return search(*f.tgt, *g.tgt, budget, respect_marking, fa, fb);
}

}  // namespace ssok
