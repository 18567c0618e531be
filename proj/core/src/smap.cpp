#include "ssok/smap.hpp"

#include "ssok/build.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ssok {

SimplicialMap make_map(std::shared_ptr<const SimplicialSet> src,
                       std::shared_ptr<const SimplicialSet> tgt,
                       std::vector<SimplexTerm> img) {
  return SimplicialMap{std::move(src), std::move(tgt), std::move(img)};
}

SimplicialMap make_map(SimplicialSet src, SimplicialSet tgt,
                       std::vector<SimplexTerm> img) {
  return make_map(std::make_shared<const SimplicialSet>(std::move(src)),
                  std::make_shared<const SimplicialSet>(std::move(tgt)),
                  std::move(img));
}

SimplicialMap identity_smap(SimplicialSet A) {
  auto p = std::make_shared<const SimplicialSet>(std::move(A));
  std::vector<SimplexTerm> img;
  for (int i = 0; i < (int)p->cells.size(); ++i) img.push_back(p->term(i));
  return SimplicialMap{p, p, std::move(img)};
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<SimplexTerm> img;
  for (auto& t : f.img) img.push_back(g.apply(t));
  return SimplicialMap{f.src, g.tgt, std::move(img)};
}

std::optional<std::string> validate_map(const SimplicialMap& f) {
  const SimplicialSet& A = *f.src;
  const SimplicialSet& X = *f.tgt;
  if (f.img.size() != A.cells.size()) return "image size mismatch";
  for (int x = 0; x < (int)A.cells.size(); ++x) {
    const SimplexTerm& t = f.img[x];
    if (t.nd < 0 || t.nd >= (int)X.cells.size()) return "bad image cell";
    if (t.dim() != A.cells[x].dim) return "image dim mismatch at " + A.cells[x].name;
    if (!is_monotone(t.sur) || !is_surjective(t.sur, X.cells[t.nd].dim))
      return "image not a normal form at " + A.cells[x].name;
    for (int i = 0; i <= A.cells[x].dim && A.cells[x].dim > 0; ++i) {
      SimplexTerm lhs = f.apply(A.cells[x].faces[i]);
      SimplexTerm rhs = act(X, t, delta(i, A.cells[x].dim));
      if (!(lhs == rhs)) return "does not commute with face at " + A.cells[x].name;
    }
  }
  return std::nullopt;
}

bool preserves_marking(const SimplicialMap& f) {
  for (int e : f.src->marked) {
    const SimplexTerm& t = f.img[e];
    if (!f.tgt->is_marked_term(t)) return false;
  }
  return true;
}

bool is_mono(const SimplicialMap& f) {
  std::set<int> seen;
  for (auto& t : f.img) {
    if (!t.nondeg()) return false;
    if (!seen.insert(t.nd).second) return false;
  }
  return true;
}

SimplicialMap map_of_simplex(const SimplicialSet& X, const SimplexTerm& t) {
  int n = t.dim();
  std::vector<SimplexTerm> img;
  for (auto& sub : subsets_by_size(n)) img.push_back(act(X, t, sub));
  return make_map(standard_simplex(n), X, std::move(img));
}

std::vector<SimplicialMap> enumerate_extensions(
    const SimplicialSet& A, const SimplicialSet& X,
    const std::vector<SimplexTerm>& partial, const std::vector<bool>& fixed,
    size_t limit) {
  std::vector<SimplicialMap> out;
  std::vector<SimplexTerm> img(A.cells.size());
  auto ap = std::make_shared<const SimplicialSet>(A);
  auto xp = std::make_shared<const SimplicialSet>(X);
  // candidate lists per dimension
  std::function<bool(int)> go = [&](int idx) -> bool {
    if (idx == (int)A.cells.size()) {
      out.push_back(SimplicialMap{ap, xp, img});
      return limit && out.size() >= limit;
    }
    int d = A.cells[idx].dim;
    auto try_term = [&](const SimplexTerm& t) -> bool {
      for (int i = 0; i <= d && d > 0; ++i) {
        const SimplexTerm& ft = A.cells[idx].faces[i];
        SimplexTerm want = act(X, t, delta(i, d));
        SimplexTerm have = act(X, img[ft.nd], ft.sur);
        if (!(want == have)) return false;
      }
      img[idx] = t;
      return go(idx + 1);
    };
    if (idx < (int)fixed.size() && fixed[idx]) return try_term(partial[idx]);
    for (auto& t : all_simplices(X, d))
      if (try_term(t)) return true;
    return false;
  };
  go(0);
  return out;
}

std::vector<SimplicialMap> enumerate_simplicial_maps(const SimplicialSet& A,
                                                     const SimplicialSet& X,
                                                     size_t limit) {
  return enumerate_extensions(A, X, {}, {}, limit);
}

}  // namespace ssok
