#include "ssok/build.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ssok {

SimplicialSet empty_sset() { return SimplicialSet{}; }

std::string subset_name(const std::vector<int>& vs,
                        const std::vector<std::string>& labels) {
  bool all_short = true;
  for (int v : vs)
    if (labels[v].size() != 1) all_short = false;
  std::string name;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i && !all_short) name += ",";
    name += labels[vs[i]];
  }
  return name;
}

std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= n + 1; ++size) {
    std::vector<int> cur(size);
    std::function<void(int, int)> go = [&](int pos, int low) {
      if (pos == size) {
        out.push_back(cur);
        return;
      }
      for (int v = low; v <= n; ++v) {
        cur[pos] = v;
        go(pos + 1, v + 1);
      }
    };
    go(0, 0);
  }
  return out;
}

SimplicialSet standard_simplex(int n, const std::vector<std::string>& labels_in) {
  std::vector<std::string> labels = labels_in;
  if (labels.empty())
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  if ((int)labels.size() != n + 1)
    throw std::invalid_argument("standard_simplex: label count");
  SimplicialSet S;
  std::map<std::vector<int>, int> id_of;
  for (auto& sub : subsets_by_size(n)) {
    std::vector<SimplexTerm> faces;
    if (sub.size() > 1) {
      for (size_t i = 0; i < sub.size(); ++i) {
        std::vector<int> f = sub;
        f.erase(f.begin() + i);
        faces.push_back(SimplexTerm{identity_map((int)f.size() - 1), id_of.at(f)});
      }
    }
    int id = S.add_cell(subset_name(sub, labels), (int)sub.size() - 1, faces);
    id_of[sub] = id;
  }
  return S;
}

Subcomplex subcomplex(const SimplicialSet& B, const std::vector<int>& generators) {
  std::vector<bool> keep(B.cells.size(), false);
  std::vector<int> stack = generators;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (keep[x]) continue;
    keep[x] = true;
    for (auto& f : B.cells[x].faces) stack.push_back(f.nd);
  }
  Subcomplex R;
  R.new_of_old.assign(B.cells.size(), -1);
  for (int x = 0; x < (int)B.cells.size(); ++x) {
    if (!keep[x]) continue;
    std::vector<SimplexTerm> faces;
    for (auto& f : B.cells[x].faces)
      faces.push_back(SimplexTerm{f.sur, R.new_of_old[f.nd]});
    int id = R.sset.add_cell(B.cells[x].name, B.cells[x].dim, faces);
    R.new_of_old[x] = id;
    R.old_of_new.push_back(x);
  }
  for (int e : B.marked)
    if (keep[e]) R.sset.marked.insert(R.new_of_old[e]);
  return R;
}

namespace {
Subcomplex std_subcomplex(int n, const std::vector<std::vector<int>>& gens) {
  SimplicialSet D = standard_simplex(n);
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> ids;
  for (auto& g : gens) ids.push_back(*D.id_by_name(subset_name(g, labels)));
  return subcomplex(D, ids);
}
}  // namespace

SimplicialSet boundary(int n) {
  if (n == 0) return empty_sset();
  std::vector<std::vector<int>> gens;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != i) f.push_back(v);
    gens.push_back(f);
  }
  return std_subcomplex(n, gens).sset;
}

SimplicialSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn: bad (n,k)");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != i) f.push_back(v);
    gens.push_back(f);
  }
  return std_subcomplex(n, gens).sset;
}

SimplicialSet spine(int n) {
  if (n == 0) return standard_simplex(0);
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < n; ++i) gens.push_back({i, i + 1});
  return std_subcomplex(n, gens).sset;
}

}  // namespace ssok
