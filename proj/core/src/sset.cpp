#include "ssok/sset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ssok {

int SimplicialSet::add_cell(std::string name, int dim,
                            std::vector<SimplexTerm> faces) {
  if (dim > 0 && (int)faces.size() != dim + 1)
    throw std::invalid_argument("add_cell: face count mismatch for " + name);
  if (!cells.empty() && cells.back().dim > dim)
    throw std::invalid_argument("add_cell: dimension order violated");
  while (id_by_name(name)) name += "'";
  cells.push_back(NdSimplex{std::move(name), dim, std::move(faces)});
  return (int)cells.size() - 1;
}

int SimplicialSet::dim() const {
  int d = -1;
  for (auto& c : cells) d = std::max(d, c.dim);
  return d;
}

int SimplicialSet::count(int d) const {
  int n = 0;
  for (auto& c : cells) n += (c.dim == d);
  return n;
}

std::vector<int> SimplicialSet::cells_of_dim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < (int)cells.size(); ++i)
    if (cells[i].dim == d) out.push_back(i);
  return out;
}

std::optional<int> SimplicialSet::id_by_name(const std::string& name) const {
  for (int i = 0; i < (int)cells.size(); ++i)
    if (cells[i].name == name) return i;
  return std::nullopt;
}

bool SimplicialSet::is_marked_term(const SimplexTerm& t) const {
  if (t.dim() != 1) return false;
  if (!t.nondeg()) return true;  // degenerate edges count as marked
  return marked.count(t.nd) > 0;
}

SimplexTerm SimplicialSet::term(int nd) const {
  return SimplexTerm{identity_map(cells[nd].dim), nd};
}

std::vector<int> SimplicialSet::vertices_of(int nd) const {
  std::vector<int> vs;
  int d = cells[nd].dim;
  for (int i = 0; i <= d; ++i) {
    SimplexTerm v = act(*this, term(nd), Ord{i});
    vs.push_back(v.nd);
  }
  return vs;
}

namespace {
// y . inj for a nondegenerate cell y and a monotone injection inj
SimplexTerm apply_injection(const SimplicialSet& S, int nd, const Ord& inj,
                            int m) {
  if ((int)inj.size() == m + 1) return S.term(nd);  // inj is the identity
  // find least missed value
  int j = 0;
  {
    size_t k = 0;
    while (k < inj.size() && inj[k] == j) {
      ++j;
      ++k;
    }
  }
  const SimplexTerm& f = S.face(nd, j);
  Ord inj2(inj.size());
  for (size_t i = 0; i < inj.size(); ++i) inj2[i] = inj[i] < j ? inj[i] : inj[i] - 1;
  return act(S, f, inj2);
}
}  // namespace

SimplexTerm act(const SimplicialSet& S, const SimplexTerm& t, const Ord& f) {
  Ord g = comp(t.sur, f);
  EpiMono em = epi_mono(g);
  int m = S.cells[t.nd].dim;
  SimplexTerm r = apply_injection(S, t.nd, em.inj, m);
  return SimplexTerm{comp(r.sur, em.sur), r.nd};
}

std::vector<SimplexTerm> all_simplices(const SimplicialSet& S, int d) {
  std::vector<SimplexTerm> out;
  for (int i = 0; i < (int)S.cells.size(); ++i) {
    int m = S.cells[i].dim;
    if (m > d) continue;
    for (auto& sur : all_surjections(d, m)) out.push_back(SimplexTerm{sur, i});
  }
  return out;
}

std::optional<std::string> SimplicialSet::validate() const {
  for (int x = 0; x < (int)cells.size(); ++x) {
    const NdSimplex& c = cells[x];
    if (c.dim == 0) {
      if (!c.faces.empty()) return "vertex " + c.name + " has faces";
      continue;
    }
    for (int i = 0; i <= c.dim; ++i) {
      const SimplexTerm& f = c.faces[i];
      if (f.nd < 0 || f.nd >= (int)cells.size())
        return "bad face target in " + c.name;
      if (f.nd >= x) return "face target not earlier than " + c.name;
      if (f.dim() != c.dim - 1) return "face dim mismatch in " + c.name;
      if (!is_monotone(f.sur) ||
          !is_surjective(f.sur, cells[f.nd].dim))
        return "face word not a surjection in " + c.name;
    }
    // simplicial identities d_i d_j = d_{j-1} d_i (i < j)
    if (c.dim < 2) continue;
    for (int j = 1; j <= c.dim; ++j)
      for (int i = 0; i < j; ++i) {
        SimplexTerm a = act(*this, c.faces[j], delta(i, c.dim - 1));
        SimplexTerm b = act(*this, c.faces[i], delta(j - 1, c.dim - 1));
        if (!(a == b))
          return "simplicial identity fails at " + c.name + " (" +
                 std::to_string(i) + "," + std::to_string(j) + ")";
      }
  }
  for (int e : marked) {
    if (e < 0 || e >= (int)cells.size() || cells[e].dim != 1)
      return "marked set contains a non-edge";
  }
  return std::nullopt;
}

SimplicialSet flat(SimplicialSet A) {
  A.marked.clear();
  return A;
}

SimplicialSet sharp(SimplicialSet A) {
  A.marked.clear();
  for (int i = 0; i < (int)A.cells.size(); ++i)
    if (A.cells[i].dim == 1) A.marked.insert(i);
  return A;
}

SimplicialSet mark_edge_ids(SimplicialSet A, const std::vector<int>& ids) {
  for (int e : ids) {
    if (e < 0 || e >= (int)A.cells.size() || A.cells[e].dim != 1)
      throw std::invalid_argument("mark_edge_ids: not an edge id");
    A.marked.insert(e);
  }
  return A;
}

SimplicialSet mark_edges(SimplicialSet A, const std::vector<std::string>& edges) {
  std::vector<int> ids;
  for (auto& n : edges) {
    auto id = A.id_by_name(n);
    if (!id) throw std::invalid_argument("mark_edges: unknown edge " + n);
    ids.push_back(*id);
  }
  return mark_edge_ids(std::move(A), ids);
}

int pi0(const SimplicialSet& S) {
  std::vector<int> parent(S.cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < (int)S.cells.size(); ++i)
    if (S.cells[i].dim == 1) {
      auto vs = S.vertices_of(i);
      parent[find(vs[0])] = find(vs[1]);
    }
  int n = 0;
  for (int i = 0; i < (int)S.cells.size(); ++i)
    if (S.cells[i].dim == 0 && find(i) == i) ++n;
  return n;
}

}  // namespace ssok
