#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssok/simplex_op.hpp"

namespace ssok {

// A (possibly degenerate) simplex of a simplicial set in Eilenberg-Zilber
// normal form: the degeneracy surjection applied to a nondegenerate cell.
struct SimplexTerm {
  Ord sur;      // monotone surjection [k] ->> [dim(nd)]
  int nd = -1;  // index of the nondegenerate cell
  int dim() const { return (int)sur.size() - 1; }
  bool nondeg() const { return is_injective(sur); }
  auto operator<=>(const SimplexTerm&) const = default;
};

struct NdSimplex {
  std::string name;
  int dim = 0;
  std::vector<SimplexTerm> faces;  // size dim+1, entry i = d_i
  bool operator==(const NdSimplex&) const = default;
};

// Finite simplicial set: only nondegenerate simplices are stored, each face
// of a cell is given in EZ normal form. Cells are listed in dimension order
// (faces always point to earlier cells). `marked` lists nondegenerate edges;
// degenerate edges are implicitly marked.
class SimplicialSet {
 public:
  std::vector<NdSimplex> cells;
  std::set<int> marked;

  int add_cell(std::string name, int dim, std::vector<SimplexTerm> faces);
  int dim() const;
  int count(int d) const;
  int total() const { return (int)cells.size(); }
  std::vector<int> cells_of_dim(int d) const;
  const SimplexTerm& face(int nd, int i) const { return cells[nd].faces[i]; }
  std::optional<int> id_by_name(const std::string& name) const;
  bool is_marked_term(const SimplexTerm& t) const;

  // identity term of a cell
  SimplexTerm term(int nd) const;
  // vertex ids of a cell, in order (dim+1 entries, possibly repeated never)
  std::vector<int> vertices_of(int nd) const;

  // Validate EZ structure and all simplicial identities; returns an error
  // description or nullopt if valid.
  std::optional<std::string> validate() const;

  bool operator==(const SimplicialSet&) const = default;
};

// x . f for a term x and monotone map f into [x.dim()]
SimplexTerm act(const SimplicialSet& S, const SimplexTerm& t, const Ord& f);

// All simplices of S in dimension d, as terms (degenerate included).
std::vector<SimplexTerm> all_simplices(const SimplicialSet& S, int d);

SimplicialSet flat(SimplicialSet A);
SimplicialSet sharp(SimplicialSet A);
// marks the listed nondegenerate edges (by name); throws on unknown/non-edge
SimplicialSet mark_edges(SimplicialSet A, const std::vector<std::string>& edges);
SimplicialSet mark_edge_ids(SimplicialSet A, const std::vector<int>& ids);

// number of connected components (edge zigzags)
int pi0(const SimplicialSet& S);

}  // namespace ssok
