#pragma once
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ssok {

// Monochromatic operad in sets, truncated at an arity bound. Elements are
// referred to by (arity, index); names are normal forms ("213", "2+1-", ...).
// Composition is the full substitution gamma(f; g_1..g_n), undefined when
// the resulting arity exceeds the bound.
struct DiscreteOperad {
  enum class Kind { Comm, Ass, AssInv, Triv, Table };

  Kind kind = Kind::Comm;
  std::string name;
  int arity_bound = 4;
  std::vector<std::vector<std::string>> elems;  // elems[n], n <= arity_bound
  std::vector<std::unordered_map<std::string, int>> index;
  // decoded signed words per element, kept alongside for the builtin kinds
  std::vector<std::vector<std::vector<std::pair<int, int>>>> words;

  // Table kind only; keys {n, f, m1, g1, ..., mn, gn} and {n, f, p1..pn}
  std::map<std::vector<int>, int> comp_table;
  std::map<std::vector<int>, int> sym_table;

  int count(int n) const;
  std::optional<int> id_of(int n, const std::string& nm) const;
  const std::string& elem_name(int n, int f) const { return elems[n][f]; }
  bool unital() const { return count(0) == 1; }
  int unit() const;  // index in elems[1]

  std::optional<int> gamma(int n, int f,
                           const std::vector<std::pair<int, int>>& gs) const;
  // partial composition f o_i g (i is 1-based)
  std::optional<int> circ(int n, int f, int i, int gm, int g) const;
  // input relabeling: input i becomes input perm[i-1]
  std::optional<int> relabel(int n, int f, const std::vector<int>& perm) const;
};

DiscreteOperad builtin_operad(const std::string& name, int arity_bound = 4);

// unit laws, partial-composition associativity, equivariance, action laws;
// everything with all arities involved <= bound
std::optional<std::string> check_operad_axioms(const DiscreteOperad& O,
                                               int bound);

// The block permutation on sum(arities) matching the equivariance axiom
// gamma(f.perm; g_1..g_n) = gamma(f; g_perm(1)..g_perm(n)).lambda, where
// arities[j-1] is the arity of g_j (original labels) and the i-th block of
// the inner composite (the inputs of g_perm(i)) lands at the slots of
// g_perm(i) in the left-hand layout.
std::vector<int> block_permutation(const std::vector<int>& perm,
                                   const std::vector<int>& arities);

// Independent count of the operations of the given arity in the operad
// generated by mu (binary) and tau (unary) with tau tau = id and
// tau mu(a, b) = mu(tau b, tau a): enumerates composition trees up to the
// given depth with all leaf labelings and evaluates them in the free
// involutive monoid, counting distinct results.
int involutive_closure_count(int n, int depth = 4);

}  // namespace ssok
