#pragma once
#include "ssok/category.hpp"
#include "ssok/operad.hpp"
#include "ssok/pointed.hpp"

namespace ssok {

// Morphism <m> -> <n> in the total category of a one-color operad: a
// pointed map together with one operation per nonbase target slot,
// comps[j-1] in O(|alpha^-1{j}|).
struct OpMor {
  PointedMap alpha;
  std::vector<int> comps;

  bool operator==(const OpMor&) const = default;
};

bool op_valid(const DiscreteOperad& O, const OpMor& f);
OpMor total_identity(const DiscreteOperad& O, int n);
// nullopt when some composite lands above the arity bound
std::optional<OpMor> total_compose(const DiscreteOperad& O, const OpMor& g,
                                   const OpMor& f);
std::string op_name(const DiscreteOperad& O, const OpMor& f);

bool op_active(const OpMor& f);
// semi-inert at the operad level: alpha semi-inert and the unary
// components invertible
bool op_semi_inert(const DiscreteOperad& O, const OpMor& f);
bool op_atomic(const DiscreteOperad& O, const OpMor& f);
bool op_equivalence(const DiscreteOperad& O, const OpMor& f);

std::optional<int> unary_inverse(const DiscreteOperad& O, int u);
std::optional<OpMor> op_inverse(const DiscreteOperad& O, const OpMor& f);

std::vector<OpMor> enumerate_equivalences(const DiscreteOperad& O, int n);

// the morphisms h on <m+1> with h o x0 = y0 that send the new slot of x0
// to the new slot of y0; such h is determined by the atomics except for
// its unary component on the new slot, one candidate per element of O(1)
std::vector<OpMor> transfer_candidates(const DiscreteOperad& O,
                                       const OpMor& x0, int x_slot,
                                       const OpMor& y0, int y_slot);
// atomic morphisms <m> -> <m+1>; new_slot receives the empty-fiber index
std::vector<std::pair<OpMor, int>> enumerate_atomics(const DiscreteOperad& O,
                                                     int m);

std::vector<OpMor> enumerate_homs(const DiscreteOperad& O, int m, int n);
long hom_count_by_formula(const DiscreteOperad& O, int m, int n);

// throws when an enumeration would top this many morphisms
inline constexpr long kMorphismGuard = 1000000;

struct TotalCategory {
  FiniteCategory cat;
  std::vector<OpMor> mor_data;  // per morphism index, identities included
  std::optional<int> mor_index(const OpMor& f) const;
};
// objects <0>..<N>
TotalCategory total_category(const DiscreteOperad& O, int N);
// wide subcategory on the active morphisms
TotalCategory active_category(const DiscreteOperad& O, int N);

// the fiber of Tw(Env(O)) over <n>: objects are active morphisms with an
// augmentation of their target arity to <n>, morphisms are twisted pairs
// (u, v) with sigma = v o sigma' o u and beta' = beta o alpha(v)
struct TwEnvFiber {
  FiniteCategory cat;
  struct Obj {
    OpMor sigma;
    PointedMap beta;
  };
  std::vector<Obj> objs;
  std::vector<std::pair<OpMor, OpMor>> mor_uv;  // per morphism index
};
TwEnvFiber tw_env_fiber(const DiscreteOperad& O, int n, int N);

// objects of Env(O) over <n>: active maps <k> -> <n>, k <= N
std::vector<PointedMap> env_objects(const DiscreteOperad& O, int n, int N);

}  // namespace ssok
