#pragma once
#include <map>

#include "ssok/operad_total.hpp"

namespace ssok {

// Extension of an active sigma: <m> -> <n>: an atomic g0 into <m+1>, an
// active f' out of it and an equivalence g1 with f' o g0 = g1 o sigma.
struct ExtObj {
  OpMor g0;
  OpMor fp;
  OpMor g1;
  int new_slot = 0;  // the slot of <m+1> outside the image of g0

  bool operator==(const ExtObj&) const = default;
};

struct ExtCategory {
  FiniteCategory cat;
  std::vector<ExtObj> objs;
  // per morphism index: h0 on <m+1> and the induced equivalence h1 on <n>
  std::vector<std::pair<OpMor, OpMor>> mor_h;

  std::optional<int> obj_index(const ExtObj& o) const;
};

std::vector<ExtObj> ext_objects(const DiscreteOperad& O, const OpMor& sigma);

// morphisms restricted to h0 compatible with extension (new slot to new slot)
ExtCategory ext_category(const DiscreteOperad& O, const OpMor& sigma);

// objects plus one edge per ordered pair with a morphism between them; no
// composition table, so this stays affordable when the category does not
struct ExtGraph {
  std::vector<ExtObj> objs;
  std::vector<std::pair<int, int>> edges;  // identities omitted
  std::map<std::vector<int>, int> index;

  std::optional<int> find(const ExtObj& o) const;
};
ExtGraph ext_graph(const DiscreteOperad& O, const OpMor& sigma);
// connected components without assembling the composition table
int pi0_ext(const DiscreteOperad& O, const OpMor& sigma);
// the Higher Algebra variant: same objects, h0 unrestricted
ExtCategory ext_HA_category(const DiscreteOperad& O, const OpMor& sigma);

}  // namespace ssok
