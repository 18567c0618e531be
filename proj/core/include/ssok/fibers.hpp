#pragma once
#include "ssok/ext.hpp"

namespace ssok {

// {f' in O(m+1) : f' o i = sigma}, for sigma in O(m) and i atomic; the
// composite plugs i's unary components and the nullary unit into f'
std::vector<int> strict_ext_fiber(const DiscreteOperad& O, int m, int sigma,
                                  const std::pair<OpMor, int>& i);

// orbits of O(1) acting on the strict fiber by plugging u into the new slot
struct OrbitReport {
  bool is_group = false;  // O(1) a group under composition
  int group_order = 0;
  std::vector<std::vector<int>> orbits;
  bool free = false;
};
OrbitReport unary_orbits(const DiscreteOperad& O, int m, int sigma,
                         const std::pair<OpMor, int>& i);

// the fiber of the brane fibration over sigma: squares (sigma_0 atomic,
// sigma_plus active, sigma_1 equivalence) with sigma_1 o sigma_plus o
// sigma_0 = sigma; morphisms are twisted pairs (f0, b) with f0 compatible
// with extension
struct BoObj {
  OpMor s0;
  OpMor splus;
  OpMor s1;
  int new_slot = 0;

  bool operator==(const BoObj&) const = default;
};
struct BoFiber {
  FiniteCategory cat;
  std::vector<BoObj> objs;
  std::vector<std::pair<OpMor, OpMor>> mor_fb;  // (f0, b) per morphism index
};
BoFiber bo_fiber(const DiscreteOperad& O, const OpMor& sigma);
std::vector<BoObj> bo_objects(const DiscreteOperad& O, const OpMor& sigma);
// connected components without assembling the composition table
int pi0_bo(const DiscreteOperad& O, const OpMor& sigma);

}  // namespace ssok
