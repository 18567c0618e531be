#pragma once
#include <string>
#include <vector>

namespace ssok {

// Pointed map <m> -> <n>; img[i-1] in 0..n is the image of i, basepoint 0
// is always fixed and not stored.
struct PointedMap {
  int m = 0, n = 0;
  std::vector<int> img;

  bool operator==(const PointedMap&) const = default;
};

PointedMap pointed_identity(int n);
PointedMap pointed_compose(const PointedMap& g, const PointedMap& f);
// the inclusion <n> -> <n+1> missing target slot `gap` (1-based)
PointedMap pointed_inclusion(int n, int gap);
bool pointed_valid(const PointedMap& a);
std::string pointed_name(const PointedMap& a);

struct PointedClass {
  bool inert = false;
  bool active = false;
  bool semi_inert = false;
  bool atomic = false;
};

// inert: every nonbase fiber a singleton; active: nothing hits the basepoint;
// semi-inert: every nonbase fiber empty or a singleton; atomic: semi-inert
// and an inclusion <m> -> <m+1>
PointedClass classify(const PointedMap& a);

std::vector<int> fiber(const PointedMap& a, int j);  // 1-based, ascending

std::vector<PointedMap> enumerate_pointed_maps(int m, int n);

}  // namespace ssok
