#include "ssok/pointed.hpp"

#include <stdexcept>

namespace ssok {

PointedMap pointed_identity(int n) {
  PointedMap a{n, n, std::vector<int>(n)};
  for (int i = 1; i <= n; ++i) a.img[i - 1] = i;
  return a;
}

PointedMap pointed_compose(const PointedMap& g, const PointedMap& f) {
  if (f.n != g.m) throw std::invalid_argument("pointed_compose: arity mismatch");
  PointedMap a{f.m, g.n, std::vector<int>(f.m)};
  for (int i = 1; i <= f.m; ++i) {
    int j = f.img[i - 1];
    a.img[i - 1] = j == 0 ? 0 : g.img[j - 1];
  }
  return a;
}

PointedMap pointed_inclusion(int n, int gap) {
  if (gap < 1 || gap > n + 1) throw std::invalid_argument("pointed_inclusion: bad gap");
  PointedMap a{n, n + 1, std::vector<int>(n)};
  for (int i = 1; i <= n; ++i) a.img[i - 1] = i < gap ? i : i + 1;
  return a;
}

bool pointed_valid(const PointedMap& a) {
  if ((int)a.img.size() != a.m || a.m < 0 || a.n < 0) return false;
  for (int v : a.img)
    if (v < 0 || v > a.n) return false;
  return true;
}

std::string pointed_name(const PointedMap& a) {
  std::string s = "[";
  for (int i = 0; i < a.m; ++i) {
    if (i) s += ",";
    s += std::to_string(a.img[i]);
  }
  return s + "]";
}

std::vector<int> fiber(const PointedMap& a, int j) {
  std::vector<int> out;
  for (int i = 1; i <= a.m; ++i)
    if (a.img[i - 1] == j) out.push_back(i);
  return out;
}

PointedClass classify(const PointedMap& a) {
  PointedClass c;
  c.inert = true;
  c.semi_inert = true;
  for (int j = 1; j <= a.n; ++j) {
    size_t k = fiber(a, j).size();
    if (k != 1) c.inert = false;
    if (k > 1) c.semi_inert = false;
  }
  c.active = fiber(a, 0).empty();
  c.atomic = c.semi_inert && c.active && a.n == a.m + 1;
  return c;
}

std::vector<PointedMap> enumerate_pointed_maps(int m, int n) {
  std::vector<PointedMap> out;
  PointedMap a{m, n, std::vector<int>(m, 0)};
  long total = 1;
  for (int i = 0; i < m; ++i) total *= n + 1;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < m; ++i) {
      a.img[i] = (int)(c % (n + 1));
      c /= n + 1;
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace ssok
