#include "ssok/fibers.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ssok {

namespace {

OpMor as_opmor(const DiscreteOperad& O, int m, int elem) {
  PointedMap a{m, 1, std::vector<int>(m, 1)};
  (void)O;
  return {a, {elem}};
}

}  // namespace

std::vector<int> strict_ext_fiber(const DiscreteOperad& O, int m, int sigma,
                                  const std::pair<OpMor, int>& i) {
  if (!op_atomic(O, i.first) || i.first.alpha.m != m)
    throw std::invalid_argument("strict_ext_fiber: i must be atomic from <m>");
  if (sigma < 0 || sigma >= O.count(m))
    throw std::invalid_argument("strict_ext_fiber: bad sigma");
  std::vector<int> out;
  OpMor s = as_opmor(O, m, sigma);
  for (int fp = 0; fp < O.count(m + 1); ++fp)
    if (total_compose(O, as_opmor(O, m + 1, fp), i.first) ==
        std::optional<OpMor>(s))
      out.push_back(fp);
  return out;
}

OrbitReport unary_orbits(const DiscreteOperad& O, int m, int sigma,
                         const std::pair<OpMor, int>& i) {
  OrbitReport R;
  R.group_order = O.count(1);
  R.is_group = true;
  for (int u = 0; u < O.count(1); ++u)
    if (!unary_inverse(O, u)) R.is_group = false;
  auto fib = strict_ext_fiber(O, m, sigma, i);
  int slot = i.second;

  auto act = [&](int u, int fp) -> int {
    auto r = O.circ(m + 1, fp, slot, 1, u);
    if (!r) throw std::runtime_error("unary_orbits: action escapes");
    return *r;
  };
  // union-find over the fiber
  std::map<int, int> pos;
  for (size_t k = 0; k < fib.size(); ++k) pos[fib[k]] = (int)k;
  std::vector<int> parent(fib.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  R.free = true;
  for (size_t k = 0; k < fib.size(); ++k)
    for (int u = 0; u < O.count(1); ++u) {
      int r = act(u, fib[k]);
      auto it = pos.find(r);
      if (it == pos.end())
        throw std::runtime_error("unary_orbits: action leaves the fiber");
      parent[find((int)k)] = find(it->second);
      if (u != O.unit() && r == fib[k]) R.free = false;
    }
  std::map<int, std::vector<int>> groups;
  for (size_t k = 0; k < fib.size(); ++k)
    groups[find((int)k)].push_back(fib[k]);
  for (auto& [root, v] : groups) R.orbits.push_back(v);
  return R;
}

std::vector<BoObj> bo_objects(const DiscreteOperad& O, const OpMor& sigma) {
  if (!op_valid(O, sigma) || !op_active(sigma))
    throw std::invalid_argument("bo_fiber: sigma must be active");
  int m = sigma.alpha.m, n = sigma.alpha.n;
  if (m + 1 > O.arity_bound)
    throw std::invalid_argument("bo_fiber: arity bound exceeded");

  std::vector<BoObj> objs;
  auto equivs = enumerate_equivalences(O, n);
  for (auto& [s0, slot] : enumerate_atomics(O, m))
    for (auto& sp : enumerate_homs(O, m + 1, n)) {
      if (!op_active(sp)) continue;
      auto ps = total_compose(O, sp, s0);
      if (!ps) continue;
      for (auto& s1 : equivs)
        if (total_compose(O, s1, *ps) == std::optional<OpMor>(sigma))
          objs.push_back({s0, sp, s1, slot});
    }
  return objs;
}

int pi0_bo(const DiscreteOperad& O, const OpMor& sigma) {
  auto objs = bo_objects(O, sigma);
  int nob = (int)objs.size();
  std::vector<int> parent(nob);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int m = sigma.alpha.m;
  for (int x = 0; x < nob; ++x)
    for (int y = 0; y < nob; ++y) {
      if (find(x) == find(y)) continue;
      const BoObj& X = objs[x];
      const BoObj& Y = objs[y];
      auto bb = total_compose(O, *op_inverse(O, X.s1), Y.s1);
      if (!bb) continue;
      for (auto& f0 :
           transfer_candidates(O, X.s0, X.new_slot, Y.s0, Y.new_slot)) {
        if (!(total_compose(O, f0, X.s0) == std::optional<OpMor>(Y.s0)))
          continue;
        auto t = total_compose(O, Y.splus, f0);
        if (!t) continue;
        if (!(total_compose(O, *bb, *t) == std::optional<OpMor>(X.splus)))
          continue;
        parent[find(x)] = find(y);
        break;
      }
    }
  int c = 0;
  for (int o = 0; o < nob; ++o) c += (find(o) == o);
  return c;
}

BoFiber bo_fiber(const DiscreteOperad& O, const OpMor& sigma) {
  int m = sigma.alpha.m, n = sigma.alpha.n;
  BoFiber B;
  B.objs = bo_objects(O, sigma);

  CatBuilder b("BO(" + op_name(O, sigma) + ")");
  for (auto& o : B.objs)
    b.add_obj(op_name(O, o.s0) + ";" + op_name(O, o.splus) + ";" +
              op_name(O, o.s1));
  int nob = (int)B.objs.size();
  std::vector<std::pair<int, int>> ends;
  for (int o = 0; o < nob; ++o) {
    B.mor_fb.push_back({total_identity(O, m + 1), total_identity(O, n)});
    ends.push_back({o, o});
  }
  std::map<std::tuple<int, int, std::string, std::string>, int> idx;
  for (int o = 0; o < nob; ++o)
    idx[{o, o, op_name(O, B.mor_fb[o].first),
         op_name(O, B.mor_fb[o].second)}] = o;

  for (int x = 0; x < nob; ++x)
    for (int y = 0; y < nob; ++y) {
      const BoObj& X = B.objs[x];
      const BoObj& Y = B.objs[y];
      // b is forced by X.s1 o b = Y.s1; f0 is pinned down by the two
      // atomics up to its unary component on the new slot
      auto bb = total_compose(O, *op_inverse(O, X.s1), Y.s1);
      if (!bb) continue;
      for (auto& f0 :
           transfer_candidates(O, X.s0, X.new_slot, Y.s0, Y.new_slot)) {
        if (!(total_compose(O, f0, X.s0) == std::optional<OpMor>(Y.s0)))
          continue;
        // twisted condition: X.splus = b o Y.splus o f0
        auto t = total_compose(O, Y.splus, f0);
        if (!t) continue;
        if (!(total_compose(O, *bb, *t) == std::optional<OpMor>(X.splus)))
          continue;
        if (x == y && f0 == total_identity(O, m + 1) &&
            *bb == total_identity(O, n))
          continue;
        int i = b.add_mor(op_name(O, f0) + ";" + op_name(O, *bb), x, y);
        idx[{x, y, op_name(O, f0), op_name(O, *bb)}] = i;
        B.mor_fb.push_back({f0, *bb});
        ends.push_back({x, y});
        if ((long)B.mor_fb.size() > kMorphismGuard)
          throw std::runtime_error("bo_fiber: morphism guard exceeded");
      }
    }
  int M = (int)B.mor_fb.size();
  for (int g = nob; g < M; ++g)
    for (int f = nob; f < M; ++f) {
      if (ends[f].second != ends[g].first) continue;
      auto f0 = total_compose(O, B.mor_fb[g].first, B.mor_fb[f].first);
      auto bb = total_compose(O, B.mor_fb[f].second, B.mor_fb[g].second);
      if (!f0 || !bb) throw std::runtime_error("bo_fiber: composition escapes");
      auto it = idx.find(
          {ends[f].first, ends[g].second, op_name(O, *f0), op_name(O, *bb)});
      if (it == idx.end())
        throw std::runtime_error("bo_fiber: composite not enumerated");
      b.set_comp(g, f, it->second);
    }
  B.cat = b.build();
  return B;
}

}  // namespace ssok
