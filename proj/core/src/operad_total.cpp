#include "ssok/operad_total.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ssok {

bool op_valid(const DiscreteOperad& O, const OpMor& f) {
  if (!pointed_valid(f.alpha) || (int)f.comps.size() != f.alpha.n) return false;
  for (int j = 1; j <= f.alpha.n; ++j) {
    int k = (int)fiber(f.alpha, j).size();
    if (f.comps[j - 1] < 0 || f.comps[j - 1] >= O.count(k)) return false;
  }
  return true;
}

OpMor total_identity(const DiscreteOperad& O, int n) {
  return {pointed_identity(n), std::vector<int>(n, O.unit())};
}

std::optional<OpMor> total_compose(const DiscreteOperad& O, const OpMor& g,
                                   const OpMor& f) {
  if (f.alpha.n != g.alpha.m) return std::nullopt;
  OpMor out{pointed_compose(g.alpha, f.alpha), {}};
  for (int k = 1; k <= g.alpha.n; ++k) {
    std::vector<std::pair<int, int>> gs;
    std::vector<int> srcs;  // source elements, in block order
    for (int j : fiber(g.alpha, k)) {
      auto fib = fiber(f.alpha, j);
      gs.push_back({(int)fib.size(), f.comps[j - 1]});
      srcs.insert(srcs.end(), fib.begin(), fib.end());
    }
    auto c = O.gamma((int)gs.size(), g.comps[k - 1], gs);
    if (!c) return std::nullopt;
    // relabel block order to the ascending order of the composite fiber
    std::vector<int> sorted = srcs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> perm(srcs.size());
    for (size_t r = 0; r < srcs.size(); ++r)
      perm[r] = 1 + (int)(std::lower_bound(sorted.begin(), sorted.end(),
                                           srcs[r]) -
                          sorted.begin());
    c = O.relabel((int)srcs.size(), *c, perm);
    if (!c) return std::nullopt;
    out.comps.push_back(*c);
  }
  return out;
}

std::string op_name(const DiscreteOperad& O, const OpMor& f) {
  std::string s = pointed_name(f.alpha) + "(";
  for (int j = 1; j <= f.alpha.n; ++j) {
    if (j > 1) s += ",";
    s += O.elems[fiber(f.alpha, j).size()][f.comps[j - 1]];
  }
  return s + ")";
}

bool op_active(const OpMor& f) { return classify(f.alpha).active; }

bool op_semi_inert(const DiscreteOperad& O, const OpMor& f) {
  if (!classify(f.alpha).semi_inert) return false;
  for (int j = 1; j <= f.alpha.n; ++j)
    if (fiber(f.alpha, j).size() == 1 &&
        !unary_inverse(O, f.comps[j - 1]))
      return false;
  return true;
}

bool op_atomic(const DiscreteOperad& O, const OpMor& f) {
  return classify(f.alpha).atomic && op_semi_inert(O, f);
}

bool op_equivalence(const DiscreteOperad& O, const OpMor& f) {
  auto c = classify(f.alpha);
  if (!(c.active && c.inert && f.alpha.m == f.alpha.n)) return false;
  for (int u : f.comps)
    if (!unary_inverse(O, u)) return false;
  return true;
}

std::optional<int> unary_inverse(const DiscreteOperad& O, int u) {
  for (int v = 0; v < O.count(1); ++v)
    if (O.gamma(1, u, {{1, v}}) == O.unit() &&
        O.gamma(1, v, {{1, u}}) == O.unit())
      return v;
  return std::nullopt;
}

std::optional<OpMor> op_inverse(const DiscreteOperad& O, const OpMor& f) {
  if (!op_equivalence(O, f)) return std::nullopt;
  OpMor inv{PointedMap{f.alpha.n, f.alpha.m, std::vector<int>(f.alpha.n)},
            std::vector<int>(f.alpha.m)};
  for (int i = 1; i <= f.alpha.m; ++i) {
    int j = f.alpha.img[i - 1];
    inv.alpha.img[j - 1] = i;
    inv.comps[i - 1] = *unary_inverse(O, f.comps[j - 1]);
  }
  return inv;
}

std::vector<OpMor> enumerate_equivalences(const DiscreteOperad& O, int n) {
  std::vector<OpMor> out;
  for (auto& f : enumerate_homs(O, n, n))
    if (op_equivalence(O, f)) out.push_back(f);
  return out;
}

std::vector<std::pair<OpMor, int>> enumerate_atomics(const DiscreteOperad& O,
                                                     int m) {
  std::vector<std::pair<OpMor, int>> out;
  for (auto& f : enumerate_homs(O, m, m + 1))
    if (op_atomic(O, f))
      for (int j = 1; j <= m + 1; ++j)
        if (fiber(f.alpha, j).empty()) out.push_back({f, j});
  return out;
}

std::vector<OpMor> transfer_candidates(const DiscreteOperad& O,
                                       const OpMor& x0, int x_slot,
                                       const OpMor& y0, int y_slot) {
  int m = x0.alpha.m;
  OpMor h{PointedMap{m + 1, m + 1, std::vector<int>(m + 1, 0)},
          std::vector<int>(m + 1, 0)};
  h.alpha.img[x_slot - 1] = y_slot;
  for (int i = 1; i <= m; ++i) {
    int s = x0.alpha.img[i - 1], t = y0.alpha.img[i - 1];
    h.alpha.img[s - 1] = t;
    auto inv = unary_inverse(O, x0.comps[s - 1]);
    auto c = inv ? O.gamma(1, y0.comps[t - 1], {{1, *inv}}) : std::nullopt;
    if (!c) return {};
    h.comps[t - 1] = *c;
  }
  std::vector<OpMor> out;
  for (int u = 0; u < O.count(1); ++u) {
    h.comps[y_slot - 1] = u;
    out.push_back(h);
  }
  return out;
}

long hom_count_by_formula(const DiscreteOperad& O, int m, int n) {
  long total = 0;
  for (auto& a : enumerate_pointed_maps(m, n)) {
    long p = 1;
    for (int j = 1; j <= n; ++j) p *= O.count((int)fiber(a, j).size());
    total += p;
  }
  return total;
}

std::vector<OpMor> enumerate_homs(const DiscreteOperad& O, int m, int n) {
  long est = hom_count_by_formula(O, m, n);
  if (est > kMorphismGuard)
    throw std::runtime_error("enumerate_homs: ~" + std::to_string(est) +
                             " morphisms exceeds the guard");
  std::vector<OpMor> out;
  for (auto& a : enumerate_pointed_maps(m, n)) {
    std::vector<int> sizes(n);
    bool any = true;
    for (int j = 1; j <= n; ++j) {
      sizes[j - 1] = (int)fiber(a, j).size();
      if (O.count(sizes[j - 1]) == 0) any = false;
    }
    if (!any) continue;
    std::vector<int> comps(n, 0);
    while (true) {
      out.push_back({a, comps});
      int j = 0;
      while (j < n && comps[j] + 1 == O.count(sizes[j])) comps[j++] = 0;
      if (j == n) break;
      ++comps[j];
    }
  }
  return out;
}

namespace {

struct CatAssembly {
  CatBuilder b;
  std::vector<OpMor> data;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> idx;

  std::pair<std::pair<int, int>, std::vector<int>> key(const OpMor& f) const {
    std::vector<int> k = f.alpha.img;
    k.push_back(-1);
    k.insert(k.end(), f.comps.begin(), f.comps.end());
    return {{f.alpha.m, f.alpha.n}, k};
  }
};

TotalCategory assemble(const DiscreteOperad& O, int N, bool active_only,
                       const char* name) {
  CatAssembly A;
  A.b = CatBuilder(name + std::string("(") + O.name + ")");
  for (int n = 0; n <= N; ++n) A.b.add_obj("<" + std::to_string(n) + ">");
  long m2 = 0;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) m2 += hom_count_by_formula(O, m, n);
  if (m2 * m2 > kMorphismGuard)
    throw std::runtime_error("total_category: ~" + std::to_string(m2) +
                             " morphisms, composition table exceeds the guard");
  for (int n = 0; n <= N; ++n) {
    A.data.push_back(total_identity(O, n));
    A.idx[A.key(A.data.back())] = n;
  }
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (auto& f : enumerate_homs(O, m, n)) {
        if (active_only && !op_active(f)) continue;
        if (f == total_identity(O, m)) continue;
        int i = A.b.add_mor(op_name(O, f), m, n);
        A.idx[A.key(f)] = i;
        A.data.push_back(f);
      }
  int M = (int)A.data.size();
  for (int g = N + 1; g < M; ++g)
    for (int f = N + 1; f < M; ++f) {
      if (A.data[f].alpha.n != A.data[g].alpha.m) continue;
      auto gf = total_compose(O, A.data[g], A.data[f]);
      if (!gf) throw std::runtime_error("total_category: composition escapes");
      auto it = A.idx.find(A.key(*gf));
      if (it == A.idx.end())
        throw std::runtime_error("total_category: composite not enumerated");
      A.b.set_comp(g, f, it->second);
    }
  TotalCategory T;
  T.cat = A.b.build();
  T.mor_data = std::move(A.data);
  return T;
}

}  // namespace

std::optional<int> TotalCategory::mor_index(const OpMor& f) const {
  for (size_t i = 0; i < mor_data.size(); ++i)
    if (mor_data[i] == f) return (int)i;
  return std::nullopt;
}

TotalCategory total_category(const DiscreteOperad& O, int N) {
  return assemble(O, N, false, "Total");
}

TotalCategory active_category(const DiscreteOperad& O, int N) {
  return assemble(O, N, true, "Act");
}

std::vector<PointedMap> env_objects(const DiscreteOperad&, int n, int N) {
  std::vector<PointedMap> out;
  for (int k = 0; k <= N; ++k)
    for (auto& a : enumerate_pointed_maps(k, n))
      if (classify(a).active) out.push_back(a);
  return out;
}

TwEnvFiber tw_env_fiber(const DiscreteOperad& O, int n, int N) {
  TwEnvFiber T;
  std::vector<std::vector<std::vector<OpMor>>> act(N + 1);
  for (int a = 0; a <= N; ++a) {
    act[a].resize(N + 1);
    for (int b = 0; b <= N; ++b)
      for (auto& f : enumerate_homs(O, a, b))
        if (op_active(f)) act[a][b].push_back(f);
  }
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b)
      for (auto& s : act[a][b])
        for (auto& beta : enumerate_pointed_maps(b, n))
          if (classify(beta).active) T.objs.push_back({s, beta});
  if ((long)T.objs.size() * (long)T.objs.size() > kMorphismGuard)
    throw std::runtime_error("tw_env_fiber: object count exceeds the guard");

  CatBuilder b("TwEnv(" + O.name + ")@<" + std::to_string(n) + ">");
  for (auto& o : T.objs)
    b.add_obj(op_name(O, o.sigma) + "/" + pointed_name(o.beta));
  int nob = (int)T.objs.size();
  for (int o = 0; o < nob; ++o)
    T.mor_uv.push_back({total_identity(O, T.objs[o].sigma.alpha.m),
                        total_identity(O, T.objs[o].sigma.alpha.n)});
  // (src, tgt, u, v) -> morphism index
  std::map<std::tuple<int, int, std::string, std::string>, int> idx;
  for (int o = 0; o < nob; ++o)
    idx[{o, o, op_name(O, T.mor_uv[o].first), op_name(O, T.mor_uv[o].second)}] =
        o;
  for (int x = 0; x < nob; ++x)
    for (int y = 0; y < nob; ++y) {
      auto& [s, beta] = T.objs[x];
      auto& [t, betap] = T.objs[y];
      for (auto& u : act[s.alpha.m][t.alpha.m])
        for (auto& v : act[t.alpha.n][s.alpha.n]) {
          auto tu = total_compose(O, t, u);
          if (!tu) continue;
          auto vtu = total_compose(O, v, *tu);
          if (!vtu || !(*vtu == s)) continue;
          if (!(pointed_compose(beta, v.alpha) == betap)) continue;
          if (x == y && u == total_identity(O, s.alpha.m) &&
              v == total_identity(O, s.alpha.n))
            continue;
          int i = b.add_mor(op_name(O, u) + ";" + op_name(O, v), x, y);
          idx[{x, y, op_name(O, u), op_name(O, v)}] = i;
          T.mor_uv.push_back({u, v});
        }
    }
  int M = (int)T.mor_uv.size();
  std::vector<std::pair<int, int>> ends(M);
  for (auto& [k, i] : idx) ends[i] = {std::get<0>(k), std::get<1>(k)};
  for (int g = nob; g < M; ++g)
    for (int f = nob; f < M; ++f) {
      if (ends[f].second != ends[g].first) continue;
      auto u = total_compose(O, T.mor_uv[g].first, T.mor_uv[f].first);
      auto v = total_compose(O, T.mor_uv[f].second, T.mor_uv[g].second);
      if (!u || !v)
        throw std::runtime_error("tw_env_fiber: composition escapes");
      auto it = idx.find(
          {ends[f].first, ends[g].second, op_name(O, *u), op_name(O, *v)});
      if (it == idx.end())
        throw std::runtime_error("tw_env_fiber: composite not enumerated");
      b.set_comp(g, f, it->second);
    }
  T.cat = b.build();
  return T;
}

}  // namespace ssok
