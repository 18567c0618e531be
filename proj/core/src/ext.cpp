#include "ssok/ext.hpp"

#include <map>
#include <stdexcept>

namespace ssok {

namespace {

ExtCategory build_ext(const DiscreteOperad& O, const OpMor& sigma,
                      bool restrict_compatible) {
  int m = sigma.alpha.m, n = sigma.alpha.n;
  ExtCategory E;
  E.objs = ext_objects(O, sigma);

  CatBuilder b((restrict_compatible ? "Ext(" : "ExtHA(") + op_name(O, sigma) +
               ")");
  for (auto& o : E.objs)
    b.add_obj(op_name(O, o.g0) + ";" + op_name(O, o.fp) + ";" +
              op_name(O, o.g1));
  int nob = (int)E.objs.size();
  for (int o = 0; o < nob; ++o)
    E.mor_h.push_back(
        {total_identity(O, m + 1), total_identity(O, n)});
  std::map<std::tuple<int, int, std::string>, int> idx;
  for (int o = 0; o < nob; ++o)
    idx[{o, o, op_name(O, E.mor_h[o].first)}] = o;

  // in the compatible case h0 is pinned down by the two atomics up to its
  // unary component on the new slot; the HA variant scans all endomorphisms
  std::vector<OpMor> homs;
  if (!restrict_compatible) homs = enumerate_homs(O, m + 1, m + 1);
  std::vector<std::pair<int, int>> ends;
  ends.resize(nob);
  for (int o = 0; o < nob; ++o) ends[o] = {o, o};
  for (int x = 0; x < nob; ++x)
    for (int y = 0; y < nob; ++y) {
      const ExtObj& X = E.objs[x];
      const ExtObj& Y = E.objs[y];
      // h1 is forced: it must satisfy h1 o g1 = g1' with g1 invertible
      auto h1 = total_compose(O, Y.g1, *op_inverse(O, X.g1));
      std::vector<OpMor> tc;
      if (restrict_compatible)
        tc = transfer_candidates(O, X.g0, X.new_slot, Y.g0, Y.new_slot);
      const std::vector<OpMor>& cands = restrict_compatible ? tc : homs;
      for (auto& h0 : cands) {
        if (restrict_compatible &&
            h0.alpha.img[X.new_slot - 1] != Y.new_slot)
          continue;
        if (!(total_compose(O, h0, X.g0) == std::optional<OpMor>(Y.g0)))
          continue;
        if (!(total_compose(O, Y.fp, h0) == total_compose(O, *h1, X.fp)))
          continue;
        if (x == y && h0 == total_identity(O, m + 1)) continue;
        int i = b.add_mor(op_name(O, h0) + ";" + op_name(O, *h1), x, y);
        idx[{x, y, op_name(O, h0)}] = i;
        E.mor_h.push_back({h0, *h1});
        ends.push_back({x, y});
        if ((long)E.mor_h.size() > kMorphismGuard)
          throw std::runtime_error("ext_category: morphism guard exceeded");
      }
    }
  int M = (int)E.mor_h.size();
  for (int g = nob; g < M; ++g)
    for (int f = nob; f < M; ++f) {
      if (ends[f].second != ends[g].first) continue;
      auto h0 = total_compose(O, E.mor_h[g].first, E.mor_h[f].first);
      if (!h0) throw std::runtime_error("ext_category: composition escapes");
      auto it = idx.find({ends[f].first, ends[g].second, op_name(O, *h0)});
      if (it == idx.end())
        throw std::runtime_error("ext_category: composite not enumerated");
      b.set_comp(g, f, it->second);
    }
  E.cat = b.build();
  return E;
}

}  // namespace

std::vector<ExtObj> ext_objects(const DiscreteOperad& O, const OpMor& sigma) {
  if (!op_valid(O, sigma) || !op_active(sigma))
    throw std::invalid_argument("ext_category: sigma must be active");
  int m = sigma.alpha.m, n = sigma.alpha.n;
  if (m + 1 > O.arity_bound)
    throw std::invalid_argument("ext_category: arity bound exceeded");

  std::vector<ExtObj> objs;
  auto equivs = enumerate_equivalences(O, n);
  for (auto& [g0, slot] : enumerate_atomics(O, m))
    for (auto& fp : enumerate_homs(O, m + 1, n)) {
      if (!op_active(fp)) continue;
      auto fg = total_compose(O, fp, g0);
      if (!fg) continue;
      for (auto& g1 : equivs)
        if (total_compose(O, g1, sigma) == fg)
          objs.push_back({g0, fp, g1, slot});
    }
  return objs;
}

namespace {

void flatten(const OpMor& f, std::vector<int>& key) {
  key.push_back(f.alpha.m);
  key.push_back(f.alpha.n);
  key.insert(key.end(), f.alpha.img.begin(), f.alpha.img.end());
  key.insert(key.end(), f.comps.begin(), f.comps.end());
}

std::vector<int> ext_key(const ExtObj& o) {
  std::vector<int> key{o.new_slot};
  flatten(o.g0, key);
  flatten(o.fp, key);
  flatten(o.g1, key);
  return key;
}

}  // namespace

std::optional<int> ExtGraph::find(const ExtObj& o) const {
  auto it = index.find(ext_key(o));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ExtGraph ext_graph(const DiscreteOperad& O, const OpMor& sigma) {
  ExtGraph G;
  G.objs = ext_objects(O, sigma);
  int nob = (int)G.objs.size();
  for (int o = 0; o < nob; ++o) G.index[ext_key(G.objs[o])] = o;
  for (int x = 0; x < nob; ++x)
    for (int y = 0; y < nob; ++y) {
      if (x == y) continue;
      const ExtObj& X = G.objs[x];
      const ExtObj& Y = G.objs[y];
      auto h1 = total_compose(O, Y.g1, *op_inverse(O, X.g1));
      for (auto& h0 :
           transfer_candidates(O, X.g0, X.new_slot, Y.g0, Y.new_slot)) {
        if (h0.alpha.img[X.new_slot - 1] != Y.new_slot) continue;
        if (!(total_compose(O, h0, X.g0) == std::optional<OpMor>(Y.g0)))
          continue;
        if (!(total_compose(O, Y.fp, h0) == total_compose(O, *h1, X.fp)))
          continue;
        G.edges.push_back({x, y});
        break;
      }
    }
  return G;
}

int pi0_ext(const DiscreteOperad& O, const OpMor& sigma) {
  auto G = ext_graph(O, sigma);
  int nob = (int)G.objs.size();
  std::vector<int> parent(nob);
  for (int o = 0; o < nob; ++o) parent[o] = o;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto& [x, y] : G.edges) parent[find(x)] = find(y);
  int c = 0;
  for (int o = 0; o < nob; ++o) c += (find(o) == o);
  return c;
}

std::optional<int> ExtCategory::obj_index(const ExtObj& o) const {
  for (size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == o) return (int)i;
  return std::nullopt;
}

ExtCategory ext_category(const DiscreteOperad& O, const OpMor& sigma) {
  return build_ext(O, sigma, true);
}

ExtCategory ext_HA_category(const DiscreteOperad& O, const OpMor& sigma) {
  return build_ext(O, sigma, false);
}

}  // namespace ssok
