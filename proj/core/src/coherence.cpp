#include "ssok/coherence.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ssok {

namespace {

// component labels of the objects of an ext graph
std::vector<int> components(const ExtGraph& G) {
  int nob = (int)G.objs.size();
  std::vector<int> parent(nob);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [x, y] : G.edges) parent[find(x)] = find(y);
  std::vector<int> label(nob);
  for (int o = 0; o < nob; ++o) label[o] = find(o);
  return label;
}

int count_components(const std::vector<int>& label) {
  int c = 0;
  for (size_t o = 0; o < label.size(); ++o) c += (label[o] == (int)o);
  return c;
}

// extend q: <j> -> <t> missing slot s to <j+1> -> <t> by sending the new
// input j+1 to s with a unary unit
OpMor add_unit_input(const DiscreteOperad& O, const OpMor& q, int s) {
  OpMor e = q;
  e.alpha.m += 1;
  e.alpha.img.push_back(s);
  e.comps[s - 1] = O.unit();
  return e;
}

OpMor compose3(const DiscreteOperad& O, const OpMor& a, const OpMor& b,
               const OpMor& c) {
  auto bc = total_compose(O, b, c);
  auto r = bc ? total_compose(O, a, *bc) : std::nullopt;
  if (!r) throw std::runtime_error("coherence_probe: composition escapes");
  return *r;
}

}  // namespace

CoherenceReport coherence_probe(const DiscreteOperad& O, const OpMor& f,
                                const OpMor& g) {
  ExtCache cache;
  return coherence_probe(O, f, g, cache);
}

CoherenceReport coherence_probe(const DiscreteOperad& O, const OpMor& f,
                                const OpMor& g, ExtCache& cache) {
  CoherenceReport R;
  if (!op_active(f) || !op_active(g) || f.alpha.n != g.alpha.m) {
    R.detail = "f, g must be composable active morphisms";
    return R;
  }
  int j = f.alpha.m, k = g.alpha.m, l = g.alpha.n;
  auto gf = total_compose(O, g, f);
  if (!gf || j + 1 > O.arity_bound || k + 1 > O.arity_bound) {
    R.detail = "arity bound exceeded";
    return R;
  }

  auto cached = [&](const OpMor& s) -> const ExtGraph& {
    auto key = op_name(O, s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ext_graph(O, s)).first;
    return it->second;
  };
  const auto& Eid = cached(total_identity(O, k));
  const auto& Eg = cached(g);
  const auto& Ef = cached(f);
  const auto& Egf = cached(*gf);
  auto cid = components(Eid);
  auto cg = components(Eg);
  auto cf = components(Ef);
  auto cgf = components(Egf);
  R.pi0_id = count_components(cid);
  R.pi0_g = count_components(cg);
  R.pi0_f = count_components(cf);
  R.pi0_gf = count_components(cgf);

  // the canonical atomic extension of <j>: append a last input
  OpMor x0{pointed_inclusion(j, j + 1), std::vector<int>(j + 1, O.unit())};
  x0.comps[j] = 0;  // nullary unit on the appended slot
  int x0_slot = j + 1;

  auto a = [&](const ExtObj& o) -> ExtObj {
    // (y0, u, psi) -> (y0, g o psi^-1 o u, id)
    return {o.g0, compose3(O, g, *op_inverse(O, o.g1), o.fp),
            total_identity(O, l), o.new_slot};
  };
  auto bmap = [&](const ExtObj& o) -> ExtObj {
    auto y0f = total_compose(O, o.g0, f);
    auto fp = total_compose(O, o.fp, add_unit_input(O, *y0f, o.new_slot));
    return {x0, *fp, o.g1, x0_slot};
  };
  auto c = [&](const ExtObj& o) -> ExtObj {
    auto g0f = total_compose(O, o.g0, f);
    auto fp = total_compose(O, o.fp, add_unit_input(O, *g0f, o.new_slot));
    return {x0, *fp, o.g1, x0_slot};
  };
  auto d = [&](const ExtObj& o) -> ExtObj {
    return {o.g0, compose3(O, g, *op_inverse(O, o.g1), o.fp),
            total_identity(O, l), o.new_slot};
  };

  auto image = [&](const ExtGraph& src, const ExtGraph& tgt, auto&& map,
                   const char* nm) {
    std::vector<int> out(src.objs.size());
    for (size_t i = 0; i < src.objs.size(); ++i) {
      auto ix = tgt.find(map(src.objs[i]));
      if (!ix)
        throw std::runtime_error(std::string("coherence_probe: map ") + nm +
                                 " leaves the target category");
      out[i] = *ix;
    }
    return out;
  };
  std::vector<int> ia, ib, ic, id_;
  try {
    ia = image(Eid, Eg, a, "a");
    ib = image(Eid, Ef, bmap, "b");
    ic = image(Eg, Egf, c, "c");
    id_ = image(Ef, Egf, d, "d");
  } catch (const std::exception& e) {
    R.detail = e.what();
    return R;
  }

  R.square_commutes = true;
  for (size_t i = 0; i < Eid.objs.size(); ++i)
    if (ic[ia[i]] != id_[ib[i]]) R.square_commutes = false;

  auto descends = [&](const ExtGraph& src, const std::vector<int>& img,
                      const std::vector<int>& tlab) {
    for (auto& [x, y] : src.edges)
      if (tlab[img[x]] != tlab[img[y]]) return false;
    return true;
  };
  R.maps_descend = descends(Eid, ia, cg) && descends(Eid, ib, cf) &&
                   descends(Eg, ic, cgf) && descends(Ef, id_, cgf);

  // pushout of pi0 sets: glue pi0(Eg) and pi0(Ef) along pi0(Eid), compare
  // with pi0(Egf)
  int ng = (int)Eg.objs.size(), nf = (int)Ef.objs.size();
  std::vector<int> parent(ng + nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (auto& [x, y] : Eg.edges) unite(x, y);
  for (auto& [x, y] : Ef.edges) unite(ng + x, ng + y);
  for (size_t i = 0; i < Eid.objs.size(); ++i) unite(ia[i], ng + ib[i]);

  // induced map to pi0(Egf) must be well defined and bijective
  std::map<int, int> to_gf;
  bool well = true;
  for (int o = 0; o < ng; ++o) {
    auto [it, fresh] = to_gf.insert({find(o), cgf[ic[o]]});
    if (!fresh && it->second != cgf[ic[o]]) well = false;
  }
  for (int o = 0; o < nf; ++o) {
    auto [it, fresh] = to_gf.insert({find(ng + o), cgf[id_[o]]});
    if (!fresh && it->second != cgf[id_[o]]) well = false;
  }
  std::set<int> hit, all;
  for (auto& [root, lab] : to_gf) hit.insert(lab);
  for (int o = 0; o < (int)Egf.objs.size(); ++o) all.insert(cgf[o]);
  bool surj = hit == all;
  bool inj = (int)to_gf.size() == (int)hit.size();
  R.pushout = well && surj && inj;
  R.ok = R.square_commutes && R.maps_descend && R.pushout;
  if (!R.ok)
    R.detail = std::string(R.square_commutes ? "" : "square does not commute; ") +
               (R.maps_descend ? "" : "maps do not descend to pi0; ") +
               (R.pushout ? "" : "pi0 square is not a pushout");
  return R;
}

}  // namespace ssok
