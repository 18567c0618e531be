#include "ssok/colim.hpp"

#include <algorithm>
#include <numeric>

#include "ssok/abstract.hpp"

namespace ssok {

SimplexTerm ColimResult::resolve(int obj, const Ord& t) const {
  int n = (int)t.size() - 1;
  int e = offset[n][obj] + rank.at({n, arity[obj]}).at(t);
  return term_of[n][cls[n][e]];
}

ColimResult colim_std(const StdDiagram& D) {
  ColimResult R;
  R.arity = D.arity;
  for (int a : D.arity) R.top = std::max(R.top, a);
  if (R.top < 0) return R;
  int top = R.top;

  std::map<std::pair<int, int>, std::vector<Ord>> maps;
  for (int n = 0; n <= top; ++n)
    for (int a : D.arity)
      if (!maps.count({n, a})) {
        auto ms = all_monotone(n, a);
        auto& rk = R.rank[{n, a}];
        for (int r = 0; r < (int)ms.size(); ++r) rk[ms[r]] = r;
        maps[{n, a}] = std::move(ms);
      }

  int nobj = (int)D.arity.size();
  R.offset.assign(top + 1, {});
  std::vector<std::vector<int>> uf(top + 1);
  for (int n = 0; n <= top; ++n) {
    int off = 0;
    for (int o = 0; o < nobj; ++o) {
      R.offset[n].push_back(off);
      off += (int)maps[{n, D.arity[o]}].size();
    }
    uf[n].resize(off);
    std::iota(uf[n].begin(), uf[n].end(), 0);
  }
  auto find = [&](int n, int e) {
    while (uf[n][e] != e) e = uf[n][e] = uf[n][uf[n][e]];
    return e;
  };
  for (auto& ar : D.arrows) {
    for (int n = 0; n <= top; ++n) {
      auto& ms = maps[{n, D.arity[ar.src]}];
      auto& rk = R.rank[{n, D.arity[ar.dst]}];
      for (int r = 0; r < (int)ms.size(); ++r) {
        int e1 = R.offset[n][ar.src] + r;
        int e2 = R.offset[n][ar.dst] + rk.at(comp(ar.map, ms[r]));
        int r1 = find(n, e1), r2 = find(n, e2);
        if (r1 != r2) uf[n][std::max(r1, r2)] = std::min(r1, r2);
      }
    }
  }

  // classes, numbered by least element
  R.cls.assign(top + 1, {});
  std::vector<std::vector<std::pair<int, Ord>>> crep(top + 1);
  auto elem_of = [&](int n, int e) -> std::pair<int, Ord> {
    int o = (int)(std::upper_bound(R.offset[n].begin(), R.offset[n].end(), e) -
                  R.offset[n].begin()) - 1;
    return {o, maps[{n, D.arity[o]}][e - R.offset[n][o]]};
  };
  for (int n = 0; n <= top; ++n) {
    R.cls[n].assign(uf[n].size(), -1);
    for (int e = 0; e < (int)uf[n].size(); ++e) {
      int r = find(n, e);
      if (R.cls[n][r] < 0) {
        R.cls[n][r] = (int)crep[n].size();
        crep[n].push_back(elem_of(n, e));
      }
      R.cls[n][e] = R.cls[n][r];
    }
  }

  AbstractComplex A;
  A.top = top;
  for (int n = 0; n <= top; ++n) A.counts.push_back((int)crep[n].size());
  auto class_at = [&](int n, int o, const Ord& t) {
    return R.cls[n][R.offset[n][o] + R.rank.at({n, D.arity[o]}).at(t)];
  };
  A.face = [&](int d, int idx, int i) {
    auto& [o, t] = crep[d][idx];
    return class_at(d - 1, o, comp(t, delta(i, d)));
  };
  A.deg = [&](int d, int idx, int i) {
    auto& [o, t] = crep[d][idx];
    return class_at(d + 1, o, comp(t, sigma(i, d)));
  };
  A.name = [&](int d, int idx) -> std::string {
    auto& [o, t] = crep[d][idx];
    if (D.label) return D.label(o, t);
    std::string s = "o" + std::to_string(o) + "[";
    for (size_t i = 0; i < t.size(); ++i)
      s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]";
  };
  AbstractBuild B = build_from_abstract(A);
  R.sset = std::move(B.sset);
  R.term_of = std::move(B.term_of);
  R.rep.assign(R.sset.cells.size(), {});
  for (int n = 0; n <= top; ++n)
    for (int c = 0; c < (int)crep[n].size(); ++c) {
      const SimplexTerm& t = R.term_of[n][c];
      if (t.nondeg() && t.dim() == n) R.rep[t.nd] = crep[n][c];
    }
  return R;
}

Ord shape_map(PieceShape kind, const Ord& f, int cod_dim) {
  int j = (int)f.size() - 1, k = cod_dim;
  Ord r(2 * j + 2);
  for (int i = 0; i <= j; ++i) {
    r[i] = f[i];
    if (kind == PieceShape::JoinSame)
      r[j + 1 + i] = k + 1 + f[i];
    else
      r[j + 1 + i] = k + 1 + (k - f[j - i]);
  }
  return r;
}

SimplexTerm ElColim::resolve(const SimplexTerm& x, const Ord& t) const {
  return colim.resolve(obj_index.at(x), t);
}

std::pair<SimplexTerm, Ord> ElColim::cell_rep(int nd) const {
  auto& [o, t] = colim.rep[nd];
  return {objects[o], t};
}

ElColim el_colim(
    const SimplicialSet& X, PieceShape kind,
    std::function<std::string(const SimplexTerm&, const Ord&)> label,
    int min_top) {
  ElColim E;
  E.kind = kind;
  int D = std::max(X.dim(), min_top);
  if (X.dim() < 0) return E;
  for (int d = 0; d <= D; ++d)
    for (auto& t : all_simplices(X, d)) {
      E.obj_index[t] = (int)E.objects.size();
      E.objects.push_back(t);
    }
  StdDiagram Dg;
  for (auto& x : E.objects) Dg.arity.push_back(2 * x.dim() + 1);
  for (int o = 0; o < (int)E.objects.size(); ++o) {
    const SimplexTerm& x = E.objects[o];
    int k = x.dim();
    for (int i = 0; i <= k && k >= 1; ++i) {
      SimplexTerm y = act(X, x, delta(i, k));
      Dg.arrows.push_back({E.obj_index.at(y), o, shape_map(kind, delta(i, k), k)});
    }
    for (int i = 0; i <= k && k < D; ++i) {
      SimplexTerm y{comp(x.sur, sigma(i, k)), x.nd};
      Dg.arrows.push_back({E.obj_index.at(y), o, shape_map(kind, sigma(i, k), k)});
    }
  }
  auto vertex_name = [&X, kind](const SimplexTerm& x, int pos) {
    int k = x.dim();
    bool bar = pos > k;
    int j = !bar ? pos
                 : (kind == PieceShape::JoinSame ? pos - k - 1 : 2 * k + 1 - pos);
    std::string nm = X.cells[act(X, x, Ord{j}).nd].name;
    return bar ? nm + "~" : nm;
  };
  Dg.label = [&E, label, vertex_name](int o, const Ord& t) {
    const SimplexTerm& x = E.objects[o];
    if (label) return label(x, t);
    std::string s;
    for (size_t i = 0; i < t.size(); ++i)
      s += (i ? "," : "") + vertex_name(x, t[i]);
    return s;
  };
  E.colim = colim_std(Dg);
  return E;
}

SimplicialMap el_induced(const ElColim& EX, const ElColim& EY,
                         std::function<SimplexTerm(const SimplexTerm&)> f) {
  std::vector<SimplexTerm> img;
  for (int c = 0; c < (int)EX.colim.sset.cells.size(); ++c) {
    auto [x, t] = EX.cell_rep(c);
    img.push_back(EY.resolve(f(x), t));
  }
  return make_map(EX.colim.sset, EY.colim.sset, std::move(img));
}

}  // namespace ssok
