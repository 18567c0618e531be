#include "ssok/twisted.hpp"

#include "ssok/abstract.hpp"

namespace ssok {

TwCat twisted_arrow_cat_full(const FiniteCategory& C) {
  TwCat R;
  CatBuilder b("tw(" + C.name + ")");
  for (auto& m : C.mor) b.add_obj(m.name);
  for (int f = 0; f < C.nmor(); ++f)
    for (int g = 0; g < C.nmor(); ++g)
      for (int a = 0; a < C.nmor(); ++a) {
        if (C.mor[a].src != C.mor[f].src || C.mor[a].tgt != C.mor[g].src)
          continue;
        for (int bb = 0; bb < C.nmor(); ++bb) {
          if (C.mor[bb].src != C.mor[g].tgt || C.mor[bb].tgt != C.mor[f].tgt)
            continue;
          if (C.compose(bb, C.compose(g, a)) != f) continue;
          if (f == g && C.is_identity(a) && C.is_identity(bb)) {
            R.arrow[{f, g, a, bb}] = f;  // identity of object f
            continue;
          }
          R.arrow[{f, g, a, bb}] =
              b.add_mor("(" + C.mor[a].name + ";" + C.mor[bb].name + ")", f, g);
        }
      }
  for (auto& [k1, m1] : R.arrow)
    for (auto& [k2, m2] : R.arrow) {
      auto [f1, g1, a1, b1] = k1;
      auto [f2, g2, a2, b2] = k2;
      if (g1 != f2) continue;
      b.set_comp(m2, m1,
                 R.arrow.at({f1, g2, C.compose(a2, a1), C.compose(b1, b2)}));
    }
  R.cat = b.build();
  return R;
}

FiniteCategory twisted_arrow_cat(const FiniteCategory& C) {
  return twisted_arrow_cat_full(C).cat;
}

TwResult tw_full(const SimplicialSet& X, int d) {
  std::vector<std::vector<SimplexTerm>> sims(d + 1);
  std::vector<std::map<SimplexTerm, int>> idx(d + 1);
  for (int k = 0; k <= d; ++k) {
    sims[k] = all_simplices(X, 2 * k + 1);
    for (int i = 0; i < (int)sims[k].size(); ++i) idx[k][sims[k][i]] = i;
  }
  AbstractComplex A;
  A.top = d;
  for (auto& s : sims) A.counts.push_back((int)s.size());
  A.face = [&](int k, int i, int j) {
    return idx[k - 1].at(
        act(X, sims[k][i], shape_map(PieceShape::JoinOp, delta(j, k), k)));
  };
  A.deg = [&](int k, int i, int j) {
    return idx[k + 1].at(
        act(X, sims[k][i], shape_map(PieceShape::JoinOp, sigma(j, k), k)));
  };
  A.name = [&](int k, int i) {
    const SimplexTerm& t = sims[k][i];
    std::string s = X.cells[t.nd].name;
    if (!t.nondeg()) {
      s += "^";
      for (int w : deg_word_of(t.sur)) s += std::to_string(w);
    }
    return s;
  };
  AbstractBuild B = build_from_abstract(A);
  TwResult R;
  R.sset = std::move(B.sset);
  R.x_simplex.assign(R.sset.cells.size(), {});
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i < (int)sims[k].size(); ++i) {
      const SimplexTerm& t = B.term_of[k][i];
      if (t.nondeg() && t.dim() == k) R.x_simplex[t.nd] = sims[k][i];
    }
  return R;
}

SimplicialSet tw_simplicial(const SimplicialSet& X, int d) {
  return tw_full(X, d).sset;
}

SimplicialMap tw_nerve_compare(const FiniteCategory& C, int d) {
  NerveResult NC = nerve_full(C, 2 * d + 1);
  TwResult T = tw_full(NC.sset, d);
  TwCat TW = twisted_arrow_cat_full(C);
  NerveResult NT = nerve_full(TW.cat, d);

  std::vector<SimplexTerm> img;
  for (int c = 0; c < (int)T.sset.cells.size(); ++c) {
    int k = T.sset.cells[c].dim;
    MorChain ch = NC.chain_of_term(C, T.x_simplex[c]);
    const std::vector<int>& ms = ch.second;  // length 2k+1
    // f_j: composite of positions j .. 2k-j (0-based)
    std::vector<int> f(k + 1);
    for (int j = 0; j <= k; ++j) {
      int m = ms[j];
      for (int i = j + 1; i <= 2 * k - j; ++i) m = C.compose(ms[i], m);
      f[j] = m;
    }
    MorChain out{f[0], {}};
    for (int j = 1; j <= k; ++j)
      out.second.push_back(TW.arrow.at({f[j - 1], f[j], ms[j - 1], ms[2 * k + 1 - j]}));
    img.push_back(NT.chain_term(out));
  }
  return make_map(T.sset, NT.sset, std::move(img));
}

}  // namespace ssok
