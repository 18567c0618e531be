#include "ssok/ops.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ssok/build.hpp"

namespace ssok {

// ---------- join ----------

SimplexTerm JoinResult::pair_term(const SimplexTerm& ta,
                                  const SimplexTerm& tb) const {
  if (ta.nd < 0) return SimplexTerm{tb.sur, from_b[tb.nd]};
  if (tb.nd < 0) return SimplexTerm{ta.sur, from_a[ta.nd]};
  int pa = ta.sur.empty() ? -1 : ta.sur.back();
  Ord sur = ta.sur;
  for (int v : tb.sur) sur.push_back(pa + 1 + v);
  return SimplexTerm{sur, from_pair[ta.nd][tb.nd]};
}

SimplicialMap JoinResult::incl_a(const SimplicialSet& A) const {
  std::vector<SimplexTerm> img;
  for (int a = 0; a < (int)A.cells.size(); ++a)
    img.push_back(SimplexTerm{identity_map(A.cells[a].dim), from_a[a]});
  return make_map(A, sset, img);
}

SimplicialMap JoinResult::incl_b(const SimplicialSet& B) const {
  std::vector<SimplexTerm> img;
  for (int b = 0; b < (int)B.cells.size(); ++b)
    img.push_back(SimplexTerm{identity_map(B.cells[b].dim), from_b[b]});
  return make_map(B, sset, img);
}

JoinResult join(const SimplicialSet& A, const SimplicialSet& B) {
  JoinResult R;
  R.from_a.assign(A.cells.size(), -1);
  R.from_b.assign(B.cells.size(), -1);
  R.from_pair.assign(A.cells.size(), std::vector<int>(B.cells.size(), -1));
  int top = A.dim() + B.dim() + 1;
  for (int d = 0; d <= top; ++d) {
    for (int a = 0; a < (int)A.cells.size(); ++a) {
      if (A.cells[a].dim != d) continue;
      std::vector<SimplexTerm> faces;
      for (auto& f : A.cells[a].faces)
        faces.push_back(SimplexTerm{f.sur, R.from_a[f.nd]});
      R.from_a[a] = R.sset.add_cell(A.cells[a].name, d, faces);
    }
    for (int b = 0; b < (int)B.cells.size(); ++b) {
      if (B.cells[b].dim != d) continue;
      std::vector<SimplexTerm> faces;
      for (auto& f : B.cells[b].faces)
        faces.push_back(SimplexTerm{f.sur, R.from_b[f.nd]});
      R.from_b[b] = R.sset.add_cell(B.cells[b].name, d, faces);
    }
    for (int a = 0; a < (int)A.cells.size(); ++a) {
      int p = A.cells[a].dim;
      for (int b = 0; b < (int)B.cells.size(); ++b) {
        int q = B.cells[b].dim;
        if (p + q + 1 != d) continue;
        std::vector<SimplexTerm> faces;
        for (int i = 0; i <= d; ++i) {
          if (i <= p) {
            if (p == 0) {
              faces.push_back(SimplexTerm{identity_map(q), R.from_b[b]});
            } else {
              SimplexTerm ta = A.cells[a].faces[i];
              int pa = A.cells[ta.nd].dim;
              Ord sur = ta.sur;
              for (int v = 0; v <= q; ++v) sur.push_back(pa + 1 + v);
              faces.push_back(SimplexTerm{sur, R.from_pair[ta.nd][b]});
            }
          } else {
            int j = i - p - 1;
            if (q == 0) {
              faces.push_back(SimplexTerm{identity_map(p), R.from_a[a]});
            } else {
              SimplexTerm tb = B.cells[b].faces[j];
              Ord sur = identity_map(p);
              for (int v : tb.sur) sur.push_back(p + 1 + v);
              faces.push_back(SimplexTerm{sur, R.from_pair[a][tb.nd]});
            }
          }
        }
        R.from_pair[a][b] =
            R.sset.add_cell(A.cells[a].name + "*" + B.cells[b].name, d, faces);
      }
    }
  }
  for (int e : A.marked) R.sset.marked.insert(R.from_a[e]);
  for (int e : B.marked) R.sset.marked.insert(R.from_b[e]);
  return R;
}

// ---------- product ----------

SimplexTerm ProductResult::pair_term(const SimplexTerm& ta,
                                     const SimplexTerm& tb) const {
  int k = ta.dim();
  Ord rho(k + 1), f2, g2;
  for (int i = 0; i <= k; ++i) {
    if (i > 0 && ta.sur[i] == ta.sur[i - 1] && tb.sur[i] == tb.sur[i - 1]) {
      rho[i] = rho[i - 1];
    } else {
      f2.push_back(ta.sur[i]);
      g2.push_back(tb.sur[i]);
      rho[i] = (int)f2.size() - 1;
    }
  }
  return SimplexTerm{rho, index.at(std::make_tuple(ta.nd, tb.nd, f2, g2))};
}

SimplicialMap ProductResult::proj_a(const SimplicialSet& A) const {
  std::vector<SimplexTerm> img = comp_a;
  return make_map(sset, A, img);
}

SimplicialMap ProductResult::proj_b(const SimplicialSet& B) const {
  std::vector<SimplexTerm> img = comp_b;
  return make_map(sset, B, img);
}

ProductResult product(const SimplicialSet& A, const SimplicialSet& B) {
  ProductResult R;
  // enumerate jointly injective surjection pairs onto [p] x [q] of length n
  auto paths = [](int p, int q, int n) {
    std::vector<std::pair<Ord, Ord>> out;
    Ord f{0}, g{0};
    std::function<void()> go = [&]() {
      int x = f.back(), y = g.back();
      if (x == p && y == q) {
        out.push_back({f, g});
        return;
      }
      if (x < p) {
        f.push_back(x + 1);
        g.push_back(y);
        go();
        f.pop_back();
        g.pop_back();
      }
      if (y < q) {
        f.push_back(x);
        g.push_back(y + 1);
        go();
        f.pop_back();
        g.pop_back();
      }
      if (x < p && y < q) {
        f.push_back(x + 1);
        g.push_back(y + 1);
        go();
        f.pop_back();
        g.pop_back();
      }
    };
    go();
    std::vector<std::pair<Ord, Ord>> sel;
    for (auto& pr : out)
      if ((int)pr.first.size() == n + 1) sel.push_back(pr);
    return sel;
  };
  int top = A.dim() + B.dim();
  for (int n = 0; n <= top; ++n) {
    for (int a = 0; a < (int)A.cells.size(); ++a) {
      int p = A.cells[a].dim;
      for (int b = 0; b < (int)B.cells.size(); ++b) {
        int q = B.cells[b].dim;
        if (n < std::max(p, q) || n > p + q) continue;
        for (auto& [f, g] : paths(p, q, n)) {
          std::string path;
          for (int i = 1; i <= n; ++i) {
            bool r = f[i] > f[i - 1], u = g[i] > g[i - 1];
            path += (r && u) ? 'd' : (r ? 'r' : 'u');
          }
          std::string name =
              "(" + A.cells[a].name + "," + B.cells[b].name + ")" + path;
          std::vector<SimplexTerm> faces;
          if (n > 0) {
            for (int i = 0; i <= n; ++i) {
              SimplexTerm ta = act(A, SimplexTerm{f, a}, delta(i, n));
              SimplexTerm tb = act(B, SimplexTerm{g, b}, delta(i, n));
              faces.push_back(R.pair_term(ta, tb));
            }
          }
          int id = R.sset.add_cell(name, n, faces);
          R.index[std::make_tuple(a, b, f, g)] = id;
          R.comp_a.push_back(SimplexTerm{f, a});
          R.comp_b.push_back(SimplexTerm{g, b});
        }
      }
    }
  }
  return R;
}

// ---------- pushout ----------

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(*f.src == *g.src))
    throw std::invalid_argument("pushout: maps have different sources");
  if (!is_mono(f)) throw std::invalid_argument("pushout: f is not a monomorphism");
  const SimplicialSet& A = *f.src;
  const SimplicialSet& B = *f.tgt;
  const SimplicialSet& C = *g.tgt;
  std::vector<int> pre(B.cells.size(), -1);  // B cell -> A cell in f-image
  for (int a = 0; a < (int)A.cells.size(); ++a) pre[f.img[a].nd] = a;

  PushoutResult R;
  std::vector<int> idB(B.cells.size(), -1), idC(C.cells.size(), -1);
  int top = std::max(B.dim(), C.dim());
  for (int d = 0; d <= top; ++d) {
    for (int c = 0; c < (int)C.cells.size(); ++c) {
      if (C.cells[c].dim != d) continue;
      std::vector<SimplexTerm> faces;
      for (auto& t : C.cells[c].faces)
        faces.push_back(SimplexTerm{t.sur, idC[t.nd]});
      idC[c] = R.sset.add_cell(C.cells[c].name, d, faces);
    }
    for (int b = 0; b < (int)B.cells.size(); ++b) {
      if (B.cells[b].dim != d || pre[b] >= 0) continue;
      std::vector<SimplexTerm> faces;
      for (auto& t : B.cells[b].faces) {
        if (pre[t.nd] < 0) {
          faces.push_back(SimplexTerm{t.sur, idB[t.nd]});
        } else {
          SimplexTerm gi = g.img[pre[t.nd]];
          faces.push_back(SimplexTerm{comp(gi.sur, t.sur), idC[gi.nd]});
        }
      }
      idB[b] = R.sset.add_cell(B.cells[b].name, d, faces);
    }
  }
  for (int e : C.marked) R.sset.marked.insert(idC[e]);
  for (int e : B.marked) {
    if (pre[e] < 0) {
      R.sset.marked.insert(idB[e]);
    } else {
      SimplexTerm gi = g.img[pre[e]];
      if (gi.nondeg()) R.sset.marked.insert(idC[gi.nd]);
    }
  }
  std::vector<SimplexTerm> imgB, imgC;
  for (int b = 0; b < (int)B.cells.size(); ++b) {
    if (pre[b] < 0) {
      imgB.push_back(SimplexTerm{identity_map(B.cells[b].dim), idB[b]});
    } else {
      SimplexTerm gi = g.img[pre[b]];
      imgB.push_back(SimplexTerm{gi.sur, idC[gi.nd]});
    }
  }
  for (int c = 0; c < (int)C.cells.size(); ++c)
    imgC.push_back(SimplexTerm{identity_map(C.cells[c].dim), idC[c]});
  auto pp = std::make_shared<const SimplicialSet>(R.sset);
  R.from_b = SimplicialMap{f.tgt, pp, imgB};
  R.from_c = SimplicialMap{g.tgt, pp, imgC};
  return R;
}

// ---------- opposite / cones ----------

SimplicialSet opposite(const SimplicialSet& A) {
  SimplicialSet R;
  for (int x = 0; x < (int)A.cells.size(); ++x) {
    int d = A.cells[x].dim;
    std::vector<SimplexTerm> faces;
    for (int i = 0; i <= d && d > 0; ++i) {
      const SimplexTerm& t = A.cells[x].faces[d - i];
      int m = A.cells[t.nd].dim;
      Ord sur(t.sur.size());
      for (size_t j = 0; j < t.sur.size(); ++j)
        sur[j] = m - t.sur[t.sur.size() - 1 - j];
      faces.push_back(SimplexTerm{sur, t.nd});
    }
    R.add_cell(A.cells[x].name, d, faces);
  }
  R.marked = A.marked;
  return R;
}

JoinResult cone_left(const SimplicialSet& K) {
  return join(standard_simplex(0, {"<"}), K);
}

JoinResult cone_right(const SimplicialSet& K) {
  return join(K, standard_simplex(0, {">"}));
}

}  // namespace ssok
