#include "ssok/shapes.hpp"

#include <stdexcept>

#include "ssok/build.hpp"

namespace ssok {

namespace {

std::vector<std::string> vertex_labels(const SimplicialSet& S) {
  std::vector<std::string> out(S.cells.size());
  for (int c = 0; c < (int)S.cells.size(); ++c)
    if (S.cells[c].dim == 0) out[c] = S.cells[c].name;
  return out;
}

// mark the edges lying in the second copy of each piece
std::vector<int> bar_edges(const ElColim& E) {
  std::vector<int> out;
  for (int c = 0; c < (int)E.colim.sset.cells.size(); ++c) {
    if (E.colim.sset.cells[c].dim != 1) continue;
    auto [x, t] = E.cell_rep(c);
    if (t[0] >= x.dim() + 1) out.push_back(c);
  }
  return out;
}

}  // namespace

ZigzagShapes zigzag_shapes(const SimplicialSet& K) {
  ZigzagShapes Z;
  auto D1 = standard_simplex(1);
  int v0 = 0, v1 = 1;  // vertex ids of Delta^1
  auto coneK = cone_left(K);
  const SimplicialSet& Kc = coneK.sset;
  int kc_cone = coneK.from_a.empty() ? -1 : coneK.from_a[0];
  std::vector<int> k_of_kc(Kc.cells.size(), -1);
  for (int b = 0; b < (int)coneK.from_b.size(); ++b)
    k_of_kc[coneK.from_b[b]] = b;

  // F0 = K^< x Delta^1, edges over 1 marked
  auto PR = product(Kc, D1);
  auto d1_const = [&](const SimplexTerm& tb, int v) {
    for (int i = 0; i <= tb.dim(); ++i)
      if (act(D1, tb, Ord{i}).nd != v) return false;
    return true;
  };
  {
    std::vector<int> marks;
    for (int c = 0; c < (int)PR.sset.cells.size(); ++c)
      if (PR.sset.cells[c].dim == 1 && d1_const(PR.comp_b[c], v1))
        marks.push_back(c);
    Z.f0.kind = ShapeKind::F0;
    Z.f0.sset = mark_edge_ids(PR.sset, marks);
    Z.f0.vertex_label.assign(PR.sset.cells.size(), "");
    for (int c = 0; c < (int)PR.sset.cells.size(); ++c)
      if (PR.sset.cells[c].dim == 0)
        Z.f0.vertex_label[c] = Kc.cells[PR.comp_a[c].nd].name +
                               (PR.comp_b[c].nd == v1 ? "~" : "");
  }

  // F1 and F3: glued joins over the cone
  auto E1 = el_colim(Kc, PieceShape::JoinSame);
  auto E3 = el_colim(Kc, PieceShape::JoinOp);
  Z.f1.kind = ShapeKind::F1;
  Z.f1.sset = mark_edge_ids(E1.colim.sset, bar_edges(E1));
  Z.f1.vertex_label = vertex_labels(Z.f1.sset);
  Z.f3.kind = ShapeKind::F3;
  Z.f3.sset = mark_edge_ids(E3.colim.sset, bar_edges(E3));
  Z.f3.vertex_label = vertex_labels(Z.f3.sset);

  // F2 = (K^<)^>, flat
  auto J2 = cone_right(Kc);
  Z.f2.kind = ShapeKind::F2;
  Z.f2.sset = flat(J2.sset);
  Z.f2.vertex_label = vertex_labels(Z.f2.sset);

  // i0: a product cell with components (ta, tb) becomes the piece simplex of
  // the core of ta whose vertices sit in copy tb
  {
    std::vector<SimplexTerm> img;
    for (int c = 0; c < (int)PR.sset.cells.size(); ++c) {
      const SimplexTerm& ta = PR.comp_a[c];
      const SimplexTerm& tb = PR.comp_b[c];
      int n = ta.dim(), m = Kc.cells[ta.nd].dim;
      Ord w(n + 1);
      for (int i = 0; i <= n; ++i) {
        bool bar = act(D1, tb, Ord{i}).nd == v1;
        w[i] = bar ? m + 1 + ta.sur[i] : ta.sur[i];
      }
      img.push_back(E1.resolve(Kc.term(ta.nd), w));
    }
    Z.i0 = make_map(Z.f0.sset, Z.f1.sset, img);
  }

  // i1 and i2: K^< lands in the first copy, the cone point > on bar(<)
  auto cone_img = [&](const ElColim& E, bool bar_last) {
    std::vector<SimplexTerm> img(J2.sset.cells.size());
    for (int a = 0; a < (int)Kc.cells.size(); ++a) {
      int m = Kc.cells[a].dim;
      img[J2.from_a[a]] = E.resolve(Kc.term(a), identity_map(m));
    }
    img[J2.from_b[0]] = E.resolve(Kc.term(kc_cone), Ord{1});
    for (int a = 0; a < (int)Kc.cells.size(); ++a) {
      int m = Kc.cells[a].dim;
      int cell = J2.from_pair[a][0];
      if (Kc.vertices_of(a)[0] == kc_cone) {
        Ord w = identity_map(m);
        w.push_back(bar_last ? 2 * m + 1 : m + 1);
        img[cell] = E.resolve(Kc.term(a), w);
      } else {
        int ap = coneK.from_pair[0][k_of_kc[a]];  // < * a
        Ord w(m + 2);
        for (int i = 0; i <= m; ++i) w[i] = i + 1;
        w[m + 1] = bar_last ? 2 * (m + 1) + 1 : m + 2;
        img[cell] = E.resolve(Kc.term(ap), w);
      }
    }
    return img;
  };
  Z.i1 = make_map(Z.f2.sset, Z.f1.sset, cone_img(E1, false));
  Z.i2 = make_map(Z.f2.sset, Z.f3.sset, cone_img(E3, true));

  // G: collapse s_*(K x {0}) inside s_*(K x Delta^1)
  auto PK = product(K, D1);
  auto EG = el_colim(PK.sset, PieceShape::JoinOp);
  auto EK = el_colim(K, PieceShape::JoinOp);
  auto pt = standard_simplex(0, {"0"});
  auto EPt = el_colim(pt, PieceShape::JoinOp, {}, K.dim());
  auto j0 = [&](const SimplexTerm& t) {
    return PK.pair_term(t, SimplexTerm{Ord(t.dim() + 1, 0), v0});
  };
  auto s_j0 = el_induced(EK, EG, j0);
  auto s_col = el_induced(EK, EPt, [&](const SimplexTerm& t) {
    return SimplexTerm{Ord(t.dim() + 1, 0), 0};
  });
  std::vector<int> gmarks;
  for (int v = 0; v < (int)K.cells.size(); ++v) {
    if (K.cells[v].dim != 0) continue;
    SimplexTerm edge = PK.pair_term(SimplexTerm{Ord{0, 0}, v}, D1.term(2));
    gmarks.push_back(EG.resolve(edge, Ord{2, 3}).nd);
  }
  s_j0 = make_map(*s_j0.src, mark_edge_ids(EG.colim.sset, gmarks), s_j0.img);
  auto push = pushout(s_j0, s_col);
  Z.g.kind = ShapeKind::G;
  Z.g.sset = push.sset;
  Z.g.vertex_label = vertex_labels(Z.g.sset);

  // p: (k,1) -> k, (i,0) -> <, then s_*; the collapsed part lands on < <~
  auto p_apply = [&](const SimplexTerm& x) -> SimplexTerm {
    int k = x.dim();
    SimplexTerm ta = act(K, PK.comp_a[x.nd], x.sur);
    SimplexTerm tb = act(D1, PK.comp_b[x.nd], x.sur);
    int z = 0;
    while (z <= k && act(D1, tb, Ord{z}).nd == v0) ++z;
    if (z == 0) return SimplexTerm{ta.sur, coneK.from_b[ta.nd]};
    if (z == k + 1) return SimplexTerm{Ord(k + 1, 0), kc_cone};
    Ord rest;
    for (int i = z; i <= k; ++i) rest.push_back(i);
    return coneK.pair_term(SimplexTerm{Ord(z, 0), 0}, act(K, ta, rest));
  };
  auto ptilde = el_induced(EG, E3, p_apply);
  auto p_pt = el_induced(EPt, E3, [&](const SimplexTerm& t) {
    return SimplexTerm{t.sur, kc_cone};
  });
  {
    std::vector<SimplexTerm> img(Z.g.sset.cells.size());
    for (int c = 0; c < (int)EPt.colim.sset.cells.size(); ++c)
      img[push.from_c.img[c].nd] = p_pt.img[c];
    for (int b = 0; b < (int)EG.colim.sset.cells.size(); ++b) {
      const SimplexTerm& t = push.from_b.img[b];
      if (t.nondeg() && is_identity(t.sur)) img[t.nd] = ptilde.img[b];
    }
    Z.p = make_map(Z.g.sset, Z.f3.sset, img);
  }

  // section of p for standard simplices: < -> (0,0), i -> (i,1)
  if (K.total() > 0 && K == standard_simplex(K.dim())) {
    int top = K.total() - 1;
    std::vector<SimplexTerm> img;
    for (int a = 0; a < (int)Kc.cells.size(); ++a) {
      int d = Kc.cells[a].dim;
      auto vs = Kc.vertices_of(a);
      Ord ka(d + 1), ov(d + 1);
      for (int j = 0; j <= d; ++j) {
        if (vs[j] == kc_cone) {
          ka[j] = 0;
          ov[j] = 0;
        } else {
          ka[j] = k_of_kc[vs[j]];
          ov[j] = 1;
        }
      }
      img.push_back(PK.pair_term(act(K, K.term(top), ka), act(D1, D1.term(2), ov)));
    }
    auto etilde = make_map(Kc, PK.sset, img);
    auto e_colim = el_induced(E3, EG, [&](const SimplexTerm& t) {
      return etilde.apply(t);
    });
    Z.e = compose(e_colim, push.from_b);
    Z.e = make_map(Z.f3.sset, Z.g.sset, Z.e.img);
    Z.has_section = true;
  }
  return Z;
}

ShapeDiagram shape(ShapeKind kind, const SimplicialSet& K) {
  auto Z = zigzag_shapes(K);
  switch (kind) {
    case ShapeKind::F0: return Z.f0;
    case ShapeKind::F1: return Z.f1;
    case ShapeKind::F2: return Z.f2;
    case ShapeKind::F3: return Z.f3;
    case ShapeKind::G: return Z.g;
  }
  throw std::invalid_argument("shape: bad kind");
}

SimplicialSet marked_square() {
  auto D1 = standard_simplex(1);
  auto P = product(D1, D1);
  std::vector<int> marks;
  for (int c = 0; c < (int)P.sset.cells.size(); ++c) {
    if (P.sset.cells[c].dim != 1) continue;
    const SimplexTerm& tb = P.comp_b[c];
    if (tb.nondeg()) continue;
    if (tb.nd == 1) marks.push_back(c);  // second coordinate constant 1
  }
  return mark_edge_ids(P.sset, marks);
}

SimplicialMap square_to_triangle() {
  auto D1 = standard_simplex(1);
  auto P = product(D1, D1);
  auto D2 = standard_simplex(2);
  int top = D2.total() - 1;
  std::vector<SimplexTerm> img;
  for (int c = 0; c < (int)P.sset.cells.size(); ++c) {
    int n = P.sset.cells[c].dim;
    const SimplexTerm& ta = P.comp_a[c];
    const SimplexTerm& tb = P.comp_b[c];
    Ord vals(n + 1);
    for (int i = 0; i <= n; ++i)
      vals[i] = act(D1, ta, Ord{i}).nd + act(D1, tb, Ord{i}).nd;
    img.push_back(act(D2, D2.term(top), vals));
  }
  return make_map(marked_square(), D2, img);
}

}  // namespace ssok
