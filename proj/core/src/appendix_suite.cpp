#include "ssok/appendix_suite.hpp"

#include "ssok/build.hpp"
#include "ssok/ops.hpp"
#include "ssok/pushout_join.hpp"

namespace ssok {

namespace {

std::string vertex_set_name(const std::vector<int>& vs) {
  std::vector<std::string> labels;
  int mx = 0;
  for (int v : vs) mx = std::max(mx, v);
  for (int i = 0; i <= mx; ++i) labels.push_back(std::to_string(i));
  return subset_name(vs, labels);
}

}  // namespace

SimplicialMap prism_to_join_inclusion(int m) {
  auto T = standard_simplex(2 * m + 1);
  {
    std::vector<std::string> bar_edges;
    for (int x = 0; x <= m; ++x)
      for (int y = x + 1; y <= m; ++y)
        bar_edges.push_back(vertex_set_name({m + 1 + x, m + 1 + y}));
    T = mark_edges(std::move(T), bar_edges);
  }
  auto P = product(standard_simplex(m), standard_simplex(1));
  SimplicialSet src = P.sset;
  for (int c = 0; c < src.total(); ++c) {
    if (src.cells[c].dim != 1) continue;
    const SimplexTerm& tb = P.comp_b[c];
    if (!tb.nondeg() && tb.nd == 1) src.marked.insert(c);
  }
  int top = T.total() - 1;
  std::vector<SimplexTerm> img;
  auto D1 = standard_simplex(1);
  auto Dm = standard_simplex(m);
  for (int c = 0; c < src.total(); ++c) {
    int d = src.cells[c].dim;
    Ord w(d + 1);
    for (int i = 0; i <= d; ++i) {
      int x = act(Dm, P.comp_a[c], Ord{i}).nd;
      int e = act(D1, P.comp_b[c], Ord{i}).nd;
      w[i] = e == 1 ? m + 1 + x : x;
    }
    img.push_back(act(T, T.term(top), w));
  }
  return make_map(std::move(src), std::move(T), std::move(img));
}

std::vector<std::vector<int>> prism_to_join_guide(int m) {
  // the prism union the simplex on {m, bar 0, ..., bar m}
  auto T = standard_simplex(2 * m + 1);
  std::vector<int> extra(m + 2);
  extra[0] = m;
  for (int x = 0; x <= m; ++x) extra[x + 1] = m + 1 + x;
  return {{*T.id_by_name(vertex_set_name(extra))}};
}

SimplicialMap seven_simplex_inclusion() {
  auto T = mark_edges(standard_simplex(7), {"67"});
  std::vector<int> gens;
  for (auto* g : {"013467", "023457", "0123"}) gens.push_back(*T.id_by_name(g));
  auto sub = subcomplex(T, gens);
  std::vector<SimplexTerm> img;
  for (int c = 0; c < sub.sset.total(); ++c)
    img.push_back(
        SimplexTerm{identity_map(sub.sset.cells[c].dim), sub.old_of_new[c]});
  return make_map(sub.sset, T, std::move(img));
}

std::vector<std::vector<int>> seven_simplex_guide() {
  auto T = standard_simplex(7);
  // first complete the right horn on 567, then fill inwards
  return {{*T.id_by_name("567")}};
}

namespace {

// target (Delta^I)^flat * (Delta^J)^sharp together with the cells of the
// I-top and the J0-face
struct OrderJoin {
  JoinResult J;
  SimplicialSet tgt;
  int a_top = -1;  // original A cell of the I top, -1 if I empty
  int b_j0 = -1;   // original B cell of the J0 face, -1 if J0 empty
};

OrderJoin make_order_join(int isize, int jsize, const std::vector<int>& j0) {
  OrderJoin R;
  SimplicialSet A = isize == 0 ? empty_sset() : standard_simplex(isize - 1);
  SimplicialSet B = sharp(standard_simplex(jsize - 1));
  R.J = join(A, B);
  R.tgt = R.J.sset;
  if (isize > 0) R.a_top = A.total() - 1;
  if (!j0.empty()) R.b_j0 = *B.id_by_name(vertex_set_name(j0));
  return R;
}

SimplicialMap subcomplex_inclusion(const SimplicialSet& T,
                                   const std::vector<int>& gens) {
  auto sub = subcomplex(T, gens);
  std::vector<SimplexTerm> img;
  for (int c = 0; c < sub.sset.total(); ++c)
    img.push_back(
        SimplexTerm{identity_map(sub.sset.cells[c].dim), sub.old_of_new[c]});
  return make_map(sub.sset, T, std::move(img));
}

}  // namespace

SimplicialMap order_join_inclusion(int isize, int jsize,
                                   const std::vector<int>& j0) {
  auto R = make_order_join(isize, jsize, j0);
  std::vector<int> gens;
  if (R.a_top >= 0 && R.b_j0 >= 0)
    gens.push_back(R.J.from_pair[R.a_top][R.b_j0]);
  else if (R.a_top >= 0)
    gens.push_back(R.J.from_a[R.a_top]);
  else if (R.b_j0 >= 0)
    gens.push_back(R.J.from_b[R.b_j0]);
  return subcomplex_inclusion(R.tgt, gens);
}

SimplicialMap order_pushout_join_inclusion(int isize, int jsize,
                                           const std::vector<int>& j0) {
  auto R = make_order_join(isize, jsize, j0);
  std::vector<int> gens;
  gens.push_back(R.J.from_b[(int)R.J.from_b.size() - 1]);  // all of Delta^J
  if (R.a_top >= 0 && R.b_j0 >= 0)
    gens.push_back(R.J.from_pair[R.a_top][R.b_j0]);
  else if (R.a_top >= 0)
    gens.push_back(R.J.from_a[R.a_top]);
  return subcomplex_inclusion(R.tgt, gens);
}

AppendixReport run_appendix_suite(int n_max, SearchBudget budget) {
  AppendixReport R;
  auto ids = check_pushout_join_identities(n_max);
  R.identities_checked = ids.checked;
  if (!ids.ok) {
    R.ok = false;
    R.failure = "pushout-join identity failed: " + ids.failure;
    return R;
  }
  for (int isize = 0; isize <= 3; ++isize)
    for (int jsize = 1; jsize <= 3; ++jsize) {
      std::vector<int> all(jsize);
      for (int i = 0; i < jsize; ++i) all[i] = i;
      for (int mask = 1; mask + 1 < (1 << jsize); ++mask) {
        std::vector<int> j0;
        for (int i = 0; i < jsize; ++i)
          if (mask & (1 << i)) j0.push_back(i);
        // cellwise certificates for the join form exist when J0 is an
        // interval of J; marking an edge between two J0 vertices attached
        // later has no generating move otherwise
        bool interval = j0.back() - j0.front() + 1 == (int)j0.size();
        for (auto* form : {"join", "pushout-join"}) {
          if (std::string(form) == "join" && !interval) continue;
          auto incl = std::string(form) == "join"
                          ? order_join_inclusion(isize, jsize, j0)
                          : order_pushout_join_inclusion(isize, jsize, j0);
          auto res = search_decomposition(incl, AnodyneClass::Marked, budget);
          if (res.status != SearchStatus::Found) {
            R.ok = false;
            R.failure = std::string(form) + " inclusion |I|=" +
                        std::to_string(isize) + " |J|=" + std::to_string(jsize) +
                        " mask=" + std::to_string(mask) + ": " + res.detail;
            return R;
          }
          auto v = verify_certificate(*res.cert);
          if (!v.ok) {
            R.ok = false;
            R.failure = "certificate replay failed: " + v.error;
            return R;
          }
          ++R.certificates_found;
        }
      }
    }
  return R;
}

}  // namespace ssok
