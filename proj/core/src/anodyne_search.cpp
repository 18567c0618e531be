#include "ssok/anodyne_search.hpp"

#include <algorithm>

#include "ssok/nerve.hpp"

namespace ssok {

namespace {

struct Searcher {
  const SimplicialSet& T;
  AnodyneClass cls;
  SearchBudget budget;
  long nodes = 0;
  bool exceeded = false;

  // free face -> (top cell, horn index) and long edge -> triangles
  std::vector<std::vector<std::pair<int, int>>> parents;
  std::vector<std::vector<int>> tri_of_edge;
  std::vector<char> tri_markable;
  std::vector<char> want;

  explicit Searcher(const SimplicialSet& t, AnodyneClass c, SearchBudget b)
      : T(t), cls(c), budget(b) {
    parents.resize(T.total());
    tri_of_edge.resize(T.total());
    tri_markable.assign(T.total(), 0);
    auto leg_ok = [&](int tri, int u, int v) {
      SimplexTerm e = act(T, T.term(tri), Ord{u, v});
      return !e.nondeg() || T.marked.count(e.nd) > 0;
    };
    for (int c2 = 0; c2 < T.total(); ++c2) {
      int n = T.cells[c2].dim;
      for (int k = 0; k <= n && n >= 1; ++k) {
        const SimplexTerm& f = T.face(c2, k);
        if (f.nondeg()) parents[f.nd].push_back({c2, k});
      }
      if (n == 2) {
        SimplexTerm e = act(T, T.term(c2), Ord{0, 2});
        if (e.nondeg()) {
          tri_of_edge[e.nd].push_back(c2);
          if (leg_ok(c2, 0, 1) && leg_ok(c2, 1, 2)) tri_markable[e.nd] = 1;
        }
      }
    }
  }

  // Marks only ever grow through sharp 1-horns (at attach time) and the
  // triangle rule. An unmarked edge with no candidate triangle is
  // unrepairable once present, and already once both endpoints are present:
  // a sharp 1-horn needs a missing endpoint, any other attachment leaves
  // the edge unmarked.
  bool doomed(const Stage& st) const {
    for (int e : T.marked) {
      if (st.marks.count(e) || tri_markable[e]) continue;
      if (st.has[e]) return true;
      if (st.has[T.face(e, 0).nd] && st.has[T.face(e, 1).nd]) return true;
    }
    return false;
  }

  bool marked_ok(const Stage& st, int cell, int u, int v) const {
    SimplexTerm e = act(T, T.term(cell), Ord{u, v});
    return !e.nondeg() || (st.has[e.nd] && st.marks.count(e.nd) > 0);
  }

  bool window_done(const Stage& st) const {
    for (int c = 0; c < T.total(); ++c)
      if (want[c] && !st.has[c]) return false;
    for (int e : T.marked)
      if (want[e] && !st.marks.count(e)) return false;
    return true;
  }

  void horn_candidates(const Stage& st, int f,
                       std::vector<AttachmentStep>& out) const {
    for (auto [c, k] : parents[f]) {
      if (!want[c] || st.has[c]) continue;
      int n = T.cells[c].dim;
      bool faces_ok = true;
      for (int i = 0; i <= n && faces_ok; ++i)
        if (i != k && !st.has[T.face(c, i).nd]) faces_ok = false;
      if (!faces_ok) continue;
      if (cls == AnodyneClass::Inner) {
        if (0 < k && k < n) out.push_back({GenClass::InnHorn, n, k, c, {}, 0});
        continue;
      }
      if (0 < k && k < n) {
        out.push_back({GenClass::InnHornFlat, n, k, c, {}, 0});
      } else if (k == 0 && (cls == AnodyneClass::Marked ||
                            cls == AnodyneClass::LeftMarked)) {
        bool ok = n == 1 ? T.marked.count(c) > 0 : marked_ok(st, c, 0, 1);
        if (ok) out.push_back({GenClass::LHornSharp, n, 0, c, {}, 0});
      } else if (k == n && n >= 1 &&
                 (cls == AnodyneClass::Marked ||
                  cls == AnodyneClass::RightMarked)) {
        bool ok = n == 1 ? T.marked.count(c) > 0 : marked_ok(st, c, n - 1, n);
        if (ok) out.push_back({GenClass::RHornSharp, n, n, c, {}, 0});
      }
    }
  }

  std::vector<AttachmentStep> candidates(const Stage& st) const {
    std::vector<AttachmentStep> out;
    for (int c = 0; c < T.total(); ++c) {
      if (want[c] && !st.has[c]) {
        horn_candidates(st, c, out);
      } else if (st.has[c] && T.marked.count(c) && !st.marks.count(c) &&
                 cls != AnodyneClass::Inner) {
        for (int tri : tri_of_edge[c])
          if (st.has[tri] && marked_ok(st, tri, 0, 1) &&
              marked_ok(st, tri, 1, 2))
            out.push_back({GenClass::MarkedTriangle, 2, 0, tri, {}, 0});
      }
    }
    return out;
  }

  Stage done;  // stage reached when dfs succeeds

  bool dfs(Stage& st, std::vector<AttachmentStep>& out) {
    if (window_done(st)) {
      done = st;
      return true;
    }
    if (cls != AnodyneClass::Inner && doomed(st)) return false;
    if ((int)out.size() >= budget.max_steps) {
      exceeded = true;
      return false;
    }
    for (auto& s : candidates(st)) {
      if (++nodes > budget.max_nodes) {
        exceeded = true;
        return false;
      }
      Stage st2 = st;
      if (apply_step(st2, s, cls)) continue;
      out.push_back(s);
      if (dfs(st2, out)) return true;
      out.pop_back();
      if (exceeded) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult search_decomposition(const SimplicialMap& incl, AnodyneClass cls,
                                  SearchBudget budget,
                                  const std::vector<std::vector<int>>& guide) {
  SearchResult R;
  R.budget = budget;
  std::string err;
  auto st0 = Stage::from_inclusion(incl, &err);
  if (!st0) {
    R.detail = err;
    return R;
  }
  const SimplicialSet& T = *incl.tgt;
  for (int e : st0->marks)
    if (!T.marked.count(e)) {
      R.detail = "source marking exceeds target marking";
      return R;
    }

  Searcher S(T, cls, budget);
  std::vector<AttachmentStep> steps;
  Stage st = *st0;
  std::vector<char> prev = st.has;
  bool failed = false;

  auto close = [&](std::vector<char>& w, const std::vector<int>& gens) {
    std::vector<int> stack = gens;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      if (w[c]) continue;
      w[c] = 1;
      for (auto& f : T.cells[c].faces) stack.push_back(f.nd);
    }
  };

  for (size_t w = 0; w <= guide.size() && !failed; ++w) {
    std::vector<char> want = prev;
    if (w < guide.size())
      close(want, guide[w]);
    else
      want.assign(T.total(), 1);
    S.want = want;
    if (S.dfs(st, steps))
      st = S.done;
    else
      failed = true;
    prev = want;
  }
  R.nodes = S.nodes;
  R.steps_tried = (int)steps.size();
  if (!failed) {
    R.status = SearchStatus::Found;
    R.cert = AttachmentCertificate{incl, cls, std::move(steps)};
    return R;
  }
  if (S.exceeded) {
    R.detail = "budget exhausted";
    return R;
  }
  R.detail = "search space exhausted";
  if (cls == AnodyneClass::Inner) {
    R.witness = inner_rejection_witness(incl);
    if (R.witness) {
      R.status = SearchStatus::NoneWitnessed;
      return R;
    }
    R.detail += "; no rejection witness in the corpus";
  }
  return R;
}

std::optional<NerveWitness> inner_rejection_witness(const SimplicialMap& incl,
                                                    size_t map_limit) {
  const SimplicialSet& A = *incl.src;
  const SimplicialSet& T = *incl.tgt;
  for (auto& C : category_corpus()) {
    auto N = nerve_truncated(C, std::max(T.dim(), 1));
    for (auto& m : enumerate_simplicial_maps(A, N, map_limit)) {
      std::vector<SimplexTerm> partial(T.total());
      std::vector<bool> fixed(T.total(), false);
      for (int a = 0; a < A.total(); ++a) {
        partial[incl.img[a].nd] = m.img[a];
        fixed[incl.img[a].nd] = true;
      }
      if (enumerate_extensions(T, N, partial, fixed, 1).empty())
        return NerveWitness{C, m};
    }
  }
  return std::nullopt;
}

}  // namespace ssok
