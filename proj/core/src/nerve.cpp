#include "ssok/nerve.hpp"

#include "ssok/abstract.hpp"

namespace ssok {

SimplexTerm NerveResult::chain_term(const MorChain& c) const {
  int k = (int)c.second.size();
  return term_of[k][idx[k].at(c)];
}

MorChain NerveResult::chain_of_term(const FiniteCategory& C,
                                    const SimplexTerm& t) const {
  const MorChain& base = cell_chain[t.nd];
  MorChain out{base.first, {}};
  int obj = base.first;
  for (size_t j = 1; j < t.sur.size(); ++j) {
    if (t.sur[j] == t.sur[j - 1]) {
      out.second.push_back(C.id_of(obj));
    } else {
      int m = base.second[t.sur[j] - 1];
      out.second.push_back(m);
      obj = C.mor[m].tgt;
    }
  }
  return out;
}

NerveResult nerve_full(const FiniteCategory& C, int d) {
  NerveResult R;
  R.chains.assign(d + 1, {});
  R.idx.assign(d + 1, {});
  for (int o = 0; o < C.nobj(); ++o) R.chains[0].push_back({o, {}});
  for (int k = 1; k <= d; ++k)
    for (auto& c : R.chains[k - 1])
      for (int m = 0; m < C.nmor(); ++m) {
        int end = c.second.empty() ? c.first : C.mor[c.second.back()].tgt;
        if (C.mor[m].src != end) continue;
        MorChain n = c;
        n.second.push_back(m);
        R.chains[k].push_back(std::move(n));
      }
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i < (int)R.chains[k].size(); ++i)
      R.idx[k][R.chains[k][i]] = i;

  AbstractComplex A;
  A.top = d;
  for (auto& cs : R.chains) A.counts.push_back((int)cs.size());
  A.face = [&](int k, int i, int j) {
    MorChain c = R.chains[k][i];
    if (j == 0) {
      c.first = C.mor[c.second[0]].tgt;
      c.second.erase(c.second.begin());
    } else if (j == k) {
      c.second.pop_back();
    } else {
      c.second[j - 1] = C.compose(c.second[j], c.second[j - 1]);
      c.second.erase(c.second.begin() + j);
    }
    return R.idx[k - 1].at(c);
  };
  A.deg = [&](int k, int i, int j) {
    MorChain c = R.chains[k][i];
    int obj = j == 0 ? c.first : C.mor[c.second[j - 1]].tgt;
    c.second.insert(c.second.begin() + j, C.id_of(obj));
    return R.idx[k + 1].at(c);
  };
  A.name = [&](int k, int i) {
    const MorChain& c = R.chains[k][i];
    if (k == 0) return C.obj_name[c.first];
    std::string s;
    for (size_t j = 0; j < c.second.size(); ++j)
      s += (j ? "|" : "") + C.mor[c.second[j]].name;
    return s;
  };
  AbstractBuild B = build_from_abstract(A);
  R.sset = std::move(B.sset);
  R.term_of = std::move(B.term_of);
  R.cell_chain.assign(R.sset.cells.size(), {});
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i < (int)R.chains[k].size(); ++i) {
      const SimplexTerm& t = R.term_of[k][i];
      if (t.nondeg() && t.dim() == k) R.cell_chain[t.nd] = R.chains[k][i];
    }
  return R;
}

SimplicialSet nerve_truncated(const FiniteCategory& C, int d) {
  return nerve_full(C, d).sset;
}

}  // namespace ssok
