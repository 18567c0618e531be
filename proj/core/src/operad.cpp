#include "ssok/operad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ssok {

namespace {

// signed word over input labels; Comm elements decode to the empty word, so
// one splicing routine covers all builtin kinds
using Word = std::vector<std::pair<int, int>>;

Word decode(DiscreteOperad::Kind k, const std::string& s) {
  Word w;
  if (k == DiscreteOperad::Kind::Comm || s == "()") return w;
  if (k == DiscreteOperad::Kind::Ass || k == DiscreteOperad::Kind::Triv) {
    for (char c : s) w.push_back({c - '0', 1});
    return w;
  }
  for (size_t i = 0; i + 1 < s.size(); i += 2)
    w.push_back({s[i] - '0', s[i + 1] == '-' ? -1 : 1});
  return w;
}

std::string encode(DiscreteOperad::Kind k, const Word& w, int arity) {
  if (k == DiscreteOperad::Kind::Comm) return "*";
  if (arity == 0) return "()";
  std::string s;
  for (auto& [l, sg] : w) {
    s += char('0' + l);
    if (k == DiscreteOperad::Kind::AssInv) s += sg < 0 ? '-' : '+';
  }
  return s;
}

Word gamma_word(const Word& f, const std::vector<const Word*>& gs,
                const std::vector<int>& arities) {
  std::vector<int> off(gs.size() + 1, 0);
  for (size_t i = 0; i < gs.size(); ++i) off[i + 1] = off[i] + arities[i];
  Word out;
  for (auto& [l, sg] : f) {
    const Word& g = *gs[l - 1];
    if (sg > 0) {
      for (auto& [gl, gsg] : g) out.push_back({gl + off[l - 1], gsg});
    } else {
      for (auto it = g.rbegin(); it != g.rend(); ++it)
        out.push_back({it->first + off[l - 1], -it->second});
    }
  }
  return out;
}

Word relabel_word(const Word& w, const std::vector<int>& perm) {
  Word out = w;
  for (auto& [l, sg] : out) l = perm[l - 1];
  return out;
}

}  // namespace

int DiscreteOperad::count(int n) const {
  return n < 0 || n >= (int)elems.size() ? 0 : (int)elems[n].size();
}

std::optional<int> DiscreteOperad::id_of(int n, const std::string& nm) const {
  if (n < 0 || n >= (int)index.size()) return std::nullopt;
  auto it = index[n].find(nm);
  if (it == index[n].end()) return std::nullopt;
  return it->second;
}

int DiscreteOperad::unit() const {
  switch (kind) {
    case Kind::Comm:
      return 0;
    case Kind::Ass:
    case Kind::Triv:
      return *id_of(1, "1");
    case Kind::AssInv:
      return *id_of(1, "1+");
    case Kind::Table:
      break;
  }
  // scan for a two-sided unit
  for (int u = 0; u < count(1); ++u) {
    bool ok = true;
    for (int n = 0; n <= arity_bound && ok; ++n)
      for (int f = 0; f < count(n) && ok; ++f) {
        std::vector<std::pair<int, int>> us(n, {1, u});
        if (gamma(n, f, us) != f) ok = false;
        if (gamma(1, u, {{n, f}}) != f) ok = false;
      }
    if (ok) return u;
  }
  throw std::runtime_error("operad has no unit");
}

std::optional<int> DiscreteOperad::gamma(
    int n, int f, const std::vector<std::pair<int, int>>& gs) const {
  if (f < 0 || f >= count(n) || (int)gs.size() != n) return std::nullopt;
  int m = 0;
  for (auto& [gm, g] : gs) {
    if (g < 0 || g >= count(gm)) return std::nullopt;
    m += gm;
  }
  if (m > arity_bound) return std::nullopt;
  if (kind == Kind::Table) {
    std::vector<int> key{n, f};
    for (auto& [gm, g] : gs) {
      key.push_back(gm);
      key.push_back(g);
    }
    auto it = comp_table.find(key);
    if (it == comp_table.end()) return std::nullopt;
    return it->second;
  }
  std::vector<const Word*> gp;
  std::vector<int> ar;
  for (auto& [gm, g] : gs) {
    gp.push_back(&words[gm][g]);
    ar.push_back(gm);
  }
  return id_of(m, encode(kind, gamma_word(words[n][f], gp, ar), m));
}

std::optional<int> DiscreteOperad::circ(int n, int f, int i, int gm,
                                        int g) const {
  if (i < 1 || i > n) return std::nullopt;
  if (count(1) == 0) return std::nullopt;
  std::vector<std::pair<int, int>> gs(n, {1, unit()});
  gs[i - 1] = {gm, g};
  return gamma(n, f, gs);
}

std::optional<int> DiscreteOperad::relabel(int n, int f,
                                           const std::vector<int>& perm) const {
  if (f < 0 || f >= count(n) || (int)perm.size() != n) return std::nullopt;
  std::vector<char> seen(n + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) return std::nullopt;
    seen[v] = 1;
  }
  if (kind == Kind::Table) {
    std::vector<int> key{n, f};
    for (int v : perm) key.push_back(v);
    auto it = sym_table.find(key);
    if (it == sym_table.end()) return std::nullopt;
    return it->second;
  }
  return id_of(n, encode(kind, relabel_word(words[n][f], perm), n));
}

DiscreteOperad builtin_operad(const std::string& name, int arity_bound) {
  if (arity_bound < 1 || arity_bound > 9)
    throw std::invalid_argument("builtin_operad: arity bound must be in 1..9");
  DiscreteOperad O;
  O.name = name;
  O.arity_bound = arity_bound;
  O.elems.resize(arity_bound + 1);
  if (name == "Comm") {
    O.kind = DiscreteOperad::Kind::Comm;
    for (auto& v : O.elems) v = {"*"};
  } else if (name == "Triv") {
    O.kind = DiscreteOperad::Kind::Triv;
    O.elems[0] = {"()"};
    O.elems[1] = {"1"};
  } else if (name == "Ass" || name == "AssInv") {
    bool inv = name == "AssInv";
    O.kind = inv ? DiscreteOperad::Kind::AssInv : DiscreteOperad::Kind::Ass;
    O.elems[0] = {"()"};
    for (int n = 1; n <= arity_bound; ++n) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        for (int signs = 0; signs < (inv ? 1 << n : 1); ++signs) {
          std::string s;
          for (int i = 0; i < n; ++i) {
            s += char('0' + perm[i]);
            if (inv) s += (signs >> i) & 1 ? '-' : '+';
          }
          O.elems[n].push_back(s);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  } else {
    throw std::invalid_argument("builtin_operad: unknown name " + name);
  }
  O.index.resize(O.elems.size());
  O.words.resize(O.elems.size());
  for (size_t n = 0; n < O.elems.size(); ++n)
    for (size_t i = 0; i < O.elems[n].size(); ++i) {
      O.index[n][O.elems[n][i]] = (int)i;
      O.words[n].push_back(decode(O.kind, O.elems[n][i]));
    }
  return O;
}

std::vector<int> block_permutation(const std::vector<int>& perm,
                                   const std::vector<int>& arities) {
  int n = (int)perm.size();
  std::vector<int> off(n + 1, 0);
  for (int j = 0; j < n; ++j) off[j + 1] = off[j] + arities[j];
  std::vector<int> lambda;
  lambda.reserve(off[n]);
  for (int i = 0; i < n; ++i) {
    int j = perm[i];
    for (int t = 0; t < arities[j - 1]; ++t)
      lambda.push_back(off[j - 1] + t + 1);
  }
  return lambda;
}

namespace {

// enumerate tuples (m_1..m_n, g_1..g_n) with sum m_i <= bound
template <class Fn>
void for_each_tuple(const DiscreteOperad& O, int n, int bound, Fn&& fn) {
  std::vector<std::pair<int, int>> gs;
  auto rec = [&](auto&& self, int left) -> void {
    if ((int)gs.size() == n) {
      fn(gs);
      return;
    }
    for (int m = 0; m <= left; ++m)
      for (int g = 0; g < O.count(m); ++g) {
        gs.push_back({m, g});
        self(self, left - m);
        gs.pop_back();
      }
  };
  rec(rec, bound);
}

}  // namespace

std::optional<std::string> check_operad_axioms(const DiscreteOperad& O,
                                               int bound) {
  bound = std::min(bound, O.arity_bound);
  if (!O.unital()) return "unitality: nullary set is not a singleton";
  if (O.count(1) == 0) return "no unary operations, unit missing";
  int u;
  try {
    u = O.unit();
  } catch (const std::exception& e) {
    return std::string(e.what());
  }

  // unit laws
  for (int n = 0; n <= bound; ++n)
    for (int f = 0; f < O.count(n); ++f) {
      std::vector<std::pair<int, int>> us(n, {1, u});
      if (O.gamma(n, f, us) != f)
        return "right unit law fails at arity " + std::to_string(n) + " #" +
               std::to_string(f);
      if (O.gamma(1, u, {{n, f}}) != f)
        return "left unit law fails at arity " + std::to_string(n) + " #" +
               std::to_string(f);
    }

  // partial-composition associativity, sequential and parallel shapes
  for (int af = 1; af <= bound; ++af)
    for (int ag = 0; ag <= bound; ++ag)
      for (int ah = 0; ah <= bound; ++ah) {
        if (af + ag + ah - 2 > bound) continue;
        for (int f = 0; f < O.count(af); ++f)
          for (int g = 0; g < O.count(ag); ++g)
            for (int h = 0; h < O.count(ah); ++h) {
              for (int i = 1; i <= af; ++i) {
                // intermediate composites above the truncation bound can't
                // be compared, skip those instances
                if (ag + ah - 1 <= bound)
                  for (int j = 1; j <= ag && af + ag - 1 <= bound; ++j) {
                    auto fg = O.circ(af, f, i, ag, g);
                    auto gh = O.circ(ag, g, j, ah, h);
                    if (!fg || !gh) return "partial composition undefined";
                    auto l = O.circ(af + ag - 1, *fg, i - 1 + j, ah, h);
                    auto r = O.circ(af, f, i, ag + ah - 1, *gh);
                    if (l != r)
                      return "sequential associativity fails in " + O.name;
                  }
                if (af + ag - 1 <= bound && af + ah - 1 <= bound)
                  for (int k = i + 1; k <= af; ++k) {
                    auto fg = O.circ(af, f, i, ag, g);
                    auto fh = O.circ(af, f, k, ah, h);
                    if (!fg || !fh) return "partial composition undefined";
                    auto l = O.circ(af + ag - 1, *fg, k + ag - 1, ah, h);
                    auto r = O.circ(af + ah - 1, *fh, i, ag, g);
                    if (l != r)
                      return "parallel associativity fails in " + O.name;
                  }
              }
            }
      }

  // the relabeling action: adjacent transpositions square to the identity
  // and compose correctly
  for (int n = 2; n <= bound; ++n) {
    std::vector<std::vector<int>> trs;
    for (int k = 1; k < n; ++k) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      std::swap(p[k - 1], p[k]);
      trs.push_back(p);
    }
    for (int f = 0; f < O.count(n); ++f)
      for (auto& p : trs)
        for (auto& q : trs) {
          auto pf = O.relabel(n, f, p);
          if (!pf) return "relabeling undefined in " + O.name;
          auto qpf = O.relabel(n, *pf, q);
          std::vector<int> qp(n);
          for (int i = 0; i < n; ++i) qp[i] = q[p[i] - 1];
          if (qpf != O.relabel(n, f, qp))
            return "relabeling is not an action in " + O.name;
        }
  }

  // equivariance against the block permutation, adjacent transpositions;
  // for the builtin kinds this runs on predecoded words to keep the
  // arity-4 enumeration fast
  bool wordkind = O.kind != DiscreteOperad::Kind::Table;
  std::vector<std::vector<Word>> words(bound + 1);
  if (wordkind)
    for (int n = 0; n <= bound; ++n)
      for (int f = 0; f < O.count(n); ++f)
        words[n].push_back(decode(O.kind, O.elems[n][f]));

  for (int n = 2; n <= bound; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      std::swap(p[k - 1], p[k]);
      bool bad = false;
      for (int f = 0; f < O.count(n) && !bad; ++f) {
        auto pf = O.relabel(n, f, p);
        if (!pf) return "relabeling undefined in " + O.name;
        for_each_tuple(O, n, bound, [&](const std::vector<std::pair<int, int>>& gs) {
          if (bad) return;
          std::vector<int> ar(n);
          for (int i = 0; i < n; ++i) ar[i] = gs[i].first;
          if (wordkind) {
            std::vector<const Word*> gw(n), gpw(n);
            std::vector<int> arp(n);
            for (int i = 0; i < n; ++i) {
              gw[i] = &words[gs[i].first][gs[i].second];
              gpw[i] = &words[gs[p[i] - 1].first][gs[p[i] - 1].second];
              arp[i] = gs[p[i] - 1].first;
            }
            Word lhs = gamma_word(words[n][*pf], gw, ar);
            Word inner = gamma_word(words[n][f], gpw, arp);
            if (lhs != relabel_word(inner, block_permutation(p, ar)))
              bad = true;
            return;
          }
          auto lhs = O.gamma(n, *pf, gs);
          std::vector<std::pair<int, int>> gp(n);
          for (int i = 0; i < n; ++i) gp[i] = gs[p[i] - 1];
          auto inner = O.gamma(n, f, gp);
          if (!lhs || !inner) {
            bad = true;
            return;
          }
          int m = 0;
          for (int a : ar) m += a;
          auto rhs = O.relabel(m, *inner, block_permutation(p, ar));
          if (lhs != rhs) bad = true;
        });
      }
      if (bad) return "equivariance fails in " + O.name;
    }
  }
  return std::nullopt;
}

int involutive_closure_count(int n, int depth) {
  // composition trees over mu, tau, id, evaluated in the free involutive
  // monoid; leaves taken in order, then all leaf relabelings applied
  std::vector<std::vector<std::set<Word>>> memo(
      depth + 1, std::vector<std::set<Word>>(n + 1));
  for (int d = 0; d <= depth; ++d) {
    if (1 <= n) memo[d][1].insert({{1, 1}});
    if (d == 0) continue;
    for (int a = 1; a <= n; ++a) {
      for (auto& w : memo[d - 1][a]) {
        Word t;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          t.push_back({it->first, -it->second});
        memo[d][a].insert(t);
        memo[d][a].insert(w);
      }
      for (int a1 = 1; a1 < a; ++a1)
        for (auto& w1 : memo[d - 1][a1])
          for (auto& w2 : memo[d - 1][a - a1]) {
            Word t = w1;
            for (auto& [l, sg] : w2) t.push_back({l + a1, sg});
            memo[d][a].insert(t);
          }
    }
  }
  std::set<Word> all;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (auto& w : memo[depth][n]) all.insert(relabel_word(w, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (int)all.size();
}

}  // namespace ssok
