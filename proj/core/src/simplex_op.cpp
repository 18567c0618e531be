#include "ssok/simplex_op.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssok {

Ord identity_map(int n) {
  Ord f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = i;
  return f;
}

Ord delta(int i, int n) {
  Ord f;
  f.reserve(n);
  for (int v = 0; v <= n; ++v)
    if (v != i) f.push_back(v);
  return f;
}

Ord sigma(int i, int n) {
  Ord f;
  f.reserve(n + 2);
  for (int v = 0; v <= n + 1; ++v) f.push_back(v <= i ? v : v - 1);
  return f;
}

Ord comp(const Ord& f, const Ord& g) {
  Ord r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f.at(g[i]);
  return r;
}

bool is_monotone(const Ord& f) {
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i] < f[i - 1]) return false;
  return true;
}

bool is_identity(const Ord& f) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != (int)i) return false;
  return true;
}

bool is_injective(const Ord& f) {
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return false;
  return true;
}

bool is_surjective(const Ord& f, int m) {
  std::vector<bool> hit(m + 1, false);
  for (int v : f) {
    if (v < 0 || v > m) return false;
    hit[v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

EpiMono epi_mono(const Ord& g) {
  EpiMono r;
  r.sur.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    if (r.inj.empty() || r.inj.back() != g[i]) r.inj.push_back(g[i]);
    r.sur[i] = (int)r.inj.size() - 1;
  }
  return r;
}

std::vector<Ord> all_surjections(int n, int m) {
  std::vector<Ord> out;
  if (m > n || m < 0) return out;
  // choose n-m collapse positions among {0..n-1}
  std::vector<int> idx(n, 0);
  Ord cur(n + 1);
  // recursive enumeration over values
  struct Rec {
    int n, m;
    std::vector<Ord>* out;
    Ord cur;
    void go(int i, int v) {
      if (i > n) {
        if (v == m + 1) out->push_back(cur);
        return;
      }
      // remaining positions n-i+1 must cover remaining values m-v+1
      if (m - v + 1 > n - i + 1) return;
      if (v <= m) {
        cur[i] = v;
        go(i + 1, v + 1);
      }
      if (i > 0 && v > 0) {
        cur[i] = v - 1;
        go(i + 1, v);
      }
    }
  } rec{n, m, &out, Ord(n + 1)};
  rec.go(0, 0);
  return out;
}

std::vector<Ord> all_monotone(int n, int m) {
  std::vector<Ord> out;
  Ord cur(n + 1);
  struct Rec {
    int n, m;
    std::vector<Ord>* out;
    Ord cur;
    void go(int i, int low) {
      if (i > n) {
        out->push_back(cur);
        return;
      }
      for (int v = low; v <= m; ++v) {
        cur[i] = v;
        go(i + 1, v);
      }
    }
  } rec{n, m, &out, cur};
  rec.go(0, 0);
  return out;
}

std::vector<int> deg_word_of(const Ord& sur) {
  std::vector<int> w;
  for (size_t i = 0; i + 1 < sur.size(); ++i)
    if (sur[i] == sur[i + 1]) w.push_back((int)i);
  return w;
}

Ord sur_from_deg_word(const std::vector<int>& word, int dom_dim) {
  Ord sur(dom_dim + 1);
  size_t wi = 0;
  int v = 0;
  for (int i = 0; i <= dom_dim; ++i) {
    sur[i] = v;
    bool collapse = wi < word.size() && word[wi] == i;
    if (collapse)
      ++wi;
    else
      ++v;
  }
  return sur;
}

SimplexOp SimplexOp::from_map(const Ord& f, int cod) {
  if (!is_monotone(f)) throw std::invalid_argument("SimplexOp: not monotone");
  SimplexOp op;
  op.dom = (int)f.size() - 1;
  op.cod = cod;
  EpiMono em = epi_mono(f);
  op.deg_word = deg_word_of(em.sur);
  std::vector<bool> hit(cod + 1, false);
  for (int v : em.inj) hit.at(v) = true;
  for (int v = 0; v <= cod; ++v)
    if (!hit[v]) op.face_word.push_back(v);
  return op;
}

SimplexOp SimplexOp::identity(int n) { return from_map(identity_map(n), n); }

Ord SimplexOp::to_map() const {
  // injection part from face word
  Ord inj;
  size_t fi = 0;
  for (int v = 0; v <= cod; ++v) {
    if (fi < face_word.size() && face_word[fi] == v) {
      ++fi;
      continue;
    }
    inj.push_back(v);
  }
  Ord sur = sur_from_deg_word(deg_word, dom);
  return comp(inj, sur);
}

SimplexOp SimplexOp::then(const SimplexOp& g) const {
  return from_map(comp(g.to_map(), to_map()), g.cod);
}

}  // namespace ssok
