#pragma once
#include <vector>
#include <string>
#include <optional>

namespace ssok {

// Monotone maps between finite ordinals [n] = {0,...,n}, stored as value
// vectors: f.size() == n+1 and f[i] is the image of i.
using Ord = std::vector<int>;

Ord identity_map(int n);
// elementary face delta_i : [n-1] -> [n], skipping i
Ord delta(int i, int n);
// elementary degeneracy sigma_i : [n+1] -> [n], repeating i
Ord sigma(int i, int n);
// (f after g)(i) = f[g[i]]
Ord comp(const Ord& f, const Ord& g);
bool is_monotone(const Ord& f);
bool is_identity(const Ord& f);
bool is_injective(const Ord& f);
// surjective onto [m]
bool is_surjective(const Ord& f, int m);

// Unique epi-mono factorization g = inj . sur with sur a monotone
// surjection and inj a monotone injection (listed by image values).
struct EpiMono {
  Ord sur;
  Ord inj;
};
EpiMono epi_mono(const Ord& g);

// All monotone surjections [n] ->> [m]
std::vector<Ord> all_surjections(int n, int m);
// All monotone maps [n] -> [m]
std::vector<Ord> all_monotone(int n, int m);

// A morphism of the simplex category in factored normal form.
// Encodes a monotone map [n] -> [m] as (degeneracy word, face word):
// the degeneracy word lists indices i with f(i) = f(i+1) (the steps the
// surjection collapses), the face word lists values of [m] missed by the
// injection. Both words are strictly increasing.
struct SimplexOp {
  int dom = 0;  // n
  int cod = 0;  // m
  std::vector<int> deg_word;
  std::vector<int> face_word;

  static SimplexOp from_map(const Ord& f, int cod);
  static SimplexOp identity(int n);
  Ord to_map() const;
  SimplexOp then(const SimplexOp& g) const;  // g after this
  bool operator==(const SimplexOp&) const = default;
};

// deg word of a surjection (collapse indices, ascending)
std::vector<int> deg_word_of(const Ord& sur);
Ord sur_from_deg_word(const std::vector<int>& word, int dom_dim);

}  // namespace ssok
