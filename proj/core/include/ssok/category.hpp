#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ssok {

// Finite category with a total composition table. Morphisms 0..nobj-1 are
// the identities, in object order.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> obj_name;
  struct Mor {
    std::string name;
    int src = 0, tgt = 0;
  };
  std::vector<Mor> mor;
  std::vector<std::vector<int>> table;  // table[g][f] = g after f, -1 if not composable

  int nobj() const { return (int)obj_name.size(); }
  int nmor() const { return (int)mor.size(); }
  int id_of(int obj) const { return obj; }
  bool is_identity(int m) const { return m < nobj(); }
  bool composable(int g, int f) const { return mor[f].tgt == mor[g].src; }
  int compose(int g, int f) const { return table[g][f]; }

  std::optional<std::string> validate() const;
};

// incremental construction; identities are created automatically
class CatBuilder {
 public:
  explicit CatBuilder(std::string name = "") { cat_.name = std::move(name); }
  int add_obj(const std::string& name);
  // returns the morphism index (identities occupy 0..nobj-1 in the result,
  // so indices handed out here are already final)
  int add_mor(const std::string& name, int src, int tgt);
  void set_comp(int g, int f, int gf);
  FiniteCategory build() const;  // fills identity laws, validates

 private:
  FiniteCategory cat_;
  std::vector<std::array<int, 3>> comps_;
};

int pi0_cat(const FiniteCategory& C);

std::string cat_to_dot(const FiniteCategory& C);

// ten small categories used as a shared test corpus
std::vector<FiniteCategory> category_corpus();

}  // namespace ssok
