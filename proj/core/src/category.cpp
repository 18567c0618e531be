#include "ssok/category.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ssok {

std::optional<std::string> FiniteCategory::validate() const {
  if ((int)mor.size() < nobj()) return "missing identities";
  for (int o = 0; o < nobj(); ++o)
    if (mor[o].src != o || mor[o].tgt != o)
      return "identity of " + obj_name[o] + " has wrong endpoints";
  if ((int)table.size() != nmor()) return "table size";
  for (int g = 0; g < nmor(); ++g) {
    if ((int)table[g].size() != nmor()) return "table row size";
    for (int f = 0; f < nmor(); ++f) {
      int gf = table[g][f];
      if (!composable(g, f)) {
        if (gf != -1) return "composite of non-composable pair";
        continue;
      }
      if (gf < 0 || gf >= nmor()) return "missing composite " + mor[g].name + " o " + mor[f].name;
      if (mor[gf].src != mor[f].src || mor[gf].tgt != mor[g].tgt)
        return "composite has wrong endpoints";
      if (is_identity(g) && gf != f) return "left unit law fails";
      if (is_identity(f) && gf != g) return "right unit law fails";
    }
  }
  // only composable triples matter, walk them through adjacency lists
  std::vector<std::vector<int>> out_of(nobj());
  for (int f = 0; f < nmor(); ++f) out_of[mor[f].src].push_back(f);
  for (int f = 0; f < nmor(); ++f)
    for (int g : out_of[mor[f].tgt])
      for (int h : out_of[mor[g].tgt])
        if (table[h][table[g][f]] != table[table[h][g]][f])
          return "associativity fails at " + mor[h].name + "," + mor[g].name +
                 "," + mor[f].name;
  return std::nullopt;
}

int CatBuilder::add_obj(const std::string& name) {
  if ((int)cat_.mor.size() > cat_.nobj())
    throw std::logic_error("add_obj after add_mor");
  cat_.obj_name.push_back(name);
  int o = cat_.nobj() - 1;
  cat_.mor.push_back({"id_" + name, o, o});
  return o;
}

int CatBuilder::add_mor(const std::string& name, int src, int tgt) {
  cat_.mor.push_back({name, src, tgt});
  return (int)cat_.mor.size() - 1;
}

void CatBuilder::set_comp(int g, int f, int gf) { comps_.push_back({g, f, gf}); }

FiniteCategory CatBuilder::build() const {
  FiniteCategory C = cat_;
  int n = C.nmor();
  C.table.assign(n, std::vector<int>(n, -1));
  for (int f = 0; f < n; ++f) {
    if (C.composable(C.id_of(C.mor[f].tgt), f)) C.table[C.id_of(C.mor[f].tgt)][f] = f;
    C.table[f][C.id_of(C.mor[f].src)] = f;
  }
  for (auto& [g, f, gf] : comps_) C.table[g][f] = gf;
  if (auto err = C.validate())
    throw std::invalid_argument("category " + C.name + ": " + *err);
  return C;
}

int pi0_cat(const FiniteCategory& C) {
  std::vector<int> parent(C.nobj());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto& m : C.mor) parent[find(m.src)] = find(m.tgt);
  int n = 0;
  for (int o = 0; o < C.nobj(); ++o) n += (find(o) == o);
  return n;
}

std::string cat_to_dot(const FiniteCategory& C) {
  std::string s = "digraph \"" + C.name + "\" {\n";
  for (int o = 0; o < C.nobj(); ++o) s += "  \"" + C.obj_name[o] + "\";\n";
  for (int m = C.nobj(); m < C.nmor(); ++m)
    s += "  \"" + C.obj_name[C.mor[m].src] + "\" -> \"" +
         C.obj_name[C.mor[m].tgt] + "\" [label=\"" + C.mor[m].name + "\"];\n";
  return s + "}\n";
}

std::vector<FiniteCategory> category_corpus() {
  std::vector<FiniteCategory> out;
  {
    CatBuilder b("terminal");
    b.add_obj("*");
    out.push_back(b.build());
  }
  {
    CatBuilder b("arrow");
    int a = b.add_obj("a"), c = b.add_obj("b");
    b.add_mor("f", a, c);
    out.push_back(b.build());
  }
  {
    CatBuilder b("chain2");
    int x = b.add_obj("x"), y = b.add_obj("y"), z = b.add_obj("z");
    int f = b.add_mor("f", x, y), g = b.add_mor("g", y, z);
    int h = b.add_mor("gf", x, z);
    b.set_comp(g, f, h);
    out.push_back(b.build());
  }
  {
    CatBuilder b("parallel");
    int a = b.add_obj("a"), c = b.add_obj("b");
    b.add_mor("f", a, c);
    b.add_mor("g", a, c);
    out.push_back(b.build());
  }
  {
    CatBuilder b("z2");
    int o = b.add_obj("*");
    int t = b.add_mor("t", o, o);
    b.set_comp(t, t, 0);
    out.push_back(b.build());
  }
  {
    CatBuilder b("z3");
    int o = b.add_obj("*");
    int t = b.add_mor("t", o, o), t2 = b.add_mor("tt", o, o);
    b.set_comp(t, t, t2);
    b.set_comp(t, t2, 0);
    b.set_comp(t2, t, 0);
    b.set_comp(t2, t2, t);
    out.push_back(b.build());
  }
  {
    CatBuilder b("span");
    int a = b.add_obj("a"), l = b.add_obj("l"), r = b.add_obj("r");
    b.add_mor("f", a, l);
    b.add_mor("g", a, r);
    out.push_back(b.build());
  }
  {
    CatBuilder b("square");
    int oo = b.add_obj("00"), oi = b.add_obj("01");
    int io = b.add_obj("10"), ii = b.add_obj("11");
    int u = b.add_mor("u", oo, oi), v = b.add_mor("v", oo, io);
    int u2 = b.add_mor("u2", oi, ii), v2 = b.add_mor("v2", io, ii);
    int d = b.add_mor("d", oo, ii);
    b.set_comp(u2, u, d);
    b.set_comp(v2, v, d);
    out.push_back(b.build());
  }
  {
    CatBuilder b("idem");
    int o = b.add_obj("*");
    int e = b.add_mor("e", o, o);
    b.set_comp(e, e, e);
    out.push_back(b.build());
  }
  {
    CatBuilder b("iso");
    int a = b.add_obj("a"), c = b.add_obj("b");
    int f = b.add_mor("f", a, c), g = b.add_mor("g", c, a);
    b.set_comp(g, f, a);
    b.set_comp(f, g, c);
    out.push_back(b.build());
  }
  return out;
}

}  // namespace ssok
