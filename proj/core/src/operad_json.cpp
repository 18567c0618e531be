#include "ssok/operad_json.hpp"

#include <numeric>
#include <stdexcept>

namespace ssok {

namespace {

std::string tuple_key(int arity) {
  std::string k = "(";
  for (int i = 0; i < arity; ++i) k += i ? ",*" : "*";
  return k + ")→*";
}

// all tuples (m_1..m_n, g_1..g_n) with sum m_i <= left
template <class Fn>
void tuples(const DiscreteOperad& O, int n, int left, Fn&& fn) {
  std::vector<std::pair<int, int>> gs;
  auto rec = [&](auto&& self, int rem) -> void {
    if ((int)gs.size() == n) {
      fn(gs);
      return;
    }
    for (int m = 0; m <= rem; ++m)
      for (int g = 0; g < O.count(m); ++g) {
        gs.push_back({m, g});
        self(self, rem - m);
        gs.pop_back();
      }
  };
  rec(rec, left);
}

}  // namespace

nlohmann::json operad_to_json(const DiscreteOperad& O) {
  nlohmann::json j;
  j["colors"] = {"*"};
  nlohmann::json ops = nlohmann::json::object();
  for (int n = 0; n <= O.arity_bound; ++n)
    if (O.count(n) > 0) ops[std::to_string(n)] = {{tuple_key(n), O.elems[n]}};
  j["ops"] = std::move(ops);

  nlohmann::json comp = nlohmann::json::array();
  long entries = 0;
  for (int n = 0; n <= O.arity_bound; ++n)
    for (int f = 0; f < O.count(n); ++f)
      tuples(O, n, O.arity_bound, [&](const std::vector<std::pair<int, int>>& gs) {
        auto r = O.gamma(n, f, gs);
        if (!r) return;
        if (++entries > 200000)
          throw std::runtime_error(
              "operad_to_json: composition table too large, lower the bound");
        int m = 0;
        nlohmann::json args = nlohmann::json::array();
        for (auto& [gm, g] : gs) {
          args.push_back({gm, O.elems[gm][g]});
          m += gm;
        }
        comp.push_back({{n, O.elems[n][f]}, args, O.elems[m][*r]});
      });
  j["compose"] = std::move(comp);

  nlohmann::json sym = nlohmann::json::array();
  for (int n = 2; n <= O.arity_bound; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (int f = 0; f < O.count(n); ++f) {
        auto r = O.relabel(n, f, perm);
        if (r) sym.push_back({{n, O.elems[n][f]}, perm, O.elems[n][*r]});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  j["sym_action"] = std::move(sym);
  return j;
}

DiscreteOperad operad_from_json(const nlohmann::json& j) {
  if (!j.contains("colors") || !j["colors"].is_array())
    throw std::runtime_error("operad json: missing colors");
  if (j["colors"].size() != 1)
    throw std::runtime_error("operad json: only single-color operads are supported");

  DiscreteOperad O;
  O.kind = DiscreteOperad::Kind::Table;
  O.name = j.value("name", "table");
  int bound = 0;
  for (auto& [k, v] : j.at("ops").items()) bound = std::max(bound, std::stoi(k));
  O.arity_bound = std::max(bound, 1);
  O.elems.resize(O.arity_bound + 1);
  O.index.resize(O.arity_bound + 1);
  for (auto& [k, v] : j.at("ops").items()) {
    int n = std::stoi(k);
    if (n < 0) throw std::runtime_error("operad json: negative arity");
    if (!v.is_object() || v.size() != 1)
      throw std::runtime_error("operad json: expected one tuple per arity");
    for (auto& [tk, names] : v.items())
      for (auto& nm : names) {
        std::string s = nm.get<std::string>();
        if (O.index[n].count(s))
          throw std::runtime_error("operad json: duplicate name " + s);
        O.index[n][s] = (int)O.elems[n].size();
        O.elems[n].push_back(s);
      }
  }
  if (O.count(0) != 1)
    throw std::runtime_error(
        "operad json: unitality requires a singleton nullary set");
  if (O.count(1) < 1)
    throw std::runtime_error("operad json: unitality requires a unary unit");

  auto id_or_throw = [&](int n, const std::string& s) {
    auto i = O.id_of(n, s);
    if (!i) throw std::runtime_error("operad json: unknown op " + s);
    return *i;
  };
  for (auto& t : j.value("compose", nlohmann::json::array())) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("operad json: bad compose entry");
    int n = t[0][0].get<int>();
    std::vector<int> key{n, id_or_throw(n, t[0][1].get<std::string>())};
    int m = 0;
    for (auto& a : t[1]) {
      int gm = a[0].get<int>();
      key.push_back(gm);
      key.push_back(id_or_throw(gm, a[1].get<std::string>()));
      m += gm;
    }
    O.comp_table[key] = id_or_throw(m, t[2].get<std::string>());
  }
  for (auto& t : j.value("sym_action", nlohmann::json::array())) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("operad json: bad sym_action entry");
    int n = t[0][0].get<int>();
    std::vector<int> key{n, id_or_throw(n, t[0][1].get<std::string>())};
    for (auto& p : t[1]) key.push_back(p.get<int>());
    O.sym_table[key] = id_or_throw(n, t[2].get<std::string>());
  }
  // identity relabelings may be omitted from the file
  for (int n = 0; n <= O.arity_bound; ++n) {
    std::vector<int> idp(n);
    std::iota(idp.begin(), idp.end(), 1);
    for (int f = 0; f < O.count(n); ++f) {
      std::vector<int> key{n, f};
      key.insert(key.end(), idp.begin(), idp.end());
      O.sym_table.emplace(key, f);
    }
  }
  try {
    O.unit();
  } catch (const std::exception&) {
    throw std::runtime_error(
        "operad json: unitality check failed, no two-sided unary unit");
  }
  return O;
}

}  // namespace ssok
