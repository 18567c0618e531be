#include "ssok/sset_json.hpp"

#include <map>
#include <stdexcept>

namespace ssok {

using nlohmann::json;

json sset_to_json(const SimplicialSet& S) {
  json j;
  j["dims"] = S.dim();
  j["simplices"] = json::array();
  for (auto& c : S.cells) {
    json faces = json::array();
    for (auto& f : c.faces) {
      faces.push_back({{"deg_word", deg_word_of(f.sur)},
                       {"target", S.cells[f.nd].name}});
    }
    j["simplices"].push_back(
        {{"id", c.name}, {"dim", c.dim}, {"faces", faces}});
  }
  j["marked"] = json::array();
  for (int e : S.marked) j["marked"].push_back(S.cells[e].name);
  return j;
}

SimplicialSet sset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("simplices"))
    throw std::invalid_argument("sset_from_json: missing 'simplices'");
  SimplicialSet S;
  std::map<std::string, int> id_of;
  // two passes not needed: schema requires faces point to earlier entries
  for (auto& e : j.at("simplices")) {
    std::string name = e.at("id").get<std::string>();
    int dim = e.at("dim").get<int>();
    std::vector<SimplexTerm> faces;
    for (auto& fe : e.at("faces")) {
      std::string tgt = fe.at("target").get<std::string>();
      auto it = id_of.find(tgt);
      if (it == id_of.end())
        throw std::invalid_argument("sset_from_json: face target '" + tgt +
                                    "' not yet defined (order matters)");
      std::vector<int> word = fe.at("deg_word").get<std::vector<int>>();
      faces.push_back(SimplexTerm{sur_from_deg_word(word, dim - 1), it->second});
    }
    int id = S.add_cell(name, dim, faces);
    if (S.cells[id].name != name)
      throw std::invalid_argument("sset_from_json: duplicate id " + name);
    id_of[name] = id;
  }
  if (j.contains("marked"))
    for (auto& m : j.at("marked")) {
      auto it = id_of.find(m.get<std::string>());
      if (it == id_of.end())
        throw std::invalid_argument("sset_from_json: unknown marked edge");
      S.marked.insert(it->second);
    }
  if (auto err = S.validate())
    throw std::invalid_argument("sset_from_json: " + *err);
  return S;
}

std::string sset_to_dot(const SimplicialSet& S) {
  std::string out = "digraph sset {\n";
  for (auto& c : S.cells)
    if (c.dim == 0) out += "  \"" + c.name + "\";\n";
  for (int x = 0; x < (int)S.cells.size(); ++x) {
    if (S.cells[x].dim != 1) continue;
    auto vs = S.vertices_of(x);
    out += "  \"" + S.cells[vs[0]].name + "\" -> \"" + S.cells[vs[1]].name +
           "\"";
    if (S.marked.count(x)) out += " [style=bold,label=\"~\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ssok
