#include "ssok/anodyne.hpp"

#include <stdexcept>

#include "ssok/build.hpp"
#include "ssok/kan.hpp"
#include "ssok/sset_json.hpp"

namespace ssok {

std::string to_string(GenClass g) {
  switch (g) {
    case GenClass::Cell: return "Cell";
    case GenClass::InnHorn: return "InnHorn";
    case GenClass::CellFlat: return "CellFlat";
    case GenClass::InnHornFlat: return "InnHornFlat";
    case GenClass::LHornSharp: return "LHornSharp";
    case GenClass::RHornSharp: return "RHornSharp";
    case GenClass::MarkedTriangle: return "MarkedTriangle";
    case GenClass::KanMark: return "KanMark";
  }
  throw std::invalid_argument("bad GenClass");
}

std::string to_string(AnodyneClass c) {
  switch (c) {
    case AnodyneClass::Inner: return "inner";
    case AnodyneClass::Marked: return "marked";
    case AnodyneClass::RightMarked: return "right-marked";
    case AnodyneClass::LeftMarked: return "left-marked";
  }
  throw std::invalid_argument("bad AnodyneClass");
}

GenClass gen_class_from_string(const std::string& s) {
  for (auto g : {GenClass::Cell, GenClass::InnHorn, GenClass::CellFlat,
                 GenClass::InnHornFlat, GenClass::LHornSharp,
                 GenClass::RHornSharp, GenClass::MarkedTriangle,
                 GenClass::KanMark})
    if (to_string(g) == s) return g;
  throw std::invalid_argument("unknown generator class: " + s);
}

AnodyneClass anodyne_class_from_string(const std::string& s) {
  for (auto c : {AnodyneClass::Inner, AnodyneClass::Marked,
                 AnodyneClass::RightMarked, AnodyneClass::LeftMarked})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown anodyne class: " + s);
}

bool generator_allowed(GenClass g, AnodyneClass cls) {
  switch (cls) {
    case AnodyneClass::Inner:
      return g == GenClass::InnHorn;
    case AnodyneClass::Marked:
      return g == GenClass::InnHornFlat || g == GenClass::LHornSharp ||
             g == GenClass::RHornSharp || g == GenClass::MarkedTriangle ||
             g == GenClass::KanMark;
    case AnodyneClass::RightMarked:
      return g == GenClass::InnHornFlat || g == GenClass::RHornSharp ||
             g == GenClass::MarkedTriangle || g == GenClass::KanMark;
    case AnodyneClass::LeftMarked:
      return g == GenClass::InnHornFlat || g == GenClass::LHornSharp ||
             g == GenClass::MarkedTriangle || g == GenClass::KanMark;
  }
  return false;
}

namespace {

SimplicialMap name_inclusion(const SimplicialSet& A, const SimplicialSet& B) {
  std::vector<SimplexTerm> img;
  for (auto& c : A.cells) {
    auto id = B.id_by_name(c.name);
    if (!id) throw std::invalid_argument("name_inclusion: missing " + c.name);
    img.push_back(SimplexTerm{identity_map(c.dim), *id});
  }
  return make_map(A, B, std::move(img));
}

std::string edge_name(int u, int v) {
  return std::to_string(u) + std::to_string(v);
}

}  // namespace

SimplicialMap generator_instance(GenClass g, int n, int k) {
  switch (g) {
    case GenClass::Cell:
    case GenClass::CellFlat:
      return name_inclusion(boundary(n), standard_simplex(n));
    case GenClass::InnHorn:
    case GenClass::InnHornFlat: {
      if (!(0 < k && k < n)) throw std::invalid_argument("inner horn range");
      return name_inclusion(horn(n, k), standard_simplex(n));
    }
    case GenClass::LHornSharp: {
      if (n < 1 || k != 0) throw std::invalid_argument("left horn range");
      auto H = horn(n, 0);
      auto D = mark_edges(standard_simplex(n), {edge_name(0, 1)});
      if (n >= 2) H = mark_edges(std::move(H), {edge_name(0, 1)});
      return name_inclusion(H, D);
    }
    case GenClass::RHornSharp: {
      if (n < 1 || k != n) throw std::invalid_argument("right horn range");
      auto H = horn(n, n);
      auto D = mark_edges(standard_simplex(n), {edge_name(n - 1, n)});
      if (n >= 2) H = mark_edges(std::move(H), {edge_name(n - 1, n)});
      return name_inclusion(H, D);
    }
    case GenClass::MarkedTriangle: {
      auto S = mark_edges(standard_simplex(2), {"01", "12"});
      auto D = mark_edges(standard_simplex(2), {"01", "12", "02"});
      return name_inclusion(S, D);
    }
    case GenClass::KanMark:
      throw std::invalid_argument("KanMark instances need an explicit complex");
  }
  throw std::invalid_argument("bad GenClass");
}

bool Stage::complete() const {
  for (char h : has)
    if (!h) return false;
  return marks == T->marked;
}

std::optional<Stage> Stage::from_inclusion(const SimplicialMap& incl,
                                           std::string* err) {
  if (auto e = validate_map(incl)) {
    if (err) *err = "inclusion invalid: " + *e;
    return std::nullopt;
  }
  if (!is_mono(incl)) {
    if (err) *err = "inclusion is not a monomorphism";
    return std::nullopt;
  }
  Stage st;
  st.T = incl.tgt.get();
  st.has.assign(st.T->total(), 0);
  std::vector<int> stack;
  for (auto& t : incl.img) stack.push_back(t.nd);
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (st.has[c]) continue;
    st.has[c] = 1;
    for (auto& f : st.T->cells[c].faces) stack.push_back(f.nd);
  }
  for (int e : incl.src->marked) {
    const SimplexTerm& t = incl.img[e];
    if (t.nondeg()) st.marks.insert(t.nd);
  }
  return st;
}

std::optional<std::string> apply_step(Stage& st, const AttachmentStep& s,
                                      AnodyneClass cls) {
  const SimplicialSet& T = *st.T;
  if (!generator_allowed(s.cls, cls))
    return to_string(s.cls) + " not allowed in class " + to_string(cls);

  if (s.cls == GenClass::KanMark) {
    for (int c : s.kan_cells) {
      if (c < 0 || c >= T.total()) return "Kan subcomplex cell out of range";
      if (!st.has[c]) return "Kan subcomplex not contained in the stage";
    }
    auto K = subcomplex(T, s.kan_cells);
    K.sset = flat(std::move(K.sset));
    auto v = kan_check(K.sset, s.kan_bound);
    if (!v.kan) return "cited complex is not Kan: " + v.counterexample;
    bool grew = false;
    for (int c = 0; c < (int)K.old_of_new.size(); ++c)
      if (K.sset.cells[c].dim == 1 && !st.marks.count(K.old_of_new[c])) {
        st.marks.insert(K.old_of_new[c]);
        grew = true;
      }
    if (!grew) return "Kan remarking adds no marks";
    return std::nullopt;
  }

  if (s.cell < 0 || s.cell >= T.total()) return "cell out of range";
  auto edge_ok = [&](int u, int v) {
    SimplexTerm e = act(T, T.term(s.cell), Ord{u, v});
    return !e.nondeg() || (st.has[e.nd] && st.marks.count(e.nd) > 0);
  };

  if (s.cls == GenClass::MarkedTriangle) {
    if (T.cells[s.cell].dim != 2) return "triangle step needs a 2-cell";
    if (!st.has[s.cell]) return "triangle not in the stage";
    if (!edge_ok(0, 1) || !edge_ok(1, 2)) return "triangle legs not marked";
    SimplexTerm e = act(T, T.term(s.cell), Ord{0, 2});
    if (!e.nondeg()) return "long edge degenerate";
    if (st.marks.count(e.nd)) return "long edge already marked";
    st.marks.insert(e.nd);
    return std::nullopt;
  }

  int n = s.n, k = s.k;
  if (T.cells[s.cell].dim != n) return "cell dimension mismatch";
  if (st.has[s.cell]) return "cell already present";
  switch (s.cls) {
    case GenClass::Cell:
    case GenClass::CellFlat:
      for (auto& f : T.cells[s.cell].faces)
        if (!st.has[f.nd]) return "boundary face missing";
      st.has[s.cell] = 1;
      return std::nullopt;
    case GenClass::InnHorn:
    case GenClass::InnHornFlat:
      if (!(0 < k && k < n)) return "inner horn index out of range";
      break;
    case GenClass::LHornSharp:
      if (k != 0 || n < 1) return "left horn index out of range";
      if (n >= 2 && !edge_ok(0, 1)) return "edge 0->1 not marked";
      break;
    case GenClass::RHornSharp:
      if (k != n || n < 1) return "right horn index out of range";
      if (n >= 2 && !edge_ok(n - 1, n)) return "last edge not marked";
      break;
    default:
      return "unexpected generator";
  }
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    if (!st.has[T.face(s.cell, i).nd]) return "horn face missing";
  }
  const SimplexTerm& free = T.face(s.cell, k);
  if (!free.nondeg()) return "free face degenerate";
  if (st.has[free.nd]) return "free face already present";
  st.has[free.nd] = 1;
  st.has[s.cell] = 1;
  if (n == 1 &&
      (s.cls == GenClass::LHornSharp || s.cls == GenClass::RHornSharp))
    st.marks.insert(s.cell);
  return std::nullopt;
}

Verdict verify_certificate(const AttachmentCertificate& cert) {
  std::string err;
  auto st = Stage::from_inclusion(cert.incl, &err);
  if (!st) return {false, -1, err};
  for (int i = 0; i < (int)cert.steps.size(); ++i)
    if (auto e = apply_step(*st, cert.steps[i], cert.target_class))
      return {false, i, *e};
  if (!st->complete()) return {false, -1, "replay does not reach the target"};
  return {true, -1, ""};
}

nlohmann::json smap_to_json(const SimplicialMap& f) {
  nlohmann::json img = nlohmann::json::array();
  for (auto& t : f.img) img.push_back({{"sur", t.sur}, {"nd", t.nd}});
  return {{"source", sset_to_json(*f.src)},
          {"target", sset_to_json(*f.tgt)},
          {"img", img}};
}

SimplicialMap smap_from_json(const nlohmann::json& j) {
  std::vector<SimplexTerm> img;
  for (auto& t : j.at("img"))
    img.push_back(
        SimplexTerm{t.at("sur").get<Ord>(), t.at("nd").get<int>()});
  return make_map(sset_from_json(j.at("source")),
                  sset_from_json(j.at("target")), std::move(img));
}

nlohmann::json certificate_to_json(const AttachmentCertificate& cert) {
  nlohmann::json steps = nlohmann::json::array();
  for (auto& s : cert.steps) {
    nlohmann::json gen = {{"class", to_string(s.cls)}, {"n", s.n}, {"k", s.k}};
    nlohmann::json attach;
    if (s.cls == GenClass::KanMark) {
      gen["kan_bound"] = s.kan_bound;
      attach["kan_cells"] = s.kan_cells;
    } else {
      attach["cell"] = s.cell;
    }
    steps.push_back({{"generator", gen}, {"attach", attach}});
  }
  return {{"inclusion", smap_to_json(cert.incl)},
          {"class", to_string(cert.target_class)},
          {"steps", steps}};
}

AttachmentCertificate certificate_from_json(const nlohmann::json& j) {
  AttachmentCertificate cert;
  cert.incl = smap_from_json(j.at("inclusion"));
  cert.target_class = anodyne_class_from_string(j.at("class").get<std::string>());
  for (auto& sj : j.at("steps")) {
    AttachmentStep s;
    auto& gen = sj.at("generator");
    s.cls = gen_class_from_string(gen.at("class").get<std::string>());
    s.n = gen.value("n", 0);
    s.k = gen.value("k", 0);
    s.kan_bound = gen.value("kan_bound", 0);
    auto& at = sj.at("attach");
    s.cell = at.value("cell", -1);
    if (at.contains("kan_cells"))
      s.kan_cells = at.at("kan_cells").get<std::vector<int>>();
    cert.steps.push_back(std::move(s));
  }
  return cert;
}

}  // namespace ssok
