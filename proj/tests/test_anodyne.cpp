#include <doctest.h>

#include "ssok/anodyne.hpp"
#include "ssok/anodyne_search.hpp"
#include "ssok/appendix_suite.hpp"
#include "ssok/build.hpp"
#include "ssok/iso.hpp"
#include "ssok/kan.hpp"
#include "ssok/nerve.hpp"
#include "ssok/ops.hpp"
#include "ssok/pushout_join.hpp"
#include "ssok/shapes.hpp"

using namespace ssok;

namespace {

SimplicialMap sub_incl(const SimplicialSet& A, const SimplicialSet& B) {
  return named_subcomplex_map(A, B);
}

AttachmentCertificate found(const SimplicialMap& incl, AnodyneClass cls,
                            const std::vector<std::vector<int>>& guide = {},
                            SearchBudget budget = {}) {
  auto res = search_decomposition(incl, cls, budget, guide);
  REQUIRE_MESSAGE(res.status == SearchStatus::Found, res.detail);
  auto v = verify_certificate(*res.cert);
  REQUIRE_MESSAGE(v.ok, v.error);
  return *res.cert;
}

SimplicialMap identity_inclusion(SimplicialSet src, SimplicialSet tgt) {
  std::vector<SimplexTerm> img;
  for (int c = 0; c < src.total(); ++c)
    img.push_back(SimplexTerm{identity_map(src.cells[c].dim), c});
  return make_map(std::move(src), std::move(tgt), std::move(img));
}

FiniteCategory corpus_cat(const std::string& name) {
  for (auto& C : category_corpus())
    if (C.name == name) return C;
  throw std::runtime_error("no such corpus category: " + name);
}

}  // namespace

TEST_CASE("generator instances are marked monomorphisms") {
  struct Inst {
    GenClass g;
    int n, k;
  };
  std::vector<Inst> insts;
  for (int n = 1; n <= 3; ++n) {
    insts.push_back({GenClass::Cell, n, 0});
    insts.push_back({GenClass::CellFlat, n, 0});
    insts.push_back({GenClass::LHornSharp, n, 0});
    insts.push_back({GenClass::RHornSharp, n, n});
    for (int k = 1; k < n; ++k) {
      insts.push_back({GenClass::InnHorn, n, k});
      insts.push_back({GenClass::InnHornFlat, n, k});
    }
  }
  insts.push_back({GenClass::MarkedTriangle, 2, 0});
  for (auto& i : insts) {
    auto f = generator_instance(i.g, i.n, i.k);
    CHECK_MESSAGE(!validate_map(f), to_string(i.g));
    CHECK_MESSAGE(is_mono(f), to_string(i.g));
    CHECK_MESSAGE(preserves_marking(f), to_string(i.g));
  }
  CHECK(generator_instance(GenClass::LHornSharp, 2, 0).tgt->marked.size() == 1);
  CHECK_THROWS(generator_instance(GenClass::InnHorn, 2, 0));
  CHECK_THROWS(generator_instance(GenClass::KanMark, 0, 0));
}

TEST_CASE("a single inner horn fills the 2-simplex") {
  auto incl = generator_instance(GenClass::InnHorn, 2, 1);
  int top = *incl.tgt->id_by_name("012");
  AttachmentCertificate cert{incl, AnodyneClass::Inner,
                             {{GenClass::InnHorn, 2, 1, top, {}, 0}}};
  auto v = verify_certificate(cert);
  CHECK_MESSAGE(v.ok, v.error);

  // wrong cell, wrong class, truncation
  cert.steps[0].cell = 0;
  CHECK_FALSE(verify_certificate(cert).ok);
  cert.steps[0].cell = top;
  cert.target_class = AnodyneClass::Marked;
  CHECK_FALSE(verify_certificate(cert).ok);
  cert.target_class = AnodyneClass::Inner;
  cert.steps.clear();
  auto v2 = verify_certificate(cert);
  CHECK_FALSE(v2.ok);
  CHECK(v2.failed_step == -1);
}

TEST_CASE("spine inclusions are inner anodyne up to dimension 5") {
  for (int n = 2; n <= 5; ++n) {
    auto cert =
        found(sub_incl(spine(n), standard_simplex(n)), AnodyneClass::Inner);
    // each step attaches one top cell and one free face
    CHECK(2 * (int)cert.steps.size() ==
          standard_simplex(n).total() - spine(n).total());
    for (auto& s : cert.steps) CHECK(s.cls == GenClass::InnHorn);
  }
}

TEST_CASE("replayed certificates reject tampering") {
  auto cert =
      found(sub_incl(spine(3), standard_simplex(3)), AnodyneClass::Inner);
  auto dup = cert;
  dup.steps.push_back(dup.steps.back());
  auto v = verify_certificate(dup);
  CHECK_FALSE(v.ok);
  CHECK(v.failed_step == (int)dup.steps.size() - 1);
  auto trunc = cert;
  trunc.steps.pop_back();
  CHECK_FALSE(verify_certificate(trunc).ok);
}

TEST_CASE("boundary of the 2-simplex is rejected with a nerve witness") {
  auto res = search_decomposition(sub_incl(boundary(2), standard_simplex(2)),
                                  AnodyneClass::Inner);
  REQUIRE(res.status == SearchStatus::NoneWitnessed);
  REQUIRE(res.witness.has_value());
  const auto& w = *res.witness;
  CHECK(w.cat.name == "parallel");
  // replay the witness: the lifting problem really has no solution
  auto N = nerve_truncated(w.cat, 2);
  CHECK_FALSE(validate_map(w.problem).has_value());
  const SimplicialSet& A = *w.problem.src;
  auto T = standard_simplex(2);
  std::vector<SimplexTerm> partial(T.total());
  std::vector<bool> fixed(T.total(), false);
  for (int a = 0; a < A.total(); ++a) {
    auto id = T.id_by_name(A.cells[a].name);
    REQUIRE(id.has_value());
    partial[*id] = w.problem.img[a];
    fixed[*id] = true;
  }
  CHECK(enumerate_extensions(T, *w.problem.tgt, partial, fixed, 1).empty());
}

TEST_CASE("tiny budgets are reported honestly") {
  auto res = search_decomposition(sub_incl(spine(4), standard_simplex(4)),
                                  AnodyneClass::Inner, SearchBudget{10000, 3});
  CHECK(res.status == SearchStatus::NoneWithinBudget);
  CHECK(res.detail == "budget exhausted");
}

TEST_CASE("certificates survive a JSON round trip") {
  auto cert =
      found(sub_incl(spine(3), standard_simplex(3)), AnodyneClass::Inner);
  auto j = certificate_to_json(cert);
  CHECK(j.at("class") == "inner");
  CHECK(j.at("steps").size() == cert.steps.size());
  CHECK(j.at("steps")[0].at("generator").contains("class"));
  CHECK(j.at("steps")[0].at("attach").contains("cell"));
  auto back = certificate_from_json(j);
  auto v = verify_certificate(back);
  CHECK_MESSAGE(v.ok, v.error);
  CHECK(certificate_to_json(back) == j);
}

TEST_CASE("finite Kan checks") {
  CHECK(kan_check(standard_simplex(0), 3).kan);
  auto v = kan_check(standard_simplex(1), 2);
  CHECK_FALSE(v.kan);
  CHECK_FALSE(v.counterexample.empty());
  CHECK(kan_check(nerve_truncated(corpus_cat("z2"), 2), 2).kan);
  CHECK_FALSE(kan_check(nerve_truncated(corpus_cat("arrow"), 2), 2).kan);
}

TEST_CASE("Kan remarking steps") {
  auto K = nerve_truncated(corpus_cat("z2"), 2);
  auto incl = identity_inclusion(flat(K), sharp(K));
  std::vector<int> all;
  for (int c = 0; c < K.total(); ++c) all.push_back(c);
  AttachmentCertificate cert{incl, AnodyneClass::Marked,
                             {{GenClass::KanMark, 0, 0, -1, all, 2}}};
  auto v = verify_certificate(cert);
  CHECK_MESSAGE(v.ok, v.error);

  // a non-Kan complex must be rejected
  auto bad = identity_inclusion(standard_simplex(1), sharp(standard_simplex(1)));
  AttachmentCertificate bcert{bad, AnodyneClass::Marked,
                              {{GenClass::KanMark, 0, 0, -1, {0, 1, 2}, 2}}};
  auto bv = verify_certificate(bcert);
  CHECK_FALSE(bv.ok);
  CHECK(bv.error.find("not Kan") != std::string::npos);
}

TEST_CASE("pushout-join identities for horns and boundaries") {
  auto R = check_pushout_join_identities(4);
  CHECK_MESSAGE(R.ok, R.failure);
  CHECK(R.checked > 0);

  // the base case: joining two empty boundaries gives dDelta^1 c Delta^1
  auto pt = make_map(empty_sset(), standard_simplex(0), {});
  auto lhs = pushout_join(pt, pt);
  auto rhs = sub_incl(boundary(1), standard_simplex(1));
  CHECK(maps_isomorphic(lhs, rhs).status == IsoStatus::Iso);
}

TEST_CASE("prism against join inclusions up to m = 3") {
  for (int m = 1; m <= 3; ++m) {
    auto incl = prism_to_join_inclusion(m);
    CHECK(incl.src->marked.size() == (size_t)(m * (m + 1) / 2));
    found(incl, AnodyneClass::Marked, prism_to_join_guide(m));
  }
}

TEST_CASE("the marked subcomplex of the 7-simplex is right marked anodyne") {
  auto incl = seven_simplex_inclusion();
  CHECK(incl.src->marked.size() == 1);
  CHECK(incl.tgt->marked.size() == 1);
  auto cert = found(incl, AnodyneClass::RightMarked, seven_simplex_guide());
  int sharp_steps = 0;
  for (auto& s : cert.steps)
    if (s.cls == GenClass::RHornSharp) ++sharp_steps;
  CHECK(sharp_steps >= 1);  // right outer steps are genuinely needed
}

TEST_CASE("shape comparison inclusions carry marked certificates") {
  for (int d = 0; d <= 1; ++d) {
    auto Z = zigzag_shapes(standard_simplex(d));
    found(Z.i0, AnodyneClass::Marked);
    found(Z.i1, AnodyneClass::Marked);
    found(Z.i2, AnodyneClass::Marked);
  }
}

TEST_CASE("order join inclusions are marked anodyne") {
  auto R = run_appendix_suite(4);
  CHECK_MESSAGE(R.ok, R.failure);
  CHECK(R.identities_checked > 0);
  CHECK(R.certificates_found > 0);
}
