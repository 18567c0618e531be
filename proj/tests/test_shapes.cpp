#include <doctest.h>

#include "ssok/build.hpp"
#include "ssok/iso.hpp"
#include "ssok/shapes.hpp"

using namespace ssok;

namespace {

int marked_count(const SimplicialSet& S) { return (int)S.marked.size(); }

void check_map(const SimplicialMap& f, const char* what, bool mono = true) {
  auto err = validate_map(f);
  if (err) FAIL_CHECK((std::string(what) + ": " + *err));
  if (mono) CHECK_MESSAGE(is_mono(f), what);
  CHECK_MESSAGE(preserves_marking(f), what);
}

}  // namespace

TEST_CASE("zigzag shapes on a point") {
  auto Z = zigzag_shapes(standard_simplex(0));
  CHECK(is_isomorphic(flat(Z.f0.sset),
                      product(standard_simplex(1), standard_simplex(1)).sset)
            .status == IsoStatus::Iso);
  CHECK(is_isomorphic(flat(Z.f1.sset), standard_simplex(3)).status == IsoStatus::Iso);
  CHECK(is_isomorphic(Z.f2.sset, standard_simplex(2)).status == IsoStatus::Iso);
  CHECK(is_isomorphic(flat(Z.f3.sset), standard_simplex(3)).status == IsoStatus::Iso);
  CHECK(is_isomorphic(flat(Z.g.sset), standard_simplex(3)).status == IsoStatus::Iso);
  CHECK(marked_count(Z.f0.sset) == 1);
  CHECK(marked_count(Z.f1.sset) == 1);
  CHECK(marked_count(Z.f2.sset) == 0);
  CHECK(marked_count(Z.f3.sset) == 1);
  CHECK(marked_count(Z.g.sset) == 1);
  check_map(Z.i0, "i0");
  check_map(Z.i1, "i1");
  check_map(Z.i2, "i2");
  check_map(Z.p, "p", false);
}

TEST_CASE("zigzag shapes on the interval") {
  auto Z = zigzag_shapes(standard_simplex(1));
  CHECK(Z.f0.sset.count(0) == 6);
  CHECK(Z.f0.sset.count(1) == 12);
  CHECK(is_isomorphic(flat(Z.f1.sset), standard_simplex(5)).status == IsoStatus::Iso);
  CHECK(is_isomorphic(Z.f2.sset, standard_simplex(3)).status == IsoStatus::Iso);
  CHECK(is_isomorphic(flat(Z.f3.sset), standard_simplex(5)).status == IsoStatus::Iso);
  CHECK(Z.g.sset.count(0) == 6);
  CHECK(Z.g.sset.count(1) == 19);
  CHECK(marked_count(Z.f0.sset) == 3);
  CHECK(marked_count(Z.f1.sset) == 3);
  CHECK(marked_count(Z.f3.sset) == 3);
  CHECK(marked_count(Z.g.sset) == 2);
  check_map(Z.i0, "i0");
  check_map(Z.i1, "i1");
  check_map(Z.i2, "i2");
  check_map(Z.p, "p", false);
}

TEST_CASE("shape vertex labels") {
  auto Z = zigzag_shapes(standard_simplex(1));
  int tilded = 0;
  for (auto& s : Z.f0.vertex_label)
    if (!s.empty() && s.back() == '~') ++tilded;
  CHECK(tilded == 3);
  CHECK(Z.f1.sset.id_by_name("<").has_value());
  CHECK(Z.f3.sset.id_by_name("<~").has_value());
}

TEST_CASE("collapse retraction") {
  for (int m = 0; m <= 2; ++m) {
    auto Z = zigzag_shapes(standard_simplex(m));
    REQUIRE(Z.has_section);
    INFO(m);
    auto err = validate_map(Z.e);
    if (err) FAIL_CHECK(*err);
    CHECK(is_mono(Z.e));
    auto pe = compose(Z.e, Z.p);
    REQUIRE(pe.img.size() == Z.f3.sset.cells.size());
    for (int c = 0; c < (int)Z.f3.sset.cells.size(); ++c) {
      CHECK(pe.img[c].nd == c);
      CHECK(is_identity(pe.img[c].sur));
    }
  }
}

TEST_CASE("shapes on a nontrivial complex") {
  // two points: the shapes stay valid and the maps still compare
  auto K = boundary(1);
  auto Z = zigzag_shapes(K);
  for (auto* S : {&Z.f0.sset, &Z.f1.sset, &Z.f2.sset, &Z.f3.sset, &Z.g.sset}) {
    auto err = S->validate();
    if (err) FAIL_CHECK(*err);
  }
  check_map(Z.i0, "i0");
  check_map(Z.i1, "i1");
  check_map(Z.i2, "i2");
  check_map(Z.p, "p", false);
  CHECK(!Z.has_section);
}

TEST_CASE("marked square and its flattening") {
  auto sq = marked_square();
  CHECK(marked_count(sq) == 1);
  auto r = square_to_triangle();
  auto err = validate_map(r);
  if (err) FAIL_CHECK(*err);
  // vertex map (x, y) -> x + y
  int hit0 = 0, hit1 = 0, hit2 = 0;
  for (int c = 0; c < (int)sq.cells.size(); ++c) {
    if (sq.cells[c].dim != 0) continue;
    int v = r.img[c].nd;
    hit0 += v == 0;
    hit1 += v == 1;
    hit2 += v == 2;
  }
  CHECK(hit0 == 1);
  CHECK(hit1 == 2);
  CHECK(hit2 == 1);
}
