#include "algebras.hpp"
#include "doctest.h"
#include "sht/error.hpp"
#include "sht/sullivan_oracle.hpp"

using namespace sht;

namespace {

std::map<int, std::size_t> expected(int n, std::map<int, std::size_t> nonzero) {
  std::map<int, std::size_t> out;
  for (int k = 2; k <= n; ++k) out[k] = nonzero.count(k) ? nonzero[k] : 0;
  return out;
}

}  // namespace

TEST_CASE("S2: x in degree 2, y in degree 3 with dy = x^2") {
  MinimalModel mm = minimal_model(testalg::sphere(2), 8);
  CHECK(mm.counts() == expected(8, {{2, 1}, {3, 1}}));
  const auto& y = mm.generators()[1];
  CHECK(y.degree == 3);
  REQUIRE(y.differential.size() == 1);
  CHECK(y.differential.begin()->first == Monomial{0, 0});
  CHECK(mm.format(y.differential).find("g2_1*g2_1") != std::string::npos);
  CHECK(verify(mm).ok);
}

TEST_CASE("CP2: dy = x^3 in degree 5") {
  MinimalModel mm = minimal_model(testalg::cpn(2), 8);
  CHECK(mm.counts() == expected(8, {{2, 1}, {5, 1}}));
  CHECK(mm.generators()[1].differential.begin()->first == Monomial{0, 0, 0});
  CHECK(verify(mm).ok);
}

TEST_CASE("odd spheres have one generator") {
  for (int n : {3, 5, 7}) {
    MinimalModel mm = minimal_model(testalg::sphere(n), 8);
    CHECK(mm.counts() == expected(8, {{n, 1}}));
    CHECK(verify(mm).ok);
  }
}

TEST_CASE("products and wedges") {
  MinimalModel sxs = minimal_model(testalg::s2_x_s2(), 7);
  CHECK(sxs.counts() == expected(7, {{2, 2}, {3, 2}}));
  CHECK(verify(sxs).ok);
  MinimalModel wedge = minimal_model(testalg::wedge_s2_s2(), 5);
  CHECK(wedge.count(2) == 2);
  CHECK(wedge.count(3) == 3);
  CHECK(verify(wedge).ok);
}

TEST_CASE("graded commutative arithmetic") {
  MinimalModel mm = minimal_model(testalg::sphere(3), 6);
  // single odd generator squares to zero
  SymPoly x{{{0}, 1}};
  CHECK(mm.multiply(x, x).empty());
  MinimalModel sxs = minimal_model(testalg::s2_x_s2(), 4);
  // generators: a, b (deg 2), then two of degree 3; odd ones anticommute
  SymPoly u{{{2}, 1}}, v{{{3}, 1}};
  SymPoly uv = sxs.multiply(u, v), vu = sxs.multiply(v, u);
  REQUIRE(uv.size() == 1);
  CHECK(uv.begin()->second == -vu.begin()->second);
}

TEST_CASE("compare against homotopy tables") {
  for (const auto& p : {testalg::sphere(2), testalg::cpn(2), testalg::cpn(3), testalg::s2_x_s2()}) {
    INFO(p.name);
    MinimalModel mm = minimal_model(p, 8);
    HomotopyTable t = homotopy_table(build_model(p, 8, 8), 8, 8);
    CompareReport r = compare(mm, t);
    CHECK(r.pass);
    CHECK(r.mismatched.empty());
  }
  SUBCASE("S2 through degree 10") {
    MinimalModel mm = minimal_model(testalg::sphere(2), 10);
    CHECK(compare(mm, homotopy_table(build_model(testalg::sphere(2), 10, 10), 10, 10)).pass);
  }
  SUBCASE("a corrupted table fails and names the degree") {
    MinimalModel mm = minimal_model(testalg::cpn(2), 8);
    HomotopyTable t = homotopy_table(build_model(testalg::cpn(2), 8, 8), 8, 8);
    t.entries[{4, 2, {}}] = 1;
    CompareReport r = compare(mm, t);
    CHECK(!r.pass);
    CHECK(r.mismatched == std::vector<int>{4});
  }
  SUBCASE("cutoff mismatch") {
    MinimalModel mm = minimal_model(testalg::cpn(2), 8);
    HomotopyTable t = homotopy_table(build_model(testalg::cpn(2), 6, 6), 6, 6);
    try {
      compare(mm, t);
      FAIL("expected CUTOFF_MISMATCH");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CutoffMismatch);
    }
  }
}

TEST_CASE("non simply connected input is refused") {
  try {
    minimal_model(testalg::torus2(), 4);
    FAIL("expected NOT_SIMPLY_CONNECTED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimplyConnected);
  }
}
