#include <random>

#include "algebras.hpp"
#include "doctest.h"
#include "sht/dold_kan.hpp"
#include "sht/error.hpp"

using namespace sht;

namespace {

CochainComplex single(int degree) {
  CochainComplex c;
  c.dims.assign(degree + 1, 0);
  c.dims[degree] = 1;
  for (int n = 0; n < degree; ++n) c.d.emplace_back(c.dims[n + 1], c.dims[n]);
  return c;
}

CochainComplex identity_complex() {
  CochainComplex c;
  c.dims = {1, 1};
  c.d.push_back(RationalMatrix::identity(1));
  return c;
}

CochainComplex truncate(const CochainComplex& c, int m) {
  CochainComplex out;
  for (int n = 0; n <= m; ++n) out.dims.push_back(n <= c.top_degree() ? c.dims[n] : 0);
  for (int n = 0; n < m; ++n)
    out.d.push_back(n < static_cast<int>(c.d.size()) ? c.d[n] : RationalMatrix(out.dims[n + 1], out.dims[n]));
  return out;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// algebra with a nonzero differential: a (1), b (2), ab (3); da = b, b^2 = 0
Cdga small_cdga() {
  AlgebraPresentation p;
  p.name = "cone";
  p.basis = {{"1", 0, {}}, {"a", 1, {}}, {"b", 2, {}}, {"ab", 3, {}}};
  p.unit_id = "1";
  p.products = {{"a", "b", {{"ab", 1}}}};
  Cdga c = Cdga::formal(GradedAlgebra::from(p));
  c.d[1].set(0, 0, 1);
  return c;
}

}  // namespace

TEST_CASE("surjection counts") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(static_cast<long>(surjections(n, k).size()) == binom(n, k));
  CHECK(surjections(2, 3).empty());
  CHECK(surjections(3, 1).front() == SimplexMap{0, 0, 0, 1});
}

TEST_CASE("denormalize examples") {
  SUBCASE("Q in degree 0 is constant") {
    CosimplicialVS v = denormalize(single(0), 5);
    for (int n = 0; n <= 5; ++n) CHECK(v.dims[n] == 1);
    for (const auto& level : v.cofaces)
      for (const auto& f : level) CHECK(f == RationalMatrix::identity(1));
    CochainComplex c = normalize(v);
    CHECK(c.dims == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
  }
  SUBCASE("Q in degree 1 has dimension n at level n") {
    CosimplicialVS v = denormalize(single(1), 5);
    for (int n = 0; n <= 5; ++n) CHECK(v.dims[n] == static_cast<std::size_t>(n));
  }
  SUBCASE("Q -> Q round trip") {
    CochainComplex c = identity_complex();
    CHECK(normalize(denormalize(c, 4)) == truncate(c, 4));
  }
}

TEST_CASE("cosimplicial identities hold on denormalizations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CochainComplex c = random_cochain_complex(rng, 4, 3);
    CosimplicialVS v = denormalize(c, 4);
    auto bad = v.identity_violation();
    CHECK_MESSAGE(!bad, (bad ? *bad : ""));
  }
}

TEST_CASE("round trip on random complexes") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    CochainComplex c = random_cochain_complex(rng, 5, 4);
    int m = std::uniform_int_distribution<int>(0, 5)(rng);
    INFO("trial " << trial << " m " << m);
    CHECK(normalize(denormalize(c, m)) == truncate(c, m));
  }
}

TEST_CASE("violations are named") {
  CosimplicialVS v = denormalize(identity_complex(), 2);
  v.cofaces[0][1] = v.cofaces[0][0];  // breaks d^1 d^0 = d^0 d^0
  auto bad = v.identity_violation();
  REQUIRE(bad);
  CHECK(bad->find("d^") != std::string::npos);
  try {
    normalize(v);
    FAIL("expected SIMPLICIAL_IDENTITY_VIOLATION");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SimplicialIdentityViolation);
  }
  CosimplicialVS w = denormalize(identity_complex(), 2);
  w.codegeneracies[1][0] = RationalMatrix(w.dims[0], w.dims[1]);
  REQUIRE(w.identity_violation());
  CHECK(w.identity_violation()->find("s^0") != std::string::npos);
}

TEST_CASE("shuffle products") {
  SUBCASE("degree-0 algebra gives a constant cosimplicial algebra") {
    AlgebraPresentation p;
    p.basis = {{"1", 0, {}}};
    p.unit_id = "1";
    CosimplicialAlgebra a = denormalize_algebra(Cdga::formal(GradedAlgebra::from(p)), 3);
    for (int n = 0; n <= 3; ++n) CHECK(a.vs().dims[n] == 1);
    AlgebraCheck r = check_cosimplicial_algebra(a, 3);
    CHECK(r.ok);
  }
  SUBCASE("free algebra on a degree-2 cocycle, levels <= 4") {
    AlgebraPresentation p = testalg::cpn(4);  // Q[x]/x^5 through degree 8 covers levels <= 4
    CosimplicialAlgebra a = denormalize_algebra(Cdga::formal(GradedAlgebra::from(p)), 4);
    AlgebraCheck r = check_cosimplicial_algebra(a, 3);
    for (const auto& s : r.problems) MESSAGE(s);
    CHECK(r.ok);
  }
  SUBCASE("nonzero differential") {
    CosimplicialAlgebra a = denormalize_algebra(small_cdga(), 4);
    AlgebraCheck r = check_cosimplicial_algebra(a, 3);
    for (const auto& s : r.problems) MESSAGE(s);
    CHECK(r.ok);
    CHECK(normalize(a.vs()) == truncate(small_cdga().complex(), 4));
  }
  SUBCASE("CP2 round trip through level 5") {
    Cdga c = Cdga::formal(GradedAlgebra::from(testalg::cpn(2)));
    CosimplicialAlgebra a = denormalize_algebra(c, 5);
    CHECK(normalize(a.vs()) == truncate(c.complex(), 5));
  }
}

TEST_CASE("NOT_A_CDGA") {
  SUBCASE("Leibniz") {
    Cdga c = small_cdga();
    c.d[2] = RationalMatrix(1, 1);
    c.d[2].set(0, 0, 1);  // d b = ab: d^2 a != 0
    try {
      denormalize_algebra(c, 2);
      FAIL("expected NOT_A_CDGA");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotACdga);
    }
  }
  SUBCASE("Leibniz alone") {
    Cdga c = small_cdga();
    c.d[1].set(0, 0, 2);
    CHECK_NOTHROW(c.check());
    // d(1) = a with d(a) = 0: d^2 = 0 but d(1*1) != 2 d(1)
    c.d[1] = RationalMatrix(1, 1);
    c.d[0].set(0, 0, 1);
    CHECK_THROWS_AS(c.check(), Error);
  }
}
