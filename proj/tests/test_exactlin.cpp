#include <cstdlib>
#include <random>

#include "doctest.h"
#include "oracles/naive_linalg.hpp"
#include "sht/error.hpp"
#include "sht/exactlin.hpp"

using namespace sht;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                             double density = 1.0) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m.set(i, j, Rational(val(rng), 1 + std::abs(val(rng)) % 3));
  return m;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(RationalMatrix::identity(2)) == 2);
  CHECK(rank(RationalMatrix(3, 5)) == 0);
}

TEST_CASE("rank agrees with largest nonzero minor on random 5x7 matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix m(5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) m.set(i, j, Rational(val(rng)));
    // Force some rank deficiency now and then.
    if (trial % 3 == 0) m.set_row(4, m.row(0));
    CHECK(rank(m) == oracle::minor_rank(m.to_dense()));
  }
}

TEST_CASE("rank is transpose invariant and kernel complements it") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    RationalMatrix m = random_matrix(rng, r, c, -3, 3, 0.5);
    CHECK(rank(m) == rank(m.transpose()));
    SubspaceBasis k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == m.cols());
    for (std::size_t i = 0; i < k.dim(); ++i) {
      Vector y = m.apply(k.vector(i));
      for (const auto& x : y) CHECK(is_zero(x));
    }
  }
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).dim() == 0);

  SubspaceBasis z = kernel_basis(RationalMatrix(3, 3));
  REQUIRE(z.dim() == 3);
  CHECK(z == SubspaceBasis::whole(3));

  RationalMatrix row = RationalMatrix::from_dense({{1, 1}}, 2);
  SubspaceBasis k = kernel_basis(row);
  REQUIRE(k.dim() == 1);
  CHECK(k.vector(0) == Vector{1, -1});
}

TEST_CASE("Bareiss and sparse elimination produce the same RREF") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    RationalMatrix m = random_matrix(rng, r, c, -4, 4, 0.4);
    RowEchelon a = detail::rref_bareiss(m);
    RowEchelon b = detail::rref_sparse(m);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rows == b.rows);
    CHECK(a.pivots.size() == oracle::naive_rank(m.to_dense()));
  }
}

TEST_CASE("RREF canonical form: reduced, positive denominators, unit pivots") {
  std::mt19937 rng(3);
  RationalMatrix m = random_matrix(rng, 6, 8, -5, 5);
  RowEchelon e = rref(m);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    CHECK(e.rows.at(k, e.pivots[k]) == 1);
    for (std::size_t l = 0; l < e.pivots.size(); ++l)
      if (l != k) CHECK(is_zero(e.rows.at(l, e.pivots[k])));
    for (const auto& [j, v] : e.rows.row(k)) {
      CHECK(!is_zero(v));
      CHECK(v.get_den() > 0);
      Rational copy = v;
      copy.canonicalize();
      CHECK(copy == v);
    }
  }
}

TEST_CASE("results do not depend on row order") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m = random_matrix(rng, 7, 70, -2, 2, 0.1);
    RationalMatrix shuffled(0, m.cols());
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) shuffled.append_row(m.row(i));
    CHECK(rref(m).rows == rref(shuffled).rows);
    CHECK(kernel_basis(m) == kernel_basis(shuffled));
  }
}

TEST_CASE("homology_dim") {
  CHECK(homology_dim(RationalMatrix(4, 0), RationalMatrix(0, 4)) == 4);
  CHECK(homology_dim(RationalMatrix(3, 0), RationalMatrix::identity(3)) == 0);

  // Q^2 -> Q^3 -> Q^2 with d_out d_in = 0.
  RationalMatrix d_in = RationalMatrix::from_dense({{1, 0}, {1, 0}, {0, 0}}, 2);
  RationalMatrix d_out = RationalMatrix::from_dense({{1, -1, 0}, {2, -2, 0}}, 3);
  std::size_t expected = (3 - oracle::naive_rank(d_out.to_dense())) - oracle::naive_rank(d_in.to_dense());
  CHECK(expected == 1);
  CHECK(homology_dim(d_in, d_out) == expected);

  RationalMatrix bad_out = RationalMatrix::from_dense({{1, 0, 0}}, 3);
  try {
    homology_dim(d_in, bad_out);
    FAIL("expected COMPOSITION_NONZERO");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositionNonzero);
  }
}

TEST_CASE("subspace arithmetic") {
  SubspaceBasis a = SubspaceBasis::span(3, {{1, 0, 0}, {0, 1, 0}});
  SubspaceBasis b = SubspaceBasis::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(a, b) == SubspaceBasis::span(3, {{0, 1, 0}}));
  CHECK(sum(a, b) == SubspaceBasis::whole(3));
  CHECK(annihilator(a) == SubspaceBasis::span(3, {{0, 0, 1}}));

  RationalMatrix proj = RationalMatrix::from_dense({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 3);
  CHECK(image(proj, b).dim() == 0);
  CHECK(preimage(proj, SubspaceBasis(3)) == b);

  auto comp = complement_basis(SubspaceBasis::whole(3), a);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0] == Vector{0, 0, 1});

  auto coords = a.coordinates({2, Rational(1, 3), 0});
  REQUIRE(coords);
  CHECK(*coords == Vector{2, Rational(1, 3)});
  CHECK(!a.contains(Vector{0, 0, 1}));
}

TEST_CASE("solve") {
  RationalMatrix a = RationalMatrix::from_dense({{2, 0}, {0, 3}, {1, 1}}, 2);
  RationalMatrix b = RationalMatrix::from_dense({{4}, {3}, {3}}, 1);
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(x->at(0, 0) == 2);
  CHECK(x->at(1, 0) == 1);
  RationalMatrix bad = RationalMatrix::from_dense({{4}, {3}, {0}}, 1);
  CHECK(!solve(a, bad));
}
