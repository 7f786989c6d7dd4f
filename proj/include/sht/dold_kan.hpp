#pragma once

// Dual Dold-Kan correspondence between cochain complexes in degrees >= 0 and
// cosimplicial vector spaces, truncated at a level m. The denormalization of
// a commutative dg algebra carries the shuffle product.
//
// D(C)^n = sum over order-preserving surjections s : [n] -> [k] of C^k.
// Summands are ordered by k, then lexicographically by the value sequence
// of s, then by the basis of C^k.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sht/exactlin.hpp"
#include "sht/graded_core.hpp"

namespace sht {

struct CochainComplex {
  std::vector<std::size_t> dims;     // degrees 0..N
  std::vector<RationalMatrix> d;     // d[n] : C^n -> C^{n+1}, n = 0..N-1

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  /// Throws INVALID_INPUT on shape errors or d^2 != 0.
  void check() const;
  /// Degrees 0..m, zero-padded past the top degree.
  CochainComplex truncated(int m) const;
  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;
};

/// Order-preserving map [n] -> [n'] as its value sequence.
using SimplexMap = std::vector<int>;

/// All order-preserving surjections [n] -> [k], lexicographic.
std::vector<SimplexMap> surjections(int n, int k);
SimplexMap coface(int n, int i);       // [n] -> [n+1], skips i
SimplexMap codegeneracy(int n, int j); // [n+1] -> [n], hits j twice

struct CosimplicialVS {
  int levels = 0;                                 // truncation m
  std::vector<std::size_t> dims;                  // levels 0..m
  std::vector<std::vector<RationalMatrix>> cofaces;        // [n][i] : n -> n+1, n < m
  std::vector<std::vector<RationalMatrix>> codegeneracies; // [n][j] : n -> n-1, n >= 1 ([0] empty)

  /// First failing cosimplicial identity, e.g. "d^1 d^0 = d^0 d^0 at level 0".
  std::optional<std::string> identity_violation() const;
};

/// Level n basis labels of D(C): (surjection, basis index of C^k).
struct DenormalBasis {
  std::vector<std::pair<SimplexMap, std::size_t>> labels;
  std::size_t index(const SimplexMap& s, std::size_t b) const;
};

DenormalBasis denormal_basis(const std::vector<std::size_t>& dims, int n);

CosimplicialVS denormalize(const CochainComplex& c, int m);

/// N^n = intersection of the codegeneracy kernels, d = alternating sum of
/// cofaces; degrees 0..m. SIMPLICIAL_IDENTITY_VIOLATION names the identity.
CochainComplex normalize(const CosimplicialVS& v);

/// Graded-commutative algebra with a differential of degree +1.
struct Cdga {
  GradedAlgebra algebra;
  std::vector<RationalMatrix> d;  // d[n] : A^n -> A^{n+1} over in_degree order

  /// Zero differential.
  static Cdga formal(const GradedAlgebra& a);
  /// Throws NOT_A_CDGA when d^2 != 0 or the Leibniz rule fails.
  void check() const;
  CochainComplex complex() const;
};

class CosimplicialAlgebra {
 public:
  const CosimplicialVS& vs() const { return vs_; }
  const Cdga& source() const { return a_; }
  /// Shuffle product of two level-n vectors.
  Vector multiply(int n, const Vector& u, const Vector& v) const;
  Vector unit(int n) const;

 private:
  friend CosimplicialAlgebra denormalize_algebra(const Cdga& a, int m);
  Cdga a_;
  CosimplicialVS vs_;
  std::vector<DenormalBasis> bases_;
  std::vector<std::size_t> offsets_;  // algebra index -> position in its degree
};

/// NOT_A_CDGA when the input fails d^2 = 0 or Leibniz.
CosimplicialAlgebra denormalize_algebra(const Cdga& a, int m);

struct AlgebraCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Exhaustive on basis elements: unit, commutativity, associativity (levels
/// <= assoc_levels), and cofaces/codegeneracies multiplicative.
AlgebraCheck check_cosimplicial_algebra(const CosimplicialAlgebra& a, int assoc_levels);

/// Random complex with dims[k] <= max_dim for k <= max_degree.
CochainComplex random_cochain_complex(std::mt19937_64& rng, int max_degree, std::size_t max_dim);

}  // namespace sht
