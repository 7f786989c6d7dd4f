#pragma once

// Sullivan minimal model of a simply connected algebra with zero differential,
// built degree by degree. Generator counts are the rational homotopy ranks, so
// this is an independent check on the Lie-model computation.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sht/exactlin.hpp"
#include "sht/graded_core.hpp"
#include "sht/quillen_weight.hpp"

namespace sht {

/// Sorted generator indices; odd generators appear at most once.
using Monomial = std::vector<std::size_t>;
using SymPoly = std::map<Monomial, Rational>;

struct SullivanGenerator {
  std::string name;
  int degree = 0;
  SymPoly differential;
  Vector image;  // coordinates over the whole target basis
};

class MinimalModel {
 public:
  int max_degree() const { return n_; }
  const GradedAlgebra& target() const { return algebra_; }
  const std::vector<SullivanGenerator>& generators() const { return gens_; }

  std::size_t count(int degree) const;
  /// Degree -> number of generators, for 2..max_degree.
  std::map<int, std::size_t> counts() const;

  /// Basis monomials of a degree, in deterministic order.
  std::vector<Monomial> monomials(int degree) const;
  int degree(const Monomial& m) const;
  SymPoly multiply(const SymPoly& a, const SymPoly& b) const;
  SymPoly d(const SymPoly& f) const;
  /// Image in the target, as coordinates over its whole basis.
  Vector phi(const SymPoly& f) const;
  std::string format(const SymPoly& f) const;

 private:
  friend MinimalModel minimal_model(const AlgebraPresentation& p, int n);
  GradedAlgebra algebra_;
  int n_ = 0;
  std::vector<SullivanGenerator> gens_;
};

/// Standard degreewise construction through degree n. NOT_SIMPLY_CONNECTED
/// for input with degree-1 classes; DEGREE_CUTOFF when a degree needs more
/// monomials than the internal bound; INVALID_INPUT for invalid input.
MinimalModel minimal_model(const AlgebraPresentation& p, int n);

struct ModelCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// d^2 = 0, minimality, phi a chain map, and H(phi) an isomorphism through
/// max_degree and injective one degree above.
ModelCheck verify(const MinimalModel& mm);

struct CompareReport {
  bool pass = true;
  std::vector<int> mismatched;
  std::map<int, std::pair<std::size_t, std::size_t>> rows;  // m -> (generators, table total)
};

/// Generator count in degree m against the summed table row, 2 <= m <= N.
/// CUTOFF_MISMATCH when the table's max_m differs from the model's degree or
/// the table is incomplete.
CompareReport compare(const MinimalModel& mm, const HomotopyTable& ht);

}  // namespace sht
