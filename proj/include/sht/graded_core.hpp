#pragma once

// Finite-dimensional graded-commutative algebras given by structure constants,
// their semantic validation, and the dual reduced coproduct.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sht/rational.hpp"

namespace sht {

using Character = std::vector<long>;

/// Z^free_rank x Z/t_1 x ... x Z/t_k. Elements are integer tuples with the
/// torsion coordinates kept in [0, t_i).
class CharacterLattice {
 public:
  CharacterLattice() = default;
  CharacterLattice(std::size_t free_rank, std::vector<long> torsion);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<long>& torsion() const { return torsion_; }
  std::size_t arity() const { return free_rank_ + torsion_.size(); }

  Character zero() const { return Character(arity(), 0); }
  Character reduce(Character c) const;
  Character add(const Character& a, const Character& b) const;
  bool is_zero(const Character& c) const { return reduce(c) == zero(); }

  friend bool operator==(const CharacterLattice&, const CharacterLattice&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<long> torsion_;
};

std::string format_character(const Character& c);

struct Term {
  std::string id;
  Rational coeff;
};

/// One listed product left * right = sum of terms; listed for left <= right in
/// basis order only.
struct ProductEntry {
  std::string left;
  std::string right;
  std::vector<Term> result;
};

struct BasisElement {
  std::string id;
  int degree = 0;
  Character character;  // empty means zero
};

/// Raw presentation mirroring the JSON input document.
struct AlgebraPresentation {
  std::string name;
  CharacterLattice lattice;
  std::vector<BasisElement> basis;
  std::string unit_id;
  std::vector<ProductEntry> products;
};

struct ValidationIssue {
  std::string code;     // e.g. "ASSOCIATIVITY", "DEGREE_MISMATCH"
  std::string message;  // names the offending ids
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(const std::string& code) const;
};

ValidationReport validate_algebra(const AlgebraPresentation& p);

/// Sparse coordinates over basis indices, sorted, nonzero.
using LinearCombination = std::vector<std::pair<std::size_t, Rational>>;

/// Validated, index-resolved form of a presentation with the full product
/// table (both orders, unit products included).
class GradedAlgebra {
 public:
  /// Throws INVALID_INPUT listing the validation issues.
  static GradedAlgebra from(const AlgebraPresentation& p);

  const std::string& name() const { return name_; }
  const CharacterLattice& lattice() const { return lattice_; }
  std::size_t dimension() const { return ids_.size(); }
  std::size_t unit() const { return unit_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  const Character& character(std::size_t i) const { return characters_[i]; }
  int top_degree() const;

  /// Basis indices of the given degree, in basis order.
  std::vector<std::size_t> in_degree(int d) const;
  std::vector<std::size_t> positive_degree() const;

  const LinearCombination& product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  Rational product_coeff(std::size_t a, std::size_t b, std::size_t c) const;

 private:
  std::string name_;
  CharacterLattice lattice_;
  std::vector<std::string> ids_;
  std::vector<int> degrees_;
  std::vector<Character> characters_;
  std::size_t unit_ = 0;
  std::vector<std::vector<LinearCombination>> table_;
};

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Rational coeff;
};

/// Reduced coproduct on the dual of the positive-degree part: for each basis
/// index c of positive degree, the terms coeff * left^ (x) right^ with
/// coeff = coefficient of c in left * right.
struct ReducedCoproduct {
  std::vector<std::string> ids;
  std::vector<int> degrees;
  std::vector<Character> characters;
  CharacterLattice lattice;
  std::map<std::size_t, std::vector<CoproductTerm>> terms;

  const std::vector<CoproductTerm>& of(std::size_t c) const;
};

ReducedCoproduct dualize(const AlgebraPresentation& p);
ReducedCoproduct dualize(const GradedAlgebra& a);

/// Transposes a coproduct back into the positive-degree product table:
/// result[(a, b)] = sum_c coeff * c.
std::map<std::pair<std::size_t, std::size_t>, LinearCombination> product_table_from(const ReducedCoproduct& d);

/// True iff no basis element has degree 1.
bool is_simply_connected_type(const AlgebraPresentation& p);

}  // namespace sht
