#pragma once

// The formal Lie model of a cohomology algebra: the free Lie algebra on the
// desuspended reduced dual, with the quadratic differential read off from the
// reduced coproduct. Its homology, bigraded by degree and bracket length, is
// the weight-graded rational homotopy.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sht/exactlin.hpp"
#include "sht/free_lie.hpp"
#include "sht/graded_core.hpp"

namespace sht {

class FormalLieModel {
 public:
  const GradedAlgebra& algebra() const { return algebra_; }
  const GeneratorSet& generators() const { return basis_.generators(); }
  /// Algebra basis index each generator is dual to.
  const std::vector<std::size_t>& generator_source() const { return source_; }
  const FreeLieBasis& basis() const { return basis_; }
  bool simply_connected() const { return simply_connected_; }
  int max_m() const { return max_m_; }
  int max_w() const { return max_w_; }

  /// d on the generator s^{-1} xi, as a tensor-algebra polynomial.
  const Polynomial& generator_differential(std::size_t g) const { return gen_d_[g]; }

  /// d applied to a Lie element (any slot within the basis cutoffs whose
  /// target slot is also within them).
  LieElement d(const LieElement& x) const;
  Polynomial d(const Polynomial& f) const;

  /// Matrix of d from slot k to slot (r-1, w+1, chi): rows index the target
  /// basis, columns the source basis. nullopt when the target lies beyond
  /// the basis cutoffs.
  std::optional<RationalMatrix> differential(const SlotKey& k) const;

 private:
  friend FormalLieModel build_model(const AlgebraPresentation& p, int max_m, int max_w);
  GradedAlgebra algebra_;
  std::vector<std::size_t> source_;
  FreeLieBasis basis_;
  std::vector<Polynomial> gen_d_;
  std::map<SlotKey, RationalMatrix> d_;
  bool simply_connected_ = true;
  int max_m_ = 0;
  int max_w_ = 0;
};

/// Generators from the dual of the positive-degree part (reduced degree =
/// degree - 1, character copied). On a generator,
///   d(s^-1 c) = 1/2 sum over coproduct terms coeff (-1)^{|a|-1} [s^-1 a, s^-1 b],
/// extended as a derivation. The free Lie basis is built up to reduced degree
/// max_m and weight max_w + 1 so that homology through (max_m, max_w) is
/// available. d^2 = 0 is verified on every slot; DSQUARED_NONZERO names a
/// witness word. INVALID_INPUT for an invalid presentation.
FormalLieModel build_model(const AlgebraPresentation& p, int max_m, int max_w);

struct HomotopyTable {
  int max_m = 0;
  int max_w = 0;
  bool complete = true;  // false: truncated at weight max_w
  int min_m = 2;
  /// (m, w, chi) -> dim, nonzero entries only.
  std::map<std::tuple<int, int, Character>, std::size_t> entries;

  std::size_t at(int m, int w, const Character& chi) const;
  std::size_t weight_total(int m, int w) const;
  std::size_t total(int m) const;
};

/// Homology of the model at slot (m - 1, w, chi) for m in [min_m, max_m] and
/// w in [1, max_w]; min_m is 1 for input with degree-1 classes, else 2.
/// CUTOFF_EXCEEDED when the input is simply connected and max_w < max_m - 1;
/// OUT_OF_RANGE when the request exceeds the model's cutoffs.
HomotopyTable homotopy_table(const FormalLieModel& model, int max_m, int max_w);

/// Characters with a nonzero entry at pi_m.
std::set<Character> supports(const HomotopyTable& t, int m);

struct HurewiczImage {
  std::size_t rank = 0;
  std::vector<std::string> ids;  // basis of H^m, coordinates index these
  std::vector<Vector> basis;     // image in the dual of H^m
};

/// Image of pi_m in H_m: the weight-1 cycles at reduced degree m - 1.
/// NOT_COMPLETE for input with degree-1 classes; OUT_OF_RANGE for m < 2 or
/// m beyond the model.
HurewiczImage hurewicz_rank(const FormalLieModel& model, int m);

}  // namespace sht
