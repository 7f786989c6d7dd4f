#pragma once

// Spectral sequence of a finitely filtered chain complex, computed from the
// chain-level cycle and boundary subspaces.
//
// Conventions: homological d : C_n -> C_{n-1}; decreasing filtration
// F^0 = C >= F^1 >= ... >= F^len = 0 with d(F^p) in F^p. The page E_r^{p,q}
// has q = n + p, and d_r : E_r^{p,q} -> E_r^{p+r, q+r-1}.
//
//   Z_r^p = {x in F^p : dx in F^{p+r}}
//   B_r^p = F^p  intersect  d(F^{p-r})
//   E_r^p = Z_r^p / (Z_{r-1}^{p+1} + B_{r-1}^p)

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sht/exactlin.hpp"
#include "sht/quillen_weight.hpp"

namespace sht {

class FilteredComplex {
 public:
  /// d[i] : C_{min_degree+i} -> C_{min_degree+i-1}; d[0] must have 0 rows.
  /// filtration[i][p] for p = 0..length, nested, F^0 everything, F^length 0.
  /// Throws INVALID_INPUT when d^2 != 0, d does not preserve the
  /// filtration, or shapes disagree.
  FilteredComplex(int min_degree, std::vector<RationalMatrix> d, int length,
                  std::vector<std::vector<SubspaceBasis>> filtration);

  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(d_.size()) - 1; }
  int length() const { return length_; }
  std::size_t dim(int n) const;
  /// d_n : C_n -> C_{n-1}; zero-row matrix at the bottom.
  const RationalMatrix& d(int n) const { return d_[n - min_]; }
  /// F^p C_n, with F^p = C_n for p <= 0 and 0 for p >= length.
  const SubspaceBasis& F(int n, int p) const;

  /// Homology dimension of the total complex in degree n.
  std::size_t homology(int n) const;

 private:
  int min_;
  int length_;
  std::vector<RationalMatrix> d_;
  std::vector<std::vector<SubspaceBasis>> f_;
  std::vector<SubspaceBasis> zero_;
};

using Bidegree = std::pair<int, int>;  // (p, q)

struct SpectralSequencePage {
  int r = 1;
  std::map<Bidegree, std::size_t> dims;  // nonzero entries only
  /// d_r out of (p, q): rows index E_r^{p+r, q+r-1}, columns E_r^{p,q}.
  /// Present for every nonzero source.
  std::map<Bidegree, RationalMatrix> differentials;

  std::size_t dim(int p, int q) const;
  bool differentials_vanish() const;
};

SpectralSequencePage page(const FilteredComplex& fc, int r);

struct DegenerationReport {
  bool degenerates = true;
  int first_nonzero_page = 0;  // 0 when every d_r checked is zero
  std::string detail;
};

/// True iff d_r = 0 for r0 <= r <= r_max and E_{r0} agrees with E_{r_max+1}.
DegenerationReport check_degeneration(const FilteredComplex& fc, int r0, int r_max);

/// E_infinity, i.e. the page past which nothing changes (length + 1).
std::map<Bidegree, std::size_t> e_infinity(const FilteredComplex& fc);

/// Checks E_{r+1} = H(E_r, d_r) dimensionally, d_r d_r = 0 for every page
/// through E_infinity, and sum_p E_infinity^{p, n+p} = H_n. Returns the first
/// failure.
std::optional<std::string> convergence_violation(const FilteredComplex& fc);

/// Lie model as a filtered complex: C_n = slots of reduced degree n - 1 summed
/// over characters and weights 1..max_w+1 of the model basis, F^p = words of
/// weight >= p. Then E_1^{p, m+p} is the weight-p slot at reduced degree m - 1
/// and E_2^{w, m+w} the weight-w piece of pi_m (for w <= max_w, m <= max_m).
FilteredComplex filtered_from_model(const FormalLieModel& m);

/// Random filtered complex of total dimension <= max_total and filtration
/// length <= max_length, as a generic change of basis applied to a sum of
/// elementary pieces (a filtered line, or x -> dx with dx filtered deeper).
FilteredComplex random_filtered_complex(std::mt19937_64& rng, std::size_t max_total, int max_length);

}  // namespace sht
