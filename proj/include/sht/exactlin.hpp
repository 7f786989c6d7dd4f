#pragma once

// Exact linear algebra over Q: sparse rational matrices, reduced row-echelon
// forms, kernels, subspace arithmetic and homology dimensions.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sht/rational.hpp"

namespace sht {

/// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Sparse matrix over Q. Stored entries are nonzero and canonical.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  static RationalMatrix from_rows(std::vector<SparseRow> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  void add_to(std::size_t i, std::size_t j, const Rational& value);

  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, SparseRow row);
  void append_row(SparseRow row);

  std::size_t nonzeros() const;
  bool is_zero() const;

  RationalMatrix transpose() const;
  std::vector<Vector> to_dense() const;
  Vector row_dense(std::size_t i) const;

  /// M x for a dense column vector x.
  Vector apply(const Vector& x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

RationalMatrix vstack(std::span<const RationalMatrix> blocks, std::size_t cols);

/// Reduced row-echelon form: `rows` holds exactly rank many rows, each with a
/// leading 1 at the matching entry of `pivots` (strictly increasing).
struct RowEchelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Linearly independent vectors in RREF spanning a subspace of Q^n.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0);

  static SubspaceBasis span(const RationalMatrix& generators);
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.rows.cols(); }
  std::size_t dim() const { return basis_.pivots.size(); }
  const RationalMatrix& vectors() const { return basis_.rows; }
  const std::vector<std::size_t>& pivots() const { return basis_.pivots; }
  Vector vector(std::size_t i) const { return basis_.rows.row_dense(i); }

  /// Coordinates with respect to vectors(), or nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  bool contains(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.basis_.rows == b.basis_.rows;
  }

 private:
  explicit SubspaceBasis(RowEchelon e) : basis_(std::move(e)) {}
  RowEchelon basis_;
};

/// Right null space {x : m x = 0}.
SubspaceBasis kernel_basis(const RationalMatrix& m);

/// dim ker(d_out) - rank(d_in), after checking the shapes chain together and
/// d_out * d_in = 0 (throws COMPOSITION_NONZERO otherwise).
std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out);

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
/// {y : y . u = 0 for all u in a}.
SubspaceBasis annihilator(const SubspaceBasis& a);
/// {x : m x in target}.
SubspaceBasis preimage(const RationalMatrix& m, const SubspaceBasis& target);
/// m(source).
SubspaceBasis image(const RationalMatrix& m, const SubspaceBasis& source);

/// Vectors of `big`'s basis, chosen greedily in order, completing a basis of
/// `small` to one of `big`. Requires small to be contained in big.
std::vector<Vector> complement_basis(const SubspaceBasis& big, const SubspaceBasis& small);

/// Some X with a X = b, or nullopt when inconsistent. Free variables are 0.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

namespace detail {
// Both return the unique RREF; exposed so tests can cross-check the paths.
RowEchelon rref_bareiss(const RationalMatrix& m);
RowEchelon rref_sparse(const RationalMatrix& m);
}  // namespace detail

}  // namespace sht
