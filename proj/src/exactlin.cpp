#include "sht/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

#include "sht/error.hpp"

namespace sht {

namespace {

constexpr std::size_t kDenseColumnLimit = 64;

SparseRow::const_iterator find_col(const SparseRow& row, std::size_t j) {
  return std::lower_bound(row.begin(), row.end(), j,
                          [](const auto& e, std::size_t c) { return e.first < c; });
}

// row += factor * other
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

void scale(SparseRow& row, const Rational& factor) {
  for (auto& e : row) e.second *= factor;
}

SparseRow to_sparse(const Vector& v) {
  SparseRow out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!is_zero(v[j])) {
      out.emplace_back(j, v[j]);
      out.back().second.canonicalize();
    }
  return out;
}

// Back substitution on an echelon form whose rows have leading entry 1.
RowEchelon finish_rref(std::map<std::size_t, SparseRow> pivot_rows, std::size_t cols) {
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    const std::size_t c = it->first;
    const SparseRow& p = it->second;
    for (auto jt = pivot_rows.begin(); jt->first < c; ++jt) {
      auto e = find_col(jt->second, c);
      if (e != jt->second.end() && e->first == c) {
        Rational f = -e->second;
        jt->second = axpy(jt->second, f, p);
      }
    }
  }
  RowEchelon out;
  std::vector<SparseRow> rows;
  for (auto& [c, r] : pivot_rows) {
    out.pivots.push_back(c);
    rows.push_back(std::move(r));
  }
  out.rows = RationalMatrix::from_rows(std::move(rows), cols);
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged dense matrix");
    m.rows_[i] = to_sparse(rows[i]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<SparseRow> rows, std::size_t cols) {
  RationalMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  for (auto& r : m.rows_)
    for (auto& e : r) e.second.canonicalize();
  return m;
}

Rational RationalMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = find_col(r, j);
  return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

void RationalMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_.size() || j >= cols_) throw Error(ErrorCode::OutOfRange, "matrix index out of range");
  auto& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  bool present = it != r.end() && it->first == j;
  if (sht::is_zero(value)) {
    if (present) r.erase(it);
  } else if (present) {
    it->second = value;
    it->second.canonicalize();
  } else {
    it = r.insert(it, {j, value});
    it->second.canonicalize();
  }
}

void RationalMatrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
  if (sht::is_zero(value)) return;
  set(i, j, at(i, j) + value);
}

void RationalMatrix::set_row(std::size_t i, SparseRow row) {
  for (auto& e : row) e.second.canonicalize();
  rows_.at(i) = std::move(row);
}

void RationalMatrix::append_row(SparseRow row) {
  for (auto& e : row) e.second.canonicalize();
  rows_.push_back(std::move(row));
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool RationalMatrix::is_zero() const { return nonzeros() == 0; }

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
  return t;
}

std::vector<Vector> RationalMatrix::to_dense() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows(); ++i) out.push_back(row_dense(i));
  return out;
}

Vector RationalMatrix::row_dense(std::size_t i) const {
  Vector v(cols_);
  for (const auto& [j, x] : rows_[i]) v[j] = x;
  return v;
}

Vector RationalMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply: vector length");
  Vector y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : rows_[i])
      if (!sht::is_zero(x[j])) y[i] += v * x[j];
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& [k, v] : a.row(i)) acc = axpy(acc, v, b.row(k));
    c.rows_[i] = std::move(acc);
  }
  return c;
}

RationalMatrix vstack(std::span<const RationalMatrix> blocks, std::size_t cols) {
  RationalMatrix out(0, cols);
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack: column count");
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  }
  return out;
}

namespace detail {

RowEchelon rref_bareiss(const RationalMatrix& m) {
  const std::size_t n_rows = m.rows(), n_cols = m.cols();
  // Clear denominators row by row; row scaling preserves the row space.
  std::vector<std::vector<Integer>> a(n_rows, std::vector<Integer>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    Integer l = 1;
    for (const auto& [j, v] : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& [j, v] : m.row(i)) a[i][j] = v.get_num() * (l / v.get_den());
  }

  Integer prev = 1;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t best = n_rows;
    for (std::size_t i = r; i < n_rows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == n_rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) > 0) best = i;
    }
    if (best == n_rows) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  std::map<std::size_t, SparseRow> pivot_rows;
  for (std::size_t k = 0; k < r; ++k) {
    SparseRow row;
    Rational lead(a[k][pivots[k]]);
    for (std::size_t j = pivots[k]; j < n_cols; ++j)
      if (a[k][j] != 0) {
        Rational v(a[k][j]);
        v /= lead;
        row.emplace_back(j, std::move(v));
      }
    pivot_rows.emplace(pivots[k], std::move(row));
  }
  return finish_rref(std::move(pivot_rows), n_cols);
}

RowEchelon rref_sparse(const RationalMatrix& m) {
  std::map<std::size_t, SparseRow> pivot_rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow v = m.row(i);
    while (!v.empty()) {
      auto it = pivot_rows.find(v.front().first);
      if (it == pivot_rows.end()) {
        Rational inv = 1 / v.front().second;
        scale(v, inv);
        pivot_rows.emplace(v.front().first, std::move(v));
        break;
      }
      Rational f = -v.front().second;
      v = axpy(v, f, it->second);
    }
  }
  return finish_rref(std::move(pivot_rows), m.cols());
}

}  // namespace detail

RowEchelon rref(const RationalMatrix& m) {
  return m.cols() < kDenseColumnLimit ? detail::rref_bareiss(m) : detail::rref_sparse(m);
}

std::size_t rank(const RationalMatrix& m) {
  if (m.is_zero()) return 0;
  // Rank is transpose invariant; eliminate along the shorter side.
  if (m.cols() > m.rows() && m.rows() < kDenseColumnLimit) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim) {
  basis_.rows = RationalMatrix(0, ambient_dim);
}

SubspaceBasis SubspaceBasis::span(const RationalMatrix& generators) { return SubspaceBasis(rref(generators)); }

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(RationalMatrix::from_dense(generators, ambient_dim));
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  return SubspaceBasis(RowEchelon{RationalMatrix::identity(ambient_dim), [&] {
                                    std::vector<std::size_t> p(ambient_dim);
                                    for (std::size_t i = 0; i < ambient_dim; ++i) p[i] = i;
                                    return p;
                                  }()});
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "coordinates: vector length");
  Vector c(dim());
  SparseRow residual = to_sparse(v);
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = v[basis_.pivots[k]];
    if (!is_zero(c[k])) residual = axpy(residual, -c[k], basis_.rows.row(k));
  }
  if (!residual.empty()) return std::nullopt;
  return c;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RationalMatrix gens(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      Rational x = e.rows.at(k, f);
      if (!is_zero(x)) v.emplace_back(e.pivots[k], -x);
    }
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    gens.append_row(std::move(v));
  }
  return SubspaceBasis::span(gens);
}

std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw Error(ErrorCode::DimensionMismatch, "homology_dim: rows(d_in)=" + std::to_string(d_in.rows()) +
                                                  " but cols(d_out)=" + std::to_string(d_out.cols()));
  if (!(d_out * d_in).is_zero()) throw Error(ErrorCode::CompositionNonzero, "d_out * d_in != 0");
  return d_out.cols() - rank(d_out) - rank(d_in);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  RationalMatrix both[] = {a.vectors(), b.vectors()};
  return SubspaceBasis::span(vstack(both, a.ambient_dim()));
}

SubspaceBasis annihilator(const SubspaceBasis& a) { return kernel_basis(a.vectors()); }

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "intersect: ambient");
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(a.ambient_dim());
  if (b.dim() == b.ambient_dim()) return a;
  // x = c a with ann(b) x = 0
  RationalMatrix ann = annihilator(b).vectors();
  SubspaceBasis coeffs = kernel_basis(ann * a.vectors().transpose());
  return SubspaceBasis::span(coeffs.vectors() * a.vectors());
}

SubspaceBasis preimage(const RationalMatrix& m, const SubspaceBasis& target) {
  if (m.rows() != target.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "preimage: shapes");
  if (target.dim() == target.ambient_dim()) return SubspaceBasis::whole(m.cols());
  return kernel_basis(annihilator(target).vectors() * m);
}

SubspaceBasis image(const RationalMatrix& m, const SubspaceBasis& source) {
  if (m.cols() != source.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "image: shapes");
  return SubspaceBasis::span((m * source.vectors().transpose()).transpose());
}

std::vector<Vector> complement_basis(const SubspaceBasis& big, const SubspaceBasis& small) {
  std::vector<Vector> chosen;
  SubspaceBasis acc = small;
  for (std::size_t i = 0; i < big.dim() && acc.dim() < big.dim(); ++i) {
    Vector v = big.vector(i);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, SubspaceBasis::span(big.ambient_dim(), {v}));
  }
  if (acc.dim() != big.dim()) throw Error(ErrorCode::InvalidInput, "complement_basis: small not contained in big");
  return chosen;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row counts");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow r = a.row(i);
    for (const auto& [j, v] : b.row(i)) r.emplace_back(n + j, v);
    aug.set_row(i, std::move(r));
  }
  RowEchelon e = rref(aug);
  RationalMatrix x(n, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= n) return std::nullopt;
    for (const auto& [j, v] : e.rows.row(k))
      if (j >= n) x.set(e.pivots[k], j - n, v);
  }
  return x;
}

}  // namespace sht
