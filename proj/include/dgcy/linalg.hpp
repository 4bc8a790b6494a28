#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgcy/rational.hpp"

namespace dgcy {

using Vec = std::vector<Rational>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  QMatrix reduced;
};

RrefResult rref(const QMatrix& m);

// Canonical null-space basis: one vector per non-pivot column f, with
// v[f] = 1 and v[g] = 0 for the other non-pivot columns g.
std::vector<Vec> kernel_basis(const QMatrix& m);

Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m);  // throws SingularMatrix

// Solves x * m = b for a row vector x; returns false when b is outside the row space.
bool solve_left(const QMatrix& m, const Vec& b, Vec& x);

// ---------------------------------------------------------------------------
// Sparse vectors and incremental echelon forms.

using Index = std::uint32_t;
using SparseVec = std::vector<std::pair<Index, Rational>>;  // strictly increasing indices

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x
void sparse_scale(SparseVec& y, const Rational& a);
Rational sparse_get(const SparseVec& v, Index i);
SparseVec sparse_from_dense(const Vec& v);
Vec sparse_to_dense(const SparseVec& v, std::size_t n);

// Rows with distinct leading indices, each leading coefficient 1.
class Echelon {
 public:
  // Reduces v by the current rows on its leading terms; inserts it when
  // something survives. Returns true when the rank grew.
  bool insert(SparseVec v);
  // Fully reduces v against every stored pivot column.
  SparseVec reduce(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(Index c) const;
  std::vector<Index> pivots() const;  // increasing
  // Reduced row-echelon rows sorted by pivot.
  std::vector<SparseVec> rref_rows() const;
  // Canonical kernel basis of the matrix whose rows were inserted, over
  // columns [0, ncols).
  std::vector<SparseVec> kernel(Index ncols) const;

 private:
  const SparseVec* row_for(Index c) const;
  std::vector<SparseVec> rows_;
  std::unordered_map<Index, std::size_t> pivot_of_;
};

}  // namespace dgcy
