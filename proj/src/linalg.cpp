#include "dgcy/linalg.hpp"

#include <algorithm>

#include "dgcy/errors.hpp"

namespace dgcy {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvariantViolation("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec QMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InvariantViolation("matrix shape mismatch in product");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<Vec> kernel_basis(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_columns[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InvariantViolation("determinant of a non-square matrix");
  QMatrix a = m;
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("inverse of a non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

bool solve_left(const QMatrix& m, const Vec& b, Vec& x) {
  // x m = b  <=>  m^T x^T = b^T
  std::size_t n = m.rows(), k = m.cols();
  if (b.size() != k) throw InvariantViolation("solve_left: length mismatch");
  QMatrix aug(k, n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(j, i);
    aug(i, n) = b[i];
  }
  RrefResult rr = rref(aug);
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == n) return false;
  x.assign(n, Rational());
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivot_columns[i]] = rr.reduced(i, n);
  return true;
}

// ---------------------------------------------------------------------------

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

void sparse_scale(SparseVec& y, const Rational& a) {
  if (a.is_zero()) {
    y.clear();
    return;
  }
  for (auto& e : y) e.second *= a;
}

Rational sparse_get(const SparseVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Rational();
}

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<Index>(i), v[i]);
  return s;
}

Vec sparse_to_dense(const SparseVec& v, std::size_t n) {
  Vec d(n);
  for (const auto& [i, q] : v) d.at(i) = q;
  return d;
}

const SparseVec* Echelon::row_for(Index c) const {
  auto it = pivot_of_.find(c);
  return it == pivot_of_.end() ? nullptr : &rows_[it->second];
}

bool Echelon::has_pivot(Index c) const { return pivot_of_.count(c) != 0; }

bool Echelon::insert(SparseVec v) {
  while (!v.empty()) {
    const SparseVec* r = row_for(v.front().first);
    if (!r) break;
    Rational f = -v.front().second;
    sparse_axpy(v, f, *r);
  }
  if (v.empty()) return false;
  Rational inv = v.front().second.inverse();
  sparse_scale(v, inv);
  pivot_of_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const SparseVec* r = row_for(v[pos].first);
    if (!r) {
      ++pos;
      continue;
    }
    Rational f = -v[pos].second;
    sparse_axpy(v, f, *r);
  }
  return v;
}

std::vector<Index> Echelon::pivots() const {
  std::vector<Index> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().first);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> Echelon::rref_rows() const {
  std::vector<SparseVec> rows = rows_;
  std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
  std::unordered_map<Index, std::size_t> at;
  for (std::size_t i = 0; i < rows.size(); ++i) at[rows[i].front().first] = i;
  // Back substitution from the last pivot upwards keeps later rows reduced.
  for (std::size_t ii = rows.size(); ii-- > 0;) {
    SparseVec& r = rows[ii];
    std::size_t pos = 1;
    while (pos < r.size()) {
      auto it = at.find(r[pos].first);
      if (it == at.end()) {
        ++pos;
        continue;
      }
      Rational f = -r[pos].second;
      sparse_axpy(r, f, rows[it->second]);
    }
  }
  return rows;
}

std::vector<SparseVec> Echelon::kernel(Index ncols) const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  std::vector<SparseVec> basis;
  Vec v(ncols);
  for (Index f = 0; f < ncols; ++f) {
    if (has_pivot(f)) continue;
    std::fill(v.begin(), v.end(), Rational());
    v[f] = 1;
    for (std::size_t idx : order) {
      const SparseVec& r = rows_[idx];
      Index p = r.front().first;
      if (p > f) continue;  // v vanishes beyond f
      Rational s;
      for (std::size_t k = 1; k < r.size(); ++k)
        if (!v[r[k].first].is_zero()) s += r[k].second * v[r[k].first];
      v[p] = -s;
    }
    basis.push_back(sparse_from_dense(v));
  }
  return basis;
}

}  // namespace dgcy
