#include "dgcy/graded_algebra.hpp"

#include "dgcy/errors.hpp"

namespace dgcy {

FiniteGradedAlgebra FiniteGradedAlgebra::zero_table(std::vector<std::string> names, std::vector<int> degrees,
                                                    std::size_t unit) {
  FiniteGradedAlgebra e;
  e.names = std::move(names);
  e.degrees = std::move(degrees);
  e.unit = unit;
  e.table.assign(e.names.size() * e.names.size(), SparseVec{});
  return e;
}

Vec FiniteGradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Rational ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

int FiniteGradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

FiniteGradedAlgebra FiniteGradedAlgebra::change_basis(const QMatrix& p) const {
  const std::size_t n = dim();
  if (p.rows() != n || p.cols() != n) throw InvariantViolation("change of basis has wrong shape");
  QMatrix pinv = inverse(p);
  FiniteGradedAlgebra out = zero_table(names, degrees, unit);
  out.window = window;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = multiply(p.row(i), p.row(j));
      Vec y(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (!pinv(a, b).is_zero()) y[b] += x[a] * pinv(a, b);
      }
      out.product(i, j) = sparse_from_dense(y);
    }
  return out;
}

}  // namespace dgcy
