#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgcy/linalg.hpp"

namespace dgcy {

// Finite-dimensional graded algebra given by structure constants.
struct FiniteGradedAlgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::size_t unit = 0;
  // table[i * dim() + j] = coordinates of e_i * e_j.
  std::vector<SparseVec> table;
  // Truncated algebras: products whose degree exceeds the window are unknown.
  std::optional<int> window;

  static FiniteGradedAlgebra zero_table(std::vector<std::string> names, std::vector<int> degrees, std::size_t unit);

  std::size_t dim() const { return names.size(); }
  bool in_window(std::size_t i, std::size_t j) const {
    return !window || degrees[i] + degrees[j] <= *window;
  }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table[i * dim() + j]; }
  SparseVec& product(std::size_t i, std::size_t j) { return table[i * dim() + j]; }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const {
    return sparse_get(product(i, j), static_cast<Index>(k));
  }
  Vec multiply(const Vec& a, const Vec& b) const;
  int index_of(const std::string& name) const;

  // Structure constants in the basis whose i-th element is sum_k p(i,k) e_k.
  FiniteGradedAlgebra change_basis(const QMatrix& p) const;
};

}  // namespace dgcy
