#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgcy/linalg.hpp"
#include "dgcy/rational.hpp"

namespace dgcy {

// Commutative polynomial over Q in a fixed, ordered list of variables.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}
  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

 private:
  void check_compatible(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline constexpr std::size_t kDefaultDetBound = 16;

// Division-free (Berkowitz) determinant. Throws DimensionExceeded above the bound.
MultiPoly symbolic_det(const PolyMatrix& m, std::size_t bound = kDefaultDetBound);

QMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point);

}  // namespace dgcy
