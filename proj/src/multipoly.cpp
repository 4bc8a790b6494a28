#include "dgcy/multipoly.hpp"

#include <sstream>

#include "dgcy/errors.hpp"

namespace dgcy {

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw InvariantViolation("evaluation point has wrong length");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    } else if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool monomial = false;
    for (unsigned x : e) monomial = monomial || x > 0;
    if (!monomial || !a.is_one()) os << a.str() << (monomial ? "*" : "");
    bool sep = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (sep) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      sep = true;
    }
  }
  return os.str();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw InvariantViolation("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InvariantViolation("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(MultiPoly a, const Rational& c) {
  if (c.is_zero()) return MultiPoly(a.vars_);
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

MultiPoly symbolic_det(const PolyMatrix& m, std::size_t bound) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvariantViolation("symbolic_det: matrix is not square");
  if (n > bound)
    throw DimensionExceeded("symbolic determinant of size " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  std::vector<std::string> vars = n > 0 ? m[0][0].variables() : std::vector<std::string>{};
  const MultiPoly one = MultiPoly::constant(vars, 1);
  if (n == 0) return one;

  // c holds the characteristic polynomial det(tI - M_r) of the leading r x r block,
  // highest coefficient first.
  std::vector<MultiPoly> c{one};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<MultiPoly> t(r + 2, MultiPoly(vars));
    t[0] = one;
    t[1] = -m[r][r];
    std::vector<MultiPoly> v(r, MultiPoly(vars));
    for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      MultiPoly s(vars);
      for (std::size_t i = 0; i < r; ++i) s += m[r][i] * v[i];
      t[k + 2] = -s;
      if (k + 1 < r) {
        std::vector<MultiPoly> w(r, MultiPoly(vars));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += m[i][j] * v[j];
        v = std::move(w);
      }
    }
    std::vector<MultiPoly> next(r + 2, MultiPoly(vars));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  return n % 2 == 0 ? c[n] : -c[n];
}

QMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  QMatrix q(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) q(i, j) = m[i][j].evaluate(point);
  return q;
}

}  // namespace dgcy
