#include "dgcy/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dgcy/errors.hpp"

namespace dgcy {
namespace {

std::string triple(const FiniteGradedAlgebra& e, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + e.names[i] + ", " + e.names[j] + ", " + e.names[k] + ")";
}

FiniteGradedAlgebra flatten(const FiniteGradedAlgebra& e) {
  FiniteGradedAlgebra out = e;
  std::fill(out.degrees.begin(), out.degrees.end(), 0);
  return out;
}

std::vector<int> present_degrees(const FiniteGradedAlgebra& e) {
  std::set<int> s(e.degrees.begin(), e.degrees.end());
  return {s.begin(), s.end()};
}

// Nondegenerate pairings of total degree s need dim E^d = dim E^{s-d}.
bool dimensions_pair(const FiniteGradedAlgebra& e, int s) {
  std::map<int, std::size_t> count;
  for (int d : e.degrees) ++count[d];
  for (const auto& [d, n] : count) {
    auto it = count.find(s - d);
    if (it == count.end() || it->second != n) return false;
  }
  return true;
}

Rational small_value(std::size_t idx) {
  long long k = static_cast<long long>((idx + 1) / 2);
  return idx % 2 ? Rational(k) : Rational(-k);
}

bool advance(std::vector<std::size_t>& idx, std::size_t width) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < width) return true;
    idx[pos] = 0;
  }
  return false;
}

// Lexicographically least point in increasing boxes over 0, 1, -1, 2, -2, ...
std::optional<std::vector<Rational>> small_point(std::size_t vars, std::size_t max_radius,
                                                 const std::function<bool(const std::vector<Rational>&)>& ok,
                                                 std::size_t budget) {
  std::size_t spent = 0;
  for (std::size_t r = 0; r <= max_radius; ++r) {
    const std::size_t width = 2 * r + 1;
    std::vector<std::size_t> idx(vars, 0);
    while (true) {
      bool fresh = r == 0 || std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i + 2 >= width; });
      if (fresh) {
        std::vector<Rational> pt;
        for (std::size_t i : idx) pt.push_back(small_value(i));
        if (ok(pt)) return pt;
        if (++spent >= budget) return std::nullopt;
      }
      if (!advance(idx, width)) break;
    }
  }
  return std::nullopt;
}

FormFamily family_over(const FiniteGradedAlgebra& e, int s, std::vector<std::size_t> support, QMatrix param) {
  FormFamily f;
  f.socle_degree = s;
  f.support = std::move(support);
  f.param = std::move(param);
  const std::size_t n = e.dim(), p = f.param.rows();
  std::vector<std::string> vars;
  for (std::size_t t = 0; t < p; ++t) vars.push_back("u" + std::to_string(t + 1));
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t a = 0; a < f.support.size(); ++a) slot[f.support[a]] = a;
  f.gram.assign(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : e.product(i, j)) {
        auto it = slot.find(k);
        if (it == slot.end()) continue;
        for (std::size_t t = 0; t < p; ++t) {
          const Rational& w = f.param(t, it->second);
          if (w.is_zero()) continue;
          MultiPoly::Exponents ex(p, 0);
          ex[t] = 1;
          f.gram[i][j].add_term(ex, c * w);
        }
      }
  return f;
}

std::vector<std::size_t> support_of(const FiniteGradedAlgebra& e, int s) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < e.dim(); ++k)
    if (e.degrees[k] == s) out.push_back(k);
  return out;
}

}  // namespace

void validate(const FiniteGradedAlgebra& e) {
  const std::size_t n = e.dim();
  if (e.degrees.size() != n || e.table.size() != n * n) throw SchemaError("structure constants have inconsistent sizes");
  if (n == 0) throw UnitViolation("algebra has no basis");
  if (e.unit >= n) throw UnitViolation("unit index out of range");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : e.product(i, j)) {
        if (k >= n) throw SchemaError("product of " + e.names[i] + " and " + e.names[j] + " names an unknown basis element");
        if (!c.is_zero() && e.degrees[k] != e.degrees[i] + e.degrees[j])
          throw GradingViolation("product " + triple(e, i, j, k) + " does not respect degrees");
      }
  if (e.degrees[e.unit] != 0) throw UnitViolation("unit " + e.names[e.unit] + " is not of degree 0");
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec self{{static_cast<Index>(i), Rational(1)}};
    if (e.product(e.unit, i) != self || e.product(i, e.unit) != self)
      throw UnitViolation("unit does not act as the identity on " + e.names[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!e.in_window(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (e.window && e.degrees[i] + e.degrees[j] + e.degrees[k] > *e.window) continue;
        Vec left(n), right(n);
        for (const auto& [m, c] : e.product(i, j))
          for (const auto& [t, c2] : e.product(m, k)) left[t] += c * c2;
        for (const auto& [m, c] : e.product(j, k))
          for (const auto& [t, c2] : e.product(i, m)) right[t] += c * c2;
        if (left != right) throw NotAssociative("(ab)c != a(bc) for " + triple(e, i, j, k));
      }
    }
}

Vec FormFamily::functional(const std::vector<Rational>& u, std::size_t dim) const {
  Vec lambda(dim);
  for (std::size_t t = 0; t < param.rows(); ++t)
    for (std::size_t a = 0; a < support.size(); ++a) lambda[support[a]] += u[t] * param(t, a);
  return lambda;
}

FormFamily frobenius_family(const FiniteGradedAlgebra& e, int s) {
  std::vector<std::size_t> support = support_of(e, s);
  return family_over(e, s, support, QMatrix::identity(support.size()));
}

FormFamily symmetric_family(const FiniteGradedAlgebra& e, int s) {
  std::vector<std::size_t> support = support_of(e, s);
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t a = 0; a < support.size(); ++a) slot[support[a]] = a;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = i + 1; j < e.dim(); ++j) {
      if (e.degrees[i] + e.degrees[j] != s) continue;
      Rational sign = (e.degrees[i] * e.degrees[j]) % 2 == 0 ? 1 : -1;
      Vec row(support.size());
      for (const auto& [k, c] : e.product(i, j))
        if (slot.count(k)) row[slot[k]] += c;
      for (const auto& [k, c] : e.product(j, i))
        if (slot.count(k)) row[slot[k]] -= sign * c;
      if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return !q.is_zero(); })) rows.push_back(row);
    }
  // squares of odd elements pair with themselves up to sign
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (2 * e.degrees[i] != s || e.degrees[i] % 2 == 0) continue;
    Vec row(support.size());
    for (const auto& [k, c] : e.product(i, i))
      if (slot.count(k)) row[slot[k]] += c;
    if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return !q.is_zero(); })) rows.push_back(row);
  }
  QMatrix param;
  if (rows.empty()) {
    param = QMatrix::identity(support.size());
  } else {
    std::vector<Vec> k = kernel_basis(QMatrix::from_rows(rows, support.size()));
    param = QMatrix::from_rows(k, support.size());
  }
  return family_over(e, s, support, param);
}

FamilyVerdict decide(const FormFamily& f, std::size_t dim, const FrobeniusOptions& opts) {
  FamilyVerdict v;
  const std::size_t p = f.parameters();
  if (p == 0 || dim == 0) return v;
  std::function<bool(const std::vector<Rational>&)> nonzero;
  MultiPoly det;
  const bool symbolic = dim <= opts.symbolic_bound;
  if (symbolic) {
    det = symbolic_det(f.gram, opts.symbolic_bound);
    if (det.is_zero()) return v;
    nonzero = [&](const std::vector<Rational>& pt) { return !det.evaluate(pt).is_zero(); };
  } else {
    nonzero = [&](const std::vector<Rational>& pt) { return !determinant(evaluate_matrix(f.gram, pt)).is_zero(); };
  }

  std::mt19937_64 rng(opts.seed);
  auto random_point = [&] {
    std::vector<Rational> pt;
    for (std::size_t t = 0; t < p; ++t) pt.emplace_back(static_cast<long long>(rng()));
    return pt;
  };
  std::optional<std::vector<Rational>> lucky;
  if (!symbolic) {
    for (int t = 0; t < opts.trials && !lucky; ++t) {
      auto pt = random_point();
      if (nonzero(pt)) lucky = pt;
    }
    if (!lucky) {
      v.probabilistic = true;
      return v;
    }
  }
  std::size_t radius = dim / 2 + 1;
  std::size_t budget = symbolic ? 200000 : 2000;
  auto pt = small_point(p, radius, nonzero, budget);
  while (!pt && !lucky) {
    auto r = random_point();
    if (nonzero(r)) lucky = r;
  }
  v.nondegenerate = true;
  v.functional = f.functional(pt ? *pt : *lucky, dim);
  return v;
}

QMatrix gram_matrix(const FiniteGradedAlgebra& e, const Vec& lambda) {
  const std::size_t n = e.dim();
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : e.product(i, j)) g(i, j) += c * lambda.at(k);
  return g;
}

QMatrix nakayama(const FiniteGradedAlgebra& e, const Vec& lambda) {
  const std::size_t n = e.dim();
  QMatrix g = gram_matrix(e, lambda);
  QMatrix mu = g.transpose() * inverse(g);
  auto image = [&](const SparseVec& v) {
    Vec out(n);
    for (const auto& [k, c] : v)
      for (std::size_t t = 0; t < n; ++t) out[t] += c * mu(k, t);
    return out;
  };
  Vec unit(n);
  unit[e.unit] = 1;
  if (mu.row(e.unit) != unit) throw NotAutomorphism("Nakayama map moves the unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (image(e.product(i, j)) != e.multiply(mu.row(i), mu.row(j)))
        throw NotAutomorphism("Nakayama map is not multiplicative on " + e.names[i] + ", " + e.names[j]);
  return mu;
}

FrobeniusReport frobenius_test(const FiniteGradedAlgebra& input, const FrobeniusOptions& opts) {
  FiniteGradedAlgebra e = opts.ungraded ? flatten(input) : input;
  FrobeniusReport r;
  r.ungraded = opts.ungraded;
  for (int s : present_degrees(e)) {
    if (!dimensions_pair(e, s)) continue;
    FamilyVerdict v = decide(frobenius_family(e, s), e.dim(), opts);
    r.probabilistic = r.probabilistic || v.probabilistic;
    if (!v.nondegenerate) continue;
    r.is_frobenius = true;
    r.probabilistic = false;
    r.socle_degree = s;
    r.shift = -s;
    r.witness_functional = v.functional;
    r.gram = gram_matrix(e, v.functional);
    r.nakayama = nakayama(e, v.functional);
    break;
  }
  return r;
}

SymmetricResult symmetric_test(const FiniteGradedAlgebra& input, const FrobeniusOptions& opts) {
  FiniteGradedAlgebra e = opts.ungraded ? flatten(input) : input;
  SymmetricResult r;
  for (int s : present_degrees(e)) {
    if (!dimensions_pair(e, s)) continue;
    FamilyVerdict v = decide(symmetric_family(e, s), e.dim(), opts);
    r.probabilistic = r.probabilistic || v.probabilistic;
    if (!v.nondegenerate) continue;
    r.symmetric = true;
    r.probabilistic = false;
    r.socle_degree = s;
    r.witness = v.functional;
    break;
  }
  return r;
}

FrobeniusReport analyze(const FiniteGradedAlgebra& e, const FrobeniusOptions& opts) {
  validate(e);
  FrobeniusReport r = frobenius_test(e, opts);
  SymmetricResult s = symmetric_test(e, opts);
  r.is_graded_symmetric = s.symmetric;
  r.symmetric_socle_degree = s.socle_degree;
  r.symmetric_witness = s.witness;
  r.probabilistic = r.probabilistic || s.probabilistic;
  return r;
}

}  // namespace dgcy
