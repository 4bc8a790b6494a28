#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgcy/graded_algebra.hpp"
#include "dgcy/multipoly.hpp"

namespace dgcy {

// Throws GradingViolation, UnitViolation or NotAssociative.
void validate(const FiniteGradedAlgebra& e);

struct FrobeniusOptions {
  bool ungraded = false;  // treat every basis element as degree 0
  std::uint64_t seed = 0;
  std::size_t symbolic_bound = kDefaultDetBound;
  int trials = 20;
};

// Functionals supported on one degree s, lambda = u * param, with Gram matrix
// gram[i][j] = lambda(e_i e_j) as polynomials in u.
struct FormFamily {
  int socle_degree = 0;
  std::vector<std::size_t> support;
  QMatrix param;
  PolyMatrix gram;

  std::size_t parameters() const { return param.rows(); }
  Vec functional(const std::vector<Rational>& u, std::size_t dim) const;
};

FormFamily frobenius_family(const FiniteGradedAlgebra& e, int s);
// Only the functionals with lambda(e_i e_j) = (-1)^{d_i d_j} lambda(e_j e_i).
FormFamily symmetric_family(const FiniteGradedAlgebra& e, int s);

struct FamilyVerdict {
  bool nondegenerate = false;
  Vec functional;  // full length; empty unless nondegenerate
  bool probabilistic = false;
};

FamilyVerdict decide(const FormFamily& f, std::size_t dim, const FrobeniusOptions& opts = {});

QMatrix gram_matrix(const FiniteGradedAlgebra& e, const Vec& lambda);
// mu with <mu(e_i), e_j> = <e_j, e_i>, rows are images; throws NotAutomorphism.
QMatrix nakayama(const FiniteGradedAlgebra& e, const Vec& lambda);

struct FrobeniusReport {
  bool is_frobenius = false;
  std::optional<int> socle_degree;
  std::optional<int> shift;
  Vec witness_functional;
  QMatrix gram;
  bool is_graded_symmetric = false;
  std::optional<int> symmetric_socle_degree;
  Vec symmetric_witness;
  std::optional<QMatrix> nakayama;
  bool probabilistic = false;
  bool ungraded = false;
};

// Frobenius fields and the Nakayama automorphism of the witness.
FrobeniusReport frobenius_test(const FiniteGradedAlgebra& e, const FrobeniusOptions& opts = {});

struct SymmetricResult {
  bool symmetric = false;
  std::optional<int> socle_degree;
  Vec witness;
  bool probabilistic = false;
};

SymmetricResult symmetric_test(const FiniteGradedAlgebra& e, const FrobeniusOptions& opts = {});

// validate, frobenius_test and symmetric_test together.
FrobeniusReport analyze(const FiniteGradedAlgebra& e, const FrobeniusOptions& opts = {});

}  // namespace dgcy
