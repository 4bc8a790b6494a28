#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgcy/dgcore.hpp"
#include "dgcy/graded_algebra.hpp"

namespace dgcy {

// Throws NotTriangular, NotMinimal, DegreeMismatch or DifferentialNotSquareZero.
void check_semifree(const DGAlgebra& dg, const SemiFreeModule& f);

// H^0(F) is one-dimensional and detected by the augmentation, and H^n(F) = 0
// for every other n up to the cutoff.
bool check_resolution(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff);

struct ResolveOptions {
  std::size_t max_generators = 64;
  int max_stages = -1;  // negative: 2 * cutoff + 2
};

struct ResolutionResult {
  SemiFreeModule module;
  bool complete = false;
  int stages = 0;
  std::string stop_reason;  // empty when complete
};

// Minimal semi-free resolution of the trivial module by killing cohomology in the
// least nonzero degree first. Never throws on budget exhaustion.
ResolutionResult resolve_trivial_partial(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts = {});
// As above; throws CutoffTooSmall when the window could not be cleaned.
SemiFreeModule resolve_trivial(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts = {});

bool is_koszul(const SemiFreeModule& f);

struct SmoothnessReport {
  bool finite_basis_found = false;
  std::size_t basis_size = 0;
  int certified_to = 0;
  int margin = 0;
  bool resolution_complete = false;
  SemiFreeModule resolution;
};

SmoothnessReport smoothness_report(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts = {});

// A degree-k A-linear map F -> F: e_j maps to sum_i entries[j][i] e_i.
struct HomMap {
  int degree = 0;
  std::vector<std::vector<NcPoly>> entries;

  static HomMap zero(std::size_t n, int degree);
  static HomMap identity(std::size_t n);
  bool is_zero() const;
};

struct HomCohomology {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<HomMap> representatives;
};

// The complex Hom_A(F, F) with d(f) = d_F f - (-1)^k f d_F, restricted to the
// degrees whose entries stay inside the cutoff window.
class HomComplex {
 public:
  HomComplex(const DGAlgebra& dg, SemiFreeModule f, int cutoff);

  const SemiFreeModule& module() const { return f_; }
  std::size_t dim(int k) const;
  SparseVec to_coords(const HomMap& f) const;
  HomMap from_coords(int k, const SparseVec& v) const;
  HomMap differential(const HomMap& f) const;
  bool is_cocycle(const HomMap& f) const;
  bool is_coboundary(const HomMap& f) const;

  // For k = 0 the identity comes first.
  const HomCohomology& cohomology(int k) const;
  // Coordinates of the class of a cocycle in the canonical basis of H^k.
  Vec class_coords(const HomMap& f) const;

  HomMap compose(const HomMap& g, const HomMap& f) const;  // g after f
  // Ext product a.b = (-1)^{|a||b|} b after a, i.e. the product of matrices in row order.
  HomMap product(const HomMap& a, const HomMap& b) const;

 private:
  const std::vector<std::size_t>& offsets(int k) const;
  const SparseVec& image(int k, Index g) const;
  const Echelon& coboundaries(int k) const;
  int entry_degree(std::size_t j, std::size_t i, int k) const { return f_.degrees[j] + k - f_.degrees[i]; }

  DGAlgebra dg_;
  SemiFreeModule f_;
  int cutoff_;
  std::vector<std::vector<std::tuple<std::size_t, int, SparseVec>>> coeffs_;   // d(e_j) terms
  std::vector<std::vector<std::tuple<std::size_t, int, SparseVec>>> inverse_;  // j0 -> (j, delta_{j j0})
  mutable std::map<int, std::vector<std::size_t>> offsets_;
  mutable std::map<int, std::vector<std::optional<SparseVec>>> images_;
  mutable std::map<int, std::unique_ptr<Echelon>> coboundaries_;
  mutable std::map<int, HomCohomology> cohomology_;
  mutable std::map<int, QMatrix> reduced_reps_;
};

HomCohomology hom_cohomology(const DGAlgebra& dg, const SemiFreeModule& f, int k, int cutoff);

struct ExtAlgebra {
  FiniteGradedAlgebra algebra;
  std::vector<HomMap> cocycle_maps;
};

ExtAlgebra ext_algebra(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff);
// Ext algebra in a supplied basis of cocycle maps (one per class).
ExtAlgebra ext_algebra_in_basis(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff,
                                const std::vector<std::string>& names, const std::vector<HomMap>& basis);

}  // namespace dgcy
