#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dgcy/graded_algebra.hpp"
#include "dgcy/ncalg.hpp"

namespace dgcy {

// Connected cochain DG algebra: a presentation plus one differential image per
// generator. Copies share the underlying normal-form and differential caches.
class DGAlgebra {
 public:
  DGAlgebra(Presentation p, std::vector<NcPoly> diff_images);

  const Presentation& presentation() const { return alg_->presentation(); }
  const GeneratorSet& generators() const { return alg_->generators(); }
  const PresentedAlgebra& algebra() const { return *alg_; }
  const std::vector<NcPoly>& diff_images() const { return diff_; }
  bool has_zero_differential() const;

  // Leibniz expansion in the free algebra, without reduction.
  NcPoly diff_free(const NcPoly& q) const;
  NcPoly diff(const NcPoly& q) const;
  // Differential of every normal word of degree n, in degree n+1 normal coordinates.
  const std::vector<SparseVec>& diff_table(int n) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::unique_ptr<std::vector<SparseVec>>> tables;
  };
  std::shared_ptr<PresentedAlgebra> alg_;
  std::vector<NcPoly> diff_;
  std::shared_ptr<Cache> cache_;
};

// Throws DegreeMismatch or IllDefinedDifferential.
void check_well_defined(const DGAlgebra& dg);

// Free DG module with an ordered basis and a strictly lower-triangular differential:
// d(e_j) = sum over (i, c) in diff[j] of c * e_i.
struct SemiFreeModule {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<std::vector<std::pair<std::size_t, NcPoly>>> diff;
  std::size_t augmentation = 0;

  static SemiFreeModule rank_one();
  std::size_t size() const { return names.size(); }
  std::size_t add(std::string name, int degree, std::vector<std::pair<std::size_t, NcPoly>> d);
  int max_degree() const;
  int min_degree() const;
  int index_of(const std::string& name) const;
};

struct ComplexCohomology {
  int degree = 0;
  std::size_t dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::vector<SparseVec> representatives;  // canonical, sorted by pivot
};

// The cochain complex underlying a semi-free module, degree by degree.
// Elements of F^n are coordinate vectors over (generator j, normal word of
// degree n - deg e_j), ordered by j and then by word.
class ModuleComplex {
 public:
  ModuleComplex(const DGAlgebra& dg, SemiFreeModule f);

  const DGAlgebra& dg() const { return dg_; }
  const SemiFreeModule& module() const { return f_; }

  std::size_t dim(int n) const;
  std::size_t offset(int n, std::size_t j) const;
  std::pair<std::size_t, Index> locate(int n, Index g) const;

  std::vector<NcPoly> to_components(int n, const SparseVec& v) const;
  SparseVec from_components(int n, const std::vector<NcPoly>& parts) const;
  SparseVec differential(int n, const SparseVec& v) const;
  const SparseVec& image(int n, Index g) const;

  ComplexCohomology cohomology(int n, bool representatives = true) const;
  std::size_t differential_rank(int n) const;
  // Echelon form of the coboundaries B^n.
  const Echelon& coboundaries(int n) const;

 private:
  const std::vector<std::size_t>& offsets(int n) const;  // size = generators + 1

  DGAlgebra dg_;
  SemiFreeModule f_;
  // coefficient coordinates: for each j, (i, degree, coords)
  std::vector<std::vector<std::tuple<std::size_t, int, SparseVec>>> coeffs_;
  mutable std::map<int, std::vector<std::size_t>> offsets_;
  mutable std::map<int, std::vector<std::optional<SparseVec>>> images_;
  mutable std::map<int, std::unique_ptr<Echelon>> coboundaries_;
};

struct CohomologyResult {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<NcPoly> representatives;
  std::size_t coboundary_dim = 0;
  std::size_t cocycle_dim = 0;
};

CohomologyResult cohomology(const DGAlgebra& dg, int n);

// Cohomology of the DG algebra with class arithmetic.
class DGCohomology {
 public:
  explicit DGCohomology(const DGAlgebra& dg);
  const CohomologyResult& result(int n) const;
  bool is_cocycle(const NcPoly& z, int n) const;
  bool is_coboundary(const NcPoly& z, int n) const;
  // Coordinates of the class of a cocycle in the representative basis.
  Vec class_coords(const NcPoly& z, int n) const;

 private:
  ModuleComplex complex_;
  mutable std::map<int, CohomologyResult> results_;
  mutable std::map<int, std::vector<SparseVec>> rep_coords_;
};

FiniteGradedAlgebra cohomology_algebra(const DGAlgebra& dg, int cutoff);

struct PresentationCheck {
  bool ok = false;
  std::string failure;  // empty when ok
  std::optional<int> mismatch_degree;
  std::size_t candidate_dim = 0;
  std::size_t cohomology_dim = 0;
  std::vector<std::size_t> dims;  // dim H^n for n = 0..cutoff
};

// images[g] is the cocycle representing candidate generator g.
PresentationCheck verify_presentation(const DGAlgebra& dg, const Presentation& candidate,
                                      const std::vector<NcPoly>& images, int cutoff);

}  // namespace dgcy
