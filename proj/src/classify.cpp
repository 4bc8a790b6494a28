#include "dgcy/classify.hpp"

#include "dgcy/errors.hpp"

namespace dgcy {

ClassificationVerdict classify(const DGAlgebra& dg, int cutoff, const ClassifyOptions& opts) {
  check_well_defined(dg);
  ClassificationVerdict v;
  v.cutoff = cutoff;
  v.smoothness = smoothness_report(dg, cutoff, opts.resolve);
  const SemiFreeModule& f = v.smoothness.resolution;
  v.smooth = v.smoothness.finite_basis_found;
  v.koszul = is_koszul(f);
  if (v.smooth) {
    v.caveats.push_back("homological smoothness verified up to degree " + std::to_string(cutoff) + " (" +
                        std::to_string(v.smoothness.basis_size) + " semi-basis elements, stability margin " +
                        std::to_string(v.smoothness.margin) + ")");
  } else {
    v.caveats.push_back("no finite semi-basis certified up to degree " + std::to_string(cutoff));
  }
  if (!v.smoothness.resolution_complete) {
    v.caveats.push_back("resolution stopped early: Koszul verdict reflects the partial semi-basis; "
                        "Gorenstein and Calabi-Yau undetermined");
    v.conditional = true;
    return v;
  }

  v.ext = ext_algebra(dg, f, cutoff);
  v.ext_computed = true;
  v.frobenius = analyze(v.ext.algebra, opts.frobenius);
  v.gorenstein = v.frobenius.is_frobenius;
  v.calabi_yau = v.gorenstein && v.frobenius.is_graded_symmetric;
  if (v.calabi_yau && !v.gorenstein) throw InvariantViolation("Calabi-Yau verdict without Gorenstein");
  if (!v.smooth) {
    v.conditional = true;
    v.caveats.push_back("Gorenstein and Calabi-Yau verdicts are conditional on smoothness");
  }
  if (v.frobenius.probabilistic) v.caveats.push_back("Frobenius verdict from a randomized determinant test");
  if (v.calabi_yau) {
    v.cy_shift_candidate = v.frobenius.shift;
    v.caveats.push_back("candidate Calabi-Yau shift " + std::to_string(*v.frobenius.shift) +
                        " is the Frobenius shift of the Ext algebra; the Calabi-Yau dimension is not asserted");
  }
  v.notes.push_back("Gorenstein is decided by whether the Ext algebra is graded Frobenius");
  v.notes.push_back("Calabi-Yau is decided by whether the Ext algebra is symmetric graded Frobenius");
  v.notes.push_back("the equivalent statements about Auslander-Reiten triangles and Serre functors are not computed");
  return v;
}

ClassificationVerdict classify_graded(const Presentation& p, int cutoff, const ClassifyOptions& opts) {
  p.validate();
  return classify(DGAlgebra(p, std::vector<NcPoly>(p.generators.size())), cutoff, opts);
}

}  // namespace dgcy
