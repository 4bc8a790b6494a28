#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgcy/frobenius.hpp"
#include "dgcy/semifree.hpp"

namespace dgcy {

struct ClassifyOptions {
  ResolveOptions resolve;
  FrobeniusOptions frobenius;
};

struct ClassificationVerdict {
  int cutoff = 0;
  bool koszul = false;
  bool smooth = false;  // finite semi-basis found, verified up to the cutoff
  SmoothnessReport smoothness;
  bool gorenstein = false;
  bool calabi_yau = false;
  bool conditional = false;  // Gorenstein and Calabi-Yau depend on an uncertified smoothness verdict
  bool ext_computed = false;
  ExtAlgebra ext;
  FrobeniusReport frobenius;
  std::optional<int> cy_shift_candidate;
  std::vector<std::string> caveats;
  std::vector<std::string> notes;
};

ClassificationVerdict classify(const DGAlgebra& dg, int cutoff, const ClassifyOptions& opts = {});
// The DG algebra (p, d = 0).
ClassificationVerdict classify_graded(const Presentation& p, int cutoff, const ClassifyOptions& opts = {});

}  // namespace dgcy
