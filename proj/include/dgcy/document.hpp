#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgcy/dgcore.hpp"
#include "dgcy/graded_algebra.hpp"
#include "dgcy/semifree.hpp"

namespace dgcy {

enum class DocumentKind { DgAlgebra, GradedAlgebra, StructureConstants };

std::string kind_name(DocumentKind k);

struct NamedDegree {
  std::string name;
  int degree = 0;
  friend bool operator==(const NamedDegree&, const NamedDegree&) = default;
};

// (coefficient expression, basis element name)
using ModuleTerms = std::vector<std::pair<std::string, std::string>>;

struct ResolutionSpec {
  std::vector<NamedDegree> basis;
  std::map<std::string, ModuleTerms> differential;
  std::string augmentation;
  friend bool operator==(const ResolutionSpec&, const ResolutionSpec&) = default;
};

struct ExtClassSpec {
  std::string name;
  int degree = 0;
  std::map<std::string, ModuleTerms> map;  // source basis element -> image
  friend bool operator==(const ExtClassSpec&, const ExtClassSpec&) = default;
};

struct CohomologyPresentationSpec {
  std::vector<NamedDegree> generators;
  std::vector<std::string> relations;
  std::map<std::string, std::string> images;
  friend bool operator==(const CohomologyPresentationSpec&, const CohomologyPresentationSpec&) = default;
};

struct TableEntry {
  std::string left;
  std::string right;
  std::string value;  // linear combination of basis names
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct InputDocument {
  DocumentKind kind = DocumentKind::DgAlgebra;
  std::string field = "Q";
  std::optional<std::string> description;

  // dg-algebra and graded-algebra
  std::vector<NamedDegree> generators;
  std::vector<std::string> relations;
  std::map<std::string, std::string> differential;
  std::optional<ResolutionSpec> resolution;
  std::vector<ExtClassSpec> ext_basis;
  std::optional<CohomologyPresentationSpec> cohomology_presentation;

  // structure-constants
  std::vector<std::string> basis;
  std::vector<int> degrees;
  std::string unit;
  std::vector<TableEntry> table;

  bool is_dg() const { return kind != DocumentKind::StructureConstants; }
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Strict parse; every expression is checked against the declared names.
InputDocument parse_input(const std::string& text);
std::string serialize(const InputDocument& doc);

DGAlgebra build_dg_algebra(const InputDocument& doc);
SemiFreeModule build_module(const DGAlgebra& dg, const ResolutionSpec& spec);
std::vector<HomMap> build_ext_basis(const DGAlgebra& dg, const SemiFreeModule& f, const std::vector<ExtClassSpec>& spec);
Presentation build_cohomology_presentation(const CohomologyPresentationSpec& spec);
std::vector<NcPoly> build_cohomology_images(const DGAlgebra& dg, const CohomologyPresentationSpec& spec);
FiniteGradedAlgebra build_structure_constants(const InputDocument& doc);

}  // namespace dgcy
