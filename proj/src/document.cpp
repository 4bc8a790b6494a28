#include "dgcy/document.hpp"

#include <set>

#include "dgcy/errors.hpp"
#include "dgcy/frobenius.hpp"
#include "json.hpp"

namespace dgcy {
namespace {

using json = nlohmann::ordered_json;

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) throw SchemaError("unknown field '" + k + "' in " + where);
  }
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + key + "' in " + where);
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + " must be a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
  return j.get<int>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array");
  return j;
}

std::vector<NamedDegree> named_degrees(const json& j, const std::string& where) {
  std::vector<NamedDegree> out;
  std::size_t i = 0;
  for (const auto& e : as_array(j, where)) {
    std::string w = where + "[" + std::to_string(i++) + "]";
    allow_keys(e, w, {"name", "degree"});
    out.push_back({as_string(need(e, "name", w), w + ".name"), as_int(need(e, "degree", w), w + ".degree")});
  }
  return out;
}

std::map<std::string, ModuleTerms> module_terms(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  std::map<std::string, ModuleTerms> out;
  for (const auto& [k, v] : j.items()) {
    std::string w = where + "." + k;
    ModuleTerms terms;
    for (const auto& t : as_array(v, w)) {
      if (!t.is_array() || t.size() != 2) throw SchemaError(w + " entries must be [coefficient, basis element] pairs");
      terms.emplace_back(as_string(t[0], w + " coefficient"), as_string(t[1], w + " basis element"));
    }
    out[k] = std::move(terms);
  }
  return out;
}

json terms_json(const std::map<std::string, ModuleTerms>& m) {
  json out = json::object();
  for (const auto& [k, terms] : m) {
    json arr = json::array();
    for (const auto& [c, t] : terms) arr.push_back(json::array({c, t}));
    out[k] = arr;
  }
  return out;
}

json named_json(const std::vector<NamedDegree>& v) {
  json out = json::array();
  for (const auto& g : v) out.push_back({{"name", g.name}, {"degree", g.degree}});
  return out;
}

GeneratorSet generator_set(const std::vector<NamedDegree>& gens) {
  GeneratorSet g;
  for (const auto& n : gens) {
    g.names.push_back(n.name);
    g.degrees.push_back(n.degree);
  }
  g.validate();
  return g;
}

NcPoly expression(const std::string& text, const GeneratorSet& gens, const std::string& where) {
  try {
    return parse_poly(text, gens);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail, e.line, e.column);
  } catch (const UnknownGenerator& e) {
    throw UnknownGenerator(where + ": " + e.what());
  }
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names, const std::string& where) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second) throw SchemaError("duplicate name '" + names[i] + "' in " + where);
  return idx;
}

std::size_t lookup(const std::map<std::string, std::size_t>& idx, const std::string& name, const std::string& where) {
  auto it = idx.find(name);
  if (it == idx.end()) throw SchemaError(where + " names unknown element '" + name + "'");
  return it->second;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::DgAlgebra:
      return "dg-algebra";
    case DocumentKind::GradedAlgebra:
      return "graded-algebra";
    case DocumentKind::StructureConstants:
      return "structure-constants";
  }
  return "";
}

InputDocument parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string msg = e.what();
    auto colon = msg.rfind(": ");
    throw ParseError("invalid JSON: " + (colon == std::string::npos ? msg : msg.substr(colon + 2)), line, column);
  }
  allow_keys(j, "document",
             {"kind", "field", "description", "generators", "relations", "differential", "resolution", "ext_basis",
              "cohomology_presentation", "basis", "degrees", "unit", "table"});
  InputDocument doc;
  std::string kind = as_string(need(j, "kind", "document"), "kind");
  if (kind == "dg-algebra") {
    doc.kind = DocumentKind::DgAlgebra;
  } else if (kind == "graded-algebra") {
    doc.kind = DocumentKind::GradedAlgebra;
  } else if (kind == "structure-constants") {
    doc.kind = DocumentKind::StructureConstants;
  } else {
    throw SchemaError("kind must be dg-algebra, graded-algebra or structure-constants, not '" + kind + "'");
  }
  doc.field = as_string(need(j, "field", "document"), "field");
  if (doc.field != "Q") throw SchemaError("field must be \"Q\"");
  if (j.contains("description")) doc.description = as_string(j["description"], "description");

  if (doc.is_dg()) {
    for (const char* k : {"basis", "degrees", "unit", "table"})
      if (j.contains(k)) throw SchemaError("field '" + std::string(k) + "' is only allowed for structure-constants");
    doc.generators = named_degrees(need(j, "generators", "document"), "generators");
    if (j.contains("relations")) {
      std::size_t i = 0;
      for (const auto& r : as_array(j["relations"], "relations"))
        doc.relations.push_back(as_string(r, "relations[" + std::to_string(i++) + "]"));
    }
    if (j.contains("differential")) {
      const json& d = j["differential"];
      if (!d.is_object()) throw SchemaError("differential must be an object");
      for (const auto& [k, v] : d.items()) doc.differential[k] = as_string(v, "differential." + k);
    }
    if (j.contains("resolution")) {
      const json& r = j["resolution"];
      allow_keys(r, "resolution", {"basis", "differential", "augmentation"});
      ResolutionSpec spec;
      spec.basis = named_degrees(need(r, "basis", "resolution"), "resolution.basis");
      if (r.contains("differential")) spec.differential = module_terms(r["differential"], "resolution.differential");
      if (r.contains("augmentation")) spec.augmentation = as_string(r["augmentation"], "resolution.augmentation");
      doc.resolution = std::move(spec);
    }
    if (j.contains("ext_basis")) {
      std::size_t i = 0;
      for (const auto& e : as_array(j["ext_basis"], "ext_basis")) {
        std::string w = "ext_basis[" + std::to_string(i++) + "]";
        allow_keys(e, w, {"name", "degree", "map"});
        ExtClassSpec c;
        c.name = as_string(need(e, "name", w), w + ".name");
        c.degree = as_int(need(e, "degree", w), w + ".degree");
        if (e.contains("map")) c.map = module_terms(e["map"], w + ".map");
        doc.ext_basis.push_back(std::move(c));
      }
      if (!doc.resolution) throw SchemaError("ext_basis requires a resolution");
    }
    if (j.contains("cohomology_presentation")) {
      const json& c = j["cohomology_presentation"];
      allow_keys(c, "cohomology_presentation", {"generators", "relations", "images"});
      CohomologyPresentationSpec spec;
      spec.generators = named_degrees(need(c, "generators", "cohomology_presentation"), "cohomology_presentation.generators");
      if (c.contains("relations"))
        for (const auto& r : as_array(c["relations"], "cohomology_presentation.relations"))
          spec.relations.push_back(as_string(r, "cohomology_presentation.relations"));
      const json& im = need(c, "images", "cohomology_presentation");
      if (!im.is_object()) throw SchemaError("cohomology_presentation.images must be an object");
      for (const auto& [k, v] : im.items()) spec.images[k] = as_string(v, "cohomology_presentation.images." + k);
      doc.cohomology_presentation = std::move(spec);
    }
    DGAlgebra dg = build_dg_algebra(doc);
    if (doc.resolution) {
      SemiFreeModule f = build_module(dg, *doc.resolution);
      build_ext_basis(dg, f, doc.ext_basis);
    }
    if (doc.cohomology_presentation) build_cohomology_images(dg, *doc.cohomology_presentation);
  } else {
    for (const char* k : {"generators", "relations", "differential", "resolution", "ext_basis", "cohomology_presentation"})
      if (j.contains(k)) throw SchemaError("field '" + std::string(k) + "' is not allowed for structure-constants");
    std::size_t i = 0;
    for (const auto& b : as_array(need(j, "basis", "document"), "basis"))
      doc.basis.push_back(as_string(b, "basis[" + std::to_string(i++) + "]"));
    i = 0;
    for (const auto& d : as_array(need(j, "degrees", "document"), "degrees"))
      doc.degrees.push_back(as_int(d, "degrees[" + std::to_string(i++) + "]"));
    doc.unit = as_string(need(j, "unit", "document"), "unit");
    i = 0;
    for (const auto& t : as_array(need(j, "table", "document"), "table")) {
      std::string w = "table[" + std::to_string(i++) + "]";
      allow_keys(t, w, {"left", "right", "value"});
      doc.table.push_back({as_string(need(t, "left", w), w + ".left"), as_string(need(t, "right", w), w + ".right"),
                           as_string(need(t, "value", w), w + ".value")});
    }
    build_structure_constants(doc);
  }
  return doc;
}

std::string serialize(const InputDocument& doc) {
  json j;
  j["kind"] = kind_name(doc.kind);
  j["field"] = doc.field;
  if (doc.description) j["description"] = *doc.description;
  if (doc.is_dg()) {
    j["generators"] = named_json(doc.generators);
    j["relations"] = doc.relations;
    j["differential"] = json::object();
    for (const auto& [k, v] : doc.differential) j["differential"][k] = v;
    if (doc.resolution) {
      json r;
      r["basis"] = named_json(doc.resolution->basis);
      r["differential"] = terms_json(doc.resolution->differential);
      if (!doc.resolution->augmentation.empty()) r["augmentation"] = doc.resolution->augmentation;
      j["resolution"] = r;
    }
    if (!doc.ext_basis.empty()) {
      json arr = json::array();
      for (const auto& c : doc.ext_basis) arr.push_back({{"name", c.name}, {"degree", c.degree}, {"map", terms_json(c.map)}});
      j["ext_basis"] = arr;
    }
    if (doc.cohomology_presentation) {
      json c;
      c["generators"] = named_json(doc.cohomology_presentation->generators);
      c["relations"] = doc.cohomology_presentation->relations;
      c["images"] = json::object();
      for (const auto& [k, v] : doc.cohomology_presentation->images) c["images"][k] = v;
      j["cohomology_presentation"] = c;
    }
  } else {
    j["basis"] = doc.basis;
    j["degrees"] = doc.degrees;
    j["unit"] = doc.unit;
    json arr = json::array();
    for (const auto& t : doc.table) arr.push_back({{"left", t.left}, {"right", t.right}, {"value", t.value}});
    j["table"] = arr;
  }
  return j.dump(2) + "\n";
}

DGAlgebra build_dg_algebra(const InputDocument& doc) {
  if (!doc.is_dg()) throw SchemaError("a dg-algebra or graded-algebra document is required");
  Presentation p;
  p.generators = generator_set(doc.generators);
  for (std::size_t i = 0; i < doc.relations.size(); ++i)
    p.relations.push_back(expression(doc.relations[i], p.generators, "relations[" + std::to_string(i) + "]"));
  p.validate();
  if (doc.kind == DocumentKind::GradedAlgebra && !doc.differential.empty())
    throw SchemaError("graded-algebra documents have no differential");
  std::vector<NcPoly> images(p.generators.size());
  for (const auto& [name, text] : doc.differential) {
    int g = p.generators.index_of(name);
    if (g < 0) throw UnknownGenerator("differential names unknown generator '" + name + "'");
    NcPoly q = expression(text, p.generators, "differential." + name);
    if (!q.is_homogeneous(p.generators))
      throw HomogeneityError("differential." + name + ": '" + text + "' is not homogeneous");
    images[static_cast<std::size_t>(g)] = std::move(q);
  }
  return DGAlgebra(std::move(p), std::move(images));
}

SemiFreeModule build_module(const DGAlgebra& dg, const ResolutionSpec& spec) {
  SemiFreeModule f;
  std::vector<std::string> names;
  for (const auto& b : spec.basis) names.push_back(b.name);
  auto idx = name_index(names, "resolution.basis");
  if (names.empty()) throw SchemaError("resolution.basis is empty");
  for (const auto& b : spec.basis) f.add(b.name, b.degree, {});
  f.augmentation = spec.augmentation.empty() ? 0 : lookup(idx, spec.augmentation, "resolution.augmentation");
  for (const auto& [src, terms] : spec.differential) {
    std::size_t j = lookup(idx, src, "resolution.differential");
    for (const auto& [c, t] : terms)
      f.diff[j].emplace_back(lookup(idx, t, "resolution.differential." + src),
                             expression(c, dg.generators(), "resolution.differential." + src));
  }
  return f;
}

std::vector<HomMap> build_ext_basis(const DGAlgebra& dg, const SemiFreeModule& f, const std::vector<ExtClassSpec>& spec) {
  auto idx = name_index(f.names, "resolution.basis");
  std::vector<std::string> names;
  for (const auto& c : spec) names.push_back(c.name);
  name_index(names, "ext_basis");
  std::vector<HomMap> out;
  for (const auto& c : spec) {
    HomMap h = HomMap::zero(f.size(), c.degree);
    for (const auto& [src, terms] : c.map) {
      std::size_t j = lookup(idx, src, "ext_basis." + c.name);
      for (const auto& [coef, t] : terms)
        h.entries[j][lookup(idx, t, "ext_basis." + c.name + "." + src)] +=
            expression(coef, dg.generators(), "ext_basis." + c.name + "." + src);
    }
    out.push_back(std::move(h));
  }
  return out;
}

Presentation build_cohomology_presentation(const CohomologyPresentationSpec& spec) {
  Presentation p;
  p.generators = generator_set(spec.generators);
  for (std::size_t i = 0; i < spec.relations.size(); ++i)
    p.relations.push_back(
        expression(spec.relations[i], p.generators, "cohomology_presentation.relations[" + std::to_string(i) + "]"));
  p.validate();
  return p;
}

std::vector<NcPoly> build_cohomology_images(const DGAlgebra& dg, const CohomologyPresentationSpec& spec) {
  Presentation p = build_cohomology_presentation(spec);
  std::vector<NcPoly> images;
  for (const auto& g : spec.generators) {
    auto it = spec.images.find(g.name);
    if (it == spec.images.end()) throw SchemaError("cohomology_presentation.images has no entry for '" + g.name + "'");
    images.push_back(expression(it->second, dg.generators(), "cohomology_presentation.images." + g.name));
  }
  for (const auto& [k, v] : spec.images)
    if (p.generators.index_of(k) < 0) throw SchemaError("cohomology_presentation.images names unknown generator '" + k + "'");
  return images;
}

FiniteGradedAlgebra build_structure_constants(const InputDocument& doc) {
  if (doc.kind != DocumentKind::StructureConstants) throw SchemaError("a structure-constants document is required");
  if (doc.basis.size() != doc.degrees.size()) throw SchemaError("basis and degrees differ in length");
  auto idx = name_index(doc.basis, "basis");
  std::size_t unit = lookup(idx, doc.unit, "unit");
  FiniteGradedAlgebra e = FiniteGradedAlgebra::zero_table(doc.basis, doc.degrees, unit);
  for (std::size_t i = 0; i < e.dim(); ++i) {
    e.product(unit, i) = {{static_cast<Index>(i), Rational(1)}};
    e.product(i, unit) = {{static_cast<Index>(i), Rational(1)}};
  }
  GeneratorSet letters;
  letters.names = doc.basis;
  letters.degrees.assign(doc.basis.size(), 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < doc.table.size(); ++t) {
    const TableEntry& entry = doc.table[t];
    std::string w = "table[" + std::to_string(t) + "]";
    std::size_t a = lookup(idx, entry.left, w + ".left"), b = lookup(idx, entry.right, w + ".right");
    if (!seen.emplace(a, b).second) throw SchemaError(w + " repeats the product " + entry.left + "*" + entry.right);
    NcPoly v = expression(entry.value, letters, w + ".value");
    SparseVec coords;
    for (const auto& [word, c] : v.terms()) {
      if (word.size() > 1) throw SchemaError(w + ".value must be a linear combination of basis elements");
      std::size_t k = word.size() == 0 ? unit : static_cast<std::size_t>(word.letters[0]);
      auto hit = std::find_if(coords.begin(), coords.end(), [&](const auto& t) { return t.first == static_cast<Index>(k); });
      if (hit == coords.end()) {
        coords.emplace_back(static_cast<Index>(k), c);
      } else if ((hit->second += c).is_zero()) {
        coords.erase(hit);
      }
    }
    std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    e.product(a, b) = std::move(coords);
  }
  validate(e);
  return e;
}

}  // namespace dgcy
