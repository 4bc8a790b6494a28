#include "dgcy/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dgcy/classify.hpp"
#include "dgcy/errors.hpp"
#include "dgcy/frobenius.hpp"
#include "dgcy/version.hpp"
#include "json.hpp"

namespace dgcy {
namespace {

using json = nlohmann::ordered_json;

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string linear(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  GeneratorSet g;
  g.names = names;
  g.degrees.assign(names.size(), 1);
  NcPoly q;
  for (const auto& [k, c] : v) q.add_term(Word({static_cast<Letter>(k)}), c);
  return to_string(q, g);
}

// Long representatives are shortened in text output only.
std::string clip(const std::string& s, std::size_t width = 72) {
  if (s.size() <= width) return s;
  std::size_t cut = s.rfind(" + ", width);
  if (cut == std::string::npos || cut == 0) cut = width;
  return s.substr(0, cut) + " + ...";
}

json rationals(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

json matrix(const QMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(rationals(m.row(r)));
  return a;
}

json module_json(const DGAlgebra& dg, const SemiFreeModule& f) {
  json gens = json::array();
  for (std::size_t j = 0; j < f.size(); ++j) {
    json d = json::array();
    for (const auto& [i, c] : f.diff[j]) d.push_back(json::array({to_string(c, dg.generators()), f.names[i]}));
    gens.push_back({{"name", f.names[j]}, {"degree", f.degrees[j]}, {"differential", d}});
  }
  return gens;
}

json map_json(const DGAlgebra& dg, const SemiFreeModule& f, const HomMap& h) {
  json m = json::object();
  for (std::size_t j = 0; j < f.size(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!h.entries[j][i].is_zero()) row.push_back(json::array({to_string(h.entries[j][i], dg.generators()), f.names[i]}));
    if (!row.empty()) m[f.names[j]] = row;
  }
  return m;
}

json algebra_json(const FiniteGradedAlgebra& e) {
  json basis = json::array();
  for (std::size_t i = 0; i < e.dim(); ++i) basis.push_back({{"name", e.names[i]}, {"degree", e.degrees[i]}});
  json products = json::array();
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b) {
      if (a == e.unit || b == e.unit || e.product(a, b).empty()) continue;
      products.push_back({{"left", e.names[a]}, {"right", e.names[b]}, {"value", linear(e.product(a, b), e.names)}});
    }
  return {{"basis", basis}, {"unit", e.names[e.unit]}, {"products", products}};
}

json frobenius_json(const FiniteGradedAlgebra& e, const FrobeniusReport& r) {
  json j;
  j["is_frobenius"] = r.is_frobenius;
  j["shift"] = r.shift ? json(*r.shift) : json();
  j["socle_degree"] = r.socle_degree ? json(*r.socle_degree) : json();
  j["witness_functional"] = r.is_frobenius ? rationals(r.witness_functional) : json();
  j["gram"] = r.is_frobenius ? matrix(r.gram) : json();
  j["is_graded_symmetric"] = r.is_graded_symmetric;
  j["symmetric_witness"] = r.is_graded_symmetric ? rationals(r.symmetric_witness) : json();
  j["nakayama"] = r.nakayama ? matrix(*r.nakayama) : json();
  j["nakayama_is_identity"] = r.nakayama ? json(*r.nakayama == QMatrix::identity(e.dim())) : json();
  j["ungraded"] = r.ungraded;
  j["method"] = e.dim() <= kDefaultDetBound ? "symbolic" : "probabilistic";
  j["probabilistic"] = r.probabilistic;
  return j;
}

struct ExtResult {
  SemiFreeModule module;
  bool supplied = false;
  ExtAlgebra ext;
};

ExtResult compute_ext(const InputDocument& doc, const DGAlgebra& dg, int cutoff) {
  ExtResult r;
  if (doc.resolution) {
    r.module = build_module(dg, *doc.resolution);
    r.supplied = true;
    check_semifree(dg, r.module);
    if (!check_resolution(dg, r.module, cutoff))
      throw NotAResolution("supplied resolution is not exact up to degree " + std::to_string(cutoff));
  } else {
    r.module = resolve_trivial(dg, cutoff);
  }
  if (!doc.ext_basis.empty()) {
    std::vector<std::string> names;
    for (const auto& c : doc.ext_basis) names.push_back(c.name);
    r.ext = ext_algebra_in_basis(dg, r.module, cutoff, names, build_ext_basis(dg, r.module, doc.ext_basis));
  } else {
    r.ext = ext_algebra(dg, r.module, cutoff);
  }
  return r;
}

std::string tick(bool b) { return b ? "✓" : "✗"; }

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t w) {
  std::size_t n = display_width(s);
  return s + std::string(w > n ? w - n : 0, ' ');
}

std::string ext_table_text(const FiniteGradedAlgebra& e) {
  std::vector<std::vector<std::string>> cells(e.dim() + 1, std::vector<std::string>(e.dim() + 1));
  cells[0][0] = "·";
  for (std::size_t a = 0; a < e.dim(); ++a) {
    cells[0][a + 1] = e.names[a];
    cells[a + 1][0] = e.names[a];
    for (std::size_t b = 0; b < e.dim(); ++b) cells[a + 1][b + 1] = linear(e.product(a, b), e.names);
  }
  std::vector<std::size_t> width(e.dim() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) out << (c ? " | " : "") << pad(cells[r][c], width[c]);
    out << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? 3 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

std::string degrees_text(const FiniteGradedAlgebra& e) {
  std::ostringstream out;
  for (std::size_t i = 0; i < e.dim(); ++i) out << (i ? ", " : "") << e.names[i] << " (" << e.degrees[i] << ")";
  return out.str();
}

std::string frobenius_text(const FrobeniusReport& r) {
  std::ostringstream out;
  out << "Frobenius: " << tick(r.is_frobenius);
  if (r.shift) out << " (shift " << *r.shift << ")";
  out << "\ngraded symmetric: " << tick(r.is_graded_symmetric) << "\n";
  if (r.is_frobenius) {
    out << "witness functional: [";
    for (std::size_t i = 0; i < r.witness_functional.size(); ++i) out << (i ? ", " : "") << r.witness_functional[i].str();
    out << "]\n";
  }
  if (r.nakayama) out << "Nakayama automorphism is identity: " << tick(*r.nakayama == QMatrix::identity(r.nakayama->rows())) << "\n";
  if (r.probabilistic) out << "note: verdict from a randomized determinant test\n";
  return out.str();
}

json cohomology_report(const InputDocument& doc, const DGAlgebra& dg, int cutoff, std::string& text) {
  DGCohomology h(dg);
  json dims = json::array(), reps = json::array();
  std::ostringstream out;
  for (int n = 0; n <= cutoff; ++n) {
    const CohomologyResult& r = h.result(n);
    dims.push_back({{"degree", n}, {"dim", r.dim}});
    json cls = json::array();
    for (const auto& z : r.representatives) cls.push_back(to_string(z, dg.generators()));
    reps.push_back({{"degree", n}, {"classes", cls}});
    out << "H^" << n << ": dim " << r.dim;
    if (!r.representatives.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < r.representatives.size() && i < 6; ++i)
        out << (i ? ", " : "") << clip(to_string(r.representatives[i], dg.generators()));
      if (r.representatives.size() > 6) out << ", ...";
      out << "]";
    }
    out << "\n";
  }
  json result{{"dims", dims}, {"representatives", reps}};
  if (doc.cohomology_presentation) {
    Presentation p = build_cohomology_presentation(*doc.cohomology_presentation);
    PresentationCheck c = verify_presentation(dg, p, build_cohomology_images(dg, *doc.cohomology_presentation), cutoff);
    json pc{{"ok", c.ok}, {"failure", c.failure}};
    pc["mismatch_degree"] = c.mismatch_degree ? json(*c.mismatch_degree) : json();
    result["presentation_check"] = pc;
    out << "presentation check: " << (c.ok ? "passed" : "failed: " + c.failure) << "\n";
  }
  text = out.str();
  return result;
}

json resolve_report(const InputDocument& doc, const DGAlgebra& dg, int cutoff, std::string& text) {
  SmoothnessReport s = smoothness_report(dg, cutoff);
  const SemiFreeModule& f = s.resolution;
  json result;
  result["complete"] = s.resolution_complete;
  result["generators"] = module_json(dg, f);
  result["koszul"] = is_koszul(f);
  check_semifree(dg, f);
  result["check_semifree"] = "ok";
  result["check_resolution"] = s.resolution_complete && check_resolution(dg, f, cutoff);
  result["smoothness"] = {{"finite_basis_found", s.finite_basis_found},
                          {"basis_size", s.basis_size},
                          {"certified_to", s.certified_to},
                          {"margin", s.margin}};
  std::ostringstream out;
  out << "semi-basis (" << f.size() << " elements" << (s.resolution_complete ? "" : ", incomplete") << "):\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    out << "  " << f.names[j] << " [" << f.degrees[j] << "]";
    if (!f.diff[j].empty()) {
      out << "  d = ";
      for (std::size_t t = 0; t < f.diff[j].size(); ++t)
        out << (t ? " + " : "") << "(" << to_string(f.diff[j][t].second, dg.generators()) << ")*" << f.names[f.diff[j][t].first];
    }
    out << "\n";
  }
  out << "Koszul: " << tick(is_koszul(f)) << "\nfinite semi-basis up to degree " << cutoff << ": "
      << tick(s.finite_basis_found) << "\n";
  if (doc.resolution) {
    SemiFreeModule given = build_module(dg, *doc.resolution);
    json sup;
    try {
      check_semifree(dg, given);
      sup["check_semifree"] = "ok";
      sup["check_resolution"] = check_resolution(dg, given, cutoff);
    } catch (const InputError& e) {
      sup["check_semifree"] = e.kind() + ": " + e.what();
      sup["check_resolution"] = false;
    }
    result["supplied"] = sup;
    out << "supplied resolution: semi-free " << sup["check_semifree"].get<std::string>() << ", resolution "
        << tick(sup["check_resolution"].get<bool>()) << "\n";
  }
  text = out.str();
  return result;
}

json classify_report(const DGAlgebra& dg, int cutoff, const RunOptions& opts, std::string& text) {
  ClassifyOptions co;
  co.frobenius.seed = opts.seed;
  ClassificationVerdict v = classify(dg, cutoff, co);
  json result;
  result["koszul"] = v.koszul;
  result["smooth"] = v.smooth;
  result["smoothness"] = {{"verified_to", cutoff},
                          {"basis_size", v.smoothness.basis_size},
                          {"finite_basis_found", v.smoothness.finite_basis_found},
                          {"margin", v.smoothness.margin}};
  result["gorenstein"] = v.gorenstein;
  result["calabi_yau"] = v.calabi_yau;
  result["conditional"] = v.conditional;
  result["cy_shift_candidate"] = v.cy_shift_candidate ? json(*v.cy_shift_candidate) : json();
  if (v.ext_computed) {
    result["ext"] = algebra_json(v.ext.algebra);
    result["frobenius"] = frobenius_json(v.ext.algebra, v.frobenius);
  }
  result["caveats"] = v.caveats;
  result["notes"] = v.notes;
  std::ostringstream out;
  out << "Koszul | Gorenstein | smooth | Calabi-Yau\n";
  out << pad(tick(v.koszul), 6) << " | " << pad(tick(v.gorenstein), 10) << " | " << pad(tick(v.smooth), 6) << " | "
      << tick(v.calabi_yau) << "\n";
  for (const auto& c : v.caveats) out << "note: " << c << "\n";
  text = out.str();
  return result;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"cohomology", "resolve", "ext", "frobenius", "classify"};
  return names;
}

std::string run_command(const std::string& command, const InputDocument& doc, const RunOptions& opts) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    throw SchemaError("unknown command '" + command + "'");
  if (opts.max_degree < 0) throw SchemaError("max degree must be nonnegative");
  const int cutoff = opts.max_degree;
  json report;
  report["engine"] = "dgcy";
  report["version"] = DGCY_VERSION;
  report["command"] = command;
  report["cutoff"] = cutoff;
  json input{{"kind", kind_name(doc.kind)}, {"digest", digest(serialize(doc))}};
  if (doc.description) input["description"] = *doc.description;
  if (doc.is_dg()) {
    input["generators"] = doc.generators.size();
    input["relations"] = doc.relations.size();
  } else {
    input["dimension"] = doc.basis.size();
  }
  report["input"] = input;

  std::string text;
  if (command == "frobenius" && !doc.is_dg()) {
    FiniteGradedAlgebra e = build_structure_constants(doc);
    FrobeniusOptions fo;
    fo.seed = opts.seed;
    FrobeniusReport r = analyze(e, fo);
    report["result"] = frobenius_json(e, r);
    text = frobenius_text(r);
  } else {
    if (!doc.is_dg()) throw SchemaError("command '" + command + "' needs a dg-algebra or graded-algebra document");
    DGAlgebra dg = build_dg_algebra(doc);
    check_well_defined(dg);
    if (command == "cohomology") {
      report["result"] = cohomology_report(doc, dg, cutoff, text);
    } else if (command == "resolve") {
      report["result"] = resolve_report(doc, dg, cutoff, text);
    } else if (command == "classify") {
      report["result"] = classify_report(dg, cutoff, opts, text);
    } else {
      ExtResult r = compute_ext(doc, dg, cutoff);
      const FiniteGradedAlgebra& e = r.ext.algebra;
      validate(e);
      if (command == "ext") {
        json result = algebra_json(e);
        result["resolution"] = r.supplied ? "supplied" : "computed";
        json reps = json::array();
        for (std::size_t i = 0; i < e.dim(); ++i)
          reps.push_back({{"name", e.names[i]}, {"map", map_json(dg, r.module, r.ext.cocycle_maps[i])}});
        result["representatives"] = reps;
        report["result"] = result;
        text = "basis: " + degrees_text(e) + "\n" + ext_table_text(e);
      } else {
        FrobeniusOptions fo;
        fo.seed = opts.seed;
        FrobeniusReport fr = analyze(e, fo);
        report["result"] = frobenius_json(e, fr);
        text = frobenius_text(fr);
      }
    }
  }
  if (opts.format == OutputFormat::Text) return text;
  return report.dump(2) + "\n";
}

}  // namespace dgcy
