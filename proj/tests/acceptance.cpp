// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dgcy/classify.hpp"
#include "dgcy/document.hpp"
#include "dgcy/errors.hpp"
#include "dgcy/frobenius.hpp"
#include "dgcy/semifree.hpp"

using namespace dgcy;

namespace {

constexpr int kCutoff = 8;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

InputDocument load(const std::string& name) {
  std::ifstream in(std::string(DGCY_CORPUS_DIR) + "/" + name + ".json");
  if (!in) throw Failure{"cannot read corpus file " + name};
  std::ostringstream s;
  s << in.rdbuf();
  return parse_input(s.str());
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// dims of H^0..H^upto and the corpus presentation check at the same cutoff
void cohomology_criterion(const std::string& name, int upto, const std::function<std::size_t(int)>& expected) {
  InputDocument doc = load(name);
  DGAlgebra dg = build_dg_algebra(doc);
  DGCohomology h(dg);
  std::vector<std::size_t> got, want;
  for (int n = 0; n <= upto; ++n) {
    got.push_back(h.result(n).dim);
    want.push_back(expected(n));
  }
  expect(got == want, name + ": dims " + join(got) + ", expected " + join(want));
  expect(doc.cohomology_presentation.has_value(), name + ": corpus file has no cohomology presentation");
  PresentationCheck c = verify_presentation(dg, build_cohomology_presentation(*doc.cohomology_presentation),
                                            build_cohomology_images(dg, *doc.cohomology_presentation), upto);
  expect(c.ok, name + ": presentation check failed: " + c.failure);
}

std::vector<int> sorted_degrees(const SemiFreeModule& f) {
  std::vector<int> d = f.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

bool same_table(const FiniteGradedAlgebra& a, const FiniteGradedAlgebra& b) {
  if (a.names != b.names || a.degrees != b.degrees || a.unit != b.unit) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.constant(i, j, k) != b.constant(i, j, k)) return false;
  return true;
}

ExtAlgebra supplied_ext(const InputDocument& doc, const DGAlgebra& dg) {
  SemiFreeModule f = build_module(dg, *doc.resolution);
  std::vector<std::string> names;
  for (const auto& c : doc.ext_basis) names.push_back(c.name);
  return ext_algebra_in_basis(dg, f, kCutoff, names, build_ext_basis(dg, f, doc.ext_basis));
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

void criterion1() {
  cohomology_criterion("example1", 8, [](int n) { return n % 2 == 0 ? 1u : 0u; });
}
void criterion2() {
  cohomology_criterion("ex3", 8, [](int n) { return static_cast<std::size_t>(n + 1); });
}
void criterion3() {
  cohomology_criterion("ex2", 8, [](int) { return 1u; });
}
void criterion4() {
  cohomology_criterion("ex5", 6, [](int n) { return static_cast<std::size_t>(n + 1); });
}

void criterion5() {
  std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"example1", {0, 1}}, {"ex3", {0, 0, 0, 0}}, {"prop71", {0, 0, 0, 1, 1, 1}}, {"prop72", {0, 0, 0, 1, 1, 1}}};
  for (const auto& [name, degrees] : cases) {
    DGAlgebra dg = build_dg_algebra(load(name));
    SemiFreeModule f = resolve_trivial(dg, kCutoff);
    expect(sorted_degrees(f) == degrees, name + ": resolution has " + std::to_string(f.size()) + " generators");
    try {
      check_semifree(dg, f);
    } catch (const Error& e) {
      throw Failure{name + ": check_semifree: " + e.what()};
    }
    expect(check_resolution(dg, f, kCutoff), name + ": check_resolution failed");
  }
}

void criterion6() {
  for (const char* name : {"prop71", "prop72", "ex3"}) {
    InputDocument doc = load(name);
    DGAlgebra dg = build_dg_algebra(doc);
    FiniteGradedAlgebra computed = supplied_ext(doc, dg).algebra;
    FiniteGradedAlgebra golden = build_structure_constants(load(std::string(name) + "_ext"));
    expect(same_table(computed, golden), std::string(name) + ": Ext table differs from the golden table");
  }

  // example1: Ext = k[x]/(x^2), |x| = -1
  {
    DGAlgebra dg = build_dg_algebra(load("example1"));
    FiniteGradedAlgebra e = ext_algebra(dg, resolve_trivial(dg, kCutoff), kCutoff).algebra;
    std::vector<int> d = e.degrees;
    std::sort(d.begin(), d.end());
    expect(d == std::vector<int>{-1, 0}, "example1: Ext degrees");
    std::size_t x = e.unit == 0 ? 1 : 0;
    expect(e.product(x, x).empty(), "example1: x^2 != 0");
  }

  // ex2: Ext = k[x]/(x^4) in degree 0
  {
    DGAlgebra dg = build_dg_algebra(load("ex2"));
    FiniteGradedAlgebra e = ext_algebra(dg, resolve_trivial(dg, kCutoff), kCutoff).algebra;
    expect(e.dim() == 4, "ex2: Ext has dimension " + std::to_string(e.dim()));
    for (int deg : e.degrees) expect(deg == 0, "ex2: Ext not concentrated in degree 0");
    // radical elements: x^4 = 0 always, and a generic one has x^3 != 0
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    bool cube = false;
    for (int t = 0; t < 20; ++t) {
      Vec v(e.dim());
      for (std::size_t i = 0; i < e.dim(); ++i)
        if (i != e.unit) v[i] = coef(rng);
      Vec v2 = e.multiply(v, v), v3 = e.multiply(v2, v);
      expect(is_zero(e.multiply(v3, v)), "ex2: a radical element has nonzero fourth power");
      cube = cube || !is_zero(v3);
    }
    expect(cube, "ex2: no radical element with nonzero cube");
    FiniteGradedAlgebra named = supplied_ext(load("ex2"), dg).algebra;
    Vec x = unit_vec(4, 1);
    expect(named.multiply(x, x) == unit_vec(4, 2) && named.multiply(unit_vec(4, 2), x) == unit_vec(4, 3),
           "ex2: supplied basis is not 1, x, x^2, x^3");
  }
}

void criterion7() {
  auto hom_dim = [](const std::string& name, int k) {
    InputDocument doc = load(name);
    DGAlgebra dg = build_dg_algebra(doc);
    return hom_cohomology(dg, build_module(dg, *doc.resolution), k, kCutoff).dim;
  };
  std::size_t a = hom_dim("prop72", -1), b = hom_dim("prop72", 0), c = hom_dim("ex3", 0);
  expect(a == 3, "prop72: dim H^-1 = " + std::to_string(a));
  expect(b == 3, "prop72: dim H^0 = " + std::to_string(b));
  expect(c == 4, "ex3: dim H^0 = " + std::to_string(c));
}

void criterion8() {
  FrobeniusReport p71 = analyze(build_structure_constants(load("prop71_ext")));
  expect(p71.is_frobenius && !p71.is_graded_symmetric, "prop71_ext verdict");
  FrobeniusReport p72 = analyze(build_structure_constants(load("prop72_ext")));
  expect(p72.is_frobenius && p72.is_graded_symmetric, "prop72_ext verdict");
  FrobeniusReport x3 = analyze(build_structure_constants(load("ex3_ext")));
  expect(!x3.is_frobenius, "ex3_ext verdict");
  FrobeniusReport kx = analyze(build_structure_constants(load("kx2_ext")));
  expect(kx.is_frobenius && kx.is_graded_symmetric && kx.shift == 1, "k[x]/(x^2) verdict");
}

struct Row {
  std::string name;
  std::optional<bool> koszul, gorenstein, smooth, cy;
};

std::vector<std::string> kDg{"example1", "ex3", "ex2", "ex5", "prop71", "prop72"};

void criterion9() {
  std::vector<Row> table{{"example1", false, true, true, true}, {"ex3", true, false, true, false},
                         {"ex2", true, true, true, true},       {"ex5", true, true, true, true},
                         {"prop71", false, true, true, false},  {"prop72", false, {}, {}, true}};
  for (const Row& r : table) {
    ClassificationVerdict v = classify(build_dg_algebra(load(r.name)), kCutoff);
    auto match = [](std::optional<bool> want, bool got) { return !want || *want == got; };
    expect(match(r.koszul, v.koszul) && match(r.gorenstein, v.gorenstein) && match(r.smooth, v.smooth) &&
               match(r.cy, v.calabi_yau),
           r.name + ": verdict row differs");
  }
}

QMatrix random_change(std::mt19937_64& rng, const FiniteGradedAlgebra& e) {
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t n = e.dim();
  while (true) {
    QMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == e.unit)
          p(i, k) = k == e.unit ? 1 : 0;
        else if (e.degrees[i] == e.degrees[k])
          p(i, k) = coef(rng);
      }
    if (!determinant(p).is_zero()) return p;
  }
}

void criterion10() {
  std::mt19937_64 rng(2024);

  // differential squares to zero and satisfies Leibniz
  for (const auto& name : kDg) {
    DGAlgebra a = build_dg_algebra(load(name));
    const auto& alg = a.algebra();
    auto pick = [&](int degree) {
      const auto& words = alg.normal_words(degree);
      std::uniform_int_distribution<std::size_t> at(0, words.size() - 1);
      return NcPoly::monomial(words[at(rng)]);
    };
    for (int t = 0; t < 200; ++t) {
      NcPoly w = pick(1 + t % 5);
      expect(a.diff(a.diff(w)).is_zero(), name + ": d^2 != 0");
    }
    for (int t = 0; t < 200; ++t) {
      int da = 1 + t % 3, db = 1 + (t / 3) % 3;
      NcPoly x = pick(da), y = pick(db);
      NcPoly lhs = a.diff(alg.multiply(x, y));
      NcPoly rhs = alg.multiply(a.diff(x), y) + alg.multiply(x, a.diff(y)) * Rational(da % 2 == 0 ? 1 : -1);
      expect(lhs == rhs, name + ": Leibniz rule fails");
    }
  }

  // Ext constants do not depend on cocycle representatives
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& name : kDg) {
    InputDocument doc = load(name);
    if (!doc.resolution || doc.ext_basis.empty()) continue;
    DGAlgebra dg = build_dg_algebra(doc);
    SemiFreeModule f = build_module(dg, *doc.resolution);
    HomComplex h(dg, f, kCutoff);
    std::vector<std::string> names;
    for (const auto& c : doc.ext_basis) names.push_back(c.name);
    std::vector<HomMap> maps = build_ext_basis(dg, f, doc.ext_basis);
    FiniteGradedAlgebra base = ext_algebra_in_basis(dg, f, kCutoff, names, maps).algebra;
    for (int t = 0; t < 10; ++t) {
      std::vector<HomMap> moved;
      for (const auto& m : maps) {
        SparseVec v;
        for (std::size_t g = 0; g < h.dim(m.degree - 1); ++g)
          if (int c = coef(rng)) v.emplace_back(static_cast<Index>(g), Rational(c));
        HomMap b = h.differential(h.from_coords(m.degree - 1, v));
        HomMap p = m;
        for (std::size_t j = 0; j < p.entries.size(); ++j)
          for (std::size_t i = 0; i < p.entries.size(); ++i) p.entries[j][i] += b.entries[j][i];
        moved.push_back(p);
      }
      expect(same_table(ext_algebra_in_basis(dg, f, kCutoff, names, moved).algebra, base),
             name + ": Ext table moved under a coboundary perturbation");
    }
  }

  // Frobenius verdicts survive degree-preserving changes of basis
  for (const char* name : {"prop71_ext", "prop72_ext", "ex3_ext", "kx2_ext"}) {
    FiniteGradedAlgebra e = build_structure_constants(load(name));
    FrobeniusReport base = analyze(e);
    for (int t = 0; t < 10; ++t) {
      FrobeniusReport r = analyze(e.change_basis(random_change(rng, e)));
      expect(r.is_frobenius == base.is_frobenius && r.shift == base.shift &&
                 r.is_graded_symmetric == base.is_graded_symmetric,
             std::string(name) + ": verdict changed under a change of basis");
    }
  }

  // computed Ext tables are associative; Calabi-Yau implies Gorenstein
  for (const auto& name : kDg) {
    ClassificationVerdict v = classify(build_dg_algebra(load(name)), kCutoff);
    if (v.ext_computed) {
      try {
        validate(v.ext.algebra);
      } catch (const Error& e) {
        throw Failure{name + ": Ext table: " + e.what()};
      }
    }
    expect(!v.calabi_yau || v.gorenstein, name + ": Calabi-Yau without Gorenstein");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, void (*)()>> criteria{
      {"cohomology of example1", criterion1},
      {"cohomology of ex3", criterion2},
      {"cohomology of ex2", criterion3},
      {"cohomology of ex5", criterion4},
      {"minimal semi-free resolutions", criterion5},
      {"Ext tables", criterion6},
      {"Hom-complex dimensions", criterion7},
      {"Frobenius verdicts", criterion8},
      {"classification table", criterion9},
      {"property suites", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << timing << ")";
    if (!ok) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
