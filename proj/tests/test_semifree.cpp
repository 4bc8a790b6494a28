#include <random>
#include <tuple>

#include "doctest.h"
#include "dgcy/errors.hpp"
#include "helpers.hpp"

using namespace dgcy;
using namespace testing_helpers;

namespace {

std::vector<int> sorted_degrees(const SemiFreeModule& f) {
  std::vector<int> d = f.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

using Product = std::tuple<std::string, std::string, Rational, std::string>;

// Every product of non-unit basis elements is either listed or zero.
void check_table(const FiniteGradedAlgebra& e, const std::vector<Product>& expected) {
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b) {
      if (a == e.unit || b == e.unit) continue;
      SparseVec want;
      for (const auto& [l, r, c, t] : expected)
        if (l == e.names[a] && r == e.names[b]) want.emplace_back(static_cast<Index>(e.index_of(t)), c);
      CAPTURE(e.names[a]);
      CAPTURE(e.names[b]);
      CHECK(e.product(a, b) == want);
    }
}

bool associative(const FiniteGradedAlgebra& e) {
  const std::size_t n = e.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec left(n), right(n);
        for (const auto& [m, c] : e.product(i, j))
          for (const auto& [t, c2] : e.product(m, k)) left[t] += c * c2;
        for (const auto& [m, c] : e.product(j, k))
          for (const auto& [t, c2] : e.product(i, m)) right[t] += c * c2;
        if (left != right) return false;
      }
  return true;
}

bool unital(const FiniteGradedAlgebra& e) {
  for (std::size_t i = 0; i < e.dim(); ++i) {
    SparseVec self{{static_cast<Index>(i), Rational(1)}};
    if (e.product(e.unit, i) != self || e.product(i, e.unit) != self) return false;
  }
  return true;
}

struct Golden {
  DGAlgebra dg;
  SemiFreeModule f;
  std::vector<std::string> names;
  std::vector<HomMap> maps;
};

Golden cubic_as_golden() {
  DGAlgebra a = cubic_as();
  SemiFreeModule f = cubic_as_resolution(a);
  std::vector<HomMap> m{
      HomMap::identity(f.size()),
      hom(a, f, 0, {{"Se_x", {{"1", "1"}}},
                    {"S2e_r1", {{"-y", "Se_y"}}},
                    {"S2e_r2", {{"-y", "Se_x"}, {"-x", "Se_y"}}},
                    {"S3e_w", {{"-1", "S2e_r1"}}}}),
      hom(a, f, 0, {{"Se_y", {{"1", "1"}}},
                    {"S2e_r1", {{"-y", "Se_x"}, {"-x", "Se_y"}}},
                    {"S2e_r2", {{"-x", "Se_x"}}},
                    {"S3e_w", {{"-1", "S2e_r2"}}}}),
      hom(a, f, -1, {{"S2e_r2", {{"1", "1"}}}, {"S3e_w", {{"1", "Se_y"}}}}),
      hom(a, f, -1, {{"S2e_r1", {{"1", "1"}}}, {"S3e_w", {{"1", "Se_x"}}}}),
      hom(a, f, -1, {{"S3e_w", {{"1", "1"}}}}),
  };
  return {a, f, {"e0", "e1", "e2", "e3", "e4", "e5"}, m};
}

Golden downup_golden() {
  DGAlgebra a = downup();
  SemiFreeModule f = downup_resolution(a);
  std::vector<HomMap> m{
      HomMap::identity(f.size()),
      hom(a, f, 0, {{"Se_y", {{"1", "1"}}}, {"Se_z", {{"1", "Se_y"}}}, {"Se_t", {{"1", "Se_x2"}}}, {"Se_r", {{"1", "Se_t"}}}}),
      hom(a, f, 0, {{"Se_z", {{"1", "1"}}}, {"Se_r", {{"1", "Se_x2"}}}}),
      hom(a, f, -1, {{"Se_x2", {{"1", "1"}}}, {"Se_t", {{"1", "Se_y"}}}, {"Se_r", {{"1", "Se_z"}}}}),
      hom(a, f, -1, {{"Se_t", {{"1", "1"}}}, {"Se_r", {{"1", "Se_y"}}}}),
      hom(a, f, -1, {{"Se_r", {{"1", "1"}}}}),
  };
  return {a, f, {"e0", "e1", "e2", "e3", "e4", "e5"}, m};
}

Golden ex3_golden() {
  DGAlgebra a = ex3();
  SemiFreeModule f = ex3_resolution(a);
  std::vector<HomMap> m{
      HomMap::identity(f.size()),
      hom(a, f, 0, {{"Se_x2", {{"1", "1"}}}}),
      hom(a, f, 0, {{"Se_x3", {{"1", "1"}}}, {"S2e_r", {{"1", "Se_x2"}}}}),
      hom(a, f, 0, {{"S2e_r", {{"1", "1"}}}}),
  };
  return {a, f, {"e0", "e1", "e2", "e3"}, m};
}

Golden ex2_golden() {
  DGAlgebra a = ex2();
  SemiFreeModule f = ex2_resolution(a);
  std::vector<HomMap> m{
      HomMap::identity(f.size()),
      hom(a, f, 0, {{"Se_x3", {{"1", "1"}}}, {"Se_z", {{"1", "Se_x3"}}}, {"Se_r", {{"1", "Se_z"}}}}),
      hom(a, f, 0, {{"Se_z", {{"1", "1"}}}, {"Se_r", {{"1", "Se_x3"}}}}),
      hom(a, f, 0, {{"Se_r", {{"1", "1"}}}}),
  };
  return {a, f, {"1", "x", "x2", "x3"}, m};
}

HomMap random_map(std::mt19937_64& rng, const HomComplex& h, int k) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SparseVec v;
  for (std::size_t g = 0; g < h.dim(k); ++g) {
    int c = coef(rng);
    if (c != 0) v.emplace_back(static_cast<Index>(g), Rational(c));
  }
  return h.from_coords(k, v);
}

}  // namespace

TEST_CASE("check_semifree accepts the reference resolutions") {
  DGAlgebra e1 = example1();
  CHECK_NOTHROW(check_semifree(e1, example1_resolution(e1)));
  DGAlgebra du = downup();
  CHECK_NOTHROW(check_semifree(du, downup_resolution(du)));
  DGAlgebra c = cubic_as();
  CHECK_NOTHROW(check_semifree(c, cubic_as_resolution(c)));
  DGAlgebra a3 = ex3();
  CHECK_NOTHROW(check_semifree(a3, ex3_resolution(a3)));
  DGAlgebra a2 = ex2();
  CHECK_NOTHROW(check_semifree(a2, ex2_resolution(a2)));
  // without the x1 term d^2(S2e_r) = -x2*x3
  SemiFreeModule short_r = module(a3, {{"1", 0}, {"Se_x2", 0}, {"Se_x3", 0}, {"S2e_r", 0}},
                                  {{"Se_x2", {{"x2", "1"}}}, {"Se_x3", {{"x3", "1"}}}, {"S2e_r", {{"x2", "Se_x3"}}}});
  CHECK_THROWS_AS(check_semifree(a3, short_r), DifferentialNotSquareZero);
}

TEST_CASE("check_semifree failures") {
  DGAlgebra du = downup();
  SemiFreeModule f = downup_resolution(du);

  SemiFreeModule constant = f;
  constant.diff[2].emplace_back(1, NcPoly::unit());  // Se_z picks up 1*Se_y
  CHECK_THROWS_AS(check_semifree(du, constant), NotMinimal);

  SemiFreeModule later = f;
  later.diff[1].emplace_back(2, parse_poly("x", du.generators()));
  CHECK_THROWS_AS(check_semifree(du, later), NotTriangular);

  SemiFreeModule wrong_degree = f;
  wrong_degree.diff[2][0].second = parse_poly("x^2", du.generators());
  CHECK_THROWS_AS(check_semifree(du, wrong_degree), DegreeMismatch);

  SemiFreeModule not_square_zero = f;
  not_square_zero.diff[2] = {{1, parse_poly("x", du.generators())}};
  CHECK_THROWS_AS(check_semifree(du, not_square_zero), DifferentialNotSquareZero);
}

TEST_CASE("check_resolution") {
  DGAlgebra e1 = example1();
  CHECK(check_resolution(e1, example1_resolution(e1), 8));
  CHECK_FALSE(check_resolution(e1, SemiFreeModule::rank_one(), 8));
  DGAlgebra a3 = ex3();
  CHECK(check_resolution(a3, ex3_resolution(a3), 8));
  DGAlgebra du = downup();
  CHECK(check_resolution(du, downup_resolution(du), 8));
  DGAlgebra c = cubic_as();
  CHECK(check_resolution(c, cubic_as_resolution(c), 8));
  DGAlgebra a2 = ex2();
  CHECK(check_resolution(a2, ex2_resolution(a2), 8));
}

TEST_CASE("resolve_trivial sizes and degrees") {
  struct Case {
    DGAlgebra dg;
    std::vector<int> degrees;
  };
  std::vector<Case> cases{{example1(), {0, 1}},
                          {ex3(), {0, 0, 0, 0}},
                          {cubic_as(), {0, 0, 0, 1, 1, 1}},
                          {downup(), {0, 0, 0, 1, 1, 1}},
                          {ex2(), {0, 0, 0, 0}},
                          {ex5(), {0, 0, 0, 0}}};
  for (const auto& c : cases) {
    SemiFreeModule f = resolve_trivial(c.dg, 8);
    CHECK(sorted_degrees(f) == c.degrees);
    CHECK_NOTHROW(check_semifree(c.dg, f));
    CHECK(check_resolution(c.dg, f, 8));
    for (const auto& row : f.diff)
      for (const auto& [i, coef] : row) CHECK(coef.coefficient(Word{}).is_zero());
  }
  SemiFreeModule f = resolve_trivial(ex3(), 8);
  CHECK(f.names[1] == "g1_1");
  CHECK(is_koszul(f));
  CHECK_FALSE(is_koszul(resolve_trivial(example1(), 8)));
  CHECK_FALSE(is_koszul(resolve_trivial(downup(), 8)));
}

TEST_CASE("resolution budget") {
  DGAlgebra free2 = dg({"x", "y"}, {}, {});
  ResolveOptions tight;
  tight.max_generators = 2;
  ResolutionResult r = resolve_trivial_partial(free2, 4, tight);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.stop_reason.empty());
  CHECK_THROWS_AS(resolve_trivial(free2, 4, tight), CutoffTooSmall);
  CHECK(resolve_trivial_partial(free2, 4).complete);
}

TEST_CASE("smoothness reports") {
  SmoothnessReport e1 = smoothness_report(example1(), 8);
  CHECK(e1.finite_basis_found);
  CHECK(e1.basis_size == 2);
  CHECK(e1.certified_to == 8);
  SmoothnessReport a3 = smoothness_report(ex3(), 8);
  CHECK(a3.finite_basis_found);
  CHECK(a3.basis_size == 4);
  SmoothnessReport c = smoothness_report(cubic_as(), 8);
  CHECK(c.finite_basis_found);
  CHECK(c.basis_size == 6);
  SmoothnessReport k = smoothness_report(dg({}, {}, {}), 8);
  CHECK(k.finite_basis_found);
  CHECK(k.basis_size == 1);
}

TEST_CASE("Hom cohomology dimensions") {
  DGAlgebra du = downup();
  SemiFreeModule f = resolve_trivial(du, 8);
  CHECK(hom_cohomology(du, f, -1, 8).dim == 3);
  CHECK(hom_cohomology(du, f, 0, 8).dim == 3);
  CHECK(hom_cohomology(du, f, -2, 8).dim == 0);
  DGAlgebra a3 = ex3();
  CHECK(hom_cohomology(a3, resolve_trivial(a3, 8), 0, 8).dim == 4);
  CHECK(hom_cohomology(a3, resolve_trivial(a3, 8), -1, 8).dim == 0);
  CHECK_THROWS_AS(hom_cohomology(du, f, 8, 8), WindowExceeded);
}

TEST_CASE("Hom differential squares to zero") {
  std::mt19937_64 rng(3);
  for (const Golden& g : {cubic_as_golden(), downup_golden(), ex3_golden(), ex2_golden()}) {
    HomComplex h(g.dg, g.f, 8);
    for (int k = -1; k <= 2; ++k)
      for (int t = 0; t < 5; ++t) CHECK(h.differential(h.differential(random_map(rng, h, k))).is_zero());
  }
}

TEST_CASE("golden Ext tables") {
  {
    Golden g = cubic_as_golden();
    ExtAlgebra e = ext_algebra_in_basis(g.dg, g.f, 8, g.names, g.maps);
    CHECK(e.algebra.degrees == std::vector<int>{0, 0, 0, -1, -1, -1});
    check_table(e.algebra, {{"e1", "e4", Rational(-1), "e5"},
                            {"e4", "e1", Rational(1), "e5"},
                            {"e2", "e3", Rational(-1), "e5"},
                            {"e3", "e2", Rational(1), "e5"}});
  }
  {
    Golden g = downup_golden();
    ExtAlgebra e = ext_algebra_in_basis(g.dg, g.f, 8, g.names, g.maps);
    check_table(e.algebra, {{"e1", "e1", Rational(1), "e2"},
                            {"e1", "e3", Rational(1), "e4"},
                            {"e3", "e1", Rational(1), "e4"},
                            {"e1", "e4", Rational(1), "e5"},
                            {"e4", "e1", Rational(1), "e5"},
                            {"e2", "e3", Rational(1), "e5"},
                            {"e3", "e2", Rational(1), "e5"}});
  }
  {
    Golden g = ex3_golden();
    ExtAlgebra e = ext_algebra_in_basis(g.dg, g.f, 8, g.names, g.maps);
    check_table(e.algebra, {{"e2", "e1", Rational(1), "e3"}});
  }
  {
    Golden g = ex2_golden();
    ExtAlgebra e = ext_algebra_in_basis(g.dg, g.f, 8, g.names, g.maps);
    CHECK(e.algebra.degrees == std::vector<int>{0, 0, 0, 0});
    check_table(e.algebra, {{"x", "x", Rational(1), "x2"},
                            {"x", "x2", Rational(1), "x3"},
                            {"x2", "x", Rational(1), "x3"}});
  }
}

TEST_CASE("computed Ext algebras") {
  DGAlgebra e1 = example1();
  ExtAlgebra x = ext_algebra(e1, resolve_trivial(e1, 8), 8);
  CHECK(x.algebra.degrees == std::vector<int>{0, -1});
  CHECK(x.algebra.product(1, 1).empty());
  CHECK(x.algebra.unit == 0);

  DGAlgebra a2 = ex2();
  ExtAlgebra y = ext_algebra(a2, resolve_trivial(a2, 8), 8);
  CHECK(y.algebra.degrees == std::vector<int>(4, 0));
  // k[x]/(x^4): some element generates, i.e. has nonzero cube
  bool cube = false;
  for (std::size_t i = 1; i < 4; ++i) {
    Vec v(4);
    v[i] = 1;
    Vec c = y.algebra.multiply(y.algebra.multiply(v, v), v);
    cube = cube || std::any_of(c.begin(), c.end(), [](const Rational& q) { return !q.is_zero(); });
  }
  CHECK(cube);

  for (const DGAlgebra& a : {example1(), ex3(), ex2(), ex5(), downup(), cubic_as()}) {
    SemiFreeModule f = resolve_trivial(a, 8);
    ExtAlgebra e = ext_algebra(a, f, 8);
    CHECK(associative(e.algebra));
    CHECK(unital(e.algebra));
    if (is_koszul(f))
      for (int d : e.algebra.degrees) CHECK(d == 0);
  }
}

TEST_CASE("Ext structure constants do not depend on representatives") {
  std::mt19937_64 rng(11);
  for (const Golden& g : {cubic_as_golden(), downup_golden(), ex3_golden(), ex2_golden()}) {
    HomComplex h(g.dg, g.f, 8);
    FiniteGradedAlgebra base = ext_algebra_in_basis(g.dg, g.f, 8, g.names, g.maps).algebra;
    for (int t = 0; t < 10; ++t) {
      std::vector<HomMap> moved;
      for (const auto& m : g.maps) {
        HomMap b = h.differential(random_map(rng, h, m.degree - 1));
        HomMap p = m;
        for (std::size_t j = 0; j < p.entries.size(); ++j)
          for (std::size_t i = 0; i < p.entries.size(); ++i) p.entries[j][i] += b.entries[j][i];
        moved.push_back(p);
      }
      FiniteGradedAlgebra e = ext_algebra_in_basis(g.dg, g.f, 8, g.names, moved).algebra;
      CHECK(e.table == base.table);
    }
  }
}

TEST_CASE("ext_algebra_in_basis rejects bad input") {
  Golden g = ex3_golden();
  std::vector<HomMap> short_basis(g.maps.begin(), g.maps.end() - 1);
  std::vector<std::string> short_names(g.names.begin(), g.names.end() - 1);
  CHECK_THROWS_AS(ext_algebra_in_basis(g.dg, g.f, 8, short_names, short_basis), SchemaError);
  std::vector<HomMap> bad = g.maps;
  bad[1] = hom(g.dg, g.f, 0, {{"Se_x3", {{"1", "1"}}}});
  CHECK_THROWS_AS(ext_algebra_in_basis(g.dg, g.f, 8, g.names, bad), NotACocycle);
}
