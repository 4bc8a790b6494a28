#include "doctest.h"
#include "dgcy/classify.hpp"
#include "dgcy/errors.hpp"
#include "helpers.hpp"

using namespace dgcy;
using namespace testing_helpers;

namespace {

struct Row {
  bool koszul, gorenstein, smooth, cy;
};

void check_row(const ClassificationVerdict& v, Row r) {
  CHECK(v.koszul == r.koszul);
  CHECK(v.gorenstein == r.gorenstein);
  CHECK(v.smooth == r.smooth);
  CHECK(v.calabi_yau == r.cy);
  CHECK_FALSE(v.conditional);
  if (v.calabi_yau) CHECK(v.gorenstein);
}

}  // namespace

TEST_CASE("classification table") {
  check_row(classify(example1(), 8), {false, true, true, true});
  check_row(classify(ex3(), 8), {true, false, true, false});
  check_row(classify(ex2(), 8), {true, true, true, true});
  check_row(classify(ex5(), 8), {true, true, true, true});
  check_row(classify(cubic_as(), 8), {false, true, true, false});
  ClassificationVerdict du = classify(downup(), 8);
  CHECK_FALSE(du.koszul);
  CHECK(du.calabi_yau);
  CHECK(du.gorenstein);
  CHECK(du.smooth);
}

TEST_CASE("graded inputs") {
  Presentation cubic = cubic_as().presentation();
  check_row(classify_graded(cubic, 8), {false, true, true, false});
  ClassificationVerdict z = classify_graded(pres({"z"}, {}), 8);
  CHECK(z.calabi_yau);
  CHECK(z.smooth);
  CHECK(z.koszul);
  ClassificationVerdict k = classify_graded(pres({}, {}), 8);
  CHECK(k.smooth);
  CHECK(k.gorenstein);
  CHECK(k.calabi_yau);
  CHECK(k.ext.algebra.dim() == 1);
  REQUIRE(k.cy_shift_candidate.has_value());
  CHECK(*k.cy_shift_candidate == 0);
}

TEST_CASE("non-smooth input is reported conditionally") {
  // k[x]/(x^2) with zero differential has an infinite resolution
  ClassificationVerdict v = classify_graded(pres({"x"}, {"x^2"}), 6);
  CHECK_FALSE(v.smooth);
  CHECK(v.conditional);
  CHECK_FALSE(v.caveats.empty());
}

TEST_CASE("ill-defined input is rejected") {
  CHECK_THROWS_AS(classify(dg({"x", "y"}, {"x^2"}, {{"x", "y^2"}}), 6), IllDefinedDifferential);
}
