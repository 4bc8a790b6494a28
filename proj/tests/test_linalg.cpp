#include <random>

#include "doctest.h"
#include "dgcy/errors.hpp"
#include "dgcy/linalg.hpp"
#include "dgcy/multipoly.hpp"

using namespace dgcy;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    Vec v;
    for (long long x : row) v.emplace_back(x);
    cols = v.size();
    r.push_back(std::move(v));
  }
  return QMatrix::from_rows(r, cols);
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng) == 0 ? Rational(d(rng), 2) : Rational(0);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK((Rational(1, 3) * Rational(3)).is_one());
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rational overflow promotes to big values and back") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  CHECK(big.numerator() > mpz_class("1000000000000000000000000000"));
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000003);
  CHECK(back.is_one());
  Rational x(std::numeric_limits<long long>::max());
  Rational y = x + Rational(1);
  CHECK(y.str() == "9223372036854775808");
  CHECK(y - Rational(1) == x);
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("rref examples") {
  auto id = rref(QMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(QMatrix(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivot_columns.empty());

  auto r = rref(mat({{1, 2, 3}, {2, 4, 6}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.reduced == mat({{1, 2, 3}, {0, 0, 0}}));
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  auto k0 = kernel_basis(QMatrix(2, 3));
  REQUIRE(k0.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k0[i][j] == Rational(i == j ? 1 : 0));
  auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{Rational(-1), Rational(1)});
}

TEST_CASE("rank-nullity and idempotence on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    QMatrix m = random_matrix(rng, 1 + t % 5, 1 + (t * 3) % 6);
    auto r = rref(m);
    auto k = kernel_basis(m);
    CHECK(r.rank + k.size() == m.cols());
    CHECK(rref(r.reduced).reduced == r.reduced);
    for (const auto& v : k) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("sparse echelon agrees with dense rref and kernel") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    QMatrix m = random_matrix(rng, 2 + t % 6, 2 + (t * 5) % 7);
    Echelon e;
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(sparse_from_dense(m.row(i)));
    auto r = rref(m);
    CHECK(e.rank() == r.rank);
    auto rows = e.rref_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(sparse_to_dense(rows[i], m.cols()) == r.reduced.row(i));
    auto ks = e.kernel(static_cast<Index>(m.cols()));
    auto kd = kernel_basis(m);
    REQUIRE(ks.size() == kd.size());
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(sparse_to_dense(ks[i], m.cols()) == kd[i]);
  }
}

TEST_CASE("determinant and inverse") {
  QMatrix m = mat({{2, 1}, {1, 1}});
  CHECK(determinant(m) == Rational(1));
  CHECK(inverse(m) * m == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), SingularMatrix);
  Vec x;
  CHECK(solve_left(m, Vec{Rational(3), Rational(2)}, x));
  CHECK(x == Vec{Rational(1), Rational(1)});
}

TEST_CASE("symbolic determinant examples") {
  std::vector<std::string> one{"l"};
  std::vector<std::string> two{"l1", "l2"};
  MultiPoly zero1(one);
  MultiPoly l = MultiPoly::variable(one, 0);

  PolyMatrix diag{{MultiPoly::variable(two, 0), MultiPoly(two)}, {MultiPoly(two), MultiPoly::variable(two, 1)}};
  CHECK(symbolic_det(diag) == MultiPoly::variable(two, 0) * MultiPoly::variable(two, 1));

  PolyMatrix anti{{zero1, l}, {l, zero1}};
  CHECK(symbolic_det(anti) == -(l * l));

  PolyMatrix flat{{l, l}, {l, l}};
  CHECK(symbolic_det(flat).is_zero());

  PolyMatrix big(17, std::vector<MultiPoly>(17, zero1));
  CHECK_THROWS_AS(symbolic_det(big), DimensionExceeded);
}

TEST_CASE("symbolic determinant agrees with rational determinant at random points") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<std::string> vars{"a", "b", "c"};
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (auto& row : m)
      for (auto& e : row) {
        e = MultiPoly::constant(vars, coef(rng));
        for (std::size_t v = 0; v < vars.size(); ++v) e += MultiPoly::variable(vars, v) * Rational(coef(rng));
      }
    MultiPoly det = symbolic_det(m);
    for (int p = 0; p < 50; ++p) {
      std::vector<Rational> pt{Rational(coef(rng) * 3 + 1), Rational(coef(rng), 3), Rational(coef(rng))};
      CHECK(det.evaluate(pt) == determinant(evaluate_matrix(m, pt)));
    }
  }
}
