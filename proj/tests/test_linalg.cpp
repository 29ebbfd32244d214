#include <doctest.h>

#include <random>

#include "arrcoh/qmatrix.hpp"
#include "arrcoh/smith.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 9);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) < density) {
        Rational v(val(rng), 1 + keep(rng) % 3);
        v.canonicalize();
        m.set(i, j, v);
      }
  return m;
}

oracle::Dense to_dense(const QMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
  return d;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
}

TEST_CASE("rref of small examples") {
  auto r = rref(QMatrix::from_dense({{2, 4}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(0, 1) == 2);
  CHECK(rank(QMatrix::identity(4)) == 4);
  CHECK(rank(QMatrix(3, 5)) == 0);
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    QMatrix m = random_matrix(rng, r, c, 1 + static_cast<int>(rng() % 9));
    CHECK(rank(m) == oracle::dense_rank(to_dense(m)));
  }
}

TEST_CASE("kernel basis is a basis of the null space") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    QMatrix m = random_matrix(rng, r, c, 5);
    QMatrix k = kernel_basis(m);
    CHECK(k.rows() == c - rank(m));
    CHECK(rank(k) == k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(m.multiply(k.row(i)).is_zero());
  }
}

TEST_CASE("solve finds solutions and reports inconsistency") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    QMatrix m = random_matrix(rng, 4, 3, 6);
    QVector x = random_matrix(rng, 1, 3, 7).row(0);
    QVector b = m.multiply(x);
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m.multiply(*y) == b);
  }
  CHECK_FALSE(solve(QMatrix::from_dense({{1, 0}, {1, 0}}), QVector::from_dense({1, 2})).has_value());
}

TEST_CASE("rowspace sum is canonical") {
  auto a = QMatrix::from_dense({{1, 1, 0}});
  auto b = QMatrix::from_dense({{0, 2, 0}});
  auto s = rowspace_sum(a, b);
  CHECK(s == QMatrix::from_dense({{1, 0, 0}, {0, 1, 0}}));
  CHECK(rowspace_sum(b, a) == s);
}

TEST_CASE("echelon basis tracks tags of the rows it used") {
  EchelonBasis e;
  CHECK(e.insert(QVector::from_dense({1, 1, 0}), 7));
  CHECK(e.insert(QVector::from_dense({0, 1, 1}), 8));
  CHECK_FALSE(e.insert(QVector::from_dense({1, 2, 1}), 9));
  auto red = e.reduce(QVector::from_dense({2, 3, 1}));
  CHECK(red.remainder.is_zero());
  CHECK(e.rank() == 2);
}

TEST_CASE("smith normal form examples") {
  using V = std::vector<std::vector<Integer>>;
  CHECK(smith_normal_form(V{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});
  CHECK(smith_normal_form(V{{1, 0}, {0, 1}}) == std::vector<Integer>{1, 1});
  CHECK(smith_normal_form(V{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(V{{0, 0}, {0, 0}}).empty());
}

TEST_CASE("smith normal form: rank and determinant agree with rational elimination") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    oracle::Dense d(n, std::vector<oracle::Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int v = static_cast<int>(rng() % 7) - 3;
        m[i][j] = v;
        d[i][j] = v;
      }
    auto f = smith_normal_form(m);
    CHECK(f.size() == oracle::dense_rank(d));
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
  }
}
