#include "doctest.h"
#include "hopflink/linalg.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {
Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(Scalar(x));
  return out;
}
}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rref and rank") {
    Matrix m = Matrix::from_rows({v({1, 2, 3}), v({2, 4, 6}), v({0, 1, 1})});
    CHECK(rank(m) == 2);
    auto r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("kernel and solve") {
    Matrix m = Matrix::from_rows({v({1, 1, 0}), v({0, 1, 1})});
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(is_zero(m.apply(k.vector(0))));
    auto s = solve(m, v({2, 3}));
    CHECK(m.apply(s.x) == v({2, 3}));
    CHECK(s.kernel == k);
    Matrix sing = Matrix::from_rows({v({1, 1}), v({1, 1})});
    CHECK_THROWS_AS(solve(sing, v({0, 1})), Inconsistent);
  }

  TEST_CASE("inverse of random invertible matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
      Matrix p = oracle::random_invertible(5, rng);
      auto inv = inverse(p);
      REQUIRE(inv);
      CHECK(p * *inv == Matrix::identity(5));
    }
    CHECK_FALSE(inverse(Matrix(2, 2)));
  }

  TEST_CASE("subspaces are canonical") {
    Subspace a = Subspace::span(3, {v({1, 1, 0}), v({0, 1, 0})});
    Subspace b = Subspace::span(3, {v({1, 0, 0}), v({2, 3, 0})});
    CHECK(a == b);
    CHECK(a.key() == b.key());
    CHECK(a.contains(v({5, -2, 0})));
    CHECK_FALSE(a.contains(v({0, 0, 1})));
    CHECK(a.non_pivots() == std::vector<std::size_t>{2});
  }

  TEST_CASE("sum, intersection, annihilator") {
    Subspace a = Subspace::span(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0})});
    Subspace b = Subspace::span(4, {v({0, 1, 0, 0}), v({0, 0, 1, 0})});
    CHECK(sum(a, b).dim() == 3);
    CHECK(intersect(a, b) == Subspace::span(4, {v({0, 1, 0, 0})}));
    Subspace ann = annihilator(a);
    CHECK(ann.dim() == 2);
    for (const auto& f : ann.vectors())
      for (const auto& x : a.vectors()) {
        Scalar s;
        for (std::size_t i = 0; i < 4; ++i) s += f[i] * x[i];
        CHECK(s.is_zero());
      }
    CHECK(annihilator(ann) == a);
  }

  TEST_CASE("dimension formula on random subspaces") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-2, 2);
    for (int t = 0; t < 20; ++t) {
      std::vector<Vec> ga, gb;
      for (int i = 0; i < 3; ++i) {
        Vec x(6), y(6);
        for (auto& e : x) e = Scalar(d(rng));
        for (auto& e : y) e = Scalar(d(rng));
        ga.push_back(x);
        gb.push_back(y);
      }
      Subspace a = Subspace::span(6, ga), b = Subspace::span(6, gb);
      CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
  }

  TEST_CASE("coordinates and quotient coordinates") {
    Subspace a = Subspace::span(3, {v({1, 2, 0}), v({0, 0, 1})});
    Vec x = v({2, 4, 5});
    Vec c = a.coordinates(x);
    CHECK(add(scale(a.vector(0), c[0]), scale(a.vector(1), c[1])) == x);
    CHECK_THROWS_AS(a.coordinates(v({0, 1, 0})), AmbientMismatch);
    CHECK(is_zero(a.quotient_coordinates(x)));
    CHECK_FALSE(is_zero(a.quotient_coordinates(v({0, 1, 0}))));
  }

  TEST_CASE("cyclotomic entries") {
    Matrix m(2, 2);
    m(0, 0) = Scalar::zeta(3);
    m(0, 1) = Scalar(1L);
    m(1, 0) = Scalar(1L);
    m(1, 1) = Scalar::zeta(3).inv();
    CHECK(rank(m) == 1);
    m(1, 1) = Scalar(0L);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
  }
}
