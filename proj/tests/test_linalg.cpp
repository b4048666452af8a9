#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rref, rank and nullspace") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  Matrix r = m;
  auto piv = rref(r);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(r.row(2) == Vec{0, 0, 0});
}

TEST_CASE("solve picks zero free variables and detects inconsistency") {
  Matrix m = Matrix::from_rows({{1, 1, 0}}, 3);
  auto x = solve(m, {Rational(5)});
  REQUIRE(x);
  CHECK(*x == Vec{5, 0, 0});
  Matrix z = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
  CHECK_FALSE(solve(z, {Rational(1), Rational(2)}));
}

TEST_CASE("random solve and nullspace properties") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(rng, 3 + t % 3, 4);
    Vec x0(4);
    for (auto& v : x0) v = random_rational(rng);
    Vec b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    auto ns = nullspace(a);
    CHECK(ns.size() + rank(a) == 4);
    for (const auto& v : ns) CHECK(is_zero(a * v));
  }
}

TEST_CASE("subspaces: sum, intersection, quotient") {
  Subspace u(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace w(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(u.sum(w).dim() == 3);
  Subspace i = u.intersect(w);
  CHECK(i.dim() == 1);
  CHECK(i.contains(Vec{0, 5, 0}));
  CHECK(u.contains(i));
  QuotientSpace q(u, i);
  CHECK(q.dim() == 1);
  Vec v{3, 7, 0};
  Vec c = q.project(v);
  CHECK(c == Vec{3});
  CHECK(q.project(q.lift(c)) == c);
  CHECK_THROWS_AS(q.project(Vec{0, 0, 1}), InvariantViolation);
  // Canonical basis: equal subspaces compare equal regardless of spanning set.
  CHECK(Subspace(3, {{1, 1, 0}, {1, -1, 0}}) == Subspace(3, {{0, 1, 0}, {2, 0, 0}}));
}

TEST_CASE("sparse vectors") {
  SparseVec a({{3, 1}, {1, 2}, {3, -1}});
  CHECK(a.entries().size() == 1);
  CHECK(a.leading_index() == 1);
  SparseVec b({{1, 1}, {5, 4}});
  a.axpy(-2, b);
  CHECK(a.leading_index() == 5);
  CHECK(a.at(5) == -8);
}
