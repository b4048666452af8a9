#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(Rational(3) / 6) == "1/2");
  CHECK(to_string(Rational(-4) / 2) == "-2");
  CHECK(parse_rational("-6/4") == Rational(-3) / 2);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("grevlex order") {
  auto m = [](std::vector<int> e) { return Monomial(std::move(e)); };
  CHECK(GrevlexGreater{}(m({2, 0}), m({1, 0})));
  CHECK(GrevlexGreater{}(m({1, 0}), m({0, 1})));
  // Same degree: the smaller last exponent wins.
  CHECK(GrevlexGreater{}(m({1, 1, 0}), m({1, 0, 1})));
  CHECK(GrevlexGreater{}(m({0, 2, 0}), m({1, 0, 1})));
  auto monos = monomials_of_degree(3, 2);
  CHECK(monos.size() == 6);
  for (std::size_t i = 1; i < monos.size(); ++i) CHECK(GrevlexGreater{}(monos[i - 1], monos[i]));
}

TEST_CASE("homogeneous_part examples") {
  CHECK(homogeneous_part(Polynomial(2), 3).is_zero());
  CHECK(homogeneous_part(P("x^2 + x*y + y"), 2) == P("x^2 + x*y"));
  Polynomial s = P("x + y");
  CHECK(homogeneous_part(s * s * s, 3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("vanishing_order examples") {
  CHECK(vanishing_order(P("x^2*y + x^5")) == Order(3));
  CHECK(vanishing_order(P("1 + x")) == Order(0));
  CHECK(vanishing_order(Polynomial(2)).is_infinite());
  CHECK(Polynomial(2).degree().is_minus_infinity());
  CHECK(Polynomial(2).degree() < Degree(0));
}

TEST_CASE("rendering") {
  CHECK(P("3*x^2*y - y/2").to_string({"x", "y"}) == "3*x^2*y + (-1/2)*y");
  CHECK(Polynomial(2).to_string({"x", "y"}) == "0");
  CHECK(P("x - 1").to_string({"x", "y"}) == "x + (-1)");
}

TEST_CASE("ring axioms and grading on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 3;
    Polynomial p = random_poly(rng, n, 0, 3), q = random_poly(rng, n, 0, 3), r = random_poly(rng, n, 0, 2);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Polynomial(n));
    Polynomial pq = p * q;
    for (int d = 0; d <= 6; ++d) {
      Polynomial acc(n);
      for (int a = 0; a <= d; ++a) acc += homogeneous_part(p, a) * homogeneous_part(q, d - a);
      CHECK(homogeneous_part(pq, d) == acc);
    }
    CHECK(vanishing_order(pq) == vanishing_order(p) + vanishing_order(q));
    Polynomial sum(n);
    for (int d = 0; d <= 3; ++d) sum += homogeneous_part(p, d);
    CHECK(sum == p);
  }
}

TEST_CASE("derivative and composition") {
  CHECK(P("x^3*y + y^2").derivative(0) == P("3*x^2*y"));
  CHECK(P("x^3*y + y^2").derivative(1) == P("x^3 + 2*y"));
  // (x, y) -> (x + y^2, y)
  std::vector<Polynomial> phi{P("x + y^2"), P("y")};
  CHECK(P("x*y").compose(phi) == P("x*y + y^3"));
}
