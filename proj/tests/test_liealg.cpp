#include "doctest.h"
#include "lie_fixtures.hpp"

using namespace testing;

TEST_CASE("construction checks antisymmetry and Jacobi") {
  std::vector<Rational> c(8);
  c[(0 * 2 + 1) * 2 + 1] = 1;  // [e0,e1] = e1 without the antisymmetric entry
  CHECK_THROWS_AS(LieAlgebra(2, c), InputError);
  // [e0,e1]=e2, [e1,e2]=e0, [e0,e2]=e0 breaks Jacobi.
  CHECK_THROWS_AS(algebra_from_table(3, {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {0, 2, {1, 0, 0}}}), InputError);
  CHECK_NOTHROW(sl2_algebra());
}

TEST_CASE("killing form") {
  CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
  Matrix k = killing_form(sl2_algebra());
  CHECK(k(2, 2) == 8);
  CHECK(k(0, 1) == 4);
  CHECK(k(1, 0) == 4);
  CHECK(k(0, 0) == 0);
  CHECK(k(1, 1) == 0);
  CHECK(k(2, 0) == 0);
  CHECK(k(2, 1) == 0);
  LieAlgebra g = semidirect(sl2_algebra(), LieAlgebra::abelian(1), zero_action(3, 1));
  CHECK(rank(killing_form(g)) == 3);
  // ad-invariance: k([x,y],z) = -k(y,[x,z]).
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z) {
        LieAlgebra s = sl2_algebra();
        Vec xy = s.bracket_basis(x, y), xz = s.bracket_basis(x, z);
        Rational lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          lhs += xy[i] * k(i, z);
          rhs -= k(y, i) * xz[i];
        }
        CHECK(lhs == rhs);
      }
}

TEST_CASE("solvable radical") {
  LieAlgebra ax_b = algebra_from_table(2, {{0, 1, {0, 1}}});
  CHECK(solvable_radical(ax_b).dim() == 2);
  CHECK(solvable_radical(sl2_algebra()).is_zero());
  LieAlgebra g = semidirect(sl2_algebra(), LieAlgebra::abelian(1), zero_action(3, 1));
  Subspace rad = solvable_radical(g);
  CHECK(rad == Subspace(4, {unit_vector(4, 3)}));
  QuotientAlgebra q = quotient_algebra(g, rad);
  CHECK(is_semisimple(q.algebra));
}

TEST_CASE("levi subalgebra") {
  LeviData s = levi_subalgebra(sl2_algebra());
  CHECK(s.radical.is_zero());
  CHECK(s.levi.dim() == 3);
  LeviData ab = levi_subalgebra(algebra_from_table(2, {{0, 1, {0, 1}}}));
  CHECK(ab.levi.is_zero());
  CHECK(ab.radical.dim() == 2);

  LieAlgebra g = semidirect(sl2_algebra(), LieAlgebra::abelian(2), sl2_standard());
  std::mt19937_64 rng(7);
  LieAlgebra h = change_basis(g, random_invertible(rng, 5));
  LeviData d = levi_subalgebra(h);
  CHECK(d.levi.dim() == 3);
  CHECK(d.radical.dim() == 2);
  CHECK(is_subalgebra(h, d.levi));
  CHECK(is_homomorphic_section(h, d.semisimple.algebra, d.semisimple.projection, d.section));
}

TEST_CASE("levi on the whole menu under random bases") {
  std::mt19937_64 rng(29);
  for (const auto& choice : solvable_menu()) {
    LieAlgebra g = semidirect(sl2_algebra(), choice.radical, choice.action);
    LieAlgebra h = change_basis(g, random_invertible(rng, g.dim()));
    LeviData d = levi_subalgebra(h);
    CHECK_MESSAGE(d.levi.dim() == 3, choice.name);
    CHECK_MESSAGE(d.radical.dim() == choice.radical.dim(), choice.name);
    CHECK(is_homomorphic_section(h, d.semisimple.algebra, d.semisimple.projection, d.section));
    CHECK(d.levi.intersect(d.radical).is_zero());
  }
}

TEST_CASE("ce_solve") {
  LieAlgebra s = sl2_algebra();
  Representation ad = Representation::adjoint(s);
  auto zero = ce_solve(ad, 1, Cochain::zero(1, 3, 3));
  CHECK(zero.solved);
  CHECK(zero.primitive.is_zero());

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int t = 0; t < 10; ++t) {
    Cochain v = Cochain::zero(0, 3, 3);
    for (auto& x : v.values[0]) x = u(rng);
    Cochain cocycle = ce_differential(ad, v);
    auto r = ce_solve(ad, 1, cocycle);
    REQUIRE(r.solved);
    CHECK(ce_differential(ad, r.primitive) == cocycle);

    // Random 2-coboundary for the standard representation.
    Representation std2(s, 2, sl2_standard());
    Cochain w = Cochain::zero(1, 3, 2);
    for (auto& val : w.values)
      for (auto& x : val) x = u(rng);
    Cochain c2 = ce_differential(std2, w);
    auto r2 = ce_solve(std2, 2, c2);
    REQUIRE(r2.solved);
    CHECK(ce_differential(std2, r2.primitive) == c2);
    CHECK(ce_differential(std2, ce_differential(std2, w)).is_zero());
  }

  LieAlgebra ab = LieAlgebra::abelian(2);
  Representation triv = Representation::trivial(ab, 1);
  Cochain c = Cochain::zero(1, 2, 1);
  c.values[0] = {1};
  auto r = ce_solve(triv, 1, c);
  CHECK_FALSE(r.solved);
  CHECK(r.residual == c);

  Cochain not_closed = Cochain::zero(1, 3, 3);
  not_closed.values[0] = {1, 0, 0};
  CHECK_THROWS_AS(ce_solve(ad, 1, not_closed), PreconditionError);
}

TEST_CASE("matrix algebras and nilpotency") {
  LieAlgebra g = LieAlgebra::from_matrices(sl2_standard());
  CHECK(g == sl2_algebra());
  CHECK_THROWS_AS(LieAlgebra::from_matrices({mat(2, 2, {0, 1, 0, 0}), mat(2, 2, {0, 0, 1, 0})}), PreconditionError);
  LieAlgebra heis = algebra_from_table(3, {{0, 1, {0, 0, 1}}});
  CHECK(is_nilpotent(heis, Subspace::whole(3)));
  LieAlgebra ax_b = algebra_from_table(2, {{0, 1, {0, 1}}});
  CHECK(is_solvable(ax_b, Subspace::whole(2)));
  CHECK_FALSE(is_nilpotent(ax_b, Subspace::whole(2)));
}
