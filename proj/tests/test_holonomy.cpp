#include "doctest.h"
#include "helpers.hpp"
#include "levifol/holonomy.hpp"
#include "lie_fixtures.hpp"

using namespace testing;

TEST_CASE("isotropy examples") {
  IsotropyData c = isotropy_algebra(fixture("circles"));
  CHECK(c.dim() == 1);
  CHECK(c.algebra.is_abelian());
  CHECK(c.ss_quotient.algebra.dim() == 0);

  IsotropyData s = isotropy_algebra(fixture("sl2"));
  REQUIRE(s.dim() == 3);
  // Representatives are e, f, h in order, so the constants are those of sl2.
  CHECK(s.algebra == sl2_algebra());
  CHECK(s.filtration[2].is_zero());

  IsotropyData q = isotropy_algebra(fixture("quadratic-x2dx"));
  CHECK(q.dim() == 1);
  CHECK(q.filtration[2].dim() == 1);
  CHECK(q.filtration[3].is_zero());

  CHECK_THROWS_AS(isotropy_algebra(fixture("non-involutive-pair")), NotInvolutiveError);
  try {
    isotropy_algebra(fixture("non-involutive-pair"));
  } catch (const NotInvolutiveError& e) {
    CHECK(e.witness().bracket == V("x*dx - y*dy"));
  }
}

TEST_CASE("sl2 syzygy has coefficients in I^2, so the classes stay independent") {
  FoliationModule f = fixture("sl2");
  PolyVectorField syz = P("y^2") * f[0] - P("x^2") * f[1] + P("x*y") * f[2];
  CHECK(syz.is_zero());
  CHECK(graded_truncation_basis(f, 1).initial.size() == 3);
}

TEST_CASE("class map is linear and detects non-members") {
  IsotropyData s = isotropy_algebra(fixture("sl2"));
  PolyVectorField x = s.module[0] * Rational(2) + P("x + 1") * s.module[2];
  CHECK(s.class_of(x) == Vec{2, 0, 1});
  CHECK_THROWS_AS(s.class_of(V("x*dx")), PreconditionError);
  for (std::size_t j = 0; j < s.module.size(); ++j) CHECK(s.class_of(s.module[j]) == s.generator_classes[j]);
}

TEST_CASE("filtration examples") {
  Filtration q = holonomy_filtration(fixture("quadratic-x2dx"), 4);
  CHECK(q.pieces[0].dim() == 1);
  CHECK(q.pieces[1].dim() == 1);
  CHECK(q.pieces[2].dim() == 1);
  CHECK(q.pieces[3].is_zero());
  CHECK(q.vanishes_at == 3);

  CHECK(holonomy_filtration(fixture("sl2"), 4).pieces[2].is_zero());

  IsotropyData w = isotropy_algebra(fixture("weighted-n2"));
  Filtration wf = holonomy_filtration(w, 6);
  CHECK_FALSE(wf.pieces[2].is_zero());
  CHECK(wf.pieces[3].is_zero());
  // The class of x1^2 d/dx2 spans g^2.
  Vec cls = w.class_of(V("x^2*dy"));
  CHECK_FALSE(is_zero(cls));
  CHECK(wf.pieces[2] == Subspace(w.dim(), {cls}));

  // Extending the cap past the stored one recomputes the same pieces.
  Filtration longer = holonomy_filtration(w, w.filtration_cap + 3);
  for (int i = 0; i <= w.filtration_cap; ++i) CHECK(longer.pieces[i] == w.filtration[i]);
}

TEST_CASE("linear holonomy") {
  LinearHolonomy c = linear_holonomy(isotropy_algebra(fixture("circles")));
  REQUIRE(c.realization.size() == 1);
  CHECK(c.realization[0] == mat(2, 2, {0, 1, -1, 0}));
  CHECK(linear_holonomy(isotropy_algebra(fixture("quadratic-x2dx"))).algebra.dim() == 0);
  LinearHolonomy s = linear_holonomy(isotropy_algebra(fixture("sl2")));
  CHECK(s.algebra.dim() == 3);
  for (const auto& m : s.realization) CHECK(m.trace() == 0);
  CHECK(LieAlgebra::from_matrices(s.realization) == s.algebra);
}

TEST_CASE("semisimple holonomy") {
  CHECK(semisimple_holonomy(isotropy_algebra(fixture("circles"))).algebra.dim() == 0);
  SemisimpleHolonomy s = semisimple_holonomy(isotropy_algebra(fixture("sl2")));
  CHECK(s.algebra.dim() == 3);
  CHECK(s.radical.is_zero());
  IsotropyData e = isotropy_algebra(fixture("sl2-semidirect-euler"));
  SemisimpleHolonomy se = semisimple_holonomy(e);
  CHECK(se.algebra.dim() == 3);
  REQUIRE(se.radical.dim() == 1);
  CHECK(se.radical.contains(e.class_of(euler_field(2))));
  // The radical direction is where the Killing form degenerates.
  Matrix k = killing_form(e.algebra);
  CHECK(is_zero(k * se.radical.basis()[0]));

  IsotropyData fiber = isotropy_algebra(fixture("sl2-quadratic-fiber"));
  CHECK(fiber.dim() == 7);
  CHECK(fiber.filtration[2].dim() == 3);
  CHECK(semisimple_holonomy(fiber).algebra.dim() == 3);
}

TEST_CASE("artin-rees examples") {
  ArtinReesCertificate one = artin_rees_certify(M({"x*dx"}, 1), 6);
  CHECK(one.bounded);
  CHECK(one.bound == 1);
  CHECK_FALSE(one.witness);

  ArtinReesCertificate w2 = artin_rees_certify(fixture("weighted-n2"), 8);
  CHECK(w2.bounded);
  CHECK(w2.bound == 2);
  REQUIRE(w2.witness);
  CHECK(*w2.witness == V("x^2*dy"));
  CHECK_FALSE(w2.witness_certificate->member);

  ArtinReesCertificate w3 = artin_rees_certify(fixture("weighted-n3"), 8);
  CHECK(w3.bound == 3);
  REQUIRE(w3.witness);
  CHECK(*w3.witness == V("x^3*dz", 3));

  // With the cap at the failing degree the bound cannot be confirmed.
  ArtinReesCertificate capped = artin_rees_certify(fixture("weighted-n2"), 2);
  CHECK_FALSE(capped.bounded);
}

TEST_CASE("nilpotency and the certified bound on every involutive fixture") {
  for (const auto& name : {"circles", "sl2", "perturbed-sl2", "weighted-n2", "weighted-n3",
                           "sl2-semidirect-euler", "quadratic-x2dx", "sl2-quadratic-fiber"}) {
    FoliationModule f = fixture(name);
    IsotropyData iso = isotropy_algebra(f);
    CHECK_MESSAGE(is_nilpotent(iso.algebra, iso.filtration[2]), name);
    ArtinReesCertificate ar = artin_rees_certify(f, default_degree_cap(f));
    REQUIRE_MESSAGE(ar.bounded, name);
    CHECK_MESSAGE(iso.filtration[static_cast<std::size_t>(ar.bound + 1)].is_zero(), name);
  }
}
