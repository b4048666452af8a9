#include "doctest.h"
#include "helpers.hpp"
#include "levifol/levinorm.hpp"

using namespace testing;

namespace {

const std::vector<Polynomial> kPhi{P("x + y^2"), P("y")};
const std::vector<Polynomial> kPhiInv{P("x - y^2"), P("y")};

bool all_zero(const ConnectionReport& rep, int through) {
  for (const auto& row : rep.rows)
    if (row.degree <= through && (row.linearity != 0 || row.flatness != 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("jet fields truncate eagerly") {
  JetField a(V("x*dy + x^3*dx + y^4*dy"), 3);
  CHECK(a.field() == V("x*dy + x^3*dx"));
  JetField b(V("y*dx + x^2*dx"), 2);
  JetField c = a + b;
  CHECK(c.order() == 2);
  CHECK(c.field() == V("x*dy + y*dx + x^2*dx"));
  CHECK(bracket(a, b).order() == 2);
  CHECK(bracket(a, b).field() == lie_bracket(a.field(), b.field()).truncated(2));
  CHECK_THROWS_AS(bracket(JetField(V("dx"), 2), a), PreconditionError);
}

TEST_CASE("truncated brackets are exact through the truncation order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    PolyVectorField x = random_field(rng, 2, 1, 6), y = random_field(rng, 2, 1, 6);
    for (int order = 1; order <= 5; ++order)
      CHECK(bracket(JetField(x, order), JetField(y, order)).field() == lie_bracket(x, y).truncated(order));
  }
}

TEST_CASE("Euler-like fields scale order-k fields by k - 1 at leading order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + trial % 3;
    std::size_t n = 2 + trial % 2;
    PolyVectorField e = euler_field(n) + random_field(rng, n, 2, 4);
    PolyVectorField x = random_field(rng, n, k, k + 2);
    PolyVectorField rest = lie_bracket(e, x) * (Rational(1) / (k - 1)) - x;
    CHECK(rest.vanishing_order().at_least(k + 1));
  }
}

TEST_CASE("perturbed fixture is the pushforward of linear sl2") {
  FoliationModule pert = fixture("perturbed-sl2");
  FoliationModule sl2 = fixture("sl2");
  for (std::size_t j = 0; j < 3; ++j) CHECK(pert[j] == pushforward(sl2[j], kPhi, kPhiInv));
}

TEST_CASE("initial connection examples") {
  LeviConnection s = initial_connection(fixture("sl2"), 4);
  REQUIRE(s.images.size() == 3);
  std::vector<PolyVectorField> images;
  for (const auto& x : s.images) images.push_back(x.field());
  CHECK(span_basis(images) == span_basis(fixture("sl2").generators()));
  CHECK(all_zero(verify_connection(s, fixture("sl2"), 4), 4));
  CHECK(s.euler.field() == euler_field(2));

  LeviConnection c = initial_connection(fixture("circles"), 3);
  CHECK(c.images.empty());
  CHECK(c.certified_order == 2);

  FoliationModule pert = fixture("perturbed-sl2");
  LeviConnection p = initial_connection(pert, 5);
  CHECK(p.certified_order == 2);
  ConnectionReport rep = verify_connection(p, pert, 5);
  CHECK(rep.rows[0].linearity == 0);
  CHECK(rep.rows[0].flatness == 0);
  CHECK(rep.rows[1].linearity != 0);
  CHECK(rep.certified_order == 2);
  CHECK(rep.images_in_module);
  CHECK(rep.euler_like);
}

TEST_CASE("improve_step on the perturbed fixture") {
  FoliationModule pert = fixture("perturbed-sl2");
  IsotropyData iso = isotropy_algebra(pert);
  LeviConnection p = initial_connection(iso, 5);
  LeviConnection q = improve_step(p, iso);
  CHECK(q.certified_order == 3);
  REQUIRE(q.history.size() == 1);
  CHECK(q.history[0].degree == 2);
  CHECK(q.history[0].images_changed);
  ConnectionReport rep = verify_connection(q, pert, 5);
  CHECK(all_zero(rep, 2));
  CHECK(rep.images_in_module);
  CHECK(rep.euler_like);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK((q.images[a] - p.images[a]).field().vanishing_order().at_least(2));
    CHECK(q.images[a].field().homogeneous_part(1) == p.images[a].field().homogeneous_part(1));
  }
  CHECK((q.euler - p.euler).field().vanishing_order().at_least(2));
  CHECK_THROWS_AS(improve_step(linearize(iso, 3), iso), PreconditionError);
}

TEST_CASE("already flat connections are fixed points") {
  IsotropyData iso = isotropy_algebra(fixture("sl2"));
  LeviConnection s = initial_connection(iso, 5);
  LeviConnection t = improve_step(s, iso);
  for (std::size_t a = 0; a < 3; ++a) CHECK(t.images[a] == s.images[a]);
  CHECK(t.euler == s.euler);
  CHECK_FALSE(t.history[0].euler_changed);
  CHECK_FALSE(t.history[0].images_changed);

  LeviConnection q = linearize(fixture("quadratic-x2dx"), 6);
  CHECK(q.images.empty());
  CHECK(q.certified_order == 6);
}

TEST_CASE("linearize the perturbed fixture to order 5") {
  FoliationModule pert = fixture("perturbed-sl2");
  LeviConnection conn = linearize(pert, 5);
  CHECK(conn.certified_order == 5);
  CHECK(conn.history.size() == 3);
  ConnectionReport rep = verify_connection(conn, pert, 5);
  CHECK(all_zero(rep, 4));
  CHECK(rep.images_in_module);
  CHECK(rep.images_vanish);
  CHECK(rep.euler_like);

  // Conjugation oracle: pulled back by the inverse map, the images are linear sl2 fields up to
  // order 5 exactly when E pulls back to a field commuting with them; in any case their linear
  // parts are those of e, f, h.
  FoliationModule sl2 = fixture("sl2");
  for (std::size_t a = 0; a < 3; ++a) {
    PolyVectorField back = pushforward(conn.images[a].field(), kPhiInv, kPhi).truncated(4);
    PolyVectorField eb = pushforward(conn.euler.field(), kPhiInv, kPhi).truncated(4);
    CHECK(lie_bracket(back, eb).truncated(4).vanishing_order().at_least(5));
    CHECK(fixture("sl2").jets(4)->contains(back));
  }
}

TEST_CASE("the verifier accepts the exact conjugated connection") {
  FoliationModule sl2 = fixture("sl2");
  FoliationModule pert = fixture("perturbed-sl2");
  IsotropyData iso = isotropy_algebra(pert);
  LeviConnection exact;
  exact.semisimple = iso.ss_quotient.algebra;
  exact.euler = JetField(pushforward(euler_field(2), kPhi, kPhiInv), 6);
  LeviConnection ours = linearize(iso, 3);
  // The same basis of g^s: the images of ours have linear parts of e, f, h combinations.
  for (const auto& img : ours.images) {
    PolyVectorField lin = PolyVectorField::from_linear_part(img.field().linear_part());
    exact.images.emplace_back(pushforward(lin, kPhi, kPhiInv), 6);
  }
  exact.certified_order = 6;
  ConnectionReport rep = verify_connection(exact, pert, 6);
  CHECK(all_zero(rep, 6));
  CHECK(rep.images_in_module);
}

TEST_CASE("corrupted connection shows a degree-3 defect") {
  FoliationModule sl2 = fixture("sl2");
  LeviConnection conn = linearize(sl2, 5);
  conn.images[0] = conn.images[0] + JetField(V("x^3*dy"), 5);
  conn.coefficients.clear();
  conn.classes.clear();
  ConnectionReport rep = verify_connection(conn, sl2, 5);
  CHECK(rep.rows[0].linearity == 0);
  CHECK(rep.rows[1].linearity == 0);
  CHECK(rep.rows[1].flatness == 0);
  CHECK(rep.rows[2].linearity == 1);
  CHECK(rep.rows[2].flatness > 0);
  CHECK(rep.certified_order == 3);
}

TEST_CASE("sl2 with the Euler field linearizes to exactly linear images") {
  FoliationModule f = fixture("sl2-semidirect-euler");
  LeviConnection conn = linearize(f, 4);
  REQUIRE(conn.images.size() == 3);
  for (const auto& img : conn.images) CHECK(img.field().is_homogeneous(1));
  CHECK(all_zero(verify_connection(conn, f, 4), 4));
}

TEST_CASE("stopping early gives a section of the holonomy") {
  IsotropyData iso = isotropy_algebra(fixture("sl2-quadratic-fiber-twisted"));
  ArtinReesCertificate ar = artin_rees_certify(iso.module, default_degree_cap(iso.module));
  REQUIRE(ar.bounded);
  CHECK(ar.bound == 2);
  LeviConnection start = initial_connection(iso, ar.bound + 1);
  CHECK_FALSE(section_is_homomorphic(start, iso));
  LeviConnection stopped = linearize(iso, ar.bound + 1);
  CHECK(section_is_homomorphic(stopped, iso));
  // Classes tracked through the corrections agree with classes read off the jets.
  LeviConnection plain = stopped;
  plain.classes.clear();
  CHECK(holonomy_section(plain, iso) == holonomy_section(stopped, iso));
}

TEST_CASE("radical foliation examples") {
  IsotropyData e = isotropy_algebra(fixture("sl2-semidirect-euler"));
  LeviConnection conn = linearize(e, 5);
  RadicalFoliation r = radical_foliation(e, conn, 5);
  CHECK(r.direct_sum);
  CHECK(r.invariant);
  CHECK_FALSE(r.degraded);
  REQUIRE_FALSE(r.generators.empty());
  CHECK(r.generators[0] == euler_field(2));
  for (const auto& img : conn.images) CHECK(lie_bracket(img.field(), euler_field(2)).is_zero());
  for (const auto& row : r.degrees) CHECK(row.module_dim == row.section_dim + row.radical_dim);
  CHECK(r.degrees[0].section_dim == 3);
  CHECK(r.degrees[0].radical_dim == 1);

  IsotropyData c = isotropy_algebra(fixture("circles"));
  RadicalFoliation rc = radical_foliation(c, linearize(c, 4), 4);
  REQUIRE(rc.generators.size() == 1);
  CHECK(rc.generators[0] == fixture("circles")[0]);

  IsotropyData s = isotropy_algebra(fixture("sl2"));
  RadicalFoliation rs = radical_foliation(s, linearize(s, 3), 3);
  CHECK(rs.degrees[0].radical_dim == 0);
  CHECK(rs.degrees[0].section_dim == 3);
  for (const auto& g : rs.generators) CHECK(g.vanishing_order().at_least(2));

  RadicalFoliation low = radical_foliation(e, initial_connection(e, 4), 4);
  CHECK(low.degraded);
  CHECK(low.direct_sum);
  CHECK_THROWS_AS(radical_foliation(e, conn, 6), PreconditionError);
}

TEST_CASE("semidirect product") {
  std::vector<PolyVectorField> sl2 = fixture("sl2").generators();
  FoliationModule m = semidirect_product(sl2, {euler_field(2)});
  CHECK(m.size() == 4);
  CHECK(check_involutive(m).involutive);
  CHECK(same_module(m, fixture("sl2-semidirect-euler")));

  FoliationModule direct = semidirect_product({}, {V("x^2*dx")});
  CHECK(direct.size() == 1);

  try {
    semidirect_product(sl2, {V("x*dy")});
    FAIL("expected an invariance failure");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("not invariant") != std::string::npos);
  }
  CHECK_THROWS_AS(semidirect_product({V("x*dy"), V("y*dx")}, {euler_field(2)}), PreconditionError);
  CHECK_THROWS_AS(semidirect_product({V("x^2*dy")}, {euler_field(2)}), PreconditionError);
  CHECK_THROWS_AS(semidirect_product({V("x*dx + y*dy")}, {V("2*x*dx + 2*y*dy")}), PreconditionError);
}

TEST_CASE("corrections with a nontrivial quotient module") {
  // Rotations of 3-space pushed forward by (x, y, z) -> (x, y, z + x^2).
  std::vector<Polynomial> phi{P("x", 3), P("y", 3), P("z + x^2", 3)};
  std::vector<Polynomial> inv{P("x", 3), P("y", 3), P("z - x^2", 3)};
  std::vector<PolyVectorField> gens;
  for (const auto& g : {V("x*dy - y*dx", 3), V("y*dz - z*dy", 3), V("z*dx - x*dz", 3)})
    gens.push_back(pushforward(g, phi, inv));
  FoliationModule f(gens);
  IsotropyData iso = isotropy_algebra(f);
  CHECK(iso.ss_quotient.algebra.dim() == 3);
  LeviConnection conn = linearize(iso, 5);
  ConnectionReport rep = verify_connection(conn, f, 5);
  CHECK(all_zero(rep, 4));
  CHECK(rep.images_in_module);
  CHECK(rep.euler_like);
  bool euler_moved = false;
  std::size_t defects = 0;
  for (const auto& h : conn.history) {
    CHECK(h.quotient_dim > 0);
    euler_moved = euler_moved || h.euler_changed;
    defects += h.defect_classes;
  }
  CHECK(euler_moved);
  CHECK(defects > 0);
  CHECK(section_is_homomorphic(conn, iso));
  RadicalFoliation r = radical_foliation(iso, conn, 5);
  CHECK(r.direct_sum);
  CHECK(r.invariant);
}
