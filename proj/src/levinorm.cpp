#include "levifol/levinorm.hpp"

#include <string>

#include "levifol/errors.hpp"
#include "levifol/field_index.hpp"

namespace levifol {

JetField::JetField(const PolyVectorField& field, int order) : field_(field.truncated(order)), order_(order) {
  if (order < 1) throw PreconditionError("jet order must be at least 1");
}

JetField& JetField::operator+=(const JetField& other) {
  order_ = std::min(order_, other.order_);
  field_ = (field_ + other.field_).truncated(order_);
  return *this;
}

JetField& JetField::operator-=(const JetField& other) {
  order_ = std::min(order_, other.order_);
  field_ = (field_ - other.field_).truncated(order_);
  return *this;
}

JetField bracket(const JetField& x, const JetField& y) {
  if (!x.field().vanishes_at_origin() || !y.field().vanishes_at_origin())
    throw PreconditionError("jet brackets need fields vanishing at the origin");
  return JetField(lie_bracket(x.field(), y.field()), std::min(x.order(), y.order()));
}

JetField linearity_defect(const LeviConnection& conn, std::size_t a) { return bracket(conn.images[a], conn.euler); }

JetField curvature(const LeviConnection& conn, std::size_t a, std::size_t b) {
  JetField out = bracket(conn.images[a], conn.images[b]);
  Vec ab = conn.semisimple.bracket_basis(a, b);
  for (std::size_t c = 0; c < ab.size(); ++c)
    if (sgn(ab[c]) != 0) out -= ab[c] * conn.images[c];
  return out;
}

namespace {

bool linear_to(const LeviConnection& conn, int k) {
  for (std::size_t a = 0; a < conn.images.size(); ++a)
    if (!linearity_defect(conn, a).field().vanishing_order().at_least(k)) return false;
  return true;
}

bool flat_to(const LeviConnection& conn, int k) {
  for (std::size_t a = 0; a < conn.images.size(); ++a)
    for (std::size_t b = a + 1; b < conn.images.size(); ++b)
      if (!curvature(conn, a, b).field().vanishing_order().at_least(k)) return false;
  return true;
}

PolyVectorField combination(const FoliationModule& f, const std::vector<Polynomial>& coefficients) {
  PolyVectorField out(f.nvars());
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!coefficients[j].is_zero()) out += coefficients[j] * f[j];
  return out;
}

}  // namespace

LeviConnection initial_connection(const IsotropyData& iso, int order) {
  if (order < 2) throw PreconditionError("connection order must be at least 2");
  std::size_t n = iso.nvars();
  const QuotientAlgebra& ss = iso.ss_quotient;
  std::size_t sdim = ss.algebra.dim();

  LeviConnection conn;
  conn.semisimple = ss.algebra;
  conn.euler = JetField(euler_field(n), order);
  conn.certified_order = 2;
  if (sdim == 0) return conn;

  // A homomorphic section g^s -> g^lin: the Levi factor of g^lin, identified with g^s
  // through preimages under g^lin -> g^s.
  SemisimpleHolonomy sh = semisimple_holonomy(iso);
  const QuotientAlgebra& lin = iso.lin_quotient;
  LeviData lin_levi = levi_subalgebra(lin.algebra);
  Matrix preimage = lin.projection * ss.lift;
  Matrix z = lin_levi.section * (lin_levi.semisimple.projection * preimage);
  if (!is_homomorphic_section(lin.algebra, ss.algebra, sh.from_linear, z))
    throw InvariantViolation("Levi factor of the linear holonomy is not a section of g^lin -> g^s");
  Matrix lifted = lin.lift * z;

  for (std::size_t a = 0; a < sdim; ++a) {
    Vec cls = lifted.column(a);
    std::vector<Polynomial> coeffs(iso.module.size(), Polynomial(n));
    for (std::size_t b = 0; b < cls.size(); ++b)
      if (sgn(cls[b]) != 0)
        coeffs[iso.representative_generators[b]] += Polynomial::constant(n, cls[b]);
    conn.images.emplace_back(iso.representative(cls), order);
    conn.coefficients.push_back(std::move(coeffs));
    conn.classes.push_back(std::move(cls));
  }
  if (!linear_to(conn, 2)) throw InvariantViolation("initial connection is not linear modulo I^2");
  if (!flat_to(conn, 2)) throw InvariantViolation("initial connection is not flat modulo I^2");
  return conn;
}

LeviConnection initial_connection(const FoliationModule& f, int order) {
  return initial_connection(isotropy_algebra(f), order);
}

LeviConnection improve_step(const LeviConnection& conn, const IsotropyData& iso) {
  const int k = conn.certified_order;
  const int order = conn.truncation_order();
  const std::string at = " at degree " + std::to_string(k);
  if (k < 2) throw PreconditionError("improve_step needs a connection certified at order 2 or more");
  if (k >= order) throw PreconditionError("connection is already certified at its truncation order");
  if (!linear_to(conn, k) || !flat_to(conn, k))
    throw PreconditionError("connection is not linear and flat to its stated order");

  LeviConnection out = conn;
  std::size_t sdim = conn.images.size();
  ImproveRecord rec{k, 0, 0, false, false};
  if (sdim == 0) {
    out.certified_order = k + 1;
    out.history.push_back(rec);
    return out;
  }

  std::size_t n = conn.nvars();
  auto jets = iso.module.jets(order);
  FieldIndex idx(n, k, k);
  std::vector<Vec> initial;
  for (const auto& w : jets->initial_forms(k)) initial.push_back(idx.to_dense(w));
  QuotientSpace quotient(Subspace::whole(idx.size()), Subspace(idx.size(), initial));
  std::size_t m = quotient.dim();
  rec.quotient_dim = m;

  // Action of g^s on the quotient through the linear parts of the images.
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < sdim; ++a) {
    PolyVectorField lin = PolyVectorField::from_linear_part(conn.images[a].field().linear_part());
    Matrix rho(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      PolyVectorField v = idx.to_field(quotient.lift(unit_vector(m, c)));
      Vec col = quotient.project(idx.to_dense(lie_bracket(lin, v)));
      for (std::size_t r = 0; r < m; ++r) rho(r, c) = col[r];
    }
    action.push_back(std::move(rho));
  }
  std::optional<Representation> rep;
  try {
    rep.emplace(conn.semisimple, m, action);
  } catch (const InputError& e) {
    throw InvariantViolation("linear parts do not act on the quotient" + at + ": " + e.what());
  }

  Cochain defect = Cochain::zero(1, sdim, m);
  for (std::size_t a = 0; a < sdim; ++a) {
    defect.values[a] = quotient.project(idx.to_dense(linearity_defect(conn, a).field().homogeneous_part(k)));
    if (!is_zero(defect.values[a])) ++rec.defect_classes;
  }
  CeSolveResult sol;
  try {
    sol = ce_solve(*rep, 1, defect);
  } catch (const PreconditionError& e) {
    throw InvariantViolation("linearity defect is not a cocycle" + at + ": " + e.what());
  }
  if (!sol.solved) throw InvariantViolation("linearity defect is not a coboundary" + at);

  PolyVectorField eps = idx.to_field(quotient.lift(sol.primitive.values[0]));
  if (!eps.is_zero()) {
    rec.euler_changed = true;
    out.euler = JetField(conn.euler.field() - eps, order);
  }

  const Rational scale = Rational(1) / (k - 1);
  for (std::size_t a = 0; a < sdim; ++a) {
    PolyVectorField w = lie_bracket(conn.images[a].field(), out.euler.field()).homogeneous_part(k);
    if (w.is_zero()) continue;
    auto lifted = jets->lift_initial_form(w, k);
    if (!lifted) throw InvariantViolation("remaining linearity defect is not an initial form of F" + at);
    rec.images_changed = true;
    out.images[a] = JetField(conn.images[a].field() + lifted->field * scale, order);
    if (!out.coefficients.empty()) {
      for (std::size_t j = 0; j < iso.module.size(); ++j)
        out.coefficients[a][j] = (out.coefficients[a][j] + lifted->coefficients[j] * scale).truncated(order - 1);
      axpy(out.classes[a], scale, iso.class_of_constants(lifted->constants));
    }
  }

  for (std::size_t a = 0; a < sdim; ++a)
    if (!(out.images[a] - conn.images[a]).field().vanishing_order().at_least(k))
      throw InvariantViolation("image changed below degree " + std::to_string(k));
  if (!linear_to(out, k + 1)) throw InvariantViolation("linearity defect survives the correction" + at);
  // Linearity at order k+1 together with flatness at order k forces flatness at order k+1.
  if (!flat_to(out, k + 1)) throw InvariantViolation("curvature survives although linearity holds" + at);
  out.certified_order = k + 1;
  out.history.push_back(rec);
  return out;
}

LeviConnection linearize(const IsotropyData& iso, int order) {
  LeviConnection conn = initial_connection(iso, order);
  while (conn.certified_order < order) conn = improve_step(conn, iso);
  return conn;
}

LeviConnection linearize(const FoliationModule& f, int order) { return linearize(isotropy_algebra(f), order); }

ConnectionReport verify_connection(const LeviConnection& conn, const FoliationModule& f, int max_degree) {
  ConnectionReport rep;
  int top = std::min(max_degree, conn.truncation_order());
  rep.checked_through = top;
  std::size_t sdim = conn.images.size();
  std::vector<JetField> lin;
  for (std::size_t a = 0; a < sdim; ++a) lin.push_back(linearity_defect(conn, a));
  std::vector<JetField> curv;
  for (std::size_t a = 0; a < sdim; ++a)
    for (std::size_t b = a + 1; b < sdim; ++b) curv.push_back(curvature(conn, a, b));
  rep.certified_order = top + 1;
  for (int d = 1; d <= top; ++d) {
    std::vector<PolyVectorField> lp, cp;
    for (const auto& x : lin) lp.push_back(x.field().homogeneous_part(d));
    for (const auto& x : curv) cp.push_back(x.field().homogeneous_part(d));
    DefectRow row{d, span_rank(lp), span_rank(cp)};
    if ((row.linearity != 0 || row.flatness != 0) && rep.certified_order == top + 1) rep.certified_order = d;
    rep.rows.push_back(row);
  }

  auto jets = f.jets(conn.truncation_order());
  rep.images_in_module = true;
  rep.images_vanish = true;
  for (std::size_t a = 0; a < sdim; ++a) {
    const PolyVectorField& x = conn.images[a].field();
    if (!x.vanishes_at_origin()) rep.images_vanish = false;
    if (!jets->contains(x)) rep.images_in_module = false;
    if (!conn.coefficients.empty() && combination(f, conn.coefficients[a]).truncated(conn.truncation_order()) != x)
      rep.images_in_module = false;
  }
  rep.euler_like = conn.euler.field().vanishes_at_origin() &&
                   conn.euler.field().linear_part() == Matrix::identity(conn.nvars());
  return rep;
}

Matrix holonomy_section(const LeviConnection& conn, const IsotropyData& iso) {
  std::vector<Vec> cols = conn.classes;
  if (cols.size() != conn.images.size()) {
    cols.clear();
    auto jets = iso.module.jets(conn.truncation_order());
    for (const auto& img : conn.images) {
      auto el = jets->express(img.field());
      if (!el) throw PreconditionError("connection image is not in the foliation");
      cols.push_back(iso.class_of_constants(el->constants));
    }
  }
  return Matrix::from_columns(cols, iso.dim());
}

bool section_is_homomorphic(const LeviConnection& conn, const IsotropyData& iso) {
  if (!(conn.semisimple == iso.ss_quotient.algebra)) return false;
  return is_homomorphic_section(iso.algebra, iso.ss_quotient.algebra, iso.ss_quotient.projection,
                                holonomy_section(conn, iso));
}

RadicalFoliation radical_foliation(const IsotropyData& iso, const LeviConnection& conn, int order) {
  if (order < 1) throw PreconditionError("order must be at least 1");
  if (order > conn.truncation_order())
    throw PreconditionError("order exceeds the truncation order of the connection");
  if (conn.images.size() != iso.ss_quotient.algebra.dim())
    throw PreconditionError("connection does not match the semisimple holonomy");
  std::size_t n = iso.nvars();
  std::size_t sdim = conn.images.size();
  const FoliationModule& f = iso.module;

  std::vector<PolyVectorField> images;
  for (const auto& img : conn.images) images.push_back(img.field().truncated(order));

  std::vector<PolyVectorField> candidates;
  for (std::size_t j = 0; j < f.size(); ++j) {
    Vec xi = iso.ss_quotient.projection * iso.generator_classes[j];
    PolyVectorField r = f[j];
    for (std::size_t a = 0; a < sdim; ++a)
      if (sgn(xi[a]) != 0) r -= images[a] * xi[a];
    candidates.push_back(r.truncated(order));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& img : images)
      candidates.push_back((Polynomial::variable(n, i) * img).truncated(order));

  RadicalFoliation out;
  out.order = order;
  out.degraded = conn.certified_order < order;
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    if (!out.generators.empty() && JetSpace(n, out.generators, order).contains(c)) continue;
    out.generators.push_back(c);
  }
  JetSpace radical(n, out.generators, order);
  auto module = f.jets(order);

  FieldIndex idx(n, 1, order);
  std::vector<Vec> dense;
  for (const auto& x : images) dense.push_back(idx.to_dense(x));
  Subspace section(idx.size(), dense);
  bool identity = true;
  for (int d = 1; d <= order; ++d) {
    std::size_t sd = 0;
    for (auto p : section.pivots())
      if (idx.degree_of(p) == d) ++sd;
    RadicalDegree row{d, module->initial_dimension(d), sd, radical.initial_dimension(d)};
    if (row.module_dim != row.section_dim + row.radical_dim) identity = false;
    out.degrees.push_back(row);
  }

  bool inside = true;
  for (const auto& x : images) inside = inside && module->contains(x);
  for (const auto& r : out.generators) inside = inside && module->contains(r);
  std::vector<PolyVectorField> reduced;
  for (const auto& x : images) reduced.push_back(radical.remainder(x));
  out.direct_sum = identity && inside && span_rank(reduced) == sdim &&
                   sdim + radical.dimension() == module->dimension();

  out.invariant = true;
  for (const auto& x : images)
    for (const auto& r : out.generators)
      if (!radical.contains(lie_bracket(x, r).truncated(order))) out.invariant = false;

  if (!out.direct_sum) throw InvariantViolation("s(g^s) and R do not decompose the truncation of F");
  if (!out.invariant) throw InvariantViolation("R is not invariant under the image of s");
  return out;
}

FoliationModule semidirect_product(const std::vector<PolyVectorField>& linear_action,
                                   const std::vector<PolyVectorField>& radical_generators) {
  for (std::size_t a = 0; a < linear_action.size(); ++a)
    if (!linear_action[a].is_homogeneous(1))
      throw PreconditionError("linear action element " + std::to_string(a + 1) + " is not linear");
  for (std::size_t a = 0; a < linear_action.size(); ++a)
    for (std::size_t b = a + 1; b < linear_action.size(); ++b)
      if (!express_in_span(linear_action, lie_bracket(linear_action[a], linear_action[b])))
        throw PreconditionError("linear action is not closed: bracket of elements " + std::to_string(a + 1) +
                                " and " + std::to_string(b + 1) + " leaves the span");
  if (radical_generators.empty()) return FoliationModule(linear_action);

  FoliationModule radical(radical_generators);
  auto inv = check_involutive(radical);
  if (!inv.involutive)
    throw PreconditionError("R is not involutive: bracket of generators " + std::to_string(inv.witness->i + 1) +
                            " and " + std::to_string(inv.witness->j + 1) + " leaves R");
  for (std::size_t a = 0; a < linear_action.size(); ++a)
    for (std::size_t r = 0; r < radical_generators.size(); ++r)
      if (!membership(lie_bracket(linear_action[a], radical_generators[r]), radical).member)
        throw PreconditionError("R is not invariant: bracket of linear element " + std::to_string(a + 1) +
                                " with R generator " + std::to_string(r + 1) + " is not in R");
  // Normal forms are linear, so the span meets R trivially iff they keep the rank.
  std::vector<PolyVectorField> nfs;
  for (const auto& x : linear_action) nfs.push_back(radical.groebner().normal_form(x));
  if (span_rank(nfs) != span_rank(linear_action))
    throw PreconditionError("the span of the linear action meets R");

  std::vector<PolyVectorField> all = linear_action;
  all.insert(all.end(), radical_generators.begin(), radical_generators.end());
  FoliationModule out(std::move(all));
  if (!check_involutive(out).involutive) throw InvariantViolation("semi-direct product is not involutive");
  return out;
}

}  // namespace levifol
