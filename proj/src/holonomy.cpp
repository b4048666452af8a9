#include "levifol/holonomy.hpp"

#include <algorithm>

#include "levifol/errors.hpp"
#include "levifol/field_index.hpp"

namespace levifol {

NotInvolutiveError::NotInvolutiveError(InvolutivityWitness witness)
    : PreconditionError("not involutive: the bracket of generators " + std::to_string(witness.i + 1) + " and " +
                        std::to_string(witness.j + 1) + " is not in the module"),
      witness_(std::move(witness)) {}

int default_degree_cap(const FoliationModule& f) { return 2 * f.max_generator_degree() + 2; }

Vec IsotropyData::class_of(const PolyVectorField& x) const {
  PolyVectorField nf = ideal_module.groebner().normal_form(x);
  auto coords = express_in_span(representative_normal_forms, nf);
  if (!coords) throw PreconditionError("field is not an element of the foliation");
  return *coords;
}

Vec IsotropyData::class_of_constants(const Vec& constants) const {
  Vec out(dim());
  for (std::size_t j = 0; j < constants.size(); ++j)
    if (sgn(constants[j]) != 0) axpy(out, constants[j], generator_classes[j]);
  return out;
}

PolyVectorField IsotropyData::representative(const Vec& v) const {
  PolyVectorField out(nvars());
  for (std::size_t a = 0; a < v.size(); ++a)
    if (sgn(v[a]) != 0) out += representatives[a] * v[a];
  return out;
}

namespace {

std::vector<Subspace> compute_filtration(const IsotropyData& iso, int cap) {
  std::size_t n = iso.dim();
  std::vector<Subspace> pieces{Subspace::whole(n), Subspace::whole(n)};
  if (cap < 1) return pieces;
  auto jets = iso.module.jets(cap);
  for (int i = 2; i <= cap + 1; ++i) {
    std::vector<Vec> classes;
    for (const auto& c : jets->constants_of_order_at_least(i)) classes.push_back(iso.class_of_constants(c));
    pieces.emplace_back(n, classes);
  }
  return pieces;
}

Vec flatten(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

void check_isotropy(const IsotropyData& iso) {
  std::size_t n = iso.dim();
  const auto& fil = iso.filtration;
  if (!(fil[1] == Subspace::whole(n))) throw InvariantViolation("g^1 is not the whole isotropy algebra");
  for (std::size_t i = 1; i < fil.size(); ++i)
    if (!fil[i - 1].contains(fil[i])) throw InvariantViolation("isotropy filtration is not decreasing");
  for (std::size_t i = 1; i < fil.size(); ++i)
    for (std::size_t j = i; i + j - 1 < fil.size(); ++j)
      if (!fil[i + j - 1].contains(bracket_span(iso.algebra, fil[i], fil[j])))
        throw InvariantViolation("filtration violates [g^i, g^j] in g^(i+j-1) for i=" + std::to_string(i) +
                                 ", j=" + std::to_string(j));
  // ker(linearization) = g^2.
  std::vector<Vec> cols;
  for (const auto& m : iso.linearization) cols.push_back(flatten(m));
  std::size_t len = iso.nvars() * iso.nvars();
  Subspace kernel(n, n == 0 ? std::vector<Vec>{} : nullspace(Matrix::from_columns(cols, len)));
  if (!(kernel == fil[2])) throw InvariantViolation("kernel of the linearization differs from g^2");
}

}  // namespace

IsotropyData isotropy_algebra(const FoliationModule& f, int filtration_cap) {
  if (filtration_cap <= 0) filtration_cap = default_degree_cap(f);
  auto inv = check_involutive(f);
  if (!inv.involutive) throw NotInvolutiveError(std::move(*inv.witness));

  FoliationModule ideal = multiply_by_ideal_power(f, 1);
  const GroebnerBasis& gb = ideal.groebner();
  std::vector<PolyVectorField> nfs;
  for (const auto& g : f.generators()) nfs.push_back(gb.normal_form(g));

  std::vector<PolyVectorField> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t j = 0; j < nfs.size(); ++j) {
    if (nfs[j].is_zero()) continue;
    kept.push_back(nfs[j]);
    if (span_rank(kept) < kept.size()) {
      kept.pop_back();
      continue;
    }
    kept_index.push_back(j);
  }
  std::size_t d = kept.size();

  IsotropyData iso{f, ideal, LieAlgebra::abelian(0), {}, kept_index, {}, kept, {}, filtration_cap, {}, {}, {}, {}};
  for (auto j : kept_index) iso.representatives.push_back(f[j]);
  for (const auto& nf : nfs) {
    auto coords = express_in_span(kept, nf);
    if (!coords) throw InvariantViolation("generator class outside the span of the chosen basis");
    iso.generator_classes.push_back(d == 0 ? Vec{} : *coords);
  }

  std::vector<Rational> c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      PolyVectorField br = lie_bracket(iso.representatives[a], iso.representatives[b]);
      auto coords = express_in_span(kept, gb.normal_form(br));
      if (!coords) throw InvariantViolation("bracket of representatives left the module");
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = (*coords)[k];
        c[(b * d + a) * d + k] = -(*coords)[k];
      }
    }
  iso.algebra = LieAlgebra(d, std::move(c));
  for (const auto& r : iso.representatives) iso.linearization.push_back(r.linear_part());
  iso.filtration = compute_filtration(iso, filtration_cap);
  check_isotropy(iso);
  iso.lin_quotient = quotient_algebra(iso.algebra, iso.filtration[2]);
  iso.radical = solvable_radical(iso.algebra);
  iso.ss_quotient = quotient_algebra(iso.algebra, iso.radical);
  return iso;
}

Filtration holonomy_filtration(const IsotropyData& iso, int cap) {
  if (cap < 0) throw PreconditionError("filtration cap must be non-negative");
  Filtration out;
  std::vector<Subspace> pieces =
      cap <= iso.filtration_cap ? iso.filtration : compute_filtration(iso, cap);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (static_cast<int>(i) <= cap) out.pieces.push_back(pieces[i]);
    if (pieces[i].is_zero() && !out.vanishes_at && static_cast<int>(i) <= cap + 1)
      out.vanishes_at = static_cast<int>(i);
  }
  return out;
}

Filtration holonomy_filtration(const FoliationModule& f, int cap) {
  return holonomy_filtration(isotropy_algebra(f, std::max(cap, 1)), cap);
}

LinearHolonomy linear_holonomy(const IsotropyData& iso) {
  const QuotientAlgebra& q = iso.lin_quotient;
  LinearHolonomy out{q.algebra, {}, q.projection};
  std::size_t n = iso.nvars();
  for (std::size_t a = 0; a < q.algebra.dim(); ++a) {
    Matrix m(n, n);
    Vec lift = q.lift.column(a);
    for (std::size_t i = 0; i < lift.size(); ++i)
      if (sgn(lift[i]) != 0) m = m - lift[i] * iso.linearization[i];
    out.realization.push_back(std::move(m));
  }
  // Faithful and bracket-preserving: the realized matrices span a copy of g^lin.
  if (!out.realization.empty() && !(LieAlgebra::from_matrices(out.realization) == q.algebra))
    throw InvariantViolation("linear parts do not realize the linear holonomy");
  return out;
}

SemisimpleHolonomy semisimple_holonomy(const IsotropyData& iso) {
  const Subspace& g2 = iso.filtration[2];
  if (!is_nilpotent(iso.algebra, g2)) throw InvariantViolation("g^2 is not nilpotent");
  if (!iso.radical.contains(g2)) throw InvariantViolation("g^2 is not contained in the radical");
  SemisimpleHolonomy out{iso.ss_quotient.algebra, iso.radical, iso.ss_quotient.projection,
                         iso.ss_quotient.projection * iso.lin_quotient.lift};
  if (!(out.from_linear * iso.lin_quotient.projection == out.from_isotropy))
    throw InvariantViolation("g -> g^lin -> g^s does not commute");
  if (!is_semisimple(out.algebra)) throw InvariantViolation("quotient by the radical is not semisimple");
  return out;
}

ArtinReesCertificate artin_rees_certify(const FoliationModule& f, int max_degree) {
  if (max_degree < 1) throw PreconditionError("degree cap must be at least 1");
  auto jets = f.jets(max_degree);
  ArtinReesCertificate out;
  out.checked_up_to = max_degree;
  std::size_t n = f.nvars();
  std::vector<PolyVectorField> previous;
  int last_failure = 0;
  std::optional<std::pair<int, PolyVectorField>> first_excess;  // at the last failing degree
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<PolyVectorField> initial = jets->initial_forms(d);
    std::vector<PolyVectorField> products;
    for (const auto& w : previous)
      for (std::size_t i = 0; i < n; ++i) products.push_back(w.shifted(Monomial::variable(n, i)));
    std::vector<PolyVectorField> product_basis = span_basis(products);
    out.degrees.push_back({d, initial.size(), product_basis.size()});
    if (d >= 2) {
      FieldIndex idx(n, d, d);
      std::vector<Vec> rows;
      for (const auto& p : product_basis) rows.push_back(idx.to_dense(p));
      Subspace prod(idx.size(), rows);
      for (const auto& w : initial) {
        Vec r = prod.reduce(idx.to_dense(w));
        if (!is_zero(r)) {
          last_failure = d;
          first_excess = {d, idx.to_field(r)};
          break;
        }
      }
    }
    previous = std::move(initial);
  }
  out.bound = std::max(1, last_failure);
  out.bounded = last_failure < max_degree;
  if (first_excess && out.bounded) {
    auto [c, w] = *first_excess;
    auto lifted = jets->lift_initial_form(w, c);
    if (!lifted) throw InvariantViolation("initial form could not be lifted to the module");
    PolyVectorField exact(n);
    for (std::size_t j = 0; j < f.size(); ++j) exact += lifted->coefficients[j] * f[j];
    if (!exact.vanishing_order().at_least(c) || exact.homogeneous_part(c) != w)
      throw InvariantViolation("lifted witness has the wrong initial form");
    auto cert = membership(exact, multiply_by_ideal_power(f, 1));
    if (cert.member) throw InvariantViolation("Artin-Rees witness lies in I F");
    out.witness = std::move(exact);
    out.witness_coefficients = std::move(lifted->coefficients);
    out.witness_certificate = std::move(cert);
  }
  return out;
}

}  // namespace levifol
