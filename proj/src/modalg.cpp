#include "levifol/modalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "levifol/errors.hpp"
#include "levifol/field_index.hpp"

namespace levifol {

struct FoliationModule::Cache {
  std::once_flag groebner_once;
  std::unique_ptr<GroebnerBasis> groebner;
  std::mutex jets_mutex;
  std::map<int, std::shared_ptr<const JetSpace>> jets;
};

FoliationModule::FoliationModule(std::vector<PolyVectorField> generators)
    : gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) throw PreconditionError("a foliation needs at least one generator");
  nvars_ = gens_.front().nvars();
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (gens_[j].nvars() != nvars_) throw DimensionError("generators live on spaces of different dimension");
    if (!gens_[j].vanishes_at_origin())
      throw PreconditionError("generator " + std::to_string(j + 1) + " does not vanish at the origin");
  }
}

int FoliationModule::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_)
    if (!g.is_zero()) d = std::max(d, g.degree().value());
  return d;
}

const GroebnerBasis& FoliationModule::groebner() const {
  std::call_once(cache_->groebner_once,
                 [this] { cache_->groebner = std::make_unique<GroebnerBasis>(nvars_, gens_); });
  return *cache_->groebner;
}

std::shared_ptr<const JetSpace> FoliationModule::jets(int order) const {
  std::lock_guard lock(cache_->jets_mutex);
  auto it = cache_->jets.find(order);
  if (it != cache_->jets.end()) return it->second;
  auto space = std::make_shared<const JetSpace>(nvars_, gens_, order);
  cache_->jets.emplace(order, space);
  return space;
}

namespace {

PolyVectorField combination(const std::vector<Polynomial>& coeffs, const FoliationModule& f) {
  PolyVectorField acc(f.nvars());
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!coeffs[j].is_zero()) acc += coeffs[j] * f[j];
  return acc;
}

}  // namespace

bool verify_certificate(const MembershipCertificate& cert, const PolyVectorField& x,
                        const FoliationModule& f) {
  if (cert.coefficients.size() != f.size()) return false;
  if (cert.member != cert.remainder.is_zero()) return false;
  return combination(cert.coefficients, f) + cert.remainder == x;
}

MembershipCertificate membership(const PolyVectorField& x, const FoliationModule& f) {
  if (x.nvars() != f.nvars()) throw DimensionError("field and module on spaces of different dimension");
  auto division = f.groebner().divide(x);
  MembershipCertificate cert{division.remainder.is_zero(), std::move(division.coefficients),
                             std::move(division.remainder)};
  if (!verify_certificate(cert, x, f))
    throw InvariantViolation("membership certificate does not reconstruct the field");
  return cert;
}

FoliationModule multiply_by_ideal_power(const FoliationModule& f, int k) {
  if (k < 0) throw PreconditionError("ideal power must be non-negative");
  if (k == 0) return f;
  std::vector<PolyVectorField> gens;
  for (const auto& m : monomials_of_degree(f.nvars(), k))
    for (const auto& g : f.generators()) gens.push_back(g.shifted(m));
  return FoliationModule(std::move(gens));
}

InvolutivityResult check_involutive(const FoliationModule& f) {
  InvolutivityResult out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      PolyVectorField br = lie_bracket(f[i], f[j]);
      MembershipCertificate cert = membership(br, f);
      if (!cert.member) {
        out.certificates.clear();
        out.witness = InvolutivityWitness{i, j, std::move(br), std::move(cert)};
        return out;
      }
      out.certificates.push_back(std::move(cert));
    }
  out.involutive = true;
  return out;
}

GradedTruncation graded_truncation_basis(const FoliationModule& f, int d) {
  if (d < 0) throw PreconditionError("degree must be non-negative");
  GradedTruncation out;
  if (d == 0) return out;
  auto jets = f.jets(d);
  out.initial = jets->initial_forms(d);
  // Degree-d parts of every element of F are spanned by those of m * g_j, deg m <= d - 1.
  std::vector<PolyVectorField> parts;
  for (int m = 0; m < d; ++m)
    for (const auto& mono : monomials_of_degree(f.nvars(), m))
      for (const auto& g : f.generators()) {
        PolyVectorField p = g.shifted(mono).homogeneous_part(d);
        if (!p.is_zero()) parts.push_back(std::move(p));
      }
  out.truncation = span_basis(parts);
  return out;
}

bool same_module(const FoliationModule& a, const FoliationModule& b) {
  if (a.nvars() != b.nvars()) return false;
  for (const auto& g : a.generators())
    if (!b.groebner().contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.groebner().contains(g)) return false;
  return true;
}

namespace {

PolyVectorField normalized(PolyVectorField x) {
  auto lt = leading_term(x);
  if (lt) x *= 1 / lt->coeff;
  return x;
}

}  // namespace

FoliationModule homogeneous_generators(const FoliationModule& f, int check_degree) {
  if (check_degree <= 0) check_degree = f.max_generator_degree() + 2;
  const PolyVectorField euler = euler_field(f.nvars());
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!f.groebner().contains(lie_bracket(euler, f[j])))
      throw PreconditionError("the Euler field does not preserve the module: [E, g" +
                              std::to_string(j + 1) + "] is not a member, g" + std::to_string(j + 1) +
                              " = " + f[j].to_string(default_variable_names(f.nvars())));

  std::vector<std::pair<int, PolyVectorField>> parts;
  for (const auto& g : f.generators())
    for (auto& part : homogeneous_components(g)) parts.push_back(std::move(part));
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  // Graded Nakayama: homogeneous elements whose classes in F / I F are independent generate F.
  FoliationModule ideal_times_f = multiply_by_ideal_power(f, 1);
  const GroebnerBasis& gb = ideal_times_f.groebner();
  std::vector<PolyVectorField> kept, kept_classes;
  for (auto& [deg, part] : parts) {
    if (!f.groebner().contains(part))
      throw InvariantViolation("homogeneous component of an Euler-invariant generator left the module");
    PolyVectorField cls = gb.normal_form(part);
    if (cls.is_zero()) continue;
    kept_classes.push_back(cls);
    if (span_rank(kept_classes) < kept_classes.size()) {
      kept_classes.pop_back();
      continue;
    }
    kept.push_back(normalized(std::move(part)));
  }

  FoliationModule out(std::move(kept));
  if (!same_module(f, out)) throw InvariantViolation("homogeneous generators span a different module");
  auto a = f.jets(check_degree);
  auto b = out.jets(check_degree);
  for (int d = 1; d <= check_degree; ++d)
    if (a->initial_dimension(d) != b->initial_dimension(d))
      throw InvariantViolation("homogeneous generators disagree with the module on jets");
  for (const auto& g : out.generators())
    if (!a->contains(g)) throw InvariantViolation("homogeneous generator outside the module jets");
  return out;
}

std::optional<std::vector<Polynomial>> bounded_membership(const PolyVectorField& x,
                                                          const FoliationModule& f,
                                                          int coefficient_degree) {
  if (x.nvars() != f.nvars()) throw DimensionError("field and module on spaces of different dimension");
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  std::vector<PolyVectorField> columns;
  for (int d = 0; d <= coefficient_degree; ++d)
    for (const auto& m : monomials_of_degree(f.nvars(), d))
      for (std::size_t j = 0; j < f.size(); ++j) {
        unknowns.emplace_back(j, m);
        columns.push_back(f[j].shifted(m));
      }
  auto sol = express_in_span(columns, x);
  if (!sol) return std::nullopt;
  std::vector<std::vector<Term>> terms(f.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sgn((*sol)[u]) != 0) terms[unknowns[u].first].push_back({unknowns[u].second, (*sol)[u]});
  std::vector<Polynomial> coeffs;
  for (auto& t : terms) coeffs.emplace_back(f.nvars(), std::move(t));
  if (combination(coeffs, f) != x) throw InvariantViolation("bounded membership solution does not reconstruct");
  return coeffs;
}

}  // namespace levifol
