#include "levifol/vecfield.hpp"

#include <algorithm>
#include <map>

#include "levifol/errors.hpp"

namespace levifol {

PolyVectorField::PolyVectorField(std::size_t nvars) : comps_(nvars, Polynomial(nvars)) {
  if (nvars == 0) throw DimensionError("vector fields need at least one variable");
}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw DimensionError("vector fields need at least one variable");
  for (const auto& c : comps_)
    if (c.nvars() != comps_.size())
      throw DimensionError("component ring does not match the number of components");
}

PolyVectorField PolyVectorField::coordinate(std::size_t nvars, std::size_t i) {
  return monomial(Monomial(nvars), i);
}

PolyVectorField PolyVectorField::monomial(const Monomial& m, std::size_t i, const Rational& c) {
  PolyVectorField x(m.nvars());
  x.comps_.at(i) = Polynomial::monomial(m, c);
  return x;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Degree PolyVectorField::degree() const {
  Degree d = Degree::minus_infinity();
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

Order PolyVectorField::vanishing_order() const {
  Order o = Order::infinite();
  for (const auto& c : comps_) o = std::min(o, c.vanishing_order());
  return o;
}

bool PolyVectorField::is_homogeneous(int k) const {
  return std::all_of(comps_.begin(), comps_.end(), [k](const Polynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [k](const Term& t) { return t.mono.total_degree() == k; });
  });
}

PolyVectorField PolyVectorField::homogeneous_part(int d) const {
  PolyVectorField r = *this;
  for (auto& c : r.comps_) c = c.homogeneous_part(d);
  return r;
}

PolyVectorField PolyVectorField::truncated(int max_degree) const {
  PolyVectorField r = *this;
  for (auto& c : r.comps_) c = c.truncated(max_degree);
  return r;
}

PolyVectorField PolyVectorField::shifted(const Monomial& m) const {
  PolyVectorField r = *this;
  for (auto& c : r.comps_) c = c.shifted(m);
  return r;
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw DimensionError("derivation applied to a function of another ring");
  Polynomial out(nvars());
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) out += comps_[i] * d;
  }
  return out;
}

Matrix PolyVectorField::linear_part() const {
  std::size_t n = nvars();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = comps_[i].coefficient(Monomial::variable(n, j));
  return a;
}

PolyVectorField PolyVectorField::from_linear_part(const Matrix& a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("linear part must be square");
  PolyVectorField x(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back({Monomial::variable(n, j), a(i, j)});
    x.comps_[i] = Polynomial(n, std::move(terms));
  }
  return x;
}

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

void PolyVectorField::check_same_space(const PolyVectorField& other) const {
  if (nvars() != other.nvars()) throw DimensionError("vector fields on spaces of different dimension");
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  check_same_space(other);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& other) {
  check_same_space(other);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= other.comps_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x) {
  if (f.nvars() != x.nvars()) throw DimensionError("function and field on different spaces");
  PolyVectorField r = x;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

std::string PolyVectorField::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() != nvars()) throw DimensionError("variable name count does not match space");
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    for (const auto& t : comps_[i].terms()) {
      if (!out.empty()) out += " + ";
      std::string head = render_term(t.coeff, t.mono, vars);
      // A bare unit coefficient on a constant term renders as just the derivation.
      if (head == "1") out += "d" + vars[i];
      else out += head + "*d" + vars[i];
    }
  }
  return out.empty() ? "0" : out;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.nvars() != y.nvars()) throw DimensionError("bracket of fields on spaces of different dimension");
  std::vector<Polynomial> comps;
  comps.reserve(x.nvars());
  for (std::size_t j = 0; j < x.nvars(); ++j) comps.push_back(x.apply(y[j]) - y.apply(x[j]));
  return PolyVectorField(std::move(comps));
}

PolyVectorField euler_field(std::size_t nvars) {
  if (nvars == 0) throw DimensionError("euler_field needs n >= 1");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < nvars; ++i) comps.push_back(Polynomial::variable(nvars, i));
  return PolyVectorField(std::move(comps));
}

std::vector<std::pair<int, PolyVectorField>> homogeneous_components(const PolyVectorField& x) {
  std::map<int, PolyVectorField> parts;
  for (std::size_t i = 0; i < x.nvars(); ++i)
    for (const auto& t : x[i].terms()) {
      auto [it, inserted] = parts.try_emplace(t.mono.total_degree(), x.nvars());
      it->second += PolyVectorField::monomial(t.mono, i, t.coeff);
    }
  return {parts.begin(), parts.end()};
}

namespace {

PolyVectorField scale_components(const PolyVectorField& x, auto&& factor) {
  PolyVectorField out(x.nvars());
  for (auto& [m, part] : homogeneous_components(x)) out += part * factor(m);
  return out;
}

}  // namespace

PolyVectorField apply_P(const PolyVectorField& x, int k) {
  if (k < 1) throw PreconditionError("apply_P needs k >= 1");
  return lie_bracket(euler_field(x.nvars()), x) - x * Rational(k - 1);
}

PolyVectorField apply_Q(const PolyVectorField& x, int k) {
  if (k < 1) throw PreconditionError("apply_Q needs k >= 1");
  for (auto& [m, part] : homogeneous_components(x))
    if (m <= k)
      throw PreconditionError("apply_Q: component of degree " + std::to_string(m) +
                              " is not of degree >= " + std::to_string(k + 1));
  return scale_components(x, [k](int m) -> Rational { return Rational(1) / Rational(m - k); });
}

PolyVectorField pushforward(const PolyVectorField& x, const std::vector<Polynomial>& phi,
                            const std::vector<Polynomial>& phi_inverse) {
  std::size_t n = x.nvars();
  if (phi.size() != n || phi_inverse.size() != n) throw DimensionError("map dimension mismatch");
  std::vector<Polynomial> pulled;
  for (std::size_t j = 0; j < n; ++j) pulled.push_back(x[j].compose(phi_inverse));
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial acc(n);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial dij = phi[i].derivative(j);
      if (dij.is_zero() || pulled[j].is_zero()) continue;
      acc += dij.compose(phi_inverse) * pulled[j];
    }
    comps.push_back(std::move(acc));
  }
  return PolyVectorField(std::move(comps));
}

}  // namespace levifol
