#include "levifol/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "levifol/errors.hpp"

namespace levifol {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw InputError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InputError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("monomial product across different rings");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions of d into nvars parts.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw DimensionError("term lives in a different ring");
    acc[t.mono] += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(Monomial::variable(nvars, i));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.front().mono.total_degree());
}

Order Polynomial::vanishing_order() const {
  if (terms_.empty()) return Order::infinite();
  return Order(terms_.back().mono.total_degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return GrevlexGreater{}(t.mono, key);
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.total_degree() == 0) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (t.mono.total_degree() == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (t.mono.total_degree() <= max_degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("derivative with respect to a missing variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    std::vector<int> exps = t.mono.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  // Differentiation is injective on the surviving terms, so order and distinctness persist.
  Polynomial r(nvars_);
  r.terms_ = std::move(out);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return GrevlexGreater{}(a.mono, b.mono); });
  return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
  if (subs.size() != nvars_) throw DimensionError("compose needs one substitute per variable");
  std::size_t target = subs.empty() ? 0 : subs.front().nvars();
  for (const auto& s : subs)
    if (s.nvars() != target) throw DimensionError("substitutes live in different rings");
  // Cache powers of each substitute.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * subs[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial shift across different rings");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionError("polynomials live in different rings");
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, const Rational& c) {
  check_same_ring(other);
  if (other.terms_.empty() || sgn(c) == 0) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      merged.push_back({b->mono, b->coeff * c});
      ++b;
      continue;
    }
    auto cmp = grevlex_compare(a->mono, b->mono);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(std::move(*a++));
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back({b->mono, b->coeff * c});
      ++b;
    } else {
      Rational s = a->coeff + b->coeff * c;
      if (sgn(s) != 0) merged.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_scaled(other, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return add_scaled(other, -1); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial r(a.nvars_);
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({m, c});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string render_coefficient(const Rational& c) {
  if (c.get_den() == 1 && sgn(c) > 0) return c.get_str();
  return "(" + c.get_str() + ")";
}

std::string render_term(const Rational& coeff, const Monomial& m,
                        const std::vector<std::string>& vars) {
  std::vector<std::string> factors;
  if (coeff != 1 || m.total_degree() == 0) factors.push_back(render_coefficient(coeff));
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    factors.push_back(m[i] == 1 ? vars.at(i) : vars.at(i) + "^" + std::to_string(m[i]));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() != nvars_) throw DimensionError("variable name count does not match ring");
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += render_term(terms_[i].coeff, terms_[i].mono, vars);
  }
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, int d) { return p.homogeneous_part(d); }
Order vanishing_order(const Polynomial& p) { return p.vanishing_order(); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i)
    out.push_back(nvars <= 3 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace levifol
