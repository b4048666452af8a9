#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "levifol/rational.hpp"

namespace levifol {

/// Exponent vector x_1^{a_1} ... x_n^{a_n}. The length is the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int total_degree() const { return degree_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// All monomials in `nvars` variables of total degree exactly `d`, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Total degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
 public:
  explicit Degree(int d) : value_(d) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  int value() const { return *value_; }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return !a.is_minus_infinity() <=> !b.is_minus_infinity();
    return a.value() <=> b.value();
  }

 private:
  Degree() = default;
  std::optional<int> value_;
};

/// Order of vanishing at the origin; infinite for zero.
class Order {
 public:
  explicit Order(int k) : value_(k) {}
  static Order infinite() { return Order(); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const { return *value_; }
  /// Membership in I^k.
  bool at_least(int k) const { return is_infinite() || *value_ >= k; }

  friend bool operator==(const Order&, const Order&) = default;
  friend std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return a.value() <=> b.value();
  }
  Order operator+(const Order& other) const {
    if (is_infinite() || other.is_infinite()) return infinite();
    return Order(value() + other.value());
  }

 private:
  Order() = default;
  std::optional<int> value_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are stored in descending grevlex order with no zero coefficients, so two equal
/// polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  /// Combines like terms and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Degree degree() const;
  Order vanishing_order() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial homogeneous_part(int d) const;
  /// Drops every term of total degree greater than `max_degree`.
  Polynomial truncated(int max_degree) const;
  Polynomial derivative(std::size_t var) const;
  /// Substitutes subs[i] for x_i; all substitutes share one ambient ring.
  Polynomial compose(const std::vector<Polynomial>& subs) const;
  /// Multiplies every term by the monomial m.
  Polynomial shifted(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering, e.g. `3*x^2*y + (-1/2)*y`; the zero polynomial renders as `0`.
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void check_same_ring(const Polynomial& other) const;
  Polynomial& add_scaled(const Polynomial& other, const Rational& c);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial homogeneous_part(const Polynomial& p, int d);
Order vanishing_order(const Polynomial& p);

/// Renders a single coefficient the way the expression grammar reads it back:
/// `3`, `(-3)`, `(1/2)`, `(-1/2)`.
std::string render_coefficient(const Rational& c);

/// Renders `coeff*x^a*y^b` with the coefficient omitted when it is one and the monomial is
/// not constant.
std::string render_term(const Rational& coeff, const Monomial& m,
                        const std::vector<std::string>& vars);

/// Default variable names: x, y, z for n <= 3, otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace levifol
