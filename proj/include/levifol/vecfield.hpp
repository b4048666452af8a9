#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "levifol/linalg.hpp"
#include "levifol/poly.hpp"

namespace levifol {

/// Polynomial vector field sum_i X_i d/dx_i on affine n-space.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t nvars);
  explicit PolyVectorField(std::vector<Polynomial> components);

  /// The coordinate field d/dx_i.
  static PolyVectorField coordinate(std::size_t nvars, std::size_t i);
  /// The single-term field m * d/dx_i.
  static PolyVectorField monomial(const Monomial& m, std::size_t i, const Rational& c = 1);

  std::size_t nvars() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool is_zero() const;

  Degree degree() const;
  Order vanishing_order() const;
  bool vanishes_at_origin() const { return vanishing_order().at_least(1); }
  bool is_homogeneous(int k) const;

  PolyVectorField homogeneous_part(int d) const;
  PolyVectorField truncated(int max_degree) const;
  /// Multiplies every component by the monomial m.
  PolyVectorField shifted(const Monomial& m) const;

  /// Derivation X(f) = sum_i X_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;

  /// Coefficient matrix of the linear part: entry (i, j) is the x_j-coefficient of X_i.
  Matrix linear_part() const;
  static PolyVectorField from_linear_part(const Matrix& a);

  PolyVectorField operator-() const;
  PolyVectorField& operator+=(const PolyVectorField& other);
  PolyVectorField& operator-=(const PolyVectorField& other);
  PolyVectorField& operator*=(const Rational& c);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(PolyVectorField a, const Rational& c) { return a *= c; }
  friend PolyVectorField operator*(const Rational& c, PolyVectorField a) { return a *= c; }
  friend PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

  /// `x^2*dx + (-1)*y*dy`: one summand per term, ordered by component then term order.
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void check_same_space(const PolyVectorField& other) const;
  std::vector<Polynomial> comps_;
};

/// [X, Y] with component j equal to X(Y_j) - Y(X_j).
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// E = sum_i x_i d/dx_i.
PolyVectorField euler_field(std::size_t nvars);

/// Nonzero homogeneous components in strictly increasing degree.
std::vector<std::pair<int, PolyVectorField>> homogeneous_components(const PolyVectorField& x);

/// P^k(X) = [E, X] - (k-1) X. Scales a degree-m component by (m - k).
PolyVectorField apply_P(const PolyVectorField& x, int k);

/// Inverse of P^k on fields whose components all have degree >= k+1: the degree-m component
/// is scaled by 1/(m - k). Throws PreconditionError naming the first degree <= k present.
PolyVectorField apply_Q(const PolyVectorField& x, int k);

/// Pushforward phi_* X for a polynomial automorphism phi with polynomial inverse:
/// (phi_* X)(q) = Dphi(phi^{-1}(q)) X(phi^{-1}(q)).
PolyVectorField pushforward(const PolyVectorField& x, const std::vector<Polynomial>& phi,
                            const std::vector<Polynomial>& phi_inverse);

}  // namespace levifol
