#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "levifol/vecfield.hpp"

namespace levifol {

/// Leading term of a nonzero field in the position-over-term order: the smallest component
/// index with a nonzero entry, then that component's grevlex-leading monomial.
struct LeadingTerm {
  std::size_t position;
  Monomial mono;
  Rational coeff;
};

std::optional<LeadingTerm> leading_term(const PolyVectorField& x);

/// Reduced Groebner basis of the polynomial submodule generated by a list of fields, with
/// every basis element expressed in the original generators.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, std::vector<PolyVectorField> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<PolyVectorField>& generators() const { return gens_; }
  const std::vector<PolyVectorField>& elements() const { return basis_; }
  /// elements()[k] = sum_j lifts()[k][j] * generators()[j].
  const std::vector<std::vector<Polynomial>>& lifts() const { return lifts_; }

  struct Division {
    /// Coefficients on the original generators.
    std::vector<Polynomial> coefficients;
    PolyVectorField remainder;
  };

  /// x = sum_j coefficients[j] * generators[j] + remainder, with no term of the remainder
  /// divisible by a leading term of the basis.
  Division divide(const PolyVectorField& x) const;
  PolyVectorField normal_form(const PolyVectorField& x) const;
  bool contains(const PolyVectorField& x) const { return normal_form(x).is_zero(); }

 private:
  struct Reduction {
    std::vector<Polynomial> quotients;  // on basis elements
    PolyVectorField remainder;
  };
  Reduction reduce(const PolyVectorField& x, const std::vector<PolyVectorField>& basis,
                   std::optional<std::size_t> skip = std::nullopt) const;
  std::vector<Polynomial> to_generator_coefficients(
      const std::vector<Polynomial>& quotients,
      const std::vector<std::vector<Polynomial>>& lifts) const;

  std::size_t nvars_ = 0;
  std::vector<PolyVectorField> gens_;
  std::vector<PolyVectorField> basis_;
  std::vector<LeadingTerm> leads_;
  std::vector<std::vector<Polynomial>> lifts_;
};

}  // namespace levifol
