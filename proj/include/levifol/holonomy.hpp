#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "levifol/errors.hpp"
#include "levifol/liealg.hpp"
#include "levifol/modalg.hpp"

namespace levifol {

/// Raised by isotropy_algebra when some generator bracket leaves the module.
class NotInvolutiveError : public PreconditionError {
 public:
  explicit NotInvolutiveError(InvolutivityWitness witness);
  const InvolutivityWitness& witness() const { return witness_; }

 private:
  InvolutivityWitness witness_;
};

/// The isotropy Lie algebra g = F / I F of a foliation at the origin, with its filtration and
/// its linear and semisimple quotients.
struct IsotropyData {
  FoliationModule module;
  /// I F, whose normal forms decide classes.
  FoliationModule ideal_module;
  LieAlgebra algebra;
  /// One generator per basis class; representative_generators[a] is its index in F.
  std::vector<PolyVectorField> representatives;
  std::vector<std::size_t> representative_generators;
  /// Class of each generator of F in the basis above.
  std::vector<Vec> generator_classes;
  /// Normal forms of the representatives modulo I F; classes are coordinates in their span.
  std::vector<PolyVectorField> representative_normal_forms;
  /// Linear parts of the representatives, as n x n coefficient matrices.
  std::vector<Matrix> linearization;
  /// filtration[i] = g^i for 0 <= i <= filtration_cap + 1.
  int filtration_cap = 0;
  std::vector<Subspace> filtration;
  /// g / g^2.
  QuotientAlgebra lin_quotient;
  Subspace radical;
  /// g / rad(g).
  QuotientAlgebra ss_quotient;

  std::size_t nvars() const { return module.nvars(); }
  std::size_t dim() const { return algebra.dim(); }
  /// Class of an element of F; throws PreconditionError for fields outside F.
  Vec class_of(const PolyVectorField& x) const;
  /// Class of sum_j c_j g_j given the values c_j(0).
  Vec class_of_constants(const Vec& constants) const;
  /// sum_a v_a * representatives[a].
  PolyVectorField representative(const Vec& v) const;
};

/// Default filtration cap: 2 * (max generator degree) + 2.
int default_degree_cap(const FoliationModule& f);

/// Throws NotInvolutiveError for non-involutive input. `filtration_cap` <= 0 selects the
/// default cap. Every IsotropyData invariant is checked before returning.
IsotropyData isotropy_algebra(const FoliationModule& f, int filtration_cap = 0);

struct Filtration {
  /// pieces[i] = g^i for 0 <= i <= cap.
  std::vector<Subspace> pieces;
  /// First i <= cap + 1 with g^i = 0.
  std::optional<int> vanishes_at;
};

/// g^i = image in g of F intersect I^i X, for i = 0..cap.
Filtration holonomy_filtration(const IsotropyData& iso, int cap);
Filtration holonomy_filtration(const FoliationModule& f, int cap);

struct LinearHolonomy {
  /// g^lin = g / g^2.
  LieAlgebra algebra;
  /// Faithful realization: minus the linear part of a lifted representative, which turns the
  /// bracket of linear fields into the matrix commutator.
  std::vector<Matrix> realization;
  /// dim(g^lin) x dim(g).
  Matrix projection;
};

LinearHolonomy linear_holonomy(const IsotropyData& iso);

struct SemisimpleHolonomy {
  LieAlgebra algebra;
  Subspace radical;
  /// dim(g^s) x dim(g).
  Matrix from_isotropy;
  /// dim(g^s) x dim(g^lin); from_linear * (g -> g^lin) = from_isotropy.
  Matrix from_linear;
};

/// Throws InvariantViolation unless g^2 is a nilpotent ideal inside the radical.
SemisimpleHolonomy semisimple_holonomy(const IsotropyData& iso);

struct ArtinReesDegree {
  int degree;
  std::size_t initial_dim;   // dim of the degree-d initial forms of F
  std::size_t product_dim;   // dim of (linear forms) * (degree d-1 initial forms)
};

struct ArtinReesCertificate {
  /// True when some c < N works for every degree up to N.
  bool bounded = false;
  /// Smallest c with in(F)_d = I_1 in(F)_{d-1} for c < d <= N.
  int bound = 1;
  int checked_up_to = 0;
  std::vector<ArtinReesDegree> degrees;
  /// When bound > 1: an element of F vanishing to order `bound` that is not in I F.
  std::optional<PolyVectorField> witness;
  std::vector<Polynomial> witness_coefficients;
  std::optional<MembershipCertificate> witness_certificate;
};

ArtinReesCertificate artin_rees_certify(const FoliationModule& f, int max_degree);

}  // namespace levifol
