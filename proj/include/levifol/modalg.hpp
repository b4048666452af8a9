#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "levifol/groebner.hpp"
#include "levifol/jets.hpp"
#include "levifol/vecfield.hpp"

namespace levifol {

/// A finitely generated module of polynomial vector fields vanishing at the origin, read as a
/// singular foliation germ at 0.
///
/// The Groebner basis and the truncated jet spaces are computed on first use and cached; the
/// cache is shared between copies and safe to fill from several threads.
class FoliationModule {
 public:
  /// Throws PreconditionError for an empty list or a generator with a nonzero constant term,
  /// DimensionError for mismatched ambient dimensions.
  explicit FoliationModule(std::vector<PolyVectorField> generators);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<PolyVectorField>& generators() const { return gens_; }
  const PolyVectorField& operator[](std::size_t j) const { return gens_[j]; }
  int max_generator_degree() const;

  const GroebnerBasis& groebner() const;
  std::shared_ptr<const JetSpace> jets(int order) const;

 private:
  struct Cache;
  std::size_t nvars_ = 0;
  std::vector<PolyVectorField> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Outcome of a membership test. When `member` is true, x = sum_j coefficients[j] * g_j holds
/// exactly; otherwise `remainder` is the nonzero normal form of x and
/// x = sum_j coefficients[j] * g_j + remainder. Both identities are checked on construction.
struct MembershipCertificate {
  bool member = false;
  std::vector<Polynomial> coefficients;
  PolyVectorField remainder;
};

MembershipCertificate membership(const PolyVectorField& x, const FoliationModule& f);

/// Checks sum_j coefficients[j] * g_j + remainder == x.
bool verify_certificate(const MembershipCertificate& cert, const PolyVectorField& x,
                        const FoliationModule& f);

/// I^k F, generated by m * g_j over monomials m of degree k.
FoliationModule multiply_by_ideal_power(const FoliationModule& f, int k);

struct InvolutivityWitness {
  std::size_t i, j;  // zero-based generator indices
  PolyVectorField bracket;
  MembershipCertificate certificate;
};

struct InvolutivityResult {
  bool involutive = false;
  /// One certificate per pair i < j when involutive, in lexicographic pair order.
  std::vector<MembershipCertificate> certificates;
  std::optional<InvolutivityWitness> witness;
};

/// Tests [g_i, g_j] in F for every pair i < j; stops at the first failing pair.
InvolutivityResult check_involutive(const FoliationModule& f);

struct GradedTruncation {
  /// Echelon basis of the homogeneous degree-d parts of elements of F, i.e. the span of
  /// homogeneous_part(x, d) over x in F.
  std::vector<PolyVectorField> truncation;
  /// Echelon basis of the degree-d initial forms: lowest-order parts of elements of
  /// F intersect I^d.
  std::vector<PolyVectorField> initial;
};

GradedTruncation graded_truncation_basis(const FoliationModule& f, int d);

/// Equality of submodules by mutual membership of generators.
bool same_module(const FoliationModule& a, const FoliationModule& b);

/// Homogeneous generators of F, for F preserved by the Euler field (each [E, g_j] in F).
/// Returns a minimal set of homogeneous fields with leading coefficient one, in increasing
/// degree, that generates the same module. Equality is checked exactly with Groebner bases
/// and again on jets up to `check_degree` (0 selects max generator degree + 2). Throws
/// PreconditionError naming the first generator whose bracket with E leaves F.
FoliationModule homogeneous_generators(const FoliationModule& f, int check_degree = 0);

/// Independent membership test by dense linear algebra: looks for coefficients c_j of degree
/// at most `coefficient_degree` with x = sum_j c_j g_j. A negative answer only rules out
/// certificates of that degree.
std::optional<std::vector<Polynomial>> bounded_membership(const PolyVectorField& x,
                                                          const FoliationModule& f,
                                                          int coefficient_degree);

}  // namespace levifol
