#pragma once

#include <cstddef>
#include <vector>

#include "levifol/holonomy.hpp"

namespace levifol {

/// A vector field known modulo terms of degree above `order`; stored already truncated.
class JetField {
 public:
  JetField() = default;
  JetField(const PolyVectorField& field, int order);

  const PolyVectorField& field() const { return field_; }
  int order() const { return order_; }
  std::size_t nvars() const { return field_.nvars(); }

  JetField& operator+=(const JetField& other);
  JetField& operator-=(const JetField& other);
  friend JetField operator+(JetField a, const JetField& b) { return a += b; }
  friend JetField operator-(JetField a, const JetField& b) { return a -= b; }
  friend JetField operator*(const Rational& c, const JetField& a) { return JetField(a.field_ * c, a.order_); }
  friend bool operator==(const JetField&, const JetField&) = default;

 private:
  PolyVectorField field_;
  int order_ = 0;
};

/// Bracket of two jets vanishing at the origin; exact through the smaller order.
JetField bracket(const JetField& x, const JetField& y);

/// One pass of the correction loop, as recorded by improve_step.
struct ImproveRecord {
  int degree;
  /// dim of the degree-k fields modulo the degree-k initial forms of F.
  std::size_t quotient_dim;
  /// Number of basis elements whose linearity defect had a nonzero class.
  std::size_t defect_classes;
  bool euler_changed;
  bool images_changed;
};

/// A section s of g^s into jets of F together with an Euler-like field E, with
/// [s(a), E] and [s(a), s(b)] - s([a, b]) vanishing to order `certified_order`.
struct LeviConnection {
  LieAlgebra semisimple;
  std::vector<JetField> images;
  JetField euler;
  int certified_order = 0;
  /// images[a] = sum_j coefficients[a][j] * g_j modulo terms of degree > truncation order.
  /// Empty for connections read from outside, whose membership is then checked on jets.
  std::vector<std::vector<Polynomial>> coefficients;
  /// Class of images[a] in the isotropy algebra g = F / I F (empty when coefficients are).
  std::vector<Vec> classes;
  std::vector<ImproveRecord> history;

  int truncation_order() const { return euler.order(); }
  std::size_t nvars() const { return euler.nvars(); }
};

/// Degree-d parts of the defects, for degrees 1..order.
JetField linearity_defect(const LeviConnection& conn, std::size_t a);
JetField curvature(const LeviConnection& conn, std::size_t a, std::size_t b);

/// s built from a homomorphic section of g^lin -> g^s and representatives in F; E the exact
/// Euler field. Both are truncated at `order` (>= 2). Linearity and flatness modulo I^2 are
/// verified.
LeviConnection initial_connection(const IsotropyData& iso, int order);
LeviConnection initial_connection(const FoliationModule& f, int order);

/// From (Lin^k, Flat^k) to (Lin^{k+1}, Flat^{k+1}) for 2 <= k < truncation order. Throws
/// PreconditionError if the connection is not certified at order k and InvariantViolation
/// (with the degree in the message) if a step that cannot fail for valid input does.
LeviConnection improve_step(const LeviConnection& conn, const IsotropyData& iso);

/// initial_connection followed by improve_step up to `order`.
LeviConnection linearize(const IsotropyData& iso, int order);
LeviConnection linearize(const FoliationModule& f, int order);

struct DefectRow {
  int degree;
  /// dim of the span of the degree-d parts of [s(a), E] over basis elements a.
  std::size_t linearity;
  /// dim of the span of the degree-d parts of the curvature over basis pairs.
  std::size_t flatness;
};

struct ConnectionReport {
  /// One row per degree 1..checked_through.
  std::vector<DefectRow> rows;
  int checked_through = 0;
  /// Every image lies in F modulo terms above the truncation order.
  bool images_in_module = false;
  bool images_vanish = false;
  /// Linear part of E is the Euler field.
  bool euler_like = false;
  /// First degree with a nonzero defect row, or checked_through + 1.
  int certified_order = 0;
};

/// Exact defect dimensions for every degree up to min(max_degree, truncation order).
ConnectionReport verify_connection(const LeviConnection& conn, const FoliationModule& f, int max_degree);

/// The g^s -> g map a -> class of s(a). A homomorphic section of g -> g^s once the
/// connection is flat to an order where the holonomy filtration has vanished.
Matrix holonomy_section(const LeviConnection& conn, const IsotropyData& iso);
bool section_is_homomorphic(const LeviConnection& conn, const IsotropyData& iso);

struct RadicalDegree {
  int degree;
  std::size_t module_dim;     // degree-d initial forms of F
  std::size_t section_dim;    // degree-d initial forms of span(s)
  std::size_t radical_dim;    // degree-d initial forms of R
};

struct RadicalFoliation {
  /// Generators of R, truncated at the order: g_j - s(class of g_j in g^s) and x_i * s(a),
  /// with those already generated by earlier ones dropped.
  std::vector<PolyVectorField> generators;
  std::vector<RadicalDegree> degrees;
  int order = 0;
  /// span(s) + R is the truncation of F and the two meet in zero.
  bool direct_sum = false;
  /// [s(a), R] lies in R up to the order.
  bool invariant = false;
  /// The connection was certified below the requested order.
  bool degraded = false;
};

/// The kernel R of F -> g^s and its complement s(g^s), checked degree by degree up to `order`.
/// Throws InvariantViolation when the decomposition fails.
RadicalFoliation radical_foliation(const IsotropyData& iso, const LeviConnection& conn, int order);

/// The module generated by linear fields closed under the bracket together with an invariant
/// module R meeting their span trivially. Throws PreconditionError naming the violating pair.
FoliationModule semidirect_product(const std::vector<PolyVectorField>& linear_action,
                                   const std::vector<PolyVectorField>& radical_generators);

}  // namespace levifol
