#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "levifol/field_index.hpp"
#include "levifol/vecfield.hpp"

namespace levifol {

/// The image of a polynomial module F = <g_1, ..., g_r> in the fields truncated at order T,
/// i.e. F modulo I^{T+1} X.
///
/// The space is spanned by the truncations of m * g_j over monomials m of degree at most
/// T - 1 (higher multiples vanish because every generator vanishes at the origin). Each
/// stored row remembers the constant terms of the coefficients c_j that produced it; for a
/// combination sum_j c_j g_j those constants determine its class in F / I F.
class JetSpace {
 public:
  JetSpace(std::size_t nvars, std::vector<PolyVectorField> generators, int order);

  int order() const { return order_; }
  std::size_t nvars() const { return index_.nvars(); }
  std::size_t num_generators() const { return gens_.size(); }
  const FieldIndex& index() const { return index_; }

  /// dim of F modulo I^{T+1}.
  std::size_t dimension() const { return rows_.size(); }
  /// dim of the degree-d initial forms of F, for 1 <= d <= T.
  std::size_t initial_dimension(int d) const;
  /// Echelon basis of the degree-d initial forms, as homogeneous fields.
  std::vector<PolyVectorField> initial_forms(int d) const;
  /// dim of (F intersect I^d) modulo I^{T+1}.
  std::size_t order_dimension(int d) const;

  /// An element sum_j c_j g_j of F: `field` is its truncation at order T, `coefficients` are
  /// the exact c_j and `constants` their values at the origin.
  struct Element {
    PolyVectorField field;
    std::vector<Polynomial> coefficients;
    Vec constants;
  };

  /// x modulo F + I^{T+1}: zero iff the truncation of x lies in the truncation of F.
  PolyVectorField remainder(const PolyVectorField& x) const;
  bool contains(const PolyVectorField& x) const { return remainder(x).is_zero(); }
  /// A truncated element of F agreeing with x up to order T, if one exists.
  std::optional<Element> express(const PolyVectorField& x) const;
  /// An element of F whose lowest-order part is the homogeneous degree-d field w, if w is an
  /// initial form of F.
  std::optional<Element> lift_initial_form(const PolyVectorField& w, int d) const;

  /// Constant-term vectors of combinations lying in I^i, for 1 <= i <= T + 1. Together with
  /// the generator classes these span the i-th term of the isotropy filtration.
  std::vector<Vec> constants_of_order_at_least(int i) const;

 private:
  struct Row {
    SparseVec vec;
    SparseVec combination;  // over the spanning products m * g_j
    Vec constants;
    int pivot_degree;
  };
  struct Reduced {
    SparseVec remainder;
    std::vector<std::pair<std::size_t, Rational>> used;  // row, multiplier
  };
  Reduced reduce(SparseVec v) const;
  Element combine(const std::vector<std::pair<std::size_t, Rational>>& used) const;

  int order_;
  FieldIndex index_;
  std::vector<PolyVectorField> gens_;
  std::vector<std::pair<Monomial, std::size_t>> products_;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
  std::vector<Vec> kernel_constants_;
};

}  // namespace levifol
