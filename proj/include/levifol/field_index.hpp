#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "levifol/linalg.hpp"
#include "levifol/vecfield.hpp"

namespace levifol {

/// Coordinates on the finite-dimensional space of vector fields whose terms have degree in
/// [lo, hi]. Coordinates are ordered by ascending degree, then descending grevlex monomial,
/// then component, so the first nonzero coordinate of a field is one of its lowest-degree
/// terms.
class FieldIndex {
 public:
  FieldIndex(std::size_t nvars, int lo, int hi);

  std::size_t nvars() const { return nvars_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t size() const { return size_; }

  std::size_t index(const Monomial& m, std::size_t component) const;
  /// Degree of the term at coordinate `idx`.
  int degree_of(std::size_t idx) const;
  /// First coordinate of degree d and one past the last one.
  std::pair<std::size_t, std::size_t> degree_range(int d) const;

  /// Terms outside [lo, hi] are dropped.
  SparseVec to_sparse(const PolyVectorField& x) const;
  Vec to_dense(const PolyVectorField& x) const;
  PolyVectorField to_field(const SparseVec& v) const;
  PolyVectorField to_field(const Vec& v) const;

 private:
  std::size_t nvars_;
  int lo_, hi_;
  std::size_t size_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Monomial>> monomials_;
  std::vector<std::map<std::vector<int>, std::size_t>> ranks_;
};

/// Coordinates on the span of an arbitrary finite set of fields: one coordinate per
/// (component, monomial) pair that occurs in any registered field.
class SupportIndex {
 public:
  explicit SupportIndex(std::size_t nvars) : nvars_(nvars) {}
  void add(const PolyVectorField& x);
  std::size_t size() const { return keys_.size(); }
  Vec to_dense(const PolyVectorField& x) const;

 private:
  std::size_t nvars_;
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> keys_;
};

/// Coefficients a with target = sum_i a_i fields[i], choosing free variables as zero; nullopt
/// when the target is outside the span.
std::optional<Vec> express_in_span(const std::vector<PolyVectorField>& fields,
                                   const PolyVectorField& target);

/// Echelon basis of span(fields), rendered back as fields.
std::vector<PolyVectorField> span_basis(const std::vector<PolyVectorField>& fields);
std::size_t span_rank(const std::vector<PolyVectorField>& fields);

}  // namespace levifol
