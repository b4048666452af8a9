#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "levifol/rational.hpp"

namespace levifol {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Vec operator*(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place; pivots are the first nonzero column of each row.
/// Returns the pivot columns in increasing order. Zero rows are moved to the bottom.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, one vector per free column with that free variable set to 1.
std::vector<Vec> nullspace(const Matrix& m);

/// Solution of m x = b with every free variable set to zero, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
void axpy(Vec& y, const Rational& a, const Vec& x);
Vec unit_vector(std::size_t n, std::size_t i);

/// Subspace of Q^n stored as its canonical reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return levifol::is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the echelon basis, or nullopt when v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Quotient U / W of nested subspaces, with a fixed complement of W in U as its basis.
///
/// The complement is the echelon basis of the W-reduced vectors of U, so the choice is
/// deterministic and `lift` is a linear section of `project`.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const Subspace& total, const Subspace& sub);

  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient_dim() const { return sub_.ambient_dim(); }
  const Subspace& sub() const { return sub_; }
  const std::vector<Vec>& complement() const { return complement_; }

  /// Coordinates of the class of v (v must lie in the total space).
  Vec project(const Vec& v) const;
  /// Representative in the complement of the class with coordinates q.
  Vec lift(const Vec& q) const;

 private:
  Subspace sub_;
  std::vector<Vec> complement_;
  std::vector<std::size_t> complement_pivots_;
};

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t leading_index() const { return entries_.front().first; }
  const Rational& leading_coeff() const { return entries_.front().second; }
  Rational at(std::size_t idx) const;

  /// this += c * other
  void axpy(const Rational& c, const SparseVec& other);
  void scale(const Rational& c);

 private:
  std::vector<Entry> entries_;
};

}  // namespace levifol
