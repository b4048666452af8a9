#include "levifol/linalg.hpp"

#include <algorithm>

#include "levifol/errors.hpp"

namespace levifol {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return levifol::is_zero(data_); }

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Rational& c, Matrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && sgn(m(sel, c)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(prow, j));
    Rational inv = 1 / m(prow, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(prow, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(prow, j)) != 0) m(r, j) -= f * m(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (x.size() != y.size()) throw DimensionError("vector size mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning)
    : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Matrix m = Matrix::from_rows(spanning, ambient_dim);
  pivots_ = rref(m);
  for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(m.row(i));
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return Subspace(n, b);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) != 0) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspaces of different spaces");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspaces of different spaces");
  if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0.
  std::vector<Vec> cols = basis_;
  for (const auto& w : other.basis_) cols.push_back(scale(w, -1));
  Matrix m = Matrix::from_columns(cols, ambient_);
  std::vector<Vec> out;
  for (const auto& k : nullspace(m)) {
    Vec v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, k[i], basis_[i]);
    out.push_back(std::move(v));
  }
  return Subspace(ambient_, out);
}

QuotientSpace::QuotientSpace(const Subspace& total, const Subspace& sub) : sub_(sub) {
  if (!total.contains(sub)) throw InvariantViolation("quotient by a subspace that is not contained");
  std::vector<Vec> rem;
  for (const auto& v : total.basis()) {
    Vec r = sub.reduce(v);
    if (!levifol::is_zero(r)) rem.push_back(std::move(r));
  }
  Subspace comp(total.ambient_dim(), rem);
  complement_ = comp.basis();
  complement_pivots_ = comp.pivots();
}

Vec QuotientSpace::project(const Vec& v) const {
  Vec r = sub_.reduce(v);
  Vec q(complement_.size());
  for (std::size_t i = 0; i < complement_.size(); ++i) {
    q[i] = r[complement_pivots_[i]];
    if (sgn(q[i]) != 0) axpy(r, -q[i], complement_[i]);
  }
  if (!levifol::is_zero(r)) throw InvariantViolation("projected vector is outside the quotient's total space");
  return q;
}

Vec QuotientSpace::lift(const Vec& q) const {
  if (q.size() != complement_.size()) throw DimensionError("quotient coordinate size mismatch");
  Vec v(ambient_dim());
  for (std::size_t i = 0; i < complement_.size(); ++i) axpy(v, q[i], complement_[i]);
  return v;
}

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
      if (sgn(entries_.back().second) == 0) entries_.pop_back();
    } else if (sgn(e.second) != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

Rational SparseVec::at(std::size_t idx) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) return it->second;
  return 0;
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (sgn(c) == 0 || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (sgn(s) != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
  if (sgn(c) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

}  // namespace levifol
