#include "levifol/field_index.hpp"

#include <algorithm>

#include "levifol/errors.hpp"

namespace levifol {

FieldIndex::FieldIndex(std::size_t nvars, int lo, int hi) : nvars_(nvars), lo_(lo), hi_(hi) {
  if (lo < 0 || hi < lo - 1) throw PreconditionError("invalid degree range for field index");
  for (int d = lo; d <= hi; ++d) {
    offsets_.push_back(size_);
    auto monos = monomials_of_degree(nvars, d);
    std::map<std::vector<int>, std::size_t> rank;
    for (std::size_t r = 0; r < monos.size(); ++r) rank.emplace(monos[r].exponents(), r);
    size_ += monos.size() * nvars;
    monomials_.push_back(std::move(monos));
    ranks_.push_back(std::move(rank));
  }
  offsets_.push_back(size_);
}

std::size_t FieldIndex::index(const Monomial& m, std::size_t component) const {
  int d = m.total_degree();
  if (d < lo_ || d > hi_ || component >= nvars_) throw DimensionError("term outside the field index");
  std::size_t block = static_cast<std::size_t>(d - lo_);
  return offsets_[block] + ranks_[block].at(m.exponents()) * nvars_ + component;
}

int FieldIndex::degree_of(std::size_t idx) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
  return lo_ + static_cast<int>(it - offsets_.begin()) - 1;
}

std::pair<std::size_t, std::size_t> FieldIndex::degree_range(int d) const {
  if (d < lo_ || d > hi_) return {0, 0};
  std::size_t block = static_cast<std::size_t>(d - lo_);
  return {offsets_[block], offsets_[block + 1]};
}

SparseVec FieldIndex::to_sparse(const PolyVectorField& x) const {
  if (x.nvars() != nvars_) throw DimensionError("field dimension does not match index");
  std::vector<SparseVec::Entry> entries;
  for (std::size_t i = 0; i < nvars_; ++i)
    for (const auto& t : x[i].terms()) {
      int d = t.mono.total_degree();
      if (d < lo_ || d > hi_) continue;
      entries.emplace_back(index(t.mono, i), t.coeff);
    }
  return SparseVec(std::move(entries));
}

Vec FieldIndex::to_dense(const PolyVectorField& x) const {
  Vec v(size_);
  SparseVec sparse = to_sparse(x);
  for (const auto& [i, c] : sparse.entries()) v[i] = c;
  return v;
}

PolyVectorField FieldIndex::to_field(const SparseVec& v) const {
  std::vector<std::vector<Term>> comps(nvars_);
  for (const auto& [idx, c] : v.entries()) {
    int d = degree_of(idx);
    std::size_t block = static_cast<std::size_t>(d - lo_);
    std::size_t local = idx - offsets_[block];
    comps[local % nvars_].push_back({monomials_[block][local / nvars_], c});
  }
  std::vector<Polynomial> polys;
  for (auto& terms : comps) polys.emplace_back(nvars_, std::move(terms));
  return PolyVectorField(std::move(polys));
}

PolyVectorField FieldIndex::to_field(const Vec& v) const {
  std::vector<SparseVec::Entry> entries;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) entries.emplace_back(i, v[i]);
  return to_field(SparseVec(std::move(entries)));
}

void SupportIndex::add(const PolyVectorField& x) {
  for (std::size_t i = 0; i < x.nvars(); ++i)
    for (const auto& t : x[i].terms()) keys_.try_emplace({i, t.mono.exponents()}, keys_.size());
}

Vec SupportIndex::to_dense(const PolyVectorField& x) const {
  Vec v(keys_.size());
  for (std::size_t i = 0; i < x.nvars(); ++i)
    for (const auto& t : x[i].terms()) {
      auto it = keys_.find({i, t.mono.exponents()});
      if (it == keys_.end()) throw DimensionError("field term outside the registered support");
      v[it->second] = t.coeff;
    }
  return v;
}

std::optional<Vec> express_in_span(const std::vector<PolyVectorField>& fields,
                                   const PolyVectorField& target) {
  SupportIndex idx(target.nvars());
  for (const auto& f : fields) idx.add(f);
  idx.add(target);
  std::vector<Vec> cols;
  for (const auto& f : fields) cols.push_back(idx.to_dense(f));
  Matrix m = Matrix::from_columns(cols, idx.size());
  return solve(m, idx.to_dense(target));
}

std::vector<PolyVectorField> span_basis(const std::vector<PolyVectorField>& fields) {
  if (fields.empty()) return {};
  std::size_t n = fields.front().nvars();
  int hi = 0;
  for (const auto& f : fields)
    if (!f.is_zero()) hi = std::max(hi, f.degree().value());
  FieldIndex idx(n, 0, hi);
  std::vector<Vec> rows;
  for (const auto& f : fields) rows.push_back(idx.to_dense(f));
  Subspace s(idx.size(), rows);
  std::vector<PolyVectorField> out;
  for (const auto& b : s.basis()) out.push_back(idx.to_field(b));
  return out;
}

std::size_t span_rank(const std::vector<PolyVectorField>& fields) {
  if (fields.empty()) return 0;
  SupportIndex idx(fields.front().nvars());
  for (const auto& f : fields) idx.add(f);
  std::vector<Vec> rows;
  for (const auto& f : fields) rows.push_back(idx.to_dense(f));
  return rank(Matrix::from_rows(rows, idx.size()));
}

}  // namespace levifol
