#include "levifol/jets.hpp"

#include "levifol/errors.hpp"

namespace levifol {

JetSpace::JetSpace(std::size_t nvars, std::vector<PolyVectorField> generators, int order)
    : order_(order), index_(nvars, 1, order), gens_(std::move(generators)) {
  if (order < 1) throw PreconditionError("jet order must be at least 1");
  const std::size_t r = gens_.size();
  for (const auto& g : gens_) {
    if (g.nvars() != nvars) throw DimensionError("generator on a space of different dimension");
    if (!g.vanishes_at_origin()) throw PreconditionError("generator does not vanish at the origin");
  }
  for (int m = 0; m < order; ++m) {
    for (const auto& mono : monomials_of_degree(nvars, m)) {
      for (std::size_t j = 0; j < r; ++j) {
        SparseVec v = index_.to_sparse(gens_[j].shifted(mono));
        Vec constants(r);
        if (m == 0) constants[j] = 1;
        SparseVec combination({{products_.size(), Rational(1)}});
        products_.emplace_back(mono, j);
        Reduced red = reduce(std::move(v));
        for (const auto& [row, mult] : red.used) {
          axpy(constants, -mult, rows_[row].constants);
          combination.axpy(-mult, rows_[row].combination);
        }
        if (red.remainder.is_zero()) {
          if (!levifol::is_zero(constants)) kernel_constants_.push_back(std::move(constants));
          continue;
        }
        std::size_t pivot = red.remainder.leading_index();
        pivot_row_.emplace(pivot, rows_.size());
        rows_.push_back({std::move(red.remainder), std::move(combination), std::move(constants),
                         index_.degree_of(pivot)});
      }
    }
  }
}

JetSpace::Reduced JetSpace::reduce(SparseVec v) const {
  Reduced out;
  std::size_t cursor = 0;
  while (true) {
    const auto& entries = v.entries();
    std::optional<std::pair<std::size_t, std::size_t>> hit;  // entry index, row
    for (const auto& [idx, c] : entries) {
      if (idx < cursor) continue;
      auto it = pivot_row_.find(idx);
      if (it != pivot_row_.end()) {
        hit = {idx, it->second};
        break;
      }
    }
    if (!hit) break;
    const Row& row = rows_[hit->second];
    Rational mult = v.at(hit->first) / row.vec.leading_coeff();
    v.axpy(-mult, row.vec);
    out.used.emplace_back(hit->second, mult);
    cursor = hit->first + 1;
  }
  out.remainder = std::move(v);
  return out;
}

JetSpace::Element JetSpace::combine(const std::vector<std::pair<std::size_t, Rational>>& used) const {
  SparseVec acc, combination;
  Vec constants(gens_.size());
  for (const auto& [row, mult] : used) {
    acc.axpy(mult, rows_[row].vec);
    combination.axpy(mult, rows_[row].combination);
    axpy(constants, mult, rows_[row].constants);
  }
  std::vector<std::vector<Term>> terms(gens_.size());
  for (const auto& [k, c] : combination.entries()) terms[products_[k].second].push_back({products_[k].first, c});
  std::vector<Polynomial> coefficients;
  for (auto& t : terms) coefficients.emplace_back(nvars(), std::move(t));
  return {index_.to_field(acc), std::move(coefficients), std::move(constants)};
}

std::size_t JetSpace::initial_dimension(int d) const {
  std::size_t n = 0;
  for (const auto& row : rows_)
    if (row.pivot_degree == d) ++n;
  return n;
}

std::size_t JetSpace::order_dimension(int d) const {
  std::size_t n = 0;
  for (const auto& row : rows_)
    if (row.pivot_degree >= d) ++n;
  return n;
}

std::vector<PolyVectorField> JetSpace::initial_forms(int d) const {
  auto [lo, hi] = index_.degree_range(d);
  std::vector<Vec> block;
  for (const auto& row : rows_) {
    if (row.pivot_degree != d) continue;
    Vec b(hi - lo);
    for (const auto& [idx, c] : row.vec.entries())
      if (idx >= lo && idx < hi) b[idx - lo] = c;
    block.push_back(std::move(b));
  }
  Subspace s(hi - lo, block);
  std::vector<PolyVectorField> out;
  for (const auto& b : s.basis()) {
    Vec full(index_.size());
    for (std::size_t k = 0; k < b.size(); ++k) full[lo + k] = b[k];
    out.push_back(index_.to_field(full));
  }
  return out;
}

PolyVectorField JetSpace::remainder(const PolyVectorField& x) const {
  if (x.nvars() != nvars()) throw DimensionError("field on a space of different dimension");
  Reduced red = reduce(index_.to_sparse(x));
  return index_.to_field(red.remainder) + x.homogeneous_part(0);
}

std::optional<JetSpace::Element> JetSpace::express(const PolyVectorField& x) const {
  if (x.nvars() != nvars()) throw DimensionError("field on a space of different dimension");
  if (!x.vanishes_at_origin()) return std::nullopt;
  Reduced red = reduce(index_.to_sparse(x));
  if (!red.remainder.is_zero()) return std::nullopt;
  return combine(red.used);
}

std::optional<JetSpace::Element> JetSpace::lift_initial_form(const PolyVectorField& w, int d) const {
  if (w.nvars() != nvars()) throw DimensionError("field on a space of different dimension");
  if (!w.is_homogeneous(d)) throw PreconditionError("initial form must be homogeneous");
  if (d < 1 || d > order_) throw PreconditionError("initial form degree outside the jet range");
  std::size_t hi = index_.degree_range(d).second;
  SparseVec v = index_.to_sparse(w);
  std::vector<std::pair<std::size_t, Rational>> used;
  while (!v.is_zero() && v.leading_index() < hi) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end() || rows_[it->second].pivot_degree != d) return std::nullopt;
    const Row& row = rows_[it->second];
    Rational mult = v.leading_coeff() / row.vec.leading_coeff();
    v.axpy(-mult, row.vec);
    used.emplace_back(it->second, mult);
  }
  return combine(used);
}

std::vector<Vec> JetSpace::constants_of_order_at_least(int i) const {
  std::vector<Vec> out = kernel_constants_;
  for (const auto& row : rows_)
    if (row.pivot_degree >= i) out.push_back(row.constants);
  return out;
}

}  // namespace levifol
