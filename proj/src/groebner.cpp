#include "levifol/groebner.hpp"

#include <algorithm>
#include <set>

#include "levifol/errors.hpp"

namespace levifol {

std::optional<LeadingTerm> leading_term(const PolyVectorField& x) {
  for (std::size_t i = 0; i < x.nvars(); ++i)
    if (!x[i].is_zero()) return LeadingTerm{i, x[i].leading_term().mono, x[i].leading_term().coeff};
  return std::nullopt;
}

namespace {

PolyVectorField single_term(const LeadingTerm& t, std::size_t nvars) {
  (void)nvars;
  return PolyVectorField::monomial(t.mono, t.position, t.coeff);
}

void sub_scaled(std::vector<Polynomial>& acc, const std::vector<Polynomial>& other,
                const Polynomial& factor) {
  for (std::size_t j = 0; j < acc.size(); ++j)
    if (!other[j].is_zero()) acc[j] -= factor * other[j];
}

}  // namespace

GroebnerBasis::Reduction GroebnerBasis::reduce(const PolyVectorField& x,
                                               const std::vector<PolyVectorField>& basis,
                                               std::optional<std::size_t> skip) const {
  Reduction out{std::vector<Polynomial>(basis.size(), Polynomial(nvars_)), PolyVectorField(nvars_)};
  PolyVectorField p = x;
  while (auto lt = leading_term(p)) {
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (skip && *skip == k) continue;
      const auto& lk = leads_[k];
      if (lk.position != lt->position || !lk.mono.divides(lt->mono)) continue;
      Monomial m = lk.mono.quotient_of(lt->mono);
      Rational c = lt->coeff / lk.coeff;
      p -= basis[k].shifted(m) * c;
      out.quotients[k] += Polynomial::monomial(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      PolyVectorField head = single_term(*lt, nvars_);
      out.remainder += head;
      p -= head;
    }
  }
  return out;
}

std::vector<Polynomial> GroebnerBasis::to_generator_coefficients(
    const std::vector<Polynomial>& quotients,
    const std::vector<std::vector<Polynomial>>& lifts) const {
  std::vector<Polynomial> coeffs(gens_.size(), Polynomial(nvars_));
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    if (quotients[k].is_zero()) continue;
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (!lifts[k][j].is_zero()) coeffs[j] += quotients[k] * lifts[k][j];
  }
  return coeffs;
}

GroebnerBasis::GroebnerBasis(std::size_t nvars, std::vector<PolyVectorField> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.nvars() != nvars_) throw DimensionError("generator on a space of different dimension");
  const std::size_t r = gens_.size();

  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](PolyVectorField h, std::vector<Polynomial> lift) {
    auto lt = *leading_term(h);
    Rational inv = 1 / lt.coeff;
    h *= inv;
    for (auto& c : lift) c *= inv;
    lt.coeff = 1;
    std::size_t t = basis_.size();
    for (std::size_t i = 0; i < t; ++i)
      if (leads_[i].position == lt.position) pending.insert({i, t});
    basis_.push_back(std::move(h));
    leads_.push_back(std::move(lt));
    lifts_.push_back(std::move(lift));
  };
  auto reduce_and_add = [&](const PolyVectorField& h, std::vector<Polynomial> lift) {
    Reduction red = reduce(h, basis_);
    if (red.remainder.is_zero()) return;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!red.quotients[k].is_zero()) sub_scaled(lift, lifts_[k], red.quotients[k]);
    add(std::move(red.remainder), std::move(lift));
  };

  for (std::size_t j = 0; j < r; ++j) {
    if (gens_[j].is_zero()) continue;
    std::vector<Polynomial> lift(r, Polynomial(nvars_));
    lift[j] = Polynomial::constant(nvars_, 1);
    reduce_and_add(gens_[j], std::move(lift));
  }

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm degree first.
    auto best = pending.begin();
    int best_deg = -1;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      int d = leads_[it->first].mono.lcm(leads_[it->second].mono).total_degree();
      if (best_deg < 0 || d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    Monomial l = leads_[i].mono.lcm(leads_[j].mono);
    bool chain = false;
    for (std::size_t k = 0; k < basis_.size() && !chain; ++k) {
      if (k == i || k == j || leads_[k].position != leads_[i].position) continue;
      if (!leads_[k].mono.divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;

    Monomial mi = leads_[i].mono.quotient_of(l);
    Monomial mj = leads_[j].mono.quotient_of(l);
    PolyVectorField s = basis_[i].shifted(mi) - basis_[j].shifted(mj);
    std::vector<Polynomial> lift(r, Polynomial(nvars_));
    for (std::size_t g = 0; g < r; ++g)
      lift[g] = lifts_[i][g].shifted(mi) - lifts_[j][g].shifted(mj);
    reduce_and_add(s, std::move(lift));
  }

  // Minimalize: drop elements whose leading term is divisible by another kept one.
  std::vector<bool> keep(basis_.size(), true);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t l = 0; l < basis_.size(); ++l) {
      if (l == k || !keep[l] || leads_[l].position != leads_[k].position) continue;
      if (!leads_[l].mono.divides(leads_[k].mono)) continue;
      if (leads_[l].mono == leads_[k].mono && l > k) continue;
      keep[k] = false;
      break;
    }
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (keep[k]) order.push_back(k);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (leads_[a].position != leads_[b].position) return leads_[a].position < leads_[b].position;
    return GrevlexGreater{}(leads_[b].mono, leads_[a].mono);
  });
  std::vector<PolyVectorField> basis;
  std::vector<LeadingTerm> leads;
  std::vector<std::vector<Polynomial>> lifts;
  for (auto k : order) {
    basis.push_back(std::move(basis_[k]));
    leads.push_back(std::move(leads_[k]));
    lifts.push_back(std::move(lifts_[k]));
  }
  basis_ = std::move(basis);
  leads_ = std::move(leads);
  lifts_ = std::move(lifts);

  // Interreduce the tails.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    PolyVectorField head = single_term(leads_[k], nvars_);
    Reduction red = reduce(basis_[k] - head, basis_, k);
    for (std::size_t m = 0; m < basis_.size(); ++m)
      if (!red.quotients[m].is_zero()) sub_scaled(lifts_[k], lifts_[m], red.quotients[m]);
    basis_[k] = head + red.remainder;
  }
}

GroebnerBasis::Division GroebnerBasis::divide(const PolyVectorField& x) const {
  if (x.nvars() != nvars_) throw DimensionError("field on a space of different dimension");
  Reduction red = reduce(x, basis_);
  return {to_generator_coefficients(red.quotients, lifts_), std::move(red.remainder)};
}

PolyVectorField GroebnerBasis::normal_form(const PolyVectorField& x) const {
  if (x.nvars() != nvars_) throw DimensionError("field on a space of different dimension");
  return reduce(x, basis_).remainder;
}

}  // namespace levifol
