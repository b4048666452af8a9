#include "levifol/liealg.hpp"

#include <algorithm>
#include <numeric>

#include "levifol/errors.hpp"

namespace levifol {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> structure)
    : dim_(dim), c_(std::move(structure)) {
  if (c_.size() != dim * dim * dim) throw DimensionError("structure constant tensor has the wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (this->structure(i, j, k) != -this->structure(j, i, k))
          throw InputError("structure constants are not antisymmetric");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vec jac = bracket(unit_vector(dim, i), bracket_basis(j, k));
        jac = add(jac, bracket(unit_vector(dim, j), bracket_basis(k, i)));
        jac = add(jac, bracket(unit_vector(dim, k), bracket_basis(i, j)));
        if (!is_zero(jac)) throw InputError("structure constants violate the Jacobi identity");
      }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim)); }

namespace {

Vec flatten_matrix(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

LieAlgebra LieAlgebra::from_matrices(const std::vector<Matrix>& basis) {
  std::size_t d = basis.size();
  if (d == 0) return LieAlgebra(0, {});
  std::size_t len = basis[0].rows() * basis[0].cols();
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(flatten_matrix(b));
  Matrix a = Matrix::from_columns(cols, len);
  if (rank(a) != d) throw PreconditionError("matrices are linearly dependent");
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto x = solve(a, flatten_matrix(commutator(basis[i], basis[j])));
      if (!x) throw PreconditionError("matrix span is not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = (*x)[k];
    }
  return LieAlgebra(d, std::move(c));
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = structure(i, j, k);
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket of vectors of the wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(structure(i, j, k)) != 0) out[k] += xy * structure(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vector(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix killing_form(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> out;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) out.push_back(g.bracket(u, v));
  return Subspace(g.dim(), out);
}

Subspace derived_algebra(const LieAlgebra& g) {
  Subspace all = Subspace::whole(g.dim());
  return bracket_span(g, all, all);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) { return u.contains(bracket_span(g, u, u)); }

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
  return u.contains(bracket_span(g, Subspace::whole(g.dim()), u));
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& u) {
  std::vector<Subspace> out{u};
  while (true) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& u) {
  std::vector<Subspace> out{u};
  while (true) {
    Subspace next = bracket_span(g, u, out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_solvable(const LieAlgebra& g, const Subspace& u) { return derived_series(g, u).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& g, const Subspace& u) {
  return lower_central_series(g, u).back().is_zero();
}

bool is_semisimple(const LieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

Subspace solvable_radical(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Matrix k = killing_form(g);
  std::vector<Vec> rows;
  Subspace derived = derived_algebra(g);
  for (const auto& d : derived.basis()) rows.push_back(k * d);
  Subspace rad(n, nullspace(Matrix::from_rows(rows, n)));
  if (rows.empty()) rad = Subspace::whole(n);
  if (!is_ideal(g, rad)) throw InvariantViolation("computed radical is not an ideal");
  if (!is_solvable(g, rad)) throw InvariantViolation("computed radical is not solvable");
  return rad;
}

QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw PreconditionError("quotient by a subspace that is not an ideal");
  std::size_t n = g.dim();
  QuotientSpace space(Subspace::whole(n), ideal);
  std::size_t q = space.dim();
  const auto& reps = space.complement();
  std::vector<Rational> c(q * q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vec br = space.project(g.bracket(reps[a], reps[b]));
      for (std::size_t k = 0; k < q; ++k) c[(a * q + b) * q + k] = br[k];
    }
  Matrix proj(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec p = space.project(unit_vector(n, i));
    for (std::size_t a = 0; a < q; ++a) proj(a, i) = p[a];
  }
  Matrix lift = Matrix::from_columns(reps, n);
  if (q == 0) lift = Matrix(n, 0);
  return {LieAlgebra(q, std::move(c)), std::move(space), std::move(proj), std::move(lift)};
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& u) {
  if (!is_subalgebra(g, u)) throw PreconditionError("subspace is not closed under the bracket");
  std::size_t d = u.dim();
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec coords = *u.coordinates(g.bracket(u.basis()[i], u.basis()[j]));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = coords[k];
    }
  return LieAlgebra(d, std::move(c));
}

Representation::Representation(LieAlgebra g, std::size_t space_dim, std::vector<Matrix> matrices)
    : g_(std::move(g)), m_(space_dim), rho_(std::move(matrices)) {
  std::size_t n = g_.dim();
  if (rho_.size() != n) throw DimensionError("one action matrix per basis element is required");
  for (const auto& r : rho_)
    if (r.rows() != m_ || r.cols() != m_) throw DimensionError("action matrix has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (action(g_.bracket_basis(i, j)) != commutator(rho_[i], rho_[j]))
        throw InvariantViolation("action does not respect the bracket");
}

Representation Representation::adjoint(const LieAlgebra& g) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < g.dim(); ++i) act.push_back(g.ad(unit_vector(g.dim(), i)));
  return Representation(g, g.dim(), std::move(act));
}

Representation Representation::trivial(const LieAlgebra& g, std::size_t space_dim) {
  return Representation(g, space_dim, std::vector<Matrix>(g.dim(), Matrix(space_dim, space_dim)));
}

Matrix Representation::action(const Vec& x) const {
  Matrix out(m_, m_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out = out + x[i] * rho_[i];
  return out;
}

namespace {

std::size_t power(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t n) {
  std::size_t idx = 0;
  for (auto i : t) idx = idx * n + i;
  return idx;
}

std::vector<std::size_t> tuple_of(std::size_t idx, int p, std::size_t n) {
  std::vector<std::size_t> t(static_cast<std::size_t>(p));
  for (int k = p - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = idx % n;
    idx /= n;
  }
  return t;
}

/// Strictly increasing p-tuples of [0, n), in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(int p, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Cochain Cochain::zero(int degree, std::size_t algebra_dim, std::size_t space_dim) {
  return Cochain{degree, algebra_dim, space_dim,
                 std::vector<Vec>(power(algebra_dim, degree), Vec(space_dim))};
}

bool Cochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Vec& v) { return levifol::is_zero(v); });
}

Cochain ce_differential(const Representation& rho, const Cochain& omega) {
  const LieAlgebra& g = rho.algebra();
  std::size_t n = g.dim(), m = rho.space_dim();
  int p = omega.degree;
  if (p < 0 || p > 2 || omega.algebra_dim != n || omega.space_dim != m ||
      omega.values.size() != power(n, p))
    throw DimensionError("cochain shape does not match the representation");
  Cochain out = Cochain::zero(p + 1, n, m);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    auto t = tuple_of(idx, p + 1, n);
    Vec acc(m);
    for (int i = 0; i <= p; ++i) {
      std::vector<std::size_t> rest;
      for (int s = 0; s <= p; ++s)
        if (s != i) rest.push_back(t[static_cast<std::size_t>(s)]);
      Vec v = rho.action(t[static_cast<std::size_t>(i)]) * omega.values[tuple_index(rest, n)];
      axpy(acc, i % 2 == 0 ? Rational(1) : Rational(-1), v);
    }
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        std::vector<std::size_t> rest;
        for (int s = 0; s <= p; ++s)
          if (s != i && s != j) rest.push_back(t[static_cast<std::size_t>(s)]);
        Rational sign = (i + j) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = g.structure(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], k);
          if (sgn(c) == 0) continue;
          std::vector<std::size_t> args{k};
          args.insert(args.end(), rest.begin(), rest.end());
          axpy(acc, sign * c, omega.values[tuple_index(args, n)]);
        }
      }
    out.values[idx] = std::move(acc);
  }
  return out;
}

Vec flatten_cochain(const Cochain& omega) {
  Vec out;
  for (const auto& t : increasing_tuples(omega.degree, omega.algebra_dim)) {
    const Vec& v = omega.values[tuple_index(t, omega.algebra_dim)];
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Cochain unflatten_cochain(const Vec& v, int degree, std::size_t algebra_dim, std::size_t space_dim) {
  Cochain out = Cochain::zero(degree, algebra_dim, space_dim);
  auto tuples = increasing_tuples(degree, algebra_dim);
  if (v.size() != tuples.size() * space_dim) throw DimensionError("flattened cochain has the wrong length");
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    Vec val(v.begin() + static_cast<std::ptrdiff_t>(r * space_dim),
            v.begin() + static_cast<std::ptrdiff_t>((r + 1) * space_dim));
    // Spread to every permutation with its sign.
    std::vector<std::size_t> perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inversions;
      std::vector<std::size_t> t;
      for (auto q : perm) t.push_back(tuples[r][q]);
      out.values[tuple_index(t, algebra_dim)] = inversions % 2 == 0 ? val : scale(val, -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Matrix ce_differential_matrix(const Representation& rho, int degree) {
  std::size_t n = rho.algebra().dim(), m = rho.space_dim();
  std::size_t src = increasing_tuples(degree, n).size() * m;
  std::size_t dst = increasing_tuples(degree + 1, n).size() * m;
  Matrix d(dst, src);
  for (std::size_t c = 0; c < src; ++c) {
    Vec image = flatten_cochain(ce_differential(rho, unflatten_cochain(unit_vector(src, c), degree, n, m)));
    for (std::size_t r = 0; r < dst; ++r) d(r, c) = image[r];
  }
  return d;
}

CeSolveResult ce_solve(const Representation& rho, int degree, const Cochain& cocycle) {
  std::size_t n = rho.algebra().dim(), m = rho.space_dim();
  if (degree != 1 && degree != 2) throw PreconditionError("ce_solve handles degrees 1 and 2");
  if (cocycle.degree != degree || cocycle.algebra_dim != n || cocycle.space_dim != m ||
      cocycle.values.size() != power(n, degree))
    throw DimensionError("cochain shape does not match the representation");
  if (unflatten_cochain(flatten_cochain(cocycle), degree, n, m) != cocycle)
    throw PreconditionError("cochain is not alternating");
  Matrix lower = ce_differential_matrix(rho, degree - 1);
  Matrix upper = ce_differential_matrix(rho, degree);
  if (!(upper * lower).is_zero()) throw InvariantViolation("Chevalley-Eilenberg differential does not square to zero");
  Vec b = flatten_cochain(cocycle);
  if (!is_zero(upper * b)) throw PreconditionError("cochain is not closed");

  CeSolveResult out;
  auto x = solve(lower, b);
  if (x) {
    out.solved = true;
    out.primitive = unflatten_cochain(*x, degree - 1, n, m);
    if (ce_differential(rho, out.primitive) != cocycle)
      throw InvariantViolation("coboundary solution does not reproduce the cocycle");
    out.residual = Cochain::zero(degree, n, m);
  } else {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < lower.cols(); ++c) cols.push_back(lower.column(c));
    Subspace image(b.size(), cols);
    out.primitive = Cochain::zero(degree - 1, n, m);
    out.residual = unflatten_cochain(image.reduce(b), degree, n, m);
  }
  return out;
}

bool is_homomorphic_section(const LieAlgebra& g, const LieAlgebra& quotient, const Matrix& projection,
                            const Matrix& section) {
  std::size_t q = quotient.dim();
  if (!(projection * section == Matrix::identity(q))) return false;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vec lhs = section * quotient.bracket_basis(a, b);
      Vec rhs = g.bracket(section.column(a), section.column(b));
      if (lhs != rhs) return false;
    }
  return true;
}

LeviData levi_subalgebra(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Subspace rad = solvable_radical(g);
  QuotientAlgebra ss = quotient_algebra(g, rad);
  if (!is_semisimple(ss.algebra)) throw InvariantViolation("quotient by the radical is not semisimple");
  std::size_t q = ss.algebra.dim();
  Matrix section = ss.lift;

  // Correct the section along rad = r^0 > r^1 = [r^0, r^0] > ... so that its curvature
  // lands one step deeper each time.
  auto series = derived_series(g, rad);
  for (std::size_t i = 0; i + 1 < series.size() && q > 0; ++i) {
    QuotientSpace layer(series[i], series[i + 1]);
    std::size_t m = layer.dim();
    std::vector<Matrix> action;
    for (std::size_t a = 0; a < q; ++a) {
      Matrix act(m, m);
      for (std::size_t t = 0; t < m; ++t) {
        Vec img = layer.project(g.bracket(section.column(a), layer.complement()[t]));
        for (std::size_t r = 0; r < m; ++r) act(r, t) = img[r];
      }
      action.push_back(std::move(act));
    }
    Representation rho(ss.algebra, m, std::move(action));
    Cochain curvature = Cochain::zero(2, q, m);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        Vec c = sub(g.bracket(section.column(a), section.column(b)), section * ss.algebra.bracket_basis(a, b));
        curvature.values[a * q + b] = layer.project(c);
      }
    CeSolveResult sol = ce_solve(rho, 2, curvature);
    if (!sol.solved) throw InvariantViolation("Levi correction hit a nonzero cohomology class");
    for (std::size_t a = 0; a < q; ++a) {
      Vec corr = layer.lift(sol.primitive.values[a]);
      for (std::size_t r = 0; r < n; ++r) section(r, a) -= corr[r];
    }
  }

  std::vector<Vec> cols;
  for (std::size_t a = 0; a < q; ++a) cols.push_back(section.column(a));
  Subspace levi(n, cols);
  if (levi.dim() != q) throw InvariantViolation("Levi section is not injective");
  if (!levi.intersect(rad).is_zero() || levi.sum(rad).dim() != n)
    throw InvariantViolation("Levi subalgebra is not complementary to the radical");
  if (!is_subalgebra(g, levi)) throw InvariantViolation("Levi subalgebra is not closed under the bracket");
  if (!is_homomorphic_section(g, ss.algebra, ss.projection, section))
    throw InvariantViolation("Levi section does not preserve brackets");
  return {std::move(rad), std::move(levi), std::move(ss), std::move(section)};
}

}  // namespace levifol
