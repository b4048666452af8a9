#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "levifol/linalg.hpp"

namespace levifol {

/// Finite-dimensional Lie algebra given by structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
/// Antisymmetry and the Jacobi identity are checked on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `structure` is indexed (i * dim + j) * dim + k.
  LieAlgebra(std::size_t dim, std::vector<Rational> structure);
  static LieAlgebra abelian(std::size_t dim);
  /// The algebra spanned by linearly independent matrices closed under the commutator.
  static LieAlgebra from_matrices(const std::vector<Matrix>& basis);

  std::size_t dim() const { return dim_; }
  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad_x: column j is [x, e_j].
  Matrix ad(const Vec& x) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

Matrix killing_form(const LieAlgebra& g);

/// span{[u, v] : u in a, v in b}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);
bool is_ideal(const LieAlgebra& g, const Subspace& u);
/// u, [u,u], [[u,u],[u,u]], ... down to the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& u);
/// u, [u,u], [u,[u,u]], ... down to the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& u);
bool is_solvable(const LieAlgebra& g, const Subspace& u);
bool is_nilpotent(const LieAlgebra& g, const Subspace& u);
bool is_semisimple(const LieAlgebra& g);

/// The maximal solvable ideal, as the Killing-orthogonal complement of [g, g]. Throws
/// InvariantViolation if the result is not a solvable ideal.
Subspace solvable_radical(const LieAlgebra& g);

/// g / ideal, with coordinates on the canonical complement of the ideal.
struct QuotientAlgebra {
  LieAlgebra algebra;
  QuotientSpace space;
  /// dim(quotient) x dim(g).
  Matrix projection;
  /// dim(g) x dim(quotient): the complement representatives (a linear section, not in general
  /// a homomorphism).
  Matrix lift;
};

QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& ideal);

/// Restriction of g to a subalgebra, in the subalgebra's echelon basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& u);

/// Linear representation rho of g on Q^m; rho([x,y]) = [rho(x), rho(y)] is checked.
class Representation {
 public:
  Representation(LieAlgebra g, std::size_t space_dim, std::vector<Matrix> action);
  static Representation adjoint(const LieAlgebra& g);
  static Representation trivial(const LieAlgebra& g, std::size_t space_dim);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t space_dim() const { return m_; }
  const Matrix& action(std::size_t i) const { return rho_[i]; }
  Matrix action(const Vec& x) const;

 private:
  LieAlgebra g_;
  std::size_t m_;
  std::vector<Matrix> rho_;
};

/// Alternating p-cochain (p in {0, 1, 2, 3}) with values in a representation space. Values are
/// stored for every index tuple (not only increasing ones): index sum_t i_t * dim^(p-1-t).
struct Cochain {
  int degree = 0;
  std::size_t algebra_dim = 0;
  std::size_t space_dim = 0;
  std::vector<Vec> values;

  static Cochain zero(int degree, std::size_t algebra_dim, std::size_t space_dim);
  const Vec& at(std::size_t i) const { return values[i]; }
  const Vec& at(std::size_t i, std::size_t j) const { return values[i * algebra_dim + j]; }
  bool is_zero() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Chevalley-Eilenberg differential of a 0-, 1- or 2-cochain.
Cochain ce_differential(const Representation& rho, const Cochain& omega);

/// Matrix of the differential from p-cochains to (p+1)-cochains, in the coordinates of
/// flatten_cochain.
Matrix ce_differential_matrix(const Representation& rho, int degree);
/// Coordinates over increasing index tuples, space index fastest.
Vec flatten_cochain(const Cochain& omega);
Cochain unflatten_cochain(const Vec& v, int degree, std::size_t algebra_dim, std::size_t space_dim);

struct CeSolveResult {
  bool solved = false;
  /// delta(primitive) = cocycle when solved.
  Cochain primitive;
  /// Component of the cocycle outside the coboundaries (zero when solved).
  Cochain residual;
};

/// Solves delta(sigma) = cocycle for a 1- or 2-cocycle. Throws PreconditionError if the input
/// is not closed or has the wrong shape. Free variables of the linear system are set to zero.
CeSolveResult ce_solve(const Representation& rho, int degree, const Cochain& cocycle);

struct LeviData {
  Subspace radical;
  /// A subalgebra complementary to the radical.
  Subspace levi;
  /// g / rad(g).
  QuotientAlgebra semisimple;
  /// dim(g) x dim(g^s): a bracket-preserving section of the projection, with image `levi`.
  Matrix section;
};

/// Levi decomposition by successive correction along the derived series of the radical. Every
/// LeviData invariant is verified before returning; a failure throws InvariantViolation.
LeviData levi_subalgebra(const LieAlgebra& g);

/// Checks proj * section = id and section([a,b]) = [section a, section b] on basis pairs.
bool is_homomorphic_section(const LieAlgebra& g, const LieAlgebra& quotient, const Matrix& projection,
                            const Matrix& section);

}  // namespace levifol
