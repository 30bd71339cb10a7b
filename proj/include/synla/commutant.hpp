#ifndef SYNLA_COMMUTANT_HPP
#define SYNLA_COMMUTANT_HPP

#include <vector>

#include "synla/symmat.hpp"

namespace synla {

/// Dimension of Sym(n) as a real linear space.
inline int sym_space_dim(int n) { return n * (n + 1) / 2; }

/// Coordinates of a symmetric matrix in the trace-orthonormal basis of
/// Sym(n) (E_ii and (E_ij + E_ji)/sqrt(2) for i < j), and back.
Eigen::VectorXd sym_coords(const SymMatrix& a);
SymMatrix sym_from_coords(int n, const Eigen::VectorXd& c);

/// A linear subspace of Sym(n), stored as a basis orthonormal under the
/// trace inner product <a,b> = trace(ab).
class Subspace {
 public:
  /// Orthonormalizes the given spanning set (SVD; directions whose
  /// singular value falls below the rank policy are dropped).
  static Subspace span(const std::vector<SymMatrix>& spanning,
                       const TolerancePolicy& tol = {});

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SymMatrix>& basis() const { return basis_; }

  /// Trace-orthogonal projection of x onto the subspace.
  SymMatrix project(const SymMatrix& x) const;

  /// ||x - project(x)||_F.
  double membership_residual(const SymMatrix& x) const;

  /// residual <= tol.eq * max(1, ||x||_F).
  bool contains(const SymMatrix& x, const TolerancePolicy& tol = {}) const;

  /// Same span: equal dimensions and mutual containment at tolerance.
  bool same_as(const Subspace& other, const TolerancePolicy& tol = {}) const;

 private:
  Subspace(int n, std::vector<SymMatrix> basis)
      : n_(n), basis_(std::move(basis)) {}
  int n_;
  std::vector<SymMatrix> basis_;
};

/// C(B): orthonormal basis of {x in Sym(n) : xb = bx for all b in B},
/// computed as the null space of the stacked commutator operator, with
/// singular values under the rank policy treated as zero. Always
/// contains the identity.
Subspace commutant(const std::vector<SymMatrix>& generators,
                   const TolerancePolicy& tol = {});

/// CC(B) = C(C(B)). Asserts B ⊆ CC(B) and C(CC(B)) = C(B).
Subspace bicommutant(const std::vector<SymMatrix>& generators,
                     const TolerancePolicy& tol = {});

/// True iff the generators commute pairwise and their span equals their
/// commutant as subspaces.
bool is_cblock(const std::vector<SymMatrix>& generators,
               const TolerancePolicy& tol = {});

/// Enlarges a commuting set to a maximal commutative subspace: augments
/// the generators with a block-preserving element of C(B) whose spectrum
/// is simple on every joint eigenspace and returns its commutant. The
/// empty set is treated as {identity(ambient_dim)}.
Subspace extend_to_cblock(const std::vector<SymMatrix>& generators,
                          const TolerancePolicy& tol = {},
                          int ambient_dim = 0);

/// Orthonormal column blocks spanning the joint eigenspaces of a commuting
/// family (the common refinement of all eigenspace decompositions).
std::vector<Eigen::MatrixXd> joint_eigenblocks(
    const std::vector<SymMatrix>& family, const TolerancePolicy& tol = {});

}  // namespace synla

#endif  // SYNLA_COMMUTANT_HPP
