#ifndef SYNLA_SYMMAT_HPP
#define SYNLA_SYMMAT_HPP

#include <Eigen/Dense>
#include <vector>

#include "synla/errors.hpp"

namespace synla {

/// Named numerical thresholds governing every predicate in the library.
/// All values are dimensionless relative scales; predicates multiply them
/// by max(1, norm of operand) so they do not collapse near zero matrices.
struct TolerancePolicy {
  double eq = 1e-9;    ///< relative equality tolerance
  double psd = 1e-9;   ///< PSD slack tolerance
  double rank = 2.220446049250313e-16;  ///< rank cutoff base, scaled by n at use
  double comm = 1e-9;  ///< commutator-norm tolerance

  /// Throws PreconditionFailure unless all four values lie in (0, 1).
  void validate() const;

  /// Eigenvalue cutoff below which spectrum counts as zero for carrier,
  /// rank and invertibility decisions: rank * n * max(1, norm).
  double rank_cutoff(int n, double norm) const;
};

/// Dense real symmetric n-by-n matrix, the element type of the concrete
/// algebra Sym(n). Values are immutable after construction. Construction
/// symmetrizes the input (averages with the transpose) to absorb
/// floating-point drift from products, and rejects asymmetry or
/// non-finite entries beyond tolerance.
class SymMatrix {
 public:
  explicit SymMatrix(Eigen::MatrixXd m, const TolerancePolicy& tol = {});

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);
  static SymMatrix diagonal(const std::vector<double>& d);
  /// Scalar multiple of the identity ("each real number is lambda*1").
  static SymMatrix scalar(int n, double lambda);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator-() const;
  SymMatrix operator*(double s) const;

 private:
  Eigen::MatrixXd m_;
};

inline SymMatrix operator*(double s, const SymMatrix& a) { return a * s; }

/// Ascending eigenvalues with orthonormal eigenvectors (column i pairs with
/// values[i]). Every spectral function in the library is defined through
/// this decomposition, which is deterministic for a fixed input.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

EigenSystem eigh(const SymMatrix& a);
Eigen::VectorXd eigvalsh(const SymMatrix& a);

/// Order-unit norm: inf{lambda > 0 : -lambda <= a <= lambda}, i.e. the
/// spectral radius max_i |eigenvalue_i|.
double order_unit_norm(const SymMatrix& a);

double frobenius_norm(const SymMatrix& a);

/// Trace inner product <a,b> = trace(ab).
double trace_inner(const SymMatrix& a, const SymMatrix& b);

/// Loewner order: a <= b iff b - a is PSD within tolerance, i.e.
/// lambda_min(b - a) >= -tol.psd * max(1, ||b - a||).
bool loewner_leq(const SymMatrix& a, const SymMatrix& b,
                 const TolerancePolicy& tol = {});

/// Convenience: 0 <= a within tolerance.
bool is_psd(const SymMatrix& a, const TolerancePolicy& tol = {});

/// Jordan product (1/2)(ab + ba); bilinear, unital, jordan(a,a) = a^2.
SymMatrix jordan(const SymMatrix& a, const SymMatrix& b);

/// Quadratic mapping b -> aba; linear and order preserving in b.
SymMatrix quad(const SymMatrix& a, const SymMatrix& b);

/// Frobenius norm of the commutator ab - ba.
double commutator_norm(const SymMatrix& a, const SymMatrix& b);

/// ab = ba within tolerance: ||ab - ba||_F <= tol.comm * max(1, ||a|| ||b||)
/// with order-unit norms for the scale.
bool commutes(const SymMatrix& a, const SymMatrix& b,
              const TolerancePolicy& tol = {});

/// ||a - b||_F <= tol.eq * max(1, max(||a||_F, ||b||_F)).
bool approx_equal(const SymMatrix& a, const SymMatrix& b,
                  const TolerancePolicy& tol = {});

/// ||a||_F <= tol.eq.
bool is_zero(const SymMatrix& a, const TolerancePolicy& tol = {});

namespace detail {
void require_same_dim(const SymMatrix& a, const SymMatrix& b);
}

}  // namespace synla

#endif  // SYNLA_SYMMAT_HPP
