#ifndef SYNLA_SYNAPTIC_OPS_HPP
#define SYNLA_SYNAPTIC_OPS_HPP

#include <utility>
#include <vector>

#include "synla/projection.hpp"
#include "synla/symmat.hpp"

namespace synla {

/// Square root of a PSD element: the unique PSD b with b^2 = a.
/// Eigenvalues in [-tol, 0) are clamped to 0 to absorb drift from prior
/// products; spectrum below that raises NotPositive.
SymMatrix sqrt(const SymMatrix& a, const TolerancePolicy& tol = {});

/// Absolute value |a| = (a^2)^(1/2).
SymMatrix abs(const SymMatrix& a);

/// Positive part (1/2)(|a| + a) and negative part (1/2)(|a| - a).
SymMatrix pos_part(const SymMatrix& a);
SymMatrix neg_part(const SymMatrix& a);

/// (pos, neg) with a = pos - neg, pos*neg = 0, |a| = pos + neg.
std::pair<SymMatrix, SymMatrix> decompose(const SymMatrix& a);

/// Carrier a°: the projection onto the range of a (eigenvectors whose
/// eigenvalue survives the rank cutoff); the smallest projection p with
/// a = ap.
Projection carrier(const SymMatrix& a, const TolerancePolicy& tol = {});

/// Spectral projection p_{a,lambda}, computed literally as
/// 1 - carrier(pos_part(a - lambda)) with the direct eigenprojection
/// construction as a cross-check; projects onto eigenvalues <= lambda.
Projection spectral_proj(const SymMatrix& a, double lambda,
                         const TolerancePolicy& tol = {});

/// One breakpoint per distinct eigenvalue (clusters within the rank cutoff
/// merged): ascending (eigenvalue, cumulative projection) pairs ending at
/// the identity; every projection commutes with the source.
struct SpectralResolution {
  std::vector<std::pair<double, Projection>> breakpoints;
  double source_norm = 0.0;

  /// Sum lambda_i (p_i - p_{i-1}); reconstructs the source element.
  SymMatrix reconstruct() const;
};

SpectralResolution spectral_resolution(const SymMatrix& a,
                                       const TolerancePolicy& tol = {});

/// Inverse of an invertible element (all |eigenvalues| above the rank
/// cutoff); raises NotInvertible otherwise.
SymMatrix invert(const SymMatrix& a, const TolerancePolicy& tol = {});

}  // namespace synla

#endif  // SYNLA_SYNAPTIC_OPS_HPP
