#ifndef SYNLA_GENLATTICE_HPP
#define SYNLA_GENLATTICE_HPP

#include <cstdint>
#include <vector>

#include "synla/symmat.hpp"

namespace synla {

/// Generalized infimum (1/2)(a + b - |a - b|): always defined, below both
/// arguments, and a maximal lower bound.
SymMatrix ginf(const SymMatrix& a, const SymMatrix& b);

/// Generalized supremum (1/2)(a + b + |a - b|) = -ginf(-a, -b).
SymMatrix gsup(const SymMatrix& a, const SymMatrix& b);

/// Truth of the four equivalent disjointness conditions, each evaluated
/// independently at tolerance so tolerance-induced disagreements surface
/// as diagnostics instead of being short-circuited away.
struct DisjointVerdict {
  bool ginf_zero = false;        ///< a ⊓ b = 0
  bool sum_is_absdiff = false;   ///< a + b = |a - b|
  bool psd_jordan_zero = false;  ///< a, b PSD and a ⊙ b = 0
  bool psd_product_zero = false; ///< a, b PSD and ab = ba = 0

  bool disjoint() const { return ginf_zero; }
  bool consistent() const {
    return ginf_zero == sum_is_absdiff && ginf_zero == psd_jordan_zero &&
           ginf_zero == psd_product_zero;
  }
};

DisjointVerdict check_disjoint(const SymMatrix& a, const SymMatrix& b,
                               const TolerancePolicy& tol = {});

/// One maximality violation: ginf(a,b) + step * direction stayed below
/// both a and b, which the maximal-lower-bound property forbids.
struct MaximalityViolation {
  double step = 0.0;
  SymMatrix direction;
};

struct MaximalityReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<MaximalityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Randomized falsification of the maximal-lower-bound property: for
/// `trials` seeded PSD directions d (unit rank-one bumps and PSD mixtures)
/// and shrinking steps t, verifies c = ginf(a,b) + t*d never satisfies
/// c <= a and c <= b.
MaximalityReport check_maximal_lower_bound(const SymMatrix& a,
                                           const SymMatrix& b, int trials,
                                           std::uint64_t seed,
                                           const TolerancePolicy& tol = {});

/// True iff |a-b| ⊓ (a⊓b) = 0 at tolerance. When true, the consequences
/// (a, b, a⊓b PSD and ab = ba = (a⊓b)^2) are self-checked.
bool is_disjunctive(const SymMatrix& a, const SymMatrix& b,
                    const TolerancePolicy& tol = {});

}  // namespace synla

#endif  // SYNLA_GENLATTICE_HPP
