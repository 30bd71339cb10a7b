#ifndef SYNLA_PROJECTION_HPP
#define SYNLA_PROJECTION_HPP

#include "synla/symmat.hpp"

namespace synla {

/// True iff p^2 = p within tolerance (p is symmetric by type).
bool is_projection(const SymMatrix& p, const TolerancePolicy& tol = {});

/// True iff 0 <= e <= 1 under the Loewner order; cross-checks the
/// equivalent characterization e^2 <= e.
bool is_effect(const SymMatrix& e, const TolerancePolicy& tol = {});

/// A SymMatrix certified idempotent within tolerance; element of the
/// projection lattice P. 0 <= p <= 1 follows and is asserted.
class Projection {
 public:
  explicit Projection(SymMatrix m, const TolerancePolicy& tol = {});
  const SymMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

  static Projection identity(int n) { return Projection(SymMatrix::identity(n)); }
  static Projection zero(int n) { return Projection(SymMatrix::zero(n)); }

 private:
  SymMatrix m_;
};

/// A SymMatrix certified to satisfy 0 <= e <= 1 within tolerance.
class Effect {
 public:
  explicit Effect(SymMatrix m, const TolerancePolicy& tol = {});
  const SymMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  SymMatrix m_;
};

}  // namespace synla

#endif  // SYNLA_PROJECTION_HPP
