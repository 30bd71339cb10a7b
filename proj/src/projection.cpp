#include "synla/projection.hpp"

#include <cmath>
#include <string>

namespace synla {

bool is_projection(const SymMatrix& p, const TolerancePolicy& tol) {
  const SymMatrix p2 = jordan(p, p);
  const double scale = std::max(1.0, frobenius_norm(p));
  return (p2.mat() - p.mat()).norm() <= tol.eq * scale;
}

bool is_effect(const SymMatrix& e, const TolerancePolicy& tol) {
  const int n = e.dim();
  const bool interval = loewner_leq(SymMatrix::zero(n), e, tol) &&
                        loewner_leq(e, SymMatrix::identity(n), tol);
  // Equivalent characterization e^2 <= e, checked at a slightly looser
  // slack so boundary effects cannot make the two routes disagree.
  TolerancePolicy loose = tol;
  loose.psd = std::min(0.5, 16.0 * tol.psd);
  const bool square = loewner_leq(jordan(e, e), e, loose);
  if (interval && !square) {
    throw InternalCheckFailure(
        "is_effect: 0<=e<=1 holds but e^2<=e fails beyond tolerance");
  }
  return interval;
}

Projection::Projection(SymMatrix m, const TolerancePolicy& tol) : m_(std::move(m)) {
  if (!is_projection(m_, tol)) {
    throw NotProjection("matrix is not idempotent within tolerance");
  }
  if (!is_effect(m_, tol)) {
    throw NotProjection("projection violates 0 <= p <= 1");
  }
}

Effect::Effect(SymMatrix m, const TolerancePolicy& tol) : m_(std::move(m)) {
  if (!is_effect(m_, tol)) {
    throw NotEffect("matrix violates 0 <= e <= 1 within tolerance");
  }
}

}  // namespace synla
