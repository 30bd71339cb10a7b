#include "synla/genlattice.hpp"

#include <cmath>

#include "synla/rng.hpp"
#include "synla/synaptic_ops.hpp"

namespace synla {

SymMatrix ginf(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  return (a + b - abs(a - b)) * 0.5;
}

SymMatrix gsup(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  return (a + b + abs(a - b)) * 0.5;
}

DisjointVerdict check_disjoint(const SymMatrix& a, const SymMatrix& b,
                               const TolerancePolicy& tol) {
  detail::require_same_dim(a, b);
  DisjointVerdict v;
  const SymMatrix diff_abs = abs(a - b);
  const bool both_psd = is_psd(a, tol) && is_psd(b, tol);

  v.ginf_zero = approx_equal((a + b - diff_abs) * 0.5,
                             SymMatrix::zero(a.dim()), tol);
  v.sum_is_absdiff = approx_equal(a + b, diff_abs, tol);

  const double scale =
      std::max(1.0, order_unit_norm(a) * order_unit_norm(b));
  TolerancePolicy prod_tol = tol;
  prod_tol.eq = tol.eq * scale;
  v.psd_jordan_zero =
      both_psd && is_zero(jordan(a, b), prod_tol);
  v.psd_product_zero =
      both_psd && (a.mat() * b.mat()).norm() <= tol.eq * scale &&
      (b.mat() * a.mat()).norm() <= tol.eq * scale;
  return v;
}

MaximalityReport check_maximal_lower_bound(const SymMatrix& a,
                                           const SymMatrix& b, int trials,
                                           std::uint64_t seed,
                                           const TolerancePolicy& tol) {
  detail::require_same_dim(a, b);
  if (trials < 1) {
    throw PreconditionFailure("check_maximal_lower_bound: trials must be >= 1");
  }
  const int n = a.dim();
  const SymMatrix meet = ginf(a, b);
  // Step scale follows the gap between the meet and the arguments so the
  // probe sizes match the problem's own magnitude.
  const double gap = std::max(order_unit_norm(a - meet),
                              std::max(order_unit_norm(b - meet), 1.0));

  MaximalityReport report;
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);

  for (int trial = 0; trial < trials; ++trial) {
    Eigen::MatrixXd d;
    if (trial % 2 == 0) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
      v.normalize();
      d = v * v.transpose();
    } else {
      // PSD mixture of a few rank-one terms, normalized to unit norm.
      d = Eigen::MatrixXd::Zero(n, n);
      const int terms = 1 + rng.uniform_int(1, n);
      for (int t = 0; t < terms; ++t) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
        d += rng.uniform(0.1, 1.0) * (v * v.transpose());
      }
      d /= d.norm();
    }
    const SymMatrix dir{0.5 * (d + d.transpose())};
    for (double t = 1.0; t >= 1e-6 - 1e-12; t /= 10.0) {
      const SymMatrix c = meet + dir * (t * gap);
      if (loewner_leq(c, a, tol) && loewner_leq(c, b, tol)) {
        report.violations.push_back({t * gap, dir});
      }
    }
  }
  return report;
}

bool is_disjunctive(const SymMatrix& a, const SymMatrix& b,
                    const TolerancePolicy& tol) {
  detail::require_same_dim(a, b);
  const SymMatrix meet = ginf(a, b);
  const SymMatrix outer = ginf(abs(a - b), meet);
  TolerancePolicy zero_tol = tol;
  zero_tol.eq =
      tol.eq * std::max(1.0, std::max(frobenius_norm(a), frobenius_norm(b)));
  if (!is_zero(outer, zero_tol)) return false;

  // Self-check of the guaranteed consequences at a loose scale.
  const double scale =
      std::max(1.0, order_unit_norm(a) * order_unit_norm(b));
  TolerancePolicy loose;
  loose.psd = 1e-6;
  const Eigen::MatrixXd ab = a.mat() * b.mat();
  const SymMatrix meet_sq = jordan(meet, meet);
  const bool ok = is_psd(a, loose) && is_psd(b, loose) && is_psd(meet, loose) &&
                  commutator_norm(a, b) <= 1e-6 * scale &&
                  (ab - meet_sq.mat()).norm() <= 1e-6 * scale;
  if (!ok) {
    throw InternalCheckFailure(
        "is_disjunctive: disjunctive pair violates its guaranteed "
        "consequences");
  }
  return true;
}

}  // namespace synla
