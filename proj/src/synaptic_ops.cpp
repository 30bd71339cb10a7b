#include "synla/synaptic_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace synla {

namespace {

SymMatrix reconstruct(const EigenSystem& es, const Eigen::VectorXd& mapped) {
  Eigen::MatrixXd m =
      es.vectors * mapped.asDiagonal() * es.vectors.transpose();
  return SymMatrix(0.5 * (m + m.transpose()));
}

double spectral_radius(const Eigen::VectorXd& ev) {
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

SymMatrix sqrt(const SymMatrix& a, const TolerancePolicy& tol) {
  EigenSystem es = eigh(a);
  const double slack = tol.psd * std::max(1.0, spectral_radius(es.values));
  if (es.values(0) < -slack) {
    throw NotPositive("sqrt: negative eigenvalue " +
                      std::to_string(es.values(0)) + " beyond tolerance");
  }
  Eigen::VectorXd mapped = es.values.cwiseMax(0.0).cwiseSqrt();
  return reconstruct(es, mapped);
}

SymMatrix abs(const SymMatrix& a) {
  EigenSystem es = eigh(a);
  return reconstruct(es, es.values.cwiseAbs());
}

SymMatrix pos_part(const SymMatrix& a) {
  EigenSystem es = eigh(a);
  return reconstruct(es, es.values.cwiseMax(0.0));
}

SymMatrix neg_part(const SymMatrix& a) { return pos_part(-a); }

std::pair<SymMatrix, SymMatrix> decompose(const SymMatrix& a) {
  EigenSystem es = eigh(a);
  return {reconstruct(es, es.values.cwiseMax(0.0)),
          reconstruct(es, (-es.values).cwiseMax(0.0))};
}

Projection carrier(const SymMatrix& a, const TolerancePolicy& tol) {
  EigenSystem es = eigh(a);
  const double cutoff = tol.rank_cutoff(a.dim(), spectral_radius(es.values));
  Eigen::VectorXd ind(es.values.size());
  for (long i = 0; i < es.values.size(); ++i) {
    ind(i) = std::abs(es.values(i)) > cutoff ? 1.0 : 0.0;
  }
  return Projection(reconstruct(es, ind), tol);
}

Projection spectral_proj(const SymMatrix& a, double lambda,
                         const TolerancePolicy& tol) {
  const int n = a.dim();
  const SymMatrix shifted = a - SymMatrix::scalar(n, lambda);
  const SymMatrix positive = pos_part(shifted);
  const SymMatrix formula =
      SymMatrix::identity(n) - carrier(positive, tol).matrix();

  // Cross-check: direct eigenprojection onto eigenvalues <= lambda, with
  // the boundary resolved by the same rank cutoff the carrier used.
  EigenSystem es = eigh(shifted);
  const double cutoff = tol.rank_cutoff(n, spectral_radius(es.values));
  Eigen::VectorXd ind(es.values.size());
  for (long i = 0; i < es.values.size(); ++i) {
    ind(i) = es.values(i) <= cutoff ? 1.0 : 0.0;
  }
  const SymMatrix direct = reconstruct(es, ind);
  if ((formula.mat() - direct.mat()).norm() >
      1e-8 * std::max(1.0, static_cast<double>(n))) {
    throw InternalCheckFailure(
        "spectral_proj: carrier-formula path disagrees with the "
        "eigenprojection path");
  }
  return Projection(formula, tol);
}

SpectralResolution spectral_resolution(const SymMatrix& a,
                                       const TolerancePolicy& tol) {
  EigenSystem es = eigh(a);
  const int n = a.dim();
  const double norm = spectral_radius(es.values);
  const double cutoff = tol.rank_cutoff(n, norm);

  SpectralResolution res;
  res.source_norm = norm;

  // Cluster ascending eigenvalues whose gaps fall inside the rank cutoff;
  // each cluster contributes one breakpoint with the summed eigenprojection.
  long i = 0;
  Eigen::MatrixXd cumulative = Eigen::MatrixXd::Zero(n, n);
  while (i < es.values.size()) {
    long j = i;
    double sum = 0.0;
    while (j < es.values.size() &&
           (j == i || es.values(j) - es.values(j - 1) <= cutoff)) {
      sum += es.values(j);
      ++j;
    }
    const double value = sum / static_cast<double>(j - i);
    for (long k = i; k < j; ++k) {
      cumulative += es.vectors.col(k) * es.vectors.col(k).transpose();
    }
    Eigen::MatrixXd p = 0.5 * (cumulative + cumulative.transpose());
    res.breakpoints.emplace_back(value, Projection(SymMatrix(p), tol));
    i = j;
  }
  return res;
}

SymMatrix SpectralResolution::reconstruct() const {
  const int n = breakpoints.front().second.dim();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd prev = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [value, proj] : breakpoints) {
    acc += value * (proj.matrix().mat() - prev);
    prev = proj.matrix().mat();
  }
  return SymMatrix(0.5 * (acc + acc.transpose()));
}

SymMatrix invert(const SymMatrix& a, const TolerancePolicy& tol) {
  EigenSystem es = eigh(a);
  const double cutoff = tol.rank_cutoff(a.dim(), spectral_radius(es.values));
  if (es.values.cwiseAbs().minCoeff() <= cutoff) {
    throw NotInvertible("invert: spectrum inside the rank cutoff");
  }
  return reconstruct(es, es.values.cwiseInverse());
}

}  // namespace synla
