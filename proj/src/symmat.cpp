#include "synla/symmat.hpp"

#include <cmath>
#include <string>

namespace synla {

void TolerancePolicy::validate() const {
  auto bad = [](double v) { return !(v > 0.0) || !(v < 1.0); };
  if (bad(eq) || bad(psd) || bad(rank) || bad(comm)) {
    throw PreconditionFailure(
        "tolerance policy: all of eq, psd, rank, comm must lie in (0, 1)");
  }
}

double TolerancePolicy::rank_cutoff(int n, double norm) const {
  return rank * static_cast<double>(n) * std::max(1.0, norm);
}

SymMatrix::SymMatrix(Eigen::MatrixXd m, const TolerancePolicy& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch("SymMatrix: input must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw PreconditionFailure("SymMatrix: entries must be finite");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (skew > tol.eq * scale) {
    throw PreconditionFailure("SymMatrix: input asymmetric beyond tolerance (skew " +
                              std::to_string(skew) + ")");
  }
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::identity(int n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::zero(int n) {
  return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(d.data(),
                                                        static_cast<long>(d.size()));
  return SymMatrix(Eigen::MatrixXd(v.asDiagonal()));
}

SymMatrix SymMatrix::scalar(int n, double lambda) {
  return SymMatrix(lambda * Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  detail::require_same_dim(*this, o);
  return SymMatrix(m_ + o.m_);
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  detail::require_same_dim(*this, o);
  return SymMatrix(m_ - o.m_);
}

SymMatrix SymMatrix::operator-() const { return SymMatrix(-m_); }

SymMatrix SymMatrix::operator*(double s) const { return SymMatrix(s * m_); }

EigenSystem eigh(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat());
  if (es.info() != Eigen::Success) {
    throw Error("eigh: symmetric eigendecomposition failed to converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd eigvalsh(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat(),
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error("eigvalsh: symmetric eigendecomposition failed to converge");
  }
  return es.eigenvalues();
}

double order_unit_norm(const SymMatrix& a) {
  Eigen::VectorXd ev = eigvalsh(a);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double frobenius_norm(const SymMatrix& a) { return a.mat().norm(); }

double trace_inner(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  return (a.mat().array() * b.mat().array()).sum();
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b,
                 const TolerancePolicy& tol) {
  detail::require_same_dim(a, b);
  Eigen::VectorXd ev = eigvalsh(b - a);
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) >= -tol.psd * std::max(1.0, norm);
}

bool is_psd(const SymMatrix& a, const TolerancePolicy& tol) {
  return loewner_leq(SymMatrix::zero(a.dim()), a, tol);
}

SymMatrix jordan(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  Eigen::MatrixXd ab = a.mat() * b.mat();
  return SymMatrix(0.5 * (ab + ab.transpose()));
}

SymMatrix quad(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  Eigen::MatrixXd aba = a.mat() * b.mat() * a.mat();
  return SymMatrix(0.5 * (aba + aba.transpose()));
}

double commutator_norm(const SymMatrix& a, const SymMatrix& b) {
  detail::require_same_dim(a, b);
  return (a.mat() * b.mat() - b.mat() * a.mat()).norm();
}

bool commutes(const SymMatrix& a, const SymMatrix& b,
              const TolerancePolicy& tol) {
  const double scale = std::max(1.0, order_unit_norm(a) * order_unit_norm(b));
  return commutator_norm(a, b) <= tol.comm * scale;
}

bool approx_equal(const SymMatrix& a, const SymMatrix& b,
                  const TolerancePolicy& tol) {
  detail::require_same_dim(a, b);
  const double scale =
      std::max(1.0, std::max(frobenius_norm(a), frobenius_norm(b)));
  return (a.mat() - b.mat()).norm() <= tol.eq * scale;
}

bool is_zero(const SymMatrix& a, const TolerancePolicy& tol) {
  return frobenius_norm(a) <= tol.eq;
}

namespace detail {
void require_same_dim(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("operands have dimensions " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}
}  // namespace detail

}  // namespace synla
