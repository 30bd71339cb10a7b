#include "synla/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace synla {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;

double svd_cutoff(const Eigen::MatrixXd& m, double sigma_max,
                  const TolerancePolicy& tol) {
  const double extent = static_cast<double>(std::max(m.rows(), m.cols()));
  return tol.rank * extent * std::max(1.0, sigma_max);
}

void require_nonempty_same_dim(const std::vector<SymMatrix>& mats,
                               const char* who) {
  if (mats.empty()) {
    throw PreconditionFailure(std::string(who) + ": empty generator list");
  }
  for (const auto& m : mats) detail::require_same_dim(mats.front(), m);
}

}  // namespace

Eigen::VectorXd sym_coords(const SymMatrix& a) {
  const int n = a.dim();
  Eigen::VectorXd c(sym_space_dim(n));
  int k = 0;
  for (int i = 0; i < n; ++i) c(k++) = a(i, i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c(k++) = kSqrt2 * a(i, j);
  }
  return c;
}

SymMatrix sym_from_coords(int n, const Eigen::VectorXd& c) {
  if (c.size() != sym_space_dim(n)) {
    throw DimensionMismatch("sym_from_coords: coordinate length mismatch");
  }
  Eigen::MatrixXd m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) m(i, i) = c(k++);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = m(j, i) = kInvSqrt2 * c(k++);
    }
  }
  return SymMatrix(m);
}

Subspace Subspace::span(const std::vector<SymMatrix>& spanning,
                        const TolerancePolicy& tol) {
  require_nonempty_same_dim(spanning, "Subspace::span");
  const int n = spanning.front().dim();
  Eigen::MatrixXd coords(sym_space_dim(n),
                         static_cast<long>(spanning.size()));
  for (std::size_t j = 0; j < spanning.size(); ++j) {
    coords.col(static_cast<long>(j)) = sym_coords(spanning[j]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords, Eigen::ComputeThinU);
  const double cutoff = svd_cutoff(coords, svd.singularValues()(0), tol);
  std::vector<SymMatrix> basis;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cutoff) {
      basis.push_back(sym_from_coords(n, svd.matrixU().col(i)));
    }
  }
  if (basis.empty()) {
    throw PreconditionFailure("Subspace::span: spanning set is numerically zero");
  }
  return Subspace(n, std::move(basis));
}

SymMatrix Subspace::project(const SymMatrix& x) const {
  detail::require_same_dim(x, basis_.front());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& b : basis_) acc += trace_inner(x, b) * b.mat();
  return SymMatrix(0.5 * (acc + acc.transpose()));
}

double Subspace::membership_residual(const SymMatrix& x) const {
  return (x.mat() - project(x).mat()).norm();
}

bool Subspace::contains(const SymMatrix& x, const TolerancePolicy& tol) const {
  return membership_residual(x) <= tol.eq * std::max(1.0, frobenius_norm(x));
}

bool Subspace::same_as(const Subspace& other, const TolerancePolicy& tol) const {
  if (n_ != other.n_ || dim() != other.dim()) return false;
  for (const auto& b : basis_) {
    if (!other.contains(b, tol)) return false;
  }
  return true;
}

Subspace commutant(const std::vector<SymMatrix>& generators,
                   const TolerancePolicy& tol) {
  require_nonempty_same_dim(generators, "commutant");
  const int n = generators.front().dim();
  const int d = sym_space_dim(n);

  // Rows: vectorized commutator [basis_k, b] for every generator b.
  Eigen::MatrixXd op(static_cast<long>(generators.size()) * n * n, d);
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e(k) = 1.0;
    const Eigen::MatrixXd basis_k = sym_from_coords(n, e).mat();
    long row = 0;
    for (const auto& b : generators) {
      Eigen::MatrixXd comm = basis_k * b.mat() - b.mat() * basis_k;
      op.block(row, k, n * n, 1) =
          Eigen::Map<Eigen::VectorXd>(comm.data(), n * n);
      row += n * n;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
  const double sigma_max =
      svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  const double cutoff = svd_cutoff(op, sigma_max, tol);
  std::vector<SymMatrix> basis;
  for (long i = 0; i < svd.matrixV().cols(); ++i) {
    const double sigma =
        i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
    if (sigma <= cutoff) {
      basis.push_back(sym_from_coords(n, svd.matrixV().col(i)));
    }
  }
  Subspace result = Subspace::span(basis, tol);
  if (!result.contains(SymMatrix::identity(n), tol)) {
    throw InternalCheckFailure("commutant: identity missing from result");
  }
  return result;
}

Subspace bicommutant(const std::vector<SymMatrix>& generators,
                     const TolerancePolicy& tol) {
  require_nonempty_same_dim(generators, "bicommutant");
  const Subspace first = commutant(generators, tol);
  const Subspace second = commutant(first.basis(), tol);
  for (const auto& b : generators) {
    if (!second.contains(b, tol)) {
      throw InternalCheckFailure("bicommutant: generator escapes CC(B)");
    }
  }
  if (!commutant(second.basis(), tol).same_as(first, tol)) {
    throw InternalCheckFailure("bicommutant: C(CC(B)) differs from C(B)");
  }
  return second;
}

bool is_cblock(const std::vector<SymMatrix>& generators,
               const TolerancePolicy& tol) {
  require_nonempty_same_dim(generators, "is_cblock");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j], tol)) return false;
    }
  }
  return Subspace::span(generators, tol).same_as(commutant(generators, tol), tol);
}

std::vector<Eigen::MatrixXd> joint_eigenblocks(
    const std::vector<SymMatrix>& family, const TolerancePolicy& tol) {
  require_nonempty_same_dim(family, "joint_eigenblocks");
  const int n = family.front().dim();
  std::vector<Eigen::MatrixXd> blocks{Eigen::MatrixXd::Identity(n, n)};

  for (const auto& b : family) {
    // Cluster floor sits well above eigensolver drift; genuinely distinct
    // joint eigenvalues in this library's inputs are far larger.
    const double cutoff = std::max(tol.rank_cutoff(n, order_unit_norm(b)),
                                   1e-12 * std::max(1.0, order_unit_norm(b)));
    std::vector<Eigen::MatrixXd> refined;
    for (const auto& w : blocks) {
      if (w.cols() == 1) {
        refined.push_back(w);
        continue;
      }
      const Eigen::MatrixXd s_raw = w.transpose() * b.mat() * w;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          0.5 * (s_raw + s_raw.transpose()));
      const Eigen::VectorXd& ev = es.eigenvalues();
      long i = 0;
      while (i < ev.size()) {
        long j = i;
        while (j < ev.size() && (j == i || ev(j) - ev(j - 1) <= cutoff)) ++j;
        refined.push_back(w * es.eigenvectors().middleCols(i, j - i));
        i = j;
      }
    }
    blocks = std::move(refined);
  }
  return blocks;
}

Subspace extend_to_cblock(const std::vector<SymMatrix>& generators,
                          const TolerancePolicy& tol, int ambient_dim) {
  std::vector<SymMatrix> gens = generators;
  if (gens.empty()) {
    if (ambient_dim < 1) {
      throw PreconditionFailure(
          "extend_to_cblock: empty generator list needs ambient_dim");
    }
    gens.push_back(SymMatrix::identity(ambient_dim));
  }
  require_nonempty_same_dim(gens, "extend_to_cblock");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j], tol)) {
        throw NonCommutative("extend_to_cblock: generators do not commute");
      }
    }
  }
  const int n = gens.front().dim();

  // Block-preserving element with globally simple spectrum: eigenvalue
  // counter walks the joint eigenspaces in order, so its commutant is a
  // maximal commutative subspace containing every generator.
  const auto blocks = joint_eigenblocks(gens, tol);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  double next = 1.0;
  for (const auto& w : blocks) {
    for (long c = 0; c < w.cols(); ++c) {
      g += next * (w.col(c) * w.col(c).transpose());
      next += 1.0;
    }
  }
  gens.push_back(SymMatrix(0.5 * (g + g.transpose())));

  Subspace result = commutant(gens, tol);
  for (const auto& b : generators) {
    if (!result.contains(b, tol)) {
      throw InternalCheckFailure("extend_to_cblock: generator escapes result");
    }
  }
  if (!is_cblock(result.basis(), tol)) {
    throw InternalCheckFailure("extend_to_cblock: result is not a C-block");
  }
  return result;
}

}  // namespace synla
