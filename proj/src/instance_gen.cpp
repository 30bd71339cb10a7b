#include "synla/instance_gen.hpp"

#include <algorithm>
#include <numeric>

namespace synla {

namespace {

SymMatrix from_spectrum(const Eigen::MatrixXd& q, const Eigen::VectorXd& lam) {
  Eigen::MatrixXd m = q * lam.asDiagonal() * q.transpose();
  return SymMatrix(0.5 * (m + m.transpose()));
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  }
  return perm;
}

}  // namespace

GenKind gen_kind_from_string(const std::string& s) {
  if (s == "sym") return GenKind::Sym;
  if (s == "psd") return GenKind::Psd;
  if (s == "ordered-pair") return GenKind::OrderedPair;
  if (s == "commuting-family") return GenKind::CommutingFamily;
  if (s == "zero-product-pair") return GenKind::ZeroProductPair;
  if (s == "projection") return GenKind::Projection;
  if (s == "subspace-diagonal") return GenKind::SubspaceDiagonal;
  if (s == "subspace-full") return GenKind::SubspaceFull;
  if (s == "subspace-span") return GenKind::SubspaceSpan;
  throw PreconditionFailure("unknown generator kind: " + s);
}

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::Sym: return "sym";
    case GenKind::Psd: return "psd";
    case GenKind::OrderedPair: return "ordered-pair";
    case GenKind::CommutingFamily: return "commuting-family";
    case GenKind::ZeroProductPair: return "zero-product-pair";
    case GenKind::Projection: return "projection";
    case GenKind::SubspaceDiagonal: return "subspace-diagonal";
    case GenKind::SubspaceFull: return "subspace-full";
    case GenKind::SubspaceSpan: return "subspace-span";
  }
  return "unknown";
}

void GenSpec::validate() const {
  if (n < 1) throw PreconditionFailure("GenSpec: n must be >= 1");
  if (count < 1) throw PreconditionFailure("GenSpec: count must be >= 1");
  if (!(spectrum_range.first <= spectrum_range.second)) {
    throw PreconditionFailure("GenSpec: empty spectrum range");
  }
  if ((kind == GenKind::Projection || kind == GenKind::ZeroProductPair) &&
      n < 2) {
    throw PreconditionFailure("GenSpec: kind needs n >= 2");
  }
}

Eigen::MatrixXd random_orthonormal(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  return q;
}

SymMatrix random_sym(int n, Rng& rng, double lo, double hi) {
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  Eigen::VectorXd lam(n);
  for (int i = 0; i < n; ++i) lam(i) = rng.uniform(lo, hi);
  return from_spectrum(q, lam);
}

SymMatrix random_psd(int n, Rng& rng, double lo, double hi) {
  return random_sym(n, rng, std::max(lo, 0.0), std::max(hi, 0.0));
}

std::pair<SymMatrix, SymMatrix> random_ordered_pair(int n, Rng& rng,
                                                    double lo, double hi) {
  const SymMatrix a = random_psd(n, rng, lo, hi);
  const SymMatrix bump = random_psd(n, rng, lo, hi);
  return {a, a + bump};
}

std::vector<SymMatrix> random_commuting_family(int n, int count, Rng& rng,
                                               double lo, double hi) {
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  std::vector<SymMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd lam(n);
    for (int i = 0; i < n; ++i) lam(i) = rng.uniform(lo, hi);
    out.push_back(from_spectrum(q, lam));
  }
  return out;
}

std::pair<SymMatrix, SymMatrix> random_zero_product_pair(int n, Rng& rng,
                                                         double lo,
                                                         double hi) {
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  const auto perm = random_permutation(n, rng);
  const int ka = rng.uniform_int(1, n - 1);
  const int kb = rng.uniform_int(1, n - ka);
  const double floor = std::max(lo, 0.0);
  const double ceil = std::max({hi, floor, 0.1});
  Eigen::VectorXd la = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd lb = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < ka; ++i) {
    la(perm[static_cast<std::size_t>(i)]) = rng.uniform(floor + 0.05, ceil + 0.05);
  }
  for (int i = ka; i < ka + kb; ++i) {
    lb(perm[static_cast<std::size_t>(i)]) = rng.uniform(floor + 0.05, ceil + 0.05);
  }
  return {from_spectrum(q, la), from_spectrum(q, lb)};
}

SymMatrix random_projection(int n, Rng& rng) {
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  const int rank = rng.uniform_int(1, n - 1);
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < rank; ++i) lam(i) = 1.0;
  return from_spectrum(q, lam);
}

Subspace subspace_diagonal(int n) {
  std::vector<SymMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e(i, i) = 1.0;
    basis.emplace_back(e);
  }
  return Subspace::span(basis);
}

Subspace subspace_full(int n) {
  std::vector<SymMatrix> basis;
  basis.reserve(static_cast<std::size_t>(sym_space_dim(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(i, j) = e(j, i) = 1.0;
      basis.emplace_back(e);
    }
  }
  return Subspace::span(basis);
}

Subspace subspace_block_span(int n, int blocks, Rng& rng) {
  if (blocks < 1 || blocks > n) {
    throw PreconditionFailure("subspace_block_span: need 1 <= blocks <= n");
  }
  std::vector<int> sizes(static_cast<std::size_t>(blocks), 1);
  for (int extra = 0; extra < n - blocks; ++extra) {
    sizes[static_cast<std::size_t>(rng.uniform_int(0, blocks - 1))] += 1;
  }
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  std::vector<SymMatrix> basis;
  int at = 0;
  for (int size : sizes) {
    Eigen::VectorXd ind = Eigen::VectorXd::Zero(n);
    ind.segment(at, size).setOnes();
    basis.push_back(from_spectrum(q, ind));
    at += size;
  }
  return Subspace::span(basis);
}

Subspace random_subalgebra(int n, const std::vector<int>& block_sizes,
                           Rng& rng) {
  const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != n || block_sizes.empty()) {
    throw PreconditionFailure("random_subalgebra: block sizes must sum to n");
  }
  const Eigen::MatrixXd q = random_orthonormal(n, rng);
  std::vector<SymMatrix> basis;
  int at = 0;
  for (int size : block_sizes) {
    if (size < 1) {
      throw PreconditionFailure("random_subalgebra: block sizes must be >= 1");
    }
    for (int i = at; i < at + size; ++i) {
      for (int j = i; j < at + size; ++j) {
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
        e(i, j) = e(j, i) = 1.0;
        Eigen::MatrixXd m = q * e * q.transpose();
        basis.emplace_back(0.5 * (m + m.transpose()));
      }
    }
    at += size;
  }
  return Subspace::span(basis);
}

GenOutput generate(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto [lo, hi] = spec.spectrum_range;
  switch (spec.kind) {
    case GenKind::Sym: {
      std::vector<SymMatrix> out;
      for (int k = 0; k < spec.count; ++k) {
        out.push_back(random_sym(spec.n, rng, lo, hi));
      }
      return out;
    }
    case GenKind::Psd: {
      std::vector<SymMatrix> out;
      for (int k = 0; k < spec.count; ++k) {
        out.push_back(random_psd(spec.n, rng, lo, hi));
      }
      return out;
    }
    case GenKind::OrderedPair: {
      std::vector<SymMatrix> out;
      for (int k = 0; k < spec.count; ++k) {
        auto [a, b] = random_ordered_pair(spec.n, rng, lo, hi);
        out.push_back(std::move(a));
        out.push_back(std::move(b));
      }
      return out;
    }
    case GenKind::CommutingFamily:
      return random_commuting_family(spec.n, spec.count, rng, lo, hi);
    case GenKind::ZeroProductPair: {
      std::vector<SymMatrix> out;
      for (int k = 0; k < spec.count; ++k) {
        auto [a, b] = random_zero_product_pair(spec.n, rng, lo, hi);
        out.push_back(std::move(a));
        out.push_back(std::move(b));
      }
      return out;
    }
    case GenKind::Projection: {
      std::vector<SymMatrix> out;
      for (int k = 0; k < spec.count; ++k) {
        out.push_back(random_projection(spec.n, rng));
      }
      return out;
    }
    case GenKind::SubspaceDiagonal:
      return subspace_diagonal(spec.n);
    case GenKind::SubspaceFull:
      return subspace_full(spec.n);
    case GenKind::SubspaceSpan:
      return subspace_block_span(spec.n, std::min(spec.count, spec.n), rng);
  }
  throw PreconditionFailure("generate: unhandled kind");
}

}  // namespace synla
