#ifndef SYNLA_INSTANCE_GEN_HPP
#define SYNLA_INSTANCE_GEN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "synla/commutant.hpp"
#include "synla/rng.hpp"
#include "synla/symmat.hpp"

namespace synla {

enum class GenKind {
  Sym,
  Psd,
  OrderedPair,
  CommutingFamily,
  ZeroProductPair,
  Projection,
  SubspaceDiagonal,
  SubspaceFull,
  SubspaceSpan,
};

GenKind gen_kind_from_string(const std::string& s);
std::string to_string(GenKind k);

/// Fully seeded generator request. The seed determines the output
/// bit-exactly; count is the number of objects (pairs count as one each,
/// emitted as consecutive matrices; for SubspaceSpan it is the number of
/// joint blocks).
struct GenSpec {
  GenKind kind = GenKind::Sym;
  int n = 2;
  int count = 1;
  std::uint64_t seed = 0;
  std::pair<double, double> spectrum_range{-1.0, 1.0};

  void validate() const;
};

using GenOutput = std::variant<std::vector<SymMatrix>, Subspace>;

GenOutput generate(const GenSpec& spec);

/// Haar-style random orthonormal matrix: QR of a seeded Gaussian matrix
/// with the sign convention fixed by R's diagonal.
Eigen::MatrixXd random_orthonormal(int n, Rng& rng);

/// Q diag(spectrum) Q^T with spectrum uniform in [lo, hi].
SymMatrix random_sym(int n, Rng& rng, double lo = -1.0, double hi = 1.0);

/// PSD sample; spectrum uniform in [max(lo,0), hi].
SymMatrix random_psd(int n, Rng& rng, double lo = 0.0, double hi = 1.0);

/// (a, b) with 0 <= a <= b exactly by construction (b = a + PSD bump).
std::pair<SymMatrix, SymMatrix> random_ordered_pair(int n, Rng& rng,
                                                    double lo = 0.0,
                                                    double hi = 1.0);

/// Matrices sharing one random eigenbasis; pairwise commuting.
std::vector<SymMatrix> random_commuting_family(int n, int count, Rng& rng,
                                               double lo = -1.0,
                                               double hi = 1.0);

/// PSD (a, b) with ab = 0 exactly by construction (complementary supports).
std::pair<SymMatrix, SymMatrix> random_zero_product_pair(int n, Rng& rng,
                                                         double lo = 0.0,
                                                         double hi = 1.0);

/// Random-rank projection (rank uniform in [1, n-1]; use n >= 2).
SymMatrix random_projection(int n, Rng& rng);

/// Diagonal matrices of Sym(n).
Subspace subspace_diagonal(int n);

/// All of Sym(n).
Subspace subspace_full(int n);

/// Commutative span-with-unit: the span of `blocks` joint-eigenspace
/// projections of a random orthonormal basis (a commutative subalgebra
/// containing the identity, closed under absolute value and carrier).
Subspace subspace_block_span(int n, int blocks, Rng& rng);

/// Rotated block subalgebra ⊕_i Sym(k_i) (plus the identity), closed under
/// absolute value and carrier; commutative iff every block has size 1.
Subspace random_subalgebra(int n, const std::vector<int>& block_sizes,
                           Rng& rng);

}  // namespace synla

#endif  // SYNLA_INSTANCE_GEN_HPP
