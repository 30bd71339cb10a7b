#ifndef SYNLA_VLCERT_HPP
#define SYNLA_VLCERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synla/commutant.hpp"
#include "synla/symmat.hpp"

namespace synla {

/// Sampled membership certificate for one closure mapping. A passing
/// verdict is evidence at the sample budget, not a proof, unless the
/// report's `conclusive` flag is set (commutative fast path).
struct MembershipCheck {
  bool passed = true;
  double worst_residual = 0.0;
  std::optional<SymMatrix> witness;  ///< element whose image left V
};

struct ClosureReport {
  bool contains_unit = false;
  double unit_residual = 0.0;
  MembershipCheck abs_closed;
  MembershipCheck carrier_closed;
  // Derived closures; by the absolute-value closure equivalences these
  // cannot disagree with abs_closed, so any disagreement is flagged.
  MembershipCheck pos_closed;
  MembershipCheck neg_closed;
  MembershipCheck ginf_closed;
  MembershipCheck gsup_closed;
  bool derived_consistent = true;
  /// Joint-eigenbasis fast path applied (V commutative): the combined
  /// hypothesis verdict is conclusive, not merely sampled.
  bool conclusive = false;
  int samples_used = 0;
  std::uint64_t seed = 0;

  bool hypotheses_met() const {
    return contains_unit && abs_closed.passed && carrier_closed.passed;
  }
};

/// Tests |a|, a°, and the spectral projections of sampled elements for
/// membership in V (basis elements plus `samples` random combinations).
/// For commutative V the joint-eigenblock criterion decides the closure
/// hypotheses conclusively.
ClosureReport check_closure(const Subspace& v, int samples, std::uint64_t seed,
                            const TolerancePolicy& tol = {});

struct CommutativityVerdict {
  bool commutative = true;
  int witness_i = -1;  ///< first non-commuting basis pair, if any
  int witness_j = -1;
  double commutator_norm = 0.0;
};

/// Pairwise commutation of the basis (sufficient by bilinearity).
CommutativityVerdict is_commutative(const Subspace& v,
                                    const TolerancePolicy& tol = {});

enum class CertVerdict { VectorLattice, NotVectorLattice, HypothesesNotMet };
std::string to_string(CertVerdict v);

struct NamedMatrix {
  std::string name;
  SymMatrix matrix;
};

struct CertWitness {
  std::string condition;
  double violation = 0.0;  ///< magnitude of the violated margin
  std::string detail;
  std::vector<NamedMatrix> matrices;
};

struct ConditionResult {
  bool holds = true;  ///< held on every sample (or witness attached)
  int samples = 0;
  std::optional<CertWitness> witness;
};

/// Condition labels, in report order.
inline const std::vector<std::string>& cert_condition_labels() {
  static const std::vector<std::string> labels{
      "L",   "commutativity", "disjoint-meet", "pos-part-sup",
      "RDP", "J",             "SQ",            "T",
      "abs-order", "P", "O", "J+"};
  return labels;
}

struct CertReport {
  ClosureReport closure;
  CommutativityVerdict commutative;
  CertVerdict verdict = CertVerdict::HypothesesNotMet;
  std::vector<std::pair<std::string, ConditionResult>> conditions;
  std::vector<CertWitness> witnesses;
  std::uint64_t seed = 0;
  int budget = 0;

  const ConditionResult* condition(const std::string& label) const;
};

/// The certifier: HypothesesNotMet when the closure hypotheses fail;
/// otherwise the verdict equals the commutativity verdict. Commutative
/// subspaces get all twelve conditions property-tested on `budget`
/// samples; non-commutative subspaces get a deterministic-then-seeded
/// witness search for explicit violations, strongest witness kept per
/// condition. Fixed seed implies an identical report.
CertReport certify_vector_lattice(const Subspace& v, int budget,
                                  std::uint64_t seed,
                                  const TolerancePolicy& tol = {});

/// The lattice operations of a commutative V with closure: (ginf, gsup),
/// membership-checked. Raises NonCommutative / NotMember.
std::pair<SymMatrix, SymMatrix> lattice_ops(const Subspace& v,
                                            const SymMatrix& a,
                                            const SymMatrix& b,
                                            const TolerancePolicy& tol = {});

/// Constructive Riesz decomposition in a commutative V: for PSD a, b, c in
/// V with c <= a + b returns (a1, b1) = (ginf(c, a), c - a1) with
/// 0 <= a1 <= a, 0 <= b1 <= b, c = a1 + b1 asserted.
std::pair<SymMatrix, SymMatrix> riesz_decompose(const Subspace& v,
                                                const SymMatrix& a,
                                                const SymMatrix& b,
                                                const SymMatrix& c,
                                                const TolerancePolicy& tol = {});

}  // namespace synla

#endif  // SYNLA_VLCERT_HPP
