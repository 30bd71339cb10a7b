#ifndef SYNLA_PROJ_EFFECT_HPP
#define SYNLA_PROJ_EFFECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "synla/projection.hpp"
#include "synla/symmat.hpp"
#include "synla/synaptic_ops.hpp"

namespace synla {

/// Orthosupplement 1 - p; involutive, p(1-p) = 0.
Projection orthocomplement(const Projection& p, const TolerancePolicy& tol = {});

/// Join in the OML P: the carrier of p + q (projection onto the range sum).
Projection proj_join(const Projection& p, const Projection& q,
                     const TolerancePolicy& tol = {});

/// Meet in the OML P: 1 - carrier((1-p) + (1-q)) (range intersection).
Projection proj_meet(const Projection& p, const Projection& q,
                     const TolerancePolicy& tol = {});

/// Compatibility decomposition of a commuting pair: p = e1 + d, q = f1 + d
/// with d = pq and e1 + f1 + d <= 1, all three projections. Non-commuting
/// pairs are incompatible; the commutator norm is the evidence.
struct CompatibilityWitness {
  Projection e1, f1, d;
};

struct CompatibilityResult {
  std::optional<CompatibilityWitness> witness;
  double commutator_norm = 0.0;
  bool compatible() const { return witness.has_value(); }
};

CompatibilityResult compatible(const Projection& p, const Projection& q,
                               const TolerancePolicy& tol = {});

/// pCa <=> 0 <= p ⊙ a for PSD a; returns the commutation verdict and
/// self-checks the equivalence when the numerical margin is decisive.
bool jordan_positivity_commutation(const Projection& p, const SymMatrix& a,
                                   const TolerancePolicy& tol = {});

enum class StructureKind {
  Boolean,
  MVNotBoolean,
  OMLNotBoolean,
  LatticeOnly,
  NotClosed,
};

std::string to_string(StructureKind k);

/// Boolean and MV-not-Boolean sets are MV-effect algebras.
inline bool is_mv_effect_algebra(StructureKind k) {
  return k == StructureKind::Boolean || k == StructureKind::MVNotBoolean;
}

/// A pair (by index into the classified set) violating a named condition.
struct PairWitness {
  int i = 0;
  int j = 0;
  std::string violated;
};

struct ClassificationVerdict {
  StructureKind structure = StructureKind::NotClosed;
  std::vector<PairWitness> witnesses;
  /// Meets of all pairs landed inside the classified set (diagnostic only).
  bool meets_in_set = true;
};

/// Classifies a finite set of projections containing 0 and 1 and closed
/// under orthocomplement. Disjointness uses the meet computed in the full
/// OML P; orthogonality is p + q <= 1. Every failed direction carries a
/// witness pair; pairs are scanned in lexicographic order.
ClassificationVerdict classify_projection_set(const std::vector<Projection>& s,
                                              const TolerancePolicy& tol = {});

/// Classifies a finite commuting set of effects by the four equivalent
/// MV conditions (meet = generalized infimum, valid in the commutative
/// case); refines to Boolean when orthogonal pairs are also disjoint.
/// Raises NonCommutative naming the offending pair otherwise.
ClassificationVerdict classify_commutative_effect_set(
    const std::vector<Effect>& f, const TolerancePolicy& tol = {});

}  // namespace synla

#endif  // SYNLA_PROJ_EFFECT_HPP
