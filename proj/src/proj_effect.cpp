#include "synla/proj_effect.hpp"

#include <cmath>

#include "synla/genlattice.hpp"

namespace synla {

namespace {

void require_same_dim_list(const std::vector<SymMatrix>& mats) {
  for (const auto& m : mats) detail::require_same_dim(mats.front(), m);
}

SymMatrix symmetrized_product(const SymMatrix& a, const SymMatrix& b) {
  Eigen::MatrixXd m = a.mat() * b.mat();
  return SymMatrix(0.5 * (m + m.transpose()),
                   TolerancePolicy{.eq = 1e-6});
}

}  // namespace

Projection orthocomplement(const Projection& p, const TolerancePolicy& tol) {
  return Projection(SymMatrix::identity(p.dim()) - p.matrix(), tol);
}

Projection proj_join(const Projection& p, const Projection& q,
                     const TolerancePolicy& tol) {
  detail::require_same_dim(p.matrix(), q.matrix());
  const Projection join = carrier(p.matrix() + q.matrix(), tol);
  if (commutes(p.matrix(), q.matrix(), tol)) {
    const SymMatrix expected =
        p.matrix() + q.matrix() - symmetrized_product(p.matrix(), q.matrix());
    if ((join.matrix().mat() - expected.mat()).norm() > 1e-6 * p.dim()) {
      throw InternalCheckFailure(
          "proj_join: commuting pair disagrees with p + q - pq");
    }
  }
  return join;
}

Projection proj_meet(const Projection& p, const Projection& q,
                     const TolerancePolicy& tol) {
  detail::require_same_dim(p.matrix(), q.matrix());
  const SymMatrix one = SymMatrix::identity(p.dim());
  const Projection complement_join =
      carrier((one - p.matrix()) + (one - q.matrix()), tol);
  const Projection meet = Projection(one - complement_join.matrix(), tol);
  if (commutes(p.matrix(), q.matrix(), tol)) {
    const SymMatrix expected = symmetrized_product(p.matrix(), q.matrix());
    if ((meet.matrix().mat() - expected.mat()).norm() > 1e-6 * p.dim()) {
      throw InternalCheckFailure("proj_meet: commuting pair disagrees with pq");
    }
  }
  return meet;
}

CompatibilityResult compatible(const Projection& p, const Projection& q,
                               const TolerancePolicy& tol) {
  detail::require_same_dim(p.matrix(), q.matrix());
  CompatibilityResult result;
  result.commutator_norm = commutator_norm(p.matrix(), q.matrix());
  if (!commutes(p.matrix(), q.matrix(), tol)) {
    return result;
  }
  // Witness from the commuting decomposition d = pq, e1 = p - d, f1 = q - d.
  // The inputs only commute within tolerance, so the witness projections are
  // validated at a proportionally loosened scale.
  TolerancePolicy loose = tol;
  loose.eq = 64.0 * tol.eq;
  const SymMatrix d = symmetrized_product(p.matrix(), q.matrix());
  CompatibilityWitness w{Projection(p.matrix() - d, loose),
                         Projection(q.matrix() - d, loose),
                         Projection(d, loose)};
  const SymMatrix sum = w.e1.matrix() + w.f1.matrix() + w.d.matrix();
  TolerancePolicy slack = tol;
  slack.psd = 64.0 * tol.psd;
  if (!loewner_leq(sum, SymMatrix::identity(p.dim()), slack)) {
    throw InternalCheckFailure("compatible: e1 + f1 + d exceeds the unit");
  }
  result.witness = std::move(w);
  return result;
}

bool jordan_positivity_commutation(const Projection& p, const SymMatrix& a,
                                   const TolerancePolicy& tol) {
  detail::require_same_dim(p.matrix(), a);
  if (!is_psd(a, tol)) {
    throw NotPositive("jordan_positivity_commutation: a must be PSD");
  }
  const bool comm = commutes(p.matrix(), a, tol);
  const SymMatrix j = jordan(p.matrix(), a);
  const bool jordan_psd = is_psd(j, tol);
  if (comm != jordan_psd) {
    // Only fail the self-check when both signals are decisively outside
    // the tolerance gray zone.
    const double comm_scale = std::max(1.0, order_unit_norm(a));
    const Eigen::VectorXd ev = eigvalsh(j);
    const bool decisive =
        commutator_norm(p.matrix(), a) > 100.0 * tol.comm * comm_scale &&
        std::abs(ev(0)) > 100.0 * tol.psd * comm_scale;
    if (decisive) {
      throw InternalCheckFailure(
          "jordan_positivity_commutation: commutation and Jordan "
          "positivity disagree decisively");
    }
  }
  return comm;
}

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Boolean: return "Boolean";
    case StructureKind::MVNotBoolean: return "MV-not-Boolean";
    case StructureKind::OMLNotBoolean: return "OML-not-Boolean";
    case StructureKind::LatticeOnly: return "lattice-only";
    case StructureKind::NotClosed: return "not-closed";
  }
  return "unknown";
}

ClassificationVerdict classify_projection_set(const std::vector<Projection>& s,
                                              const TolerancePolicy& tol) {
  if (s.empty()) {
    throw PreconditionFailure("classify_projection_set: empty set");
  }
  std::vector<SymMatrix> mats;
  mats.reserve(s.size());
  for (const auto& p : s) mats.push_back(p.matrix());
  require_same_dim_list(mats);
  const int n = mats.front().dim();

  ClassificationVerdict verdict;
  auto index_of = [&](const SymMatrix& x) {
    for (std::size_t k = 0; k < mats.size(); ++k) {
      if (approx_equal(mats[k], x, tol)) return static_cast<int>(k);
    }
    return -1;
  };

  // Closure requirements: 0, 1, and orthocomplements must be present.
  bool closed = index_of(SymMatrix::zero(n)) >= 0 &&
                index_of(SymMatrix::identity(n)) >= 0;
  if (!closed) {
    verdict.witnesses.push_back({-1, -1, "missing-zero-or-one"});
  }
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (index_of(SymMatrix::identity(n) - mats[k]) < 0) {
      closed = false;
      verdict.witnesses.push_back(
          {static_cast<int>(k), -1, "missing-orthocomplement"});
    }
  }
  if (!closed) {
    verdict.structure = StructureKind::NotClosed;
    return verdict;
  }

  bool disjoint_implies_orth = true;  // MV direction
  bool orth_implies_disjoint = true;  // OML direction
  const SymMatrix one = SymMatrix::identity(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const bool orthogonal = loewner_leq(mats[i] + mats[j], one, tol);
      const SymMatrix meet = proj_meet(s[i], s[j], tol).matrix();
      const bool disjoint = approx_equal(meet, SymMatrix::zero(n), tol);
      if (index_of(meet) < 0) verdict.meets_in_set = false;
      if (disjoint && !orthogonal) {
        disjoint_implies_orth = false;
        verdict.witnesses.push_back(
            {static_cast<int>(i), static_cast<int>(j),
             "disjoint-not-orthogonal"});
      }
      if (orthogonal && !disjoint) {
        orth_implies_disjoint = false;
        verdict.witnesses.push_back(
            {static_cast<int>(i), static_cast<int>(j),
             "orthogonal-not-disjoint"});
      }
    }
  }

  if (disjoint_implies_orth && orth_implies_disjoint) {
    verdict.structure = StructureKind::Boolean;
  } else if (disjoint_implies_orth) {
    verdict.structure = StructureKind::MVNotBoolean;
  } else if (orth_implies_disjoint) {
    verdict.structure = StructureKind::OMLNotBoolean;
  } else {
    verdict.structure = StructureKind::LatticeOnly;
  }
  return verdict;
}

ClassificationVerdict classify_commutative_effect_set(
    const std::vector<Effect>& f, const TolerancePolicy& tol) {
  if (f.empty()) {
    throw PreconditionFailure("classify_commutative_effect_set: empty set");
  }
  std::vector<SymMatrix> mats;
  mats.reserve(f.size());
  for (const auto& e : f) mats.push_back(e.matrix());
  require_same_dim_list(mats);
  const int n = mats.front().dim();
  const SymMatrix one = SymMatrix::identity(n);

  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!commutes(mats[i], mats[j], tol)) {
        throw NonCommutative("classify_commutative_effect_set: pair (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ") does not commute");
      }
    }
  }

  ClassificationVerdict verdict;
  bool mv = true;
  bool orth_implies_disjoint = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const SymMatrix& e = mats[i];
      const SymMatrix& g = mats[j];
      const SymMatrix meet = ginf(e, g);
      const SymMatrix join = gsup(e, g);
      const bool disjoint = approx_equal(meet, SymMatrix::zero(n), tol);
      const bool orthogonal = loewner_leq(e + g, one, tol);
      auto witness = [&](const char* label) {
        verdict.witnesses.push_back(
            {static_cast<int>(i), static_cast<int>(j), label});
      };

      // (e v f) - e = f - (e ^ f)
      if (!approx_equal(join - e, g - meet, tol)) {
        mv = false;
        witness("join-minus-meet-identity");
      }
      // disjoint => orthogonal
      if (disjoint && !orthogonal) {
        mv = false;
        witness("disjoint-not-orthogonal");
      }
      // e - (e ^ f) orthogonal to f
      if (!loewner_leq((e - meet) + g, one, tol)) {
        mv = false;
        witness("residual-not-orthogonal");
      }
      // compatibility: e1 = e - d, f1 = f - d, d = e ^ f, sum <= 1
      const SymMatrix d = meet;
      const bool parts_ok = is_effect(e - d, tol) && is_effect(g - d, tol) &&
                            is_effect(d, tol) &&
                            loewner_leq((e - d) + (g - d) + d, one, tol);
      if (!parts_ok) {
        mv = false;
        witness("incompatible");
      }
      if (orthogonal && !disjoint) {
        orth_implies_disjoint = false;
        witness("orthogonal-not-disjoint");
      }
    }
  }

  if (mv && orth_implies_disjoint) {
    verdict.structure = StructureKind::Boolean;
  } else if (mv) {
    verdict.structure = StructureKind::MVNotBoolean;
  } else if (orth_implies_disjoint) {
    verdict.structure = StructureKind::OMLNotBoolean;
  } else {
    verdict.structure = StructureKind::LatticeOnly;
  }
  return verdict;
}

}  // namespace synla
