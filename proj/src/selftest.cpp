#include "synla/selftest.hpp"

#include <functional>

#include "synla/genlattice.hpp"
#include "synla/instance_gen.hpp"
#include "synla/proj_effect.hpp"
#include "synla/synaptic_ops.hpp"
#include "synla/vlcert.hpp"

namespace synla {

namespace {

struct Harness {
  SelftestResult result;

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(": ") + e.what();
    }
    if (ok) {
      result.passed++;
    } else {
      result.failed++;
      result.failures.push_back(name + note);
    }
  }
};

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  Harness h;
  const TolerancePolicy tol;
  TolerancePolicy loose = tol;
  loose.psd = 1e-8;
  loose.eq = 1e-8;

  h.check("loewner order is reflexive and unit-bounded", [&] {
    Rng rng(seed);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng, -2.0, 2.0);
      const double norm = order_unit_norm(a);
      if (!loewner_leq(a, a)) return false;
      if (!loewner_leq(a, SymMatrix::scalar(n, norm), loose)) return false;
      if (!loewner_leq(SymMatrix::scalar(n, -norm), a, loose)) return false;
    }
    return true;
  });

  h.check("jordan is bilinear with jordan(a,a) = a^2", [&] {
    Rng rng(seed + 1);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng);
      const SymMatrix b = random_sym(n, rng);
      const SymMatrix c = random_sym(n, rng);
      if (!approx_equal(jordan(a + b, c), jordan(a, c) + jordan(b, c), loose))
        return false;
      const SymMatrix sq{Eigen::MatrixXd(a.mat() * a.mat())};
      if (!approx_equal(jordan(a, a), sq, loose)) return false;
    }
    return true;
  });

  h.check("quad preserves order", [&] {
    Rng rng(seed + 2);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng);
      auto [b, c] = random_ordered_pair(n, rng);
      if (!loewner_leq(quad(a, b), quad(a, c), loose)) return false;
    }
    return true;
  });

  h.check("sqrt squares back and is monotone (MSR)", [&] {
    Rng rng(seed + 3);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      auto [a, b] = random_ordered_pair(n, rng);
      const SymMatrix ra = sqrt(a);
      if (!approx_equal(jordan(ra, ra), a, loose)) return false;
      if (!loewner_leq(ra, sqrt(b), loose)) return false;
    }
    return true;
  });

  h.check("decompose: a = pos - neg, pos*neg = 0, |a| = pos + neg", [&] {
    Rng rng(seed + 4);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng);
      auto [p, m] = decompose(a);
      if (!approx_equal(p - m, a, loose)) return false;
      if ((p.mat() * m.mat()).norm() > 1e-8) return false;
      if (!approx_equal(p + m, abs(a), loose)) return false;
    }
    return true;
  });

  h.check("carrier reproduces a and is monotone on ordered PSD pairs", [&] {
    Rng rng(seed + 5);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      auto [a, b] = random_ordered_pair(n, rng);
      const SymMatrix pa = carrier(a).matrix();
      if ((a.mat() * pa.mat() - a.mat()).norm() > 1e-8) return false;
      if (!loewner_leq(pa, carrier(b).matrix(), loose)) return false;
    }
    return true;
  });

  h.check("spectral resolution ascends and reconstructs", [&] {
    Rng rng(seed + 6);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng);
      const SpectralResolution sr = spectral_resolution(a);
      if (!approx_equal(sr.breakpoints.back().second.matrix(),
                        SymMatrix::identity(n), loose)) {
        return false;
      }
      for (std::size_t i = 1; i < sr.breakpoints.size(); ++i) {
        if (!loewner_leq(sr.breakpoints[i - 1].second.matrix(),
                         sr.breakpoints[i].second.matrix(), loose)) {
          return false;
        }
      }
      if (!approx_equal(sr.reconstruct(), a, loose)) return false;
    }
    return true;
  });

  h.check("spectral projections commute with the source iff aCb", [&] {
    Rng rng(seed + 7);
    for (int k = 0; k < 10; ++k) {
      const int n = 2 + k % 3;
      const auto fam = random_commuting_family(n, 2, rng);
      for (const auto& bp : spectral_resolution(fam[0]).breakpoints) {
        if (!commutes(bp.second.matrix(), fam[1], loose)) return false;
      }
    }
    return true;
  });

  h.check("ginf/gsup satisfy Dedekind's law and duality", [&] {
    Rng rng(seed + 8);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const SymMatrix a = random_sym(n, rng);
      const SymMatrix b = random_sym(n, rng);
      if (!approx_equal(a + b, ginf(a, b) + gsup(a, b), loose)) return false;
      if (!approx_equal(gsup(a, b), -ginf(-a, -b), loose)) return false;
      if (!loewner_leq(ginf(a, b), a, loose)) return false;
      if (!loewner_leq(a, gsup(a, b), loose)) return false;
    }
    return true;
  });

  h.check("zero-product pairs satisfy all four disjointness conditions", [&] {
    Rng rng(seed + 9);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      auto [a, b] = random_zero_product_pair(n, rng);
      const DisjointVerdict v = check_disjoint(a, b);
      if (!v.disjoint() || !v.consistent()) return false;
    }
    return true;
  });

  h.check("ginf is a maximal lower bound", [&] {
    Rng rng(seed + 10);
    for (int k = 0; k < 5; ++k) {
      const int n = 2 + k % 3;
      const SymMatrix a = random_sym(n, rng);
      const SymMatrix b = random_sym(n, rng);
      if (!check_maximal_lower_bound(a, b, 20, seed + k).ok()) return false;
    }
    return true;
  });

  h.check("commuting PSD pairs have PSD ginf", [&] {
    Rng rng(seed + 11);
    for (int k = 0; k < 20; ++k) {
      const int n = 2 + k % 4;
      const auto fam = random_commuting_family(n, 2, rng, 0.0, 1.0);
      if (!is_psd(ginf(fam[0], fam[1]), loose)) return false;
    }
    return true;
  });

  h.check("projections classify and complement correctly", [&] {
    const Projection p(SymMatrix::diagonal({1, 0}));
    const Projection q = orthocomplement(p);
    if (!approx_equal(q.matrix(), SymMatrix::diagonal({0, 1}))) return false;
    if (!is_projection(p.matrix()) || is_effect(SymMatrix::diagonal({1.2, 0})))
      return false;
    return proj_meet(p, q).matrix().mat().norm() < 1e-9;
  });

  h.check("compatible commuting projections decompose", [&] {
    Rng rng(seed + 12);
    for (int k = 0; k < 10; ++k) {
      const int n = 2 + k % 3;
      const Projection p{random_projection(n, rng)};
      const auto r = compatible(p, p);
      if (!r.compatible()) return false;
      if (!approx_equal(r.witness->d.matrix(), p.matrix(), loose)) return false;
    }
    return true;
  });

  h.check("commutant dimensions match the block structure", [&] {
    const Subspace c1 = commutant({SymMatrix::diagonal({1, 2})});
    const Subspace c2 = commutant({SymMatrix::identity(2)});
    const Subspace cc = bicommutant({SymMatrix::diagonal({1, 1, 2})});
    return c1.dim() == 2 && c2.dim() == 3 && cc.dim() == 2;
  });

  h.check("functional calculus lands in the bicommutant", [&] {
    Rng rng(seed + 13);
    for (int k = 0; k < 5; ++k) {
      const int n = 2 + k % 3;
      const SymMatrix a = random_psd(n, rng, 0.1, 1.0);
      const Subspace cc = bicommutant({a});
      if (!cc.contains(sqrt(a), loose)) return false;
      if (!cc.contains(abs(a), loose)) return false;
      if (!cc.contains(carrier(a).matrix(), loose)) return false;
    }
    return true;
  });

  h.check("extend_to_cblock yields a C-block containing the input", [&] {
    Rng rng(seed + 14);
    for (int k = 0; k < 5; ++k) {
      const int n = 2 + k % 3;
      const SymMatrix a = random_sym(n, rng);
      const Subspace block = extend_to_cblock({a});
      if (!is_cblock(block.basis())) return false;
      if (!block.contains(a, loose)) return false;
    }
    return true;
  });

  h.check("certifier: commutative passes, full Sym(2) fails with witness", [&] {
    const CertReport good =
        certify_vector_lattice(subspace_diagonal(3), 40, seed);
    if (good.verdict != CertVerdict::VectorLattice) return false;
    const CertReport bad = certify_vector_lattice(subspace_full(2), 40, seed);
    if (bad.verdict != CertVerdict::NotVectorLattice) return false;
    return !bad.witnesses.empty();
  });

  h.check("certifier verdict equals commutativity on random subalgebras", [&] {
    Rng rng(seed + 15);
    for (int k = 0; k < 6; ++k) {
      const int n = 3 + k % 2;
      const bool want_comm = k % 2 == 0;
      const std::vector<int> blocks =
          want_comm ? std::vector<int>(static_cast<std::size_t>(n), 1)
                    : std::vector<int>{2, n - 2};
      const Subspace v = random_subalgebra(n, blocks, rng);
      const CertReport r = certify_vector_lattice(v, 30, seed + k);
      const bool lattice = r.verdict == CertVerdict::VectorLattice;
      if (lattice != is_commutative(v).commutative) return false;
    }
    return true;
  });

  h.check("riesz decomposition satisfies its postconditions", [&] {
    Rng rng(seed + 16);
    for (int k = 0; k < 10; ++k) {
      const int n = 2 + k % 3;
      const Subspace v = subspace_diagonal(n);
      std::vector<double> da(static_cast<std::size_t>(n)),
          db(static_cast<std::size_t>(n)), dc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        da[static_cast<std::size_t>(i)] = rng.uniform(0.0, 1.0);
        db[static_cast<std::size_t>(i)] = rng.uniform(0.0, 1.0);
        dc[static_cast<std::size_t>(i)] =
            rng.uniform(0.0, 1.0) * (da[static_cast<std::size_t>(i)] +
                                     db[static_cast<std::size_t>(i)]);
      }
      const SymMatrix a = SymMatrix::diagonal(da);
      const SymMatrix b = SymMatrix::diagonal(db);
      const SymMatrix c = SymMatrix::diagonal(dc);
      auto [a1, b1] = riesz_decompose(v, a, b, c);
      if (!is_psd(a1, loose) || !loewner_leq(a1, a, loose)) return false;
      if (!is_psd(b1, loose) || !loewner_leq(b1, b, loose)) return false;
      if (!approx_equal(a1 + b1, c, loose)) return false;
    }
    return true;
  });

  h.check("generators are deterministic and hit their target class", [&] {
    GenSpec spec{GenKind::Projection, 4, 3, seed + 17, {0.0, 1.0}};
    const auto out1 = std::get<std::vector<SymMatrix>>(generate(spec));
    const auto out2 = std::get<std::vector<SymMatrix>>(generate(spec));
    for (std::size_t i = 0; i < out1.size(); ++i) {
      if (out1[i].mat() != out2[i].mat()) return false;
      TolerancePolicy strict = tol;
      strict.eq = 1e-10;
      if (!is_projection(out1[i], strict)) return false;
    }
    return true;
  });

  return h.result;
}

}  // namespace synla
