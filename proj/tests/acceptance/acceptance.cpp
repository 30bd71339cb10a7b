// Acceptance suite: one criterion per check, one PASS/FAIL line each.
// Exit code is the number of failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../oracles.hpp"
#include "synla/genlattice.hpp"
#include "synla/instance_gen.hpp"
#include "synla/proj_effect.hpp"
#include "synla/synaptic_ops.hpp"
#include "synla/vlcert.hpp"

using namespace synla;
using nlohmann::json;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& note = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << what;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun run;
  const std::string cmd = std::string(SYNLA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    run.out += buf.data();
  }
  run.exit_code = WEXITSTATUS(pclose(pipe));
  return run;
}

// 1. ginf/gsup vs the simultaneous-diagonalization min/max oracle:
// 1000 commuting pairs, dims 2-8, Frobenius agreement <= 1e-8, under 10 s.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + k % 7;
    const Eigen::MatrixXd q = random_orthonormal(n, rng);
    Eigen::VectorXd la(n), lb(n);
    for (int i = 0; i < n; ++i) {
      la(i) = rng.uniform(-2.0, 2.0);
      lb(i) = rng.uniform(-2.0, 2.0);
    }
    const auto pair = oracle::commuting_pair(q, la, lb);
    const SymMatrix a(pair.a);
    const SymMatrix b(pair.b);
    worst = std::max(worst, (ginf(a, b).mat() - pair.emin).norm());
    worst = std::max(worst, (gsup(a, b).mat() - pair.emax).norm());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, "commuting pairs: ginf/gsup match the entrywise min/max oracle",
         worst <= 1e-8 && secs < 10.0,
         "worst residual " + std::to_string(worst) + ", " +
             std::to_string(secs) + " s");
}

// 2. The nine generalized-lattice identities, 1000 random pairs, <= 1e-8.
void criterion2() {
  Rng rng(102);
  double worst = 0.0;
  auto track = [&worst](const SymMatrix& x) {
    worst = std::max(worst, frobenius_norm(x));
  };
  const TolerancePolicy slack{.psd = 1e-8};
  bool order_ok = true;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + k % 7;
    const SymMatrix a = random_sym(n, rng, -2.0, 2.0);
    const SymMatrix b = random_sym(n, rng, -2.0, 2.0);
    const SymMatrix c = random_sym(n, rng, -1.0, 1.0);
    const SymMatrix meet = ginf(a, b);
    const SymMatrix join = gsup(a, b);
    const SymMatrix zero = SymMatrix::zero(n);

    track(meet - ginf(b, a));                                   // (i)
    order_ok = order_ok && loewner_leq(meet, a, slack) &&
               loewner_leq(meet, b, slack) && loewner_leq(a, join, slack) &&
               loewner_leq(b, join, slack);
    const SymMatrix above = a + pos_part(b);                    // (ii)
    track(ginf(a, above) - a);
    track(gsup(a, above) - above);
    track(a + b - (meet + join));                               // (iii)
    track(abs(a - b) - (join - meet));
    track(meet + c - ginf(a + c, b + c));                       // (iv)
    track(join + c - gsup(a + c, b + c));
    track(join + ginf(-a, -b));                                 // (v)
    track(meet + gsup(-a, -b));
    track(gsup(a, zero) - pos_part(a));                         // (vi)
    track(ginf(a, zero) + neg_part(a));
    track(gsup(a, -a) - abs(a));
    track(ginf(a, -a) + abs(a));
    auto [pos, neg] = decompose(a);                             // (vii)
    worst = std::max(worst, (pos.mat() * neg.mat()).norm());
    track(ginf(pos, neg));
    track(a - meet - pos_part(a - b));                          // (viii)
    track(b - meet - neg_part(a - b));
    const Eigen::MatrixXd resid =
        (a - meet).mat() * (b - meet).mat();                    // (ix)
    worst = std::max(worst, resid.norm());
    track(ginf(a - meet, b - meet));
  }
  report(2, "nine-part generalized-lattice identity suite",
         worst <= 1e-8 && order_ok, "worst residual " + std::to_string(worst));
}

// 3. Four-way disjointness equivalence on constructed and generic pairs.
void criterion3() {
  Rng rng(103);
  bool ok = true;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 7;
    auto [a, b] = random_zero_product_pair(n, rng);
    const DisjointVerdict v = check_disjoint(a, b);
    ok = ok && v.consistent() && v.ginf_zero && v.sum_is_absdiff &&
         v.psd_jordan_zero && v.psd_product_zero;
  }
  int generic = 0;
  while (generic < 200) {
    const int n = 2 + generic % 7;
    const SymMatrix a = random_psd(n, rng, 0.1, 1.5);
    const SymMatrix b = random_psd(n, rng, 0.1, 1.5);
    if ((a.mat() * b.mat()).norm() <= 1e-3) continue;
    ++generic;
    const DisjointVerdict v = check_disjoint(a, b);
    ok = ok && v.consistent() && !v.ginf_zero && !v.sum_is_absdiff &&
         !v.psd_jordan_zero && !v.psd_product_zero;
  }
  report(3, "disjointness equivalence with zero cross-disagreements", ok);
}

// 4. Monotone square root on 1000 ordered PSD pairs, PSD slack >= -1e-8.
void criterion4() {
  Rng rng(104);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + k % 7;
    auto [a, b] = random_ordered_pair(n, rng);
    const Eigen::VectorXd ev = eigvalsh(sqrt(b) - sqrt(a));
    worst = std::min(worst, ev(0));
  }
  report(4, "monotone square root on ordered pairs", worst >= -1e-8,
         "worst slack " + std::to_string(worst));
}

// 5. Maximality of the generalized infimum: 100 pairs x 100 trials.
void criterion5() {
  Rng rng(105);
  bool ok = true;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 7;
    const SymMatrix a = random_sym(n, rng, -2.0, 2.0);
    const SymMatrix b = random_sym(n, rng, -2.0, 2.0);
    const MaximalityReport r = check_maximal_lower_bound(a, b, 100, 500 + k);
    ok = ok && r.ok();
  }
  report(5, "ginf is a maximal lower bound under perturbation search", ok);
}

// 6. CLI smoke pair: diagonal dim 4 certifies, full Sym(2) fails with a
// property-P witness at ginf eigenvalue <= -0.2.
void criterion6() {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string diag = (dir / "acc_diag4.json").string();
  const std::string full = (dir / "acc_full2.json").string();
  bool ok = run_cli("gen --kind subspace-diagonal --n 4 --out " + diag)
                    .exit_code == 0 &&
            run_cli("gen --kind subspace-full --n 2 --out " + full)
                    .exit_code == 0;

  const CliRun good =
      run_cli("certify --input " + diag + " --budget 500 --seed 42 --format json");
  ok = ok && good.exit_code == 0;
  std::string note;
  try {
    ok = ok && json::parse(good.out)["verdict"] == "VectorLattice";
    const CliRun bad = run_cli("certify --input " + full +
                               " --budget 500 --seed 42 --format json");
    ok = ok && bad.exit_code == 1;
    const json report_doc = json::parse(bad.out);
    ok = ok && report_doc["verdict"] == "NotVectorLattice";
    const auto& p = report_doc["conditions"]["P"];
    ok = ok && p["holds"] == false;
    const double violation = p["witness"]["violation"].get<double>();
    note = "P witness ginf eigenvalue " + std::to_string(-violation);
    ok = ok && -violation <= -0.2;
  } catch (const json::exception& e) {
    ok = false;
    note = e.what();
  }
  report(6, "certify CLI: exits 0 on diagonal dim 4, 1 on full Sym(2)", ok,
         note);
}

// 7. Verdict equals commutativity on 50 random subspaces passing closure.
void criterion7() {
  Rng rng(107);
  bool ok = true;
  int not_lattice_with_witness = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 3 + k % 4;
    std::vector<int> blocks;
    if (k < 25) {
      blocks.assign(static_cast<std::size_t>(n), 1);
    } else {
      blocks.push_back(2 + k % 2);
      int rest = n - blocks.front();
      while (rest-- > 0) blocks.push_back(1);
    }
    const Subspace v = random_subalgebra(n, blocks, rng);
    const CertReport r = certify_vector_lattice(v, 60, 7000 + k);
    if (!r.closure.hypotheses_met()) {
      ok = false;
      continue;
    }
    const bool lattice = r.verdict == CertVerdict::VectorLattice;
    ok = ok && (lattice == is_commutative(v).commutative);
    if (r.verdict == CertVerdict::NotVectorLattice) {
      ok = ok && !r.witnesses.empty();
      if (!r.witnesses.empty()) ++not_lattice_with_witness;
    }
  }
  report(7, "certifier verdict equals commutativity on 50 subspaces", ok,
         std::to_string(not_lattice_with_witness) + " non-lattices witnessed");
}

// 8. Classification: Boolean diagonal pool; OML-not-Boolean canonical pool
// with lambda_max(p+q) = 1 + 1/sqrt(2).
void criterion8() {
  std::vector<Projection> cube;
  for (int bits = 0; bits < 8; ++bits) {
    cube.emplace_back(SymMatrix::diagonal({double(bits & 1),
                                           double((bits >> 1) & 1),
                                           double((bits >> 2) & 1)}));
  }
  bool ok = classify_projection_set(cube).structure == StructureKind::Boolean;

  Eigen::Matrix2d qm;
  qm << 0.5, 0.5, 0.5, 0.5;
  const SymMatrix p = SymMatrix::diagonal({1, 0});
  const SymMatrix q{Eigen::MatrixXd(qm)};
  const std::vector<Projection> pool{
      Projection::zero(2),          Projection::identity(2),
      Projection(p),                Projection(SymMatrix::identity(2) - p),
      Projection(q),                Projection(SymMatrix::identity(2) - q)};
  const ClassificationVerdict v = classify_projection_set(pool);
  ok = ok && v.structure == StructureKind::OMLNotBoolean;

  bool witness_ok = false;
  for (const auto& w : v.witnesses) {
    if (w.violated != "disjoint-not-orthogonal") continue;
    const auto ev = oracle::eig2(
        (pool[static_cast<std::size_t>(w.i)].matrix() +
         pool[static_cast<std::size_t>(w.j)].matrix())
            .mat());
    if (std::abs(ev.hi - (1.0 + 1.0 / std::sqrt(2.0))) <= 1e-9) {
      witness_ok = true;
    }
  }
  report(8, "classification: Boolean cube and OML-not-Boolean canonical pool",
         ok && witness_ok);
}

// 9. Commutant dimension laws and bicommutant membership of the
// functional calculus, 20 seeded cases, dims 2-6.
void criterion9() {
  Rng rng(109);
  bool ok = true;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 5;
    std::vector<double> distinct(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      distinct[static_cast<std::size_t>(i)] = i + rng.uniform(0.0, 0.5);
    }
    ok = ok && commutant({SymMatrix::diagonal(distinct)}).dim() == n;
    ok = ok && commutant({SymMatrix::identity(n)}).dim() == sym_space_dim(n);

    const SymMatrix a = random_sym(n, rng, -2.0, 2.0);
    const Subspace cc = bicommutant({a});
    ok = ok && cc.dim() == n;
    for (const SymMatrix& image :
         {sqrt(pos_part(a)), abs(a), carrier(a).matrix()}) {
      worst = std::max(worst, cc.membership_residual(image));
    }
    for (const auto& bp : spectral_resolution(a).breakpoints) {
      worst = std::max(worst, cc.membership_residual(bp.second.matrix()));
    }
  }
  report(9, "commutant dimensions and bicommutant functional calculus",
         ok && worst <= 1e-8, "worst membership residual " +
                                  std::to_string(worst));
}

// 10. Spectral resolutions: structure, reconstruction, and agreement of the
// defining-formula path with the eigenprojection path, 200 cases.
void criterion10() {
  Rng rng(110);
  bool ok = true;
  double worst = 0.0;
  const TolerancePolicy tol;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 7;
    const SymMatrix a = random_sym(n, rng, -2.0, 2.0);
    const SpectralResolution r = spectral_resolution(a);
    ok = ok && approx_equal(r.breakpoints.back().second.matrix(),
                            SymMatrix::identity(n), {.eq = 1e-8});
    for (std::size_t i = 1; i < r.breakpoints.size(); ++i) {
      ok = ok && r.breakpoints[i - 1].first < r.breakpoints[i].first;
      ok = ok && loewner_leq(r.breakpoints[i - 1].second.matrix(),
                             r.breakpoints[i].second.matrix(), {.psd = 1e-8});
    }
    worst = std::max(worst, frobenius_norm(r.reconstruct() - a));

    // Defining formula vs direct eigenprojection at every breakpoint.
    const EigenSystem es = eigh(a);
    for (const auto& bp : r.breakpoints) {
      const SymMatrix via_formula = spectral_proj(a, bp.first, tol).matrix();
      const double cutoff = tol.rank_cutoff(n, order_unit_norm(a));
      Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        if (es.values(i) <= bp.first + cutoff) {
          direct += es.vectors.col(i) * es.vectors.col(i).transpose();
        }
      }
      worst = std::max(worst, (via_formula.mat() - direct).norm());
    }
  }
  report(10, "spectral resolutions reconstruct and the two paths agree",
         ok && worst <= 1e-8, "worst residual " + std::to_string(worst));
}

// 11. Constructive Riesz decomposition on 500 commutative triples.
void criterion11() {
  Rng rng(111);
  bool ok = true;
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 2 + k % 5;
    Rng block_rng(8000 + k);
    const Subspace v = subspace_block_span(n, 1 + k % n, block_rng);
    Eigen::MatrixXd xa = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd xb = Eigen::MatrixXd::Zero(n, n);
    for (const auto& basis : v.basis()) {
      xa += rng.uniform(0.0, 2.0) * basis.mat();
      xb += rng.uniform(0.0, 2.0) * basis.mat();
    }
    const SymMatrix a{Eigen::MatrixXd(0.5 * (xa + xa.transpose()))};
    const SymMatrix b{Eigen::MatrixXd(0.5 * (xb + xb.transpose()))};
    const SymMatrix c = (a + b) * rng.uniform(0.0, 1.0);
    try {
      auto [a1, b1] = riesz_decompose(v, a, b, c);
      worst = std::min(worst, eigvalsh(a1)(0));
      worst = std::min(worst, eigvalsh(a - a1)(0));
      worst = std::min(worst, eigvalsh(b1)(0));
      worst = std::min(worst, eigvalsh(b - b1)(0));
      if (frobenius_norm(a1 + b1 - c) > 1e-8) ok = false;
    } catch (const Error&) {
      ok = false;
    }
  }
  report(11, "constructive Riesz decomposition postconditions",
         ok && worst >= -1e-8, "worst slack " + std::to_string(worst));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criteria FAILED")
            << "\n";
  return failures;
}
