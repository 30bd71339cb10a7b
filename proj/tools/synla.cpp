#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "synla/instance_gen.hpp"
#include "synla/matrix_io.hpp"
#include "synla/proj_effect.hpp"
#include "synla/report_json.hpp"
#include "synla/selftest.hpp"
#include "synla/synaptic_ops.hpp"
#include "synla/vlcert.hpp"

namespace {

using nlohmann::json;
using namespace synla;

constexpr int kExitOk = 0;
constexpr int kExitNotVectorLattice = 1;
constexpr int kExitHypothesesNotMet = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 70;

struct RunConfig {
  std::string input;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 42;
  int budget = 500;
  int trials = 100;
  double lambda = 0.0;
  std::string op;
  std::string kind;
  bool bi = false;
  bool cblock_check = false;
  bool extend = false;
  int n = 2;
  int count = 1;
  double lo = -1.0;
  double hi = 1.0;
  std::optional<double> tol_override;
  std::optional<double> rank_override;

  TolerancePolicy tolerances() const {
    TolerancePolicy tol;
    if (tol_override) tol.eq = tol.psd = tol.comm = *tol_override;
    if (rank_override) tol.rank = *rank_override;
    tol.validate();
    return tol;
  }
};

void emit(const json& report, const RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", cfg.input, "matrix file path")->required();
  }
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--tol", cfg.tol_override,
                  "override for eq/psd/comm tolerances");
  cmd->add_option("--rank-tol", cfg.rank_override,
                  "override for the rank cutoff base factor");
}

const SymMatrix& nth(const MatrixFile& file, std::size_t i) {
  if (file.matrices.size() <= i) {
    throw ParseError("input needs at least " + std::to_string(i + 1) +
                     " matrices");
  }
  return file.matrices[i].matrix;
}

int run_ops(const RunConfig& cfg) {
  const TolerancePolicy tol = cfg.tolerances();
  const MatrixFile file = load_matrix_file(cfg.input, tol);
  json report{{"command", "ops"}, {"op", cfg.op}};
  json results = json::array();

  auto unary = [&](const std::function<json(const NamedMatrix&)>& f) {
    for (const auto& named : file.matrices) results.push_back(f(named));
  };

  if (cfg.op == "abs") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name}, {"rows", matrix_to_json(abs(m.matrix))}};
    });
  } else if (cfg.op == "sqrt") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name},
                  {"rows", matrix_to_json(sqrt(m.matrix, tol))}};
    });
  } else if (cfg.op == "pos") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name}, {"rows", matrix_to_json(pos_part(m.matrix))}};
    });
  } else if (cfg.op == "neg") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name}, {"rows", matrix_to_json(neg_part(m.matrix))}};
    });
  } else if (cfg.op == "carrier") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name},
                  {"rows", matrix_to_json(carrier(m.matrix, tol).matrix())}};
    });
  } else if (cfg.op == "invert") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name},
                  {"rows", matrix_to_json(invert(m.matrix, tol))}};
    });
  } else if (cfg.op == "norm") {
    unary([&](const NamedMatrix& m) {
      return json{{"name", m.name}, {"norm", order_unit_norm(m.matrix)}};
    });
  } else if (cfg.op == "specproj") {
    unary([&](const NamedMatrix& m) {
      return json{
          {"name", m.name},
          {"lambda", cfg.lambda},
          {"rows", matrix_to_json(spectral_proj(m.matrix, cfg.lambda, tol).matrix())}};
    });
  } else if (cfg.op == "specres") {
    unary([&](const NamedMatrix& m) {
      const SpectralResolution sr = spectral_resolution(m.matrix, tol);
      json bps = json::array();
      for (const auto& [value, proj] : sr.breakpoints) {
        bps.push_back({{"eigenvalue", value},
                       {"projection", matrix_to_json(proj.matrix())}});
      }
      return json{{"name", m.name},
                  {"source_norm", sr.source_norm},
                  {"breakpoints", std::move(bps)}};
    });
  } else if (cfg.op == "jordan" || cfg.op == "quad") {
    const SymMatrix& a = nth(file, 0);
    const SymMatrix& b = nth(file, 1);
    const SymMatrix r = cfg.op == "jordan" ? jordan(a, b) : quad(a, b);
    results.push_back({{"name", cfg.op}, {"rows", matrix_to_json(r)}});
  } else if (cfg.op == "commutes") {
    const SymMatrix& a = nth(file, 0);
    const SymMatrix& b = nth(file, 1);
    results.push_back({{"commutes", commutes(a, b, tol)},
                       {"commutator_norm", commutator_norm(a, b)}});
  } else if (cfg.op == "leq") {
    const SymMatrix& a = nth(file, 0);
    const SymMatrix& b = nth(file, 1);
    results.push_back({{"leq", loewner_leq(a, b, tol)},
                       {"geq", loewner_leq(b, a, tol)}});
  } else {
    throw CLI::ValidationError("--op", "unknown operation: " + cfg.op);
  }

  report["results"] = std::move(results);
  emit(report, cfg);
  return kExitOk;
}

int run_lattice(const RunConfig& cfg) {
  const TolerancePolicy tol = cfg.tolerances();
  const MatrixFile file = load_matrix_file(cfg.input, tol);
  const SymMatrix& a = nth(file, 0);
  const SymMatrix& b = nth(file, 1);
  json report{{"command", "lattice"}, {"op", cfg.op}};

  if (cfg.op == "ginf" || cfg.op == "gsup") {
    const SymMatrix r = cfg.op == "ginf" ? ginf(a, b) : gsup(a, b);
    report["result"] = matrix_to_json(r);
    report["result_min_eigenvalue"] = eigvalsh(r)(0);
  } else if (cfg.op == "disjoint") {
    report["verdict"] = disjoint_to_json(check_disjoint(a, b, tol));
  } else if (cfg.op == "maximal") {
    report["report"] = maximality_to_json(
        check_maximal_lower_bound(a, b, cfg.trials, cfg.seed, tol));
  } else if (cfg.op == "disjunctive") {
    report["disjunctive"] = is_disjunctive(a, b, tol);
  } else {
    throw CLI::ValidationError("--op", "unknown lattice operation: " + cfg.op);
  }
  emit(report, cfg);
  return kExitOk;
}

int run_classify(const RunConfig& cfg) {
  const TolerancePolicy tol = cfg.tolerances();
  const MatrixFile file = load_matrix_file(cfg.input, tol);
  std::vector<std::string> names;
  for (const auto& named : file.matrices) names.push_back(named.name);

  ClassificationVerdict verdict;
  try {
    if (cfg.kind == "proj") {
      std::vector<Projection> s;
      for (const auto& named : file.matrices) {
        s.emplace_back(named.matrix, tol);
      }
      verdict = classify_projection_set(s, tol);
    } else {
      std::vector<Effect> f;
      for (const auto& named : file.matrices) {
        f.emplace_back(named.matrix, tol);
      }
      verdict = classify_commutative_effect_set(f, tol);
    }
  } catch (const NotProjection& e) {
    throw ParseError(std::string("classify: ") + e.what());
  } catch (const NotEffect& e) {
    throw ParseError(std::string("classify: ") + e.what());
  }

  json report{{"command", "classify"},
              {"kind", cfg.kind},
              {"verdict", classification_to_json(verdict, names)}};
  emit(report, cfg);
  return kExitOk;
}

int run_commutant(const RunConfig& cfg) {
  const TolerancePolicy tol = cfg.tolerances();
  const MatrixFile file = load_matrix_file(cfg.input, tol);
  std::vector<SymMatrix> gens;
  for (const auto& named : file.matrices) gens.push_back(named.matrix);

  json report{{"command", "commutant"}};
  auto subspace_json = [](const Subspace& s) {
    json basis = json::array();
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
      basis.push_back({{"name", "b" + std::to_string(i)},
                       {"rows", matrix_to_json(s.basis()[i])}});
    }
    return json{{"ambient_dim", s.ambient_dim()},
                {"dim", s.dim()},
                {"basis", std::move(basis)}};
  };

  if (cfg.cblock_check) {
    report["mode"] = "cblock-check";
    report["is_cblock"] = is_cblock(gens, tol);
  } else if (cfg.extend) {
    report["mode"] = "extend";
    report["result"] = subspace_json(extend_to_cblock(gens, tol));
  } else if (cfg.bi) {
    report["mode"] = "bicommutant";
    report["result"] = subspace_json(bicommutant(gens, tol));
  } else {
    report["mode"] = "commutant";
    report["result"] = subspace_json(commutant(gens, tol));
  }
  emit(report, cfg);
  return kExitOk;
}

int run_certify(const RunConfig& cfg) {
  const TolerancePolicy tol = cfg.tolerances();
  const MatrixFile file = load_matrix_file(cfg.input, tol);
  std::vector<SymMatrix> spanning;
  for (const auto& named : file.matrices) spanning.push_back(named.matrix);
  if (spanning.empty()) throw ParseError("certify: input has no matrices");

  const Subspace v = Subspace::span(spanning, tol);
  const CertReport r = certify_vector_lattice(v, cfg.budget, cfg.seed, tol);
  json report = cert_report_to_json(r);
  report["command"] = "certify";
  report["config"]["input"] = cfg.input;
  report["config"]["tol"] = {{"eq", tol.eq},
                             {"psd", tol.psd},
                             {"rank", tol.rank},
                             {"comm", tol.comm}};
  report["subspace_dim"] = v.dim();
  emit(report, cfg);
  switch (r.verdict) {
    case CertVerdict::VectorLattice: return kExitOk;
    case CertVerdict::NotVectorLattice: return kExitNotVectorLattice;
    case CertVerdict::HypothesesNotMet: return kExitHypothesesNotMet;
  }
  return kExitInternal;
}

int run_gen(const RunConfig& cfg) {
  GenSpec spec;
  spec.kind = gen_kind_from_string(cfg.kind);
  spec.n = cfg.n;
  spec.count = cfg.count;
  spec.seed = cfg.seed;
  spec.spectrum_range = {cfg.lo, cfg.hi};

  MatrixFile file;
  file.n = spec.n;
  const GenOutput out = generate(spec);
  if (std::holds_alternative<Subspace>(out)) {
    const auto& v = std::get<Subspace>(out);
    for (std::size_t i = 0; i < v.basis().size(); ++i) {
      file.matrices.push_back({"b" + std::to_string(i), v.basis()[i]});
    }
  } else {
    const auto& mats = std::get<std::vector<SymMatrix>>(out);
    const bool paired = spec.kind == GenKind::OrderedPair ||
                        spec.kind == GenKind::ZeroProductPair;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      std::string name =
          paired ? std::string(i % 2 == 0 ? "a" : "b") + std::to_string(i / 2)
                 : "m" + std::to_string(i);
      file.matrices.push_back({std::move(name), mats[i]});
    }
  }
  if (cfg.output.empty()) {
    std::cout << matrix_document_text(file) << "\n";
  } else {
    save_matrix_file(cfg.output, file);
  }
  return kExitOk;
}

int run_selftest_cmd(const RunConfig& cfg) {
  const SelftestResult r = run_selftest(cfg.seed);
  json report{{"command", "selftest"},
              {"passed", r.passed},
              {"failed", r.failed},
              {"failures", r.failures}};
  emit(report, cfg);
  return r.ok() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "synla: a calculus on real symmetric matrices under the Loewner "
      "order, with a vector-lattice certifier for linear subspaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* ops = app.add_subcommand("ops", "spectral operator functions");
  add_common_flags(ops, cfg);
  ops->add_option("--op", cfg.op,
                  "abs|sqrt|pos|neg|carrier|invert|norm|specproj|specres|"
                  "jordan|quad|commutes|leq")
      ->required();
  ops->add_option("--lambda", cfg.lambda, "level for specproj");

  CLI::App* lattice =
      app.add_subcommand("lattice", "generalized infimum/supremum calculus");
  add_common_flags(lattice, cfg);
  lattice->add_option("--op", cfg.op, "ginf|gsup|disjoint|maximal|disjunctive")
      ->required();
  lattice->add_option("--trials", cfg.trials, "perturbation trials");
  lattice->add_option("--seed", cfg.seed, "rng seed");

  CLI::App* classify =
      app.add_subcommand("classify", "MV/OML/Boolean classification");
  add_common_flags(classify, cfg);
  classify->add_option("--kind", cfg.kind, "proj|effect")
      ->required()
      ->check(CLI::IsMember({"proj", "effect"}));

  CLI::App* comm =
      app.add_subcommand("commutant", "commutant and C-block computations");
  add_common_flags(comm, cfg);
  comm->add_flag("--bi", cfg.bi, "bicommutant");
  comm->add_flag("--cblock-check", cfg.cblock_check, "test for a C-block");
  comm->add_flag("--extend", cfg.extend, "extend to a C-block");

  CLI::App* certify =
      app.add_subcommand("certify", "vector-lattice certification");
  add_common_flags(certify, cfg);
  certify->add_option("--budget", cfg.budget, "sample/search budget");
  certify->add_option("--seed", cfg.seed, "rng seed");

  CLI::App* gen = app.add_subcommand("gen", "seeded instance generation");
  add_common_flags(gen, cfg, /*with_input=*/false);
  gen->add_option("--kind", cfg.kind, "instance kind")->required();
  gen->add_option("--n", cfg.n, "dimension")->required();
  gen->add_option("--count", cfg.count, "object count");
  gen->add_option("--seed", cfg.seed, "rng seed");
  gen->add_option("--lo", cfg.lo, "spectrum range low end");
  gen->add_option("--hi", cfg.hi, "spectrum range high end");
  gen->add_option("--out", cfg.output, "output path (default stdout)");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in invariant suite");
  add_common_flags(selftest, cfg, /*with_input=*/false);
  selftest->add_option("--seed", cfg.seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(ops)) return run_ops(cfg);
    if (app.got_subcommand(lattice)) return run_lattice(cfg);
    if (app.got_subcommand(classify)) return run_classify(cfg);
    if (app.got_subcommand(comm)) return run_commutant(cfg);
    if (app.got_subcommand(certify)) return run_certify(cfg);
    if (app.got_subcommand(gen)) return run_gen(cfg);
    if (app.got_subcommand(selftest)) return run_selftest_cmd(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const PreconditionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
