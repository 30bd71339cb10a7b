#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synla/genlattice.hpp"
#include "synla/instance_gen.hpp"
#include "synla/matrix_io.hpp"
#include "synla/proj_effect.hpp"
#include "synla/report_json.hpp"
#include "synla/selftest.hpp"
#include "synla/synaptic_ops.hpp"
#include "synla/vlcert.hpp"

namespace py = pybind11;
using namespace synla;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<SymMatrix> to_matrices(const std::vector<Eigen::MatrixXd>& raw,
                                   const TolerancePolicy& tol) {
  std::vector<SymMatrix> out;
  out.reserve(raw.size());
  for (const auto& m : raw) out.emplace_back(m, tol);
  return out;
}

}  // namespace

PYBIND11_MODULE(_synla, m) {
  m.doc() =
      "Calculus on real symmetric matrices under the Loewner order: "
      "spectral operator functions, generalized infimum/supremum, "
      "commutants, effect-algebra classification, and a vector-lattice "
      "certifier for linear subspaces.";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError");
  py::register_exception<NotPositive>(m, "NotPositiveError");
  py::register_exception<NotInvertible>(m, "NotInvertibleError");
  py::register_exception<NotProjection>(m, "NotProjectionError");
  py::register_exception<NotEffect>(m, "NotEffectError");
  py::register_exception<NonCommutative>(m, "NonCommutativeError");
  py::register_exception<NotMember>(m, "NotMemberError");

  py::class_<TolerancePolicy>(m, "TolerancePolicy")
      .def(py::init<>())
      .def_readwrite("eq", &TolerancePolicy::eq)
      .def_readwrite("psd", &TolerancePolicy::psd)
      .def_readwrite("rank", &TolerancePolicy::rank)
      .def_readwrite("comm", &TolerancePolicy::comm)
      .def("validate", &TolerancePolicy::validate);

  py::class_<SymMatrix>(m, "SymMatrix")
      .def(py::init<Eigen::MatrixXd, const TolerancePolicy&>(), py::arg("m"),
           py::arg("tol") = TolerancePolicy{})
      .def_static("identity", &SymMatrix::identity)
      .def_static("zero", &SymMatrix::zero)
      .def_static("diagonal", &SymMatrix::diagonal)
      .def_property_readonly("n", &SymMatrix::dim)
      .def("to_numpy", [](const SymMatrix& a) { return a.mat(); })
      .def("__add__", &SymMatrix::operator+)
      .def("__sub__",
           [](const SymMatrix& a, const SymMatrix& b) { return a - b; })
      .def("__neg__", [](const SymMatrix& a) { return -a; })
      .def("__mul__", [](const SymMatrix& a, double s) { return a * s; })
      .def("__rmul__", [](const SymMatrix& a, double s) { return a * s; })
      .def("__repr__", [](const SymMatrix& a) {
        return "SymMatrix(n=" + std::to_string(a.dim()) + ")";
      });

  py::class_<Projection>(m, "Projection")
      .def(py::init<SymMatrix, const TolerancePolicy&>(), py::arg("m"),
           py::arg("tol") = TolerancePolicy{})
      .def_property_readonly("matrix", &Projection::matrix)
      .def("to_numpy",
           [](const Projection& p) { return p.matrix().mat(); });

  py::class_<Effect>(m, "Effect")
      .def(py::init<SymMatrix, const TolerancePolicy&>(), py::arg("m"),
           py::arg("tol") = TolerancePolicy{})
      .def_property_readonly("matrix", &Effect::matrix);

  // symmat operations
  m.def("loewner_leq", &loewner_leq, py::arg("a"), py::arg("b"),
        py::arg("tol") = TolerancePolicy{});
  m.def("is_psd", &is_psd, py::arg("a"), py::arg("tol") = TolerancePolicy{});
  m.def("order_unit_norm", &order_unit_norm);
  m.def("jordan", &jordan);
  m.def("quad", &quad);
  m.def("commutes", &commutes, py::arg("a"), py::arg("b"),
        py::arg("tol") = TolerancePolicy{});
  m.def("commutator_norm", &commutator_norm);
  m.def("trace_inner", &trace_inner);

  // spectral operator functions
  m.def("sqrt", &synla::sqrt, py::arg("a"), py::arg("tol") = TolerancePolicy{});
  m.def("abs", &synla::abs);
  m.def("pos_part", &pos_part);
  m.def("neg_part", &neg_part);
  m.def("decompose", &decompose);
  m.def("carrier", &carrier, py::arg("a"), py::arg("tol") = TolerancePolicy{});
  m.def("spectral_proj", &spectral_proj, py::arg("a"), py::arg("lam"),
        py::arg("tol") = TolerancePolicy{});
  m.def("invert", &invert, py::arg("a"), py::arg("tol") = TolerancePolicy{});

  py::class_<SpectralResolution>(m, "SpectralResolution")
      .def_readonly("breakpoints", &SpectralResolution::breakpoints)
      .def_readonly("source_norm", &SpectralResolution::source_norm)
      .def("reconstruct", &SpectralResolution::reconstruct);
  m.def("spectral_resolution", &spectral_resolution, py::arg("a"),
        py::arg("tol") = TolerancePolicy{});

  // generalized infimum / supremum
  m.def("ginf", &ginf);
  m.def("gsup", &gsup);
  py::class_<DisjointVerdict>(m, "DisjointVerdict")
      .def_readonly("ginf_zero", &DisjointVerdict::ginf_zero)
      .def_readonly("sum_is_absdiff", &DisjointVerdict::sum_is_absdiff)
      .def_readonly("psd_jordan_zero", &DisjointVerdict::psd_jordan_zero)
      .def_readonly("psd_product_zero", &DisjointVerdict::psd_product_zero)
      .def("disjoint", &DisjointVerdict::disjoint)
      .def("consistent", &DisjointVerdict::consistent);
  m.def("check_disjoint", &check_disjoint, py::arg("a"), py::arg("b"),
        py::arg("tol") = TolerancePolicy{});
  py::class_<MaximalityReport>(m, "MaximalityReport")
      .def_readonly("trials", &MaximalityReport::trials)
      .def_readonly("seed", &MaximalityReport::seed)
      .def("ok", &MaximalityReport::ok)
      .def_property_readonly("violation_count", [](const MaximalityReport& r) {
        return r.violations.size();
      });
  m.def("check_maximal_lower_bound", &check_maximal_lower_bound, py::arg("a"),
        py::arg("b"), py::arg("trials"), py::arg("seed"),
        py::arg("tol") = TolerancePolicy{});
  m.def("is_disjunctive", &is_disjunctive, py::arg("a"), py::arg("b"),
        py::arg("tol") = TolerancePolicy{});

  // projections, effects, classification
  m.def("is_projection", &is_projection, py::arg("p"),
        py::arg("tol") = TolerancePolicy{});
  m.def("is_effect", &is_effect, py::arg("e"),
        py::arg("tol") = TolerancePolicy{});
  m.def("orthocomplement", &orthocomplement, py::arg("p"),
        py::arg("tol") = TolerancePolicy{});
  m.def("proj_join", &proj_join, py::arg("p"), py::arg("q"),
        py::arg("tol") = TolerancePolicy{});
  m.def("proj_meet", &proj_meet, py::arg("p"), py::arg("q"),
        py::arg("tol") = TolerancePolicy{});

  py::class_<CompatibilityWitness>(m, "CompatibilityWitness")
      .def_readonly("e1", &CompatibilityWitness::e1)
      .def_readonly("f1", &CompatibilityWitness::f1)
      .def_readonly("d", &CompatibilityWitness::d);
  py::class_<CompatibilityResult>(m, "CompatibilityResult")
      .def_readonly("witness", &CompatibilityResult::witness)
      .def_readonly("commutator_norm", &CompatibilityResult::commutator_norm)
      .def("compatible", &CompatibilityResult::compatible);
  m.def("compatible", &compatible, py::arg("p"), py::arg("q"),
        py::arg("tol") = TolerancePolicy{});
  m.def("jordan_positivity_commutation", &jordan_positivity_commutation,
        py::arg("p"), py::arg("a"), py::arg("tol") = TolerancePolicy{});

  py::enum_<StructureKind>(m, "StructureKind")
      .value("Boolean", StructureKind::Boolean)
      .value("MVNotBoolean", StructureKind::MVNotBoolean)
      .value("OMLNotBoolean", StructureKind::OMLNotBoolean)
      .value("LatticeOnly", StructureKind::LatticeOnly)
      .value("NotClosed", StructureKind::NotClosed);
  py::class_<PairWitness>(m, "PairWitness")
      .def_readonly("i", &PairWitness::i)
      .def_readonly("j", &PairWitness::j)
      .def_readonly("violated", &PairWitness::violated);
  py::class_<ClassificationVerdict>(m, "ClassificationVerdict")
      .def_readonly("structure", &ClassificationVerdict::structure)
      .def_readonly("witnesses", &ClassificationVerdict::witnesses)
      .def_readonly("meets_in_set", &ClassificationVerdict::meets_in_set)
      .def_property_readonly("is_mv", [](const ClassificationVerdict& v) {
        return is_mv_effect_algebra(v.structure);
      });
  m.def(
      "classify_projection_set",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol) {
        std::vector<Projection> s;
        s.reserve(raw.size());
        for (const auto& mm : raw) s.emplace_back(SymMatrix(mm, tol), tol);
        return classify_projection_set(s, tol);
      },
      py::arg("projections"), py::arg("tol") = TolerancePolicy{});
  m.def(
      "classify_commutative_effect_set",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol) {
        std::vector<Effect> f;
        f.reserve(raw.size());
        for (const auto& mm : raw) f.emplace_back(SymMatrix(mm, tol), tol);
        return classify_commutative_effect_set(f, tol);
      },
      py::arg("effects"), py::arg("tol") = TolerancePolicy{});

  // commutants and subspaces
  py::class_<Subspace>(m, "Subspace")
      .def_static(
          "span",
          [](const std::vector<Eigen::MatrixXd>& raw,
             const TolerancePolicy& tol) {
            return Subspace::span(to_matrices(raw, tol), tol);
          },
          py::arg("spanning"), py::arg("tol") = TolerancePolicy{})
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def("project", &Subspace::project)
      .def("membership_residual", &Subspace::membership_residual)
      .def("contains", &Subspace::contains, py::arg("x"),
           py::arg("tol") = TolerancePolicy{});

  m.def(
      "commutant",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol) {
        return commutant(to_matrices(raw, tol), tol);
      },
      py::arg("generators"), py::arg("tol") = TolerancePolicy{});
  m.def(
      "bicommutant",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol) {
        return bicommutant(to_matrices(raw, tol), tol);
      },
      py::arg("generators"), py::arg("tol") = TolerancePolicy{});
  m.def(
      "is_cblock",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol) {
        return is_cblock(to_matrices(raw, tol), tol);
      },
      py::arg("generators"), py::arg("tol") = TolerancePolicy{});
  m.def(
      "extend_to_cblock",
      [](const std::vector<Eigen::MatrixXd>& raw, const TolerancePolicy& tol,
         int ambient_dim) {
        return extend_to_cblock(to_matrices(raw, tol), tol, ambient_dim);
      },
      py::arg("generators"), py::arg("tol") = TolerancePolicy{},
      py::arg("ambient_dim") = 0);

  // vector-lattice certification
  py::enum_<CertVerdict>(m, "CertVerdict")
      .value("VectorLattice", CertVerdict::VectorLattice)
      .value("NotVectorLattice", CertVerdict::NotVectorLattice)
      .value("HypothesesNotMet", CertVerdict::HypothesesNotMet);
  py::class_<ClosureReport>(m, "ClosureReport")
      .def_readonly("contains_unit", &ClosureReport::contains_unit)
      .def_readonly("conclusive", &ClosureReport::conclusive)
      .def_readonly("samples_used", &ClosureReport::samples_used)
      .def("hypotheses_met", &ClosureReport::hypotheses_met)
      .def("to_json", [](const ClosureReport& r) {
        return json_to_py(closure_to_json(r));
      });
  m.def("check_closure", &check_closure, py::arg("v"), py::arg("samples"),
        py::arg("seed"), py::arg("tol") = TolerancePolicy{});
  py::class_<CommutativityVerdict>(m, "CommutativityVerdict")
      .def_readonly("commutative", &CommutativityVerdict::commutative)
      .def_readonly("witness_i", &CommutativityVerdict::witness_i)
      .def_readonly("witness_j", &CommutativityVerdict::witness_j)
      .def_readonly("commutator_norm", &CommutativityVerdict::commutator_norm);
  m.def("is_commutative", &is_commutative, py::arg("v"),
        py::arg("tol") = TolerancePolicy{});
  py::class_<CertReport>(m, "CertReport")
      .def_property_readonly(
          "verdict", [](const CertReport& r) { return to_string(r.verdict); })
      .def_readonly("closure", &CertReport::closure)
      .def_readonly("commutative", &CertReport::commutative)
      .def_readonly("seed", &CertReport::seed)
      .def_readonly("budget", &CertReport::budget)
      .def("to_json",
           [](const CertReport& r) { return json_to_py(cert_report_to_json(r)); });
  m.def("certify_vector_lattice", &certify_vector_lattice, py::arg("v"),
        py::arg("budget"), py::arg("seed"), py::arg("tol") = TolerancePolicy{});
  m.def("lattice_ops", &lattice_ops, py::arg("v"), py::arg("a"), py::arg("b"),
        py::arg("tol") = TolerancePolicy{});
  m.def("riesz_decompose", &riesz_decompose, py::arg("v"), py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("tol") = TolerancePolicy{});

  // instance generation
  m.def("subspace_diagonal", &subspace_diagonal);
  m.def("subspace_full", &subspace_full);
  m.def(
      "subspace_block_span",
      [](int n, int blocks, std::uint64_t seed) {
        Rng rng(seed);
        return subspace_block_span(n, blocks, rng);
      },
      py::arg("n"), py::arg("blocks"), py::arg("seed"));
  m.def(
      "random_subalgebra",
      [](int n, const std::vector<int>& blocks, std::uint64_t seed) {
        Rng rng(seed);
        return random_subalgebra(n, blocks, rng);
      },
      py::arg("n"), py::arg("block_sizes"), py::arg("seed"));
  m.def(
      "generate",
      [](const std::string& kind, int n, int count, std::uint64_t seed,
         double lo, double hi) -> py::object {
        GenSpec spec{gen_kind_from_string(kind), n, count, seed, {lo, hi}};
        GenOutput out = generate(spec);
        if (std::holds_alternative<Subspace>(out)) {
          return py::cast(std::get<Subspace>(out));
        }
        return py::cast(std::get<std::vector<SymMatrix>>(out));
      },
      py::arg("kind"), py::arg("n"), py::arg("count") = 1, py::arg("seed") = 0,
      py::arg("lo") = -1.0, py::arg("hi") = 1.0);

  m.def("run_selftest", [](std::uint64_t seed) {
    const SelftestResult r = run_selftest(seed);
    py::dict d;
    d["passed"] = r.passed;
    d["failed"] = r.failed;
    d["failures"] = r.failures;
    return d;
  }, py::arg("seed") = 1);
}
