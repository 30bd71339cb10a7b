#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "synla/instance_gen.hpp"
#include "synla/projection.hpp"
#include "synla/synaptic_ops.hpp"
#include "synla/vlcert.hpp"

using namespace synla;

TEST_CASE("generation is deterministic: identical spec, bit-identical output") {
  for (GenKind kind : {GenKind::Sym, GenKind::Psd, GenKind::OrderedPair,
                       GenKind::CommutingFamily, GenKind::ZeroProductPair,
                       GenKind::Projection}) {
    GenSpec spec{kind, 4, 3, 12345, {-1.0, 1.0}};
    const auto a = std::get<std::vector<SymMatrix>>(generate(spec));
    const auto b = std::get<std::vector<SymMatrix>>(generate(spec));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].mat() == b[i].mat());
    }
  }
}

TEST_CASE("generated objects pass their class predicates") {
  GenSpec zp{GenKind::ZeroProductPair, 2, 1, 7, {0.0, 1.0}};
  const auto pair = std::get<std::vector<SymMatrix>>(generate(zp));
  REQUIRE(pair.size() == 2);
  CHECK((pair[0].mat() * pair[1].mat()).norm() <= 1e-12);
  CHECK(is_psd(pair[0]));
  CHECK(is_psd(pair[1]));

  GenSpec cf{GenKind::CommutingFamily, 4, 3, 1, {-1.0, 1.0}};
  const auto fam = std::get<std::vector<SymMatrix>>(generate(cf));
  REQUIRE(fam.size() == 3);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      CHECK(commutator_norm(fam[i], fam[j]) <= 1e-12);
    }
  }

  GenSpec op{GenKind::OrderedPair, 3, 1, 5, {0.0, 1.0}};
  const auto ab = std::get<std::vector<SymMatrix>>(generate(op));
  REQUIRE(ab.size() == 2);
  CHECK(eigvalsh(ab[1] - ab[0])(0) >= -1e-12);
  CHECK(eigvalsh(ab[0])(0) >= -1e-12);

  GenSpec pr{GenKind::Projection, 5, 4, 9, {0.0, 1.0}};
  const auto projections = std::get<std::vector<SymMatrix>>(generate(pr));
  for (const auto& p : projections) {
    CHECK(is_projection(p, {.eq = 1e-10}));
  }

  GenSpec sym{GenKind::Sym, 4, 4, 11, {-2.0, 3.0}};
  const auto syms = std::get<std::vector<SymMatrix>>(generate(sym));
  for (const auto& m : syms) {
    const Eigen::VectorXd ev = eigvalsh(m);
    CHECK(ev(0) >= -2.0 - 1e-10);
    CHECK(ev(ev.size() - 1) <= 3.0 + 1e-10);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(generate(GenSpec{GenKind::Sym, 0, 1, 0, {0, 1}}),
                  PreconditionFailure);
  CHECK_THROWS_AS(generate(GenSpec{GenKind::Sym, 2, 0, 0, {0, 1}}),
                  PreconditionFailure);
  CHECK_THROWS_AS(generate(GenSpec{GenKind::Sym, 2, 1, 0, {1, 0}}),
                  PreconditionFailure);
  CHECK_THROWS_AS(generate(GenSpec{GenKind::Projection, 1, 1, 0, {0, 1}}),
                  PreconditionFailure);
  CHECK_THROWS_AS(gen_kind_from_string("bogus"), PreconditionFailure);
}

TEST_CASE("subspace kinds produce the advertised spans") {
  const auto diag =
      std::get<Subspace>(generate(GenSpec{GenKind::SubspaceDiagonal, 4, 1, 0}));
  CHECK(diag.dim() == 4);
  CHECK(diag.contains(SymMatrix::diagonal({1, 2, 3, 4})));

  const auto full =
      std::get<Subspace>(generate(GenSpec{GenKind::SubspaceFull, 3, 1, 0}));
  CHECK(full.dim() == sym_space_dim(3));

  const auto span = std::get<Subspace>(
      generate(GenSpec{GenKind::SubspaceSpan, 5, 3, 21, {0.0, 1.0}}));
  CHECK(span.dim() == 3);
  CHECK(span.contains(SymMatrix::identity(5)));
  CHECK(is_commutative(span).commutative);
  const ClosureReport closure = check_closure(span, 8, 3);
  CHECK(closure.hypotheses_met());
}

TEST_CASE("random subalgebras are closed and commutative iff all blocks are 1x1") {
  Rng rng(60);
  const Subspace comm = random_subalgebra(4, {1, 1, 1, 1}, rng);
  CHECK(comm.dim() == 4);
  CHECK(is_commutative(comm).commutative);
  CHECK(check_closure(comm, 8, 5).hypotheses_met());

  Rng rng2(61);
  const Subspace noncomm = random_subalgebra(4, {2, 1, 1}, rng2);
  CHECK(noncomm.dim() == 3 + 1 + 1);
  CHECK_FALSE(is_commutative(noncomm).commutative);
  CHECK(check_closure(noncomm, 8, 6).hypotheses_met());

  Rng rng3(62);
  CHECK_THROWS_AS(random_subalgebra(4, {2, 1}, rng3), PreconditionFailure);
}
