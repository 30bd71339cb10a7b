#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "synla/genlattice.hpp"
#include "synla/instance_gen.hpp"
#include "synla/proj_effect.hpp"

using namespace synla;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const TolerancePolicy kLoose{.eq = 1e-8, .psd = 1e-8};

SymMatrix mat2(double a, double b, double c, double d) {
  Eigen::Matrix2d m;
  m << a, b, c, d;
  return SymMatrix(m);
}

Projection proj2(double a, double b, double c, double d) {
  return Projection(mat2(a, b, c, d));
}
}  // namespace

TEST_CASE("effect and projection predicates on the named examples") {
  CHECK(is_effect(SymMatrix::identity(2) * 0.5));
  CHECK_FALSE(is_projection(SymMatrix::identity(2) * 0.5));

  CHECK(is_effect(SymMatrix::diagonal({1, 0})));
  CHECK(is_projection(SymMatrix::diagonal({1, 0})));

  CHECK_FALSE(is_effect(SymMatrix::diagonal({1.2, 0})));
  CHECK_FALSE(is_projection(SymMatrix::diagonal({1.2, 0})));

  CHECK_THROWS_AS(Projection{SymMatrix::diagonal({0.5, 0.5})}, NotProjection);
  CHECK_THROWS_AS(Effect{SymMatrix::diagonal({1.2, 0})}, NotEffect);
}

TEST_CASE("orthocomplement on the named examples") {
  const Projection p(SymMatrix::diagonal({1, 0}));
  CHECK(approx_equal(orthocomplement(p).matrix(), SymMatrix::diagonal({0, 1})));
  CHECK(approx_equal(orthocomplement(Projection::identity(3)).matrix(),
                     SymMatrix::zero(3)));

  const Projection q = proj2(0.5, 0.5, 0.5, 0.5);
  const Projection qc = orthocomplement(q);
  CHECK(approx_equal(qc.matrix(), mat2(0.5, -0.5, -0.5, 0.5)));
  CHECK(approx_equal(orthocomplement(qc).matrix(), q.matrix()));
  CHECK((q.matrix().mat() * qc.matrix().mat()).norm() < 1e-12);
}

TEST_CASE("projection join and meet on the named examples") {
  const Projection p(SymMatrix::diagonal({1, 0, 0}));
  const Projection q(SymMatrix::diagonal({0, 1, 0}));
  CHECK(approx_equal(proj_join(p, q).matrix(), SymMatrix::diagonal({1, 1, 0})));
  CHECK(frobenius_norm(proj_meet(p, q).matrix()) < 1e-9);

  CHECK(approx_equal(proj_join(p, p).matrix(), p.matrix()));
  CHECK(approx_equal(proj_meet(p, p).matrix(), p.matrix()));

  // Two distinct lines in the plane meet at 0 and span everything.
  const Projection line1 = proj2(1, 0, 0, 0);
  const Projection line2 = proj2(0.5, 0.5, 0.5, 0.5);
  CHECK(frobenius_norm(proj_meet(line1, line2).matrix()) < 1e-9);
  CHECK(approx_equal(proj_join(line1, line2).matrix(), SymMatrix::identity(2)));
}

TEST_CASE("OML laws on sampled projection pools") {
  Rng rng(40);
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 4;
    const Projection p{random_projection(n, rng)};
    const Projection q{random_projection(n, rng)};

    // Involution and order reversal of the orthocomplementation.
    CHECK(approx_equal(orthocomplement(orthocomplement(p)).matrix(),
                       p.matrix()));
    const Projection join = proj_join(p, q);
    CHECK(loewner_leq(orthocomplement(join).matrix(),
                      orthocomplement(p).matrix(), kLoose));

    // Orthomodular identity for p <= join: join = p v (join ^ p-perp).
    const Projection rebuilt =
        proj_join(p, proj_meet(join, orthocomplement(p)));
    CHECK(approx_equal(rebuilt.matrix(), join.matrix(), kLoose));

    // De Morgan pairing of the lattice operations.
    CHECK(approx_equal(
        proj_meet(p, q).matrix(),
        orthocomplement(proj_join(orthocomplement(p), orthocomplement(q)))
            .matrix(),
        kLoose));
  }
}

TEST_CASE("effect/projection comparability forces commutation") {
  Rng rng(41);
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 4;
    const Projection p{random_projection(n, rng)};
    const SymMatrix e_raw = random_psd(n, rng, 0.0, 1.0);
    // e := p e' p <= p is an effect under p.
    const SymMatrix e = quad(p.matrix(), e_raw * (1.0 / std::max(1.0, order_unit_norm(e_raw))));
    REQUIRE(is_effect(e, kLoose));
    CHECK(loewner_leq(e, p.matrix(), kLoose));
    CHECK((e.mat() * p.matrix().mat() - e.mat()).norm() < 1e-9);
    CHECK((p.matrix().mat() * e.mat() - e.mat()).norm() < 1e-9);
    CHECK(approx_equal(quad(p.matrix(), e), e, kLoose));
    CHECK(commutes(e, p.matrix(), kLoose));

    // p <= e iff p = pe; take e = p + t(1 - p).
    const double t = rng.uniform(0.0, 1.0);
    const SymMatrix dominating =
        p.matrix() + (SymMatrix::identity(n) - p.matrix()) * t;
    CHECK(loewner_leq(p.matrix(), dominating, kLoose));
    CHECK((p.matrix().mat() * dominating.mat() - p.matrix().mat()).norm() <
          1e-9);
  }
}

TEST_CASE("orthogonal projections orthosum to their join") {
  Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const int n = 3 + k % 3;
    auto [a, b] = random_zero_product_pair(n, rng);
    const Projection p = carrier(a);
    const Projection q = carrier(b);
    REQUIRE((p.matrix().mat() * q.matrix().mat()).norm() < 1e-10);
    CHECK(loewner_leq(p.matrix() + q.matrix(), SymMatrix::identity(n), kLoose));
    CHECK(approx_equal(proj_join(p, q).matrix(), p.matrix() + q.matrix(),
                       kLoose));
  }
}

TEST_CASE("compatibility on the named examples") {
  const Projection p(SymMatrix::diagonal({1, 1, 0}));
  const Projection q(SymMatrix::diagonal({0, 1, 1}));
  const CompatibilityResult r = compatible(p, q);
  REQUIRE(r.compatible());
  CHECK(approx_equal(r.witness->e1.matrix(), SymMatrix::diagonal({1, 0, 0})));
  CHECK(approx_equal(r.witness->f1.matrix(), SymMatrix::diagonal({0, 0, 1})));
  CHECK(approx_equal(r.witness->d.matrix(), SymMatrix::diagonal({0, 1, 0})));

  // Comparable projections are compatible with e1 = 0.
  const Projection small(SymMatrix::diagonal({1, 0, 0}));
  const Projection big(SymMatrix::diagonal({1, 1, 0}));
  const CompatibilityResult r2 = compatible(small, big);
  REQUIRE(r2.compatible());
  CHECK(frobenius_norm(r2.witness->e1.matrix()) < 1e-9);
  CHECK(approx_equal(r2.witness->f1.matrix(), SymMatrix::diagonal({0, 1, 0})));
  CHECK(approx_equal(r2.witness->d.matrix(), small.matrix()));

  const CompatibilityResult r3 =
      compatible(proj2(1, 0, 0, 0), proj2(0.5, 0.5, 0.5, 0.5));
  CHECK_FALSE(r3.compatible());
  CHECK(r3.commutator_norm == doctest::Approx(0.5 * kSqrt2).epsilon(1e-12));
}

TEST_CASE("compatibility witnesses satisfy the decomposition exactly") {
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const auto fam = random_commuting_family(n, 2, rng, 0.0, 1.0);
    const Projection p = carrier(pos_part(fam[0] - SymMatrix::scalar(n, 0.5)));
    const Projection q = carrier(pos_part(fam[1] - SymMatrix::scalar(n, 0.5)));
    const CompatibilityResult r = compatible(p, q);
    REQUIRE(r.compatible());
    const auto& w = *r.witness;
    CHECK(approx_equal(w.e1.matrix() + w.d.matrix(), p.matrix(), kLoose));
    CHECK(approx_equal(w.f1.matrix() + w.d.matrix(), q.matrix(), kLoose));
    CHECK(loewner_leq(w.e1.matrix() + w.f1.matrix() + w.d.matrix(),
                      SymMatrix::identity(n), kLoose));
    CHECK((w.e1.matrix().mat() * w.f1.matrix().mat()).norm() < 1e-8);
  }
}

TEST_CASE("jordan positivity detects commutation on the named examples") {
  const Projection p(SymMatrix::diagonal({1, 0}));
  CHECK(jordan_positivity_commutation(p, SymMatrix::diagonal({3, 7})));
  CHECK(is_psd(jordan(p.matrix(), SymMatrix::diagonal({3, 7}))));

  Rng rng(44);
  const SymMatrix a = random_psd(3, rng);
  CHECK(jordan_positivity_commutation(Projection::identity(3), a));

  const SymMatrix q = mat2(0.5, 0.5, 0.5, 0.5);
  CHECK_FALSE(jordan_positivity_commutation(p, q));
  const auto ev = oracle::eig2(jordan(p.matrix(), q).mat());
  CHECK(ev.lo == doctest::Approx((1.0 - kSqrt2) / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(jordan_positivity_commutation(p, SymMatrix::diagonal({-1, 1})),
                  NotPositive);
}

TEST_CASE("classification: diagonal 0/1 projections form a Boolean algebra") {
  std::vector<Projection> s;
  for (int bits = 0; bits < 8; ++bits) {
    s.emplace_back(SymMatrix::diagonal({double(bits & 1), double((bits >> 1) & 1),
                                        double((bits >> 2) & 1)}));
  }
  const ClassificationVerdict v = classify_projection_set(s);
  CHECK(v.structure == StructureKind::Boolean);
  CHECK(v.witnesses.empty());
  CHECK(v.meets_in_set);
}

TEST_CASE("classification: the canonical pool is OML-not-Boolean") {
  const SymMatrix p = SymMatrix::diagonal({1, 0});
  const SymMatrix q = mat2(0.5, 0.5, 0.5, 0.5);
  std::vector<Projection> s{
      Projection::zero(2), Projection::identity(2),
      Projection(p), Projection(SymMatrix::identity(2) - p),
      Projection(q), Projection(SymMatrix::identity(2) - q)};
  const ClassificationVerdict v = classify_projection_set(s);
  CHECK(v.structure == StructureKind::OMLNotBoolean);
  REQUIRE_FALSE(v.witnesses.empty());

  bool found = false;
  for (const auto& w : v.witnesses) {
    CHECK(w.violated == "disjoint-not-orthogonal");
    const SymMatrix sum =
        s[static_cast<std::size_t>(w.i)].matrix() +
        s[static_cast<std::size_t>(w.j)].matrix();
    // lambda_max(p + q) = 1 + 1/sqrt(2) for the canonical pair (oracle).
    const auto ev = oracle::eig2(sum.mat());
    if (std::abs(ev.hi - (1.0 + 1.0 / kSqrt2)) < 1e-9) found = true;
    CHECK(ev.hi > 1.0 + 1e-9);
  }
  CHECK(found);
}

TEST_CASE("classification closure requirements") {
  const ClassificationVerdict v = classify_projection_set(
      {Projection::zero(2), Projection::identity(2),
       Projection(SymMatrix::diagonal({1, 0}))});
  CHECK(v.structure == StructureKind::NotClosed);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses.front().violated == "missing-orthocomplement");

  CHECK(classify_projection_set({Projection::zero(2), Projection::identity(2)})
            .structure == StructureKind::Boolean);
}

TEST_CASE("commutative effect sets classify as MV-effect algebras") {
  const std::vector<Effect> f{
      Effect(SymMatrix::zero(2)), Effect(SymMatrix::identity(2)),
      Effect(SymMatrix::diagonal({0.5, 0.2})),
      Effect(SymMatrix::diagonal({0.5, 0.8}))};
  const ClassificationVerdict v = classify_commutative_effect_set(f);
  CHECK(is_mv_effect_algebra(v.structure));
  // diag(.5,.2) and diag(.5,.8) are orthogonal but not disjoint, so the
  // pool is MV without being Boolean.
  CHECK(v.structure == StructureKind::MVNotBoolean);

  const ClassificationVerdict v2 = classify_commutative_effect_set(
      {Effect(SymMatrix::zero(2)), Effect(SymMatrix::identity(2))});
  CHECK(is_mv_effect_algebra(v2.structure));
  CHECK(v2.structure == StructureKind::Boolean);

  const std::vector<Effect> bad{
      Effect(SymMatrix::diagonal({1, 0})),
      Effect(mat2(0.5, 0.5, 0.5, 0.5))};
  CHECK_THROWS_AS(classify_commutative_effect_set(bad), NonCommutative);
}

TEST_CASE("commuting effect pairs keep ginf and gsup inside the unit interval") {
  Rng rng(45);
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 4;
    const auto fam = random_commuting_family(n, 2, rng, 0.0, 1.0);
    REQUIRE(is_effect(fam[0], kLoose));
    REQUIRE(is_effect(fam[1], kLoose));
    CHECK(is_effect(ginf(fam[0], fam[1]), kLoose));
    CHECK(is_effect(gsup(fam[0], fam[1]), kLoose));
  }
}
