// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockrein/error.hpp"
#include "fockrein/gbqft.hpp"
#include "oracles.hpp"

using namespace fockrein;

namespace {

const Complex I(0.0, 1.0);

CoherentData plane_data(Complex a) {
  CMatrix m(2, 2);
  m << 0.0, a, a, 0.0;
  return {KOperator::conjugate_linear(m), KVector::Zero(2)};
}

}  // namespace

TEST_CASE("reference amplitude in dimension four") {
  // Reference value from an independent dense evaluation of the brute-force sum.
  const KreinSpace space = KreinSpace::parse("+--+");
  const CMatrix s = space.signs().cast<Complex>().asDiagonal();
  CMatrix b(4, 4);
  b << 0.0, 0.2, -0.1 * I, 0.05,
       -0.2, 0.0, Complex(0.15, 0.1), -0.1,
       0.1 * I, Complex(-0.15, -0.1), 0.0, 0.2 * I,
       -0.05, 0.1, -0.2 * I, 0.0;
  KVector xi(4);
  xi << 0.3, 0.1 * I, -0.2, 0.4;
  const CoherentData data{KOperator::conjugate_linear(s * b), xi};
  const Region region = base_region(space);
  const Complex expected(0.7925, -0.165);
  CHECK(std::abs(amplitude_closed(region, data) - expected) < 1e-14);
  CHECK(std::abs(amplitude_bruteforce(region, coherent_explicit(space, data)) - expected) < 1e-14);
  CHECK(std::abs(amplitude_degreewise(region, data) - expected) < 1e-14);
}

TEST_CASE("two-dimensional worked case") {
  const KreinSpace space = KreinSpace::parse("+-");
  const Region region = base_region(space);
  for (Complex a : {Complex(0.5, 0.0), Complex(0.2, -0.6)}) {
    const CoherentData data = plane_data(a);
    CHECK(std::abs(amplitude_closed(region, data) - (1.0 - std::conj(a))) < 1e-14);
    CHECK(std::abs(amplitude_degree_lemma(region, data.lambda, 1) + std::conj(a)) < 1e-15);
    CHECK(std::abs(amplitude_bruteforce(region, coherent_explicit(space, data)) - (1.0 - std::conj(a))) < 1e-14);
  }
  CHECK(amplitude_bruteforce(region, FockState::vacuum(space)) == Complex(1.0));
  CHECK(amplitude_degree_lemma(region, plane_data(0.3).lambda, 0) == Complex(1.0));
}

TEST_CASE("regions") {
  const Region r = random_region(4, 3);
  CHECK(r.boundary() == KreinSpace::parse("++--"));
  const StructuralFlags f = structural_predicates(r.boundary(), r.u());
  CHECK(f.involution);
  CHECK(f.real_anti_isometry);
  CHECK(f.adapted);
  CHECK(oracle::max_abs(CMatrix(base_region_map(KreinSpace::parse("+-")).matrix() -
                                CMatrix(CMatrix::Identity(2, 2).rowwise().reverse()))) == 0.0);

  CHECK_THROWS_AS(Region::make(KreinSpace::parse("++-"), KOperator::zero(3, Linearity::conjugate_linear)),
                  UsageError);
  CHECK_THROWS_AS(Region::make(KreinSpace::parse("+-"), KOperator::identity(2)), UsageError);
  CHECK_THROWS_AS(Region::make(KreinSpace::parse("+-"), KOperator::conjugate_linear(CMatrix::Identity(2, 2))),
                  UsageError);

  const Region u = disjoint_union(base_region(KreinSpace::parse("+-")), base_region(KreinSpace::parse("-+")));
  CHECK(u.boundary() == KreinSpace::parse("+--+"));

  const Hypersurface sigma{KreinSpace::parse("+-+")};
  const Hypersurface rev = sigma.reversed();
  CHECK(rev.space == KreinSpace::parse("-+-"));
  CHECK(rev.orientation == Orientation::reversed);
  CHECK(slice_region(sigma).boundary() == KreinSpace::parse("-+-+-+"));
}

TEST_CASE("amplitude routes agree") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const int d = 2 * (1 + t % 3);
    const KreinSpace space = KreinSpace::with_counts(d / 2, d / 2);
    const Region region = random_region(space, rng);
    const CoherentData data = random_coherent_data(space, rng, 0.9 * rng.uniform(), 1.0);
    const Complex closed = amplitude_closed(region, data);
    CHECK(std::abs(amplitude_bruteforce(region, coherent_explicit(space, data)) - closed) < 1e-8 * std::abs(closed));
    CHECK(std::abs(amplitude_degreewise(region, data) - closed) < 1e-8 * std::abs(closed));
    CoherentData other = data;
    other.xi = rng.vector(d);
    CHECK(amplitude_closed(region, other) == closed);
  }
}

TEST_CASE("amplitude vanishes on odd states") {
  Rng rng(12);
  const KreinSpace space = KreinSpace::parse("+-+-");
  const Region region = random_region(space, rng);
  CHECK(amplitude_bruteforce(region, random_parity_state(space, 1, rng)) == Complex(0.0));
}

TEST_CASE("orientation reversal") {
  Rng rng(13);
  const KreinSpace space = KreinSpace::parse("+--");
  const FockState psi = random_state(space, rng);
  const FockState rev = iota(psi);
  CHECK(rev.space() == space.negated());
  CHECK(oracle::state_distance(iota(rev), psi) == 0.0);
  for (int parity : {0, 1}) {
    const FockState eta = random_parity_state(space, parity, rng);
    const FockState phi = random_parity_state(space, parity, rng);
    const double sign = parity == 0 ? 1.0 : -1.0;
    CHECK(std::abs(fock_inner(iota(eta), iota(phi)) - sign * std::conj(fock_inner(eta, phi))) < 1e-12);
  }

  const CoherentData data = random_coherent_data(space, rng, 0.6, 1.0);
  const FockState mapped = iota(coherent_explicit(space, data));
  CHECK(oracle::state_distance(mapped, coherent_explicit(space.negated(), iota_coherent_data(data))) < 1e-12);
}

TEST_CASE("graded product") {
  Rng rng(14);
  const KreinSpace a = KreinSpace::parse("+-");
  const KreinSpace b = KreinSpace::parse("-++");
  const FockState x = random_state(a, rng);
  const FockState y = random_state(b, rng);
  const FockState x2 = random_state(a, rng);
  const FockState y2 = random_state(b, rng);
  const FockState xy = tau(x, y);
  CHECK(xy.space() == KreinSpace::parse("+--++"));
  CHECK(std::abs(fock_inner(xy, tau(x2, y2)) - fock_inner(x, x2) * fock_inner(y, y2)) < 1e-12);
  CHECK(oracle::state_distance(tau(FockState::vacuum(a), y), swap_blocks(tau(y, FockState::vacuum(a)), 3)) < 1e-15);

  const FockState xo = random_parity_state(a, 1, rng);
  const FockState yo = random_parity_state(b, 1, rng);
  CHECK(oracle::state_distance(swap_blocks(tau(xo, yo), 2), -1.0 * tau(yo, xo)) < 1e-15);

  const CoherentData da = random_coherent_data(a, rng, 0.5, 0.7);
  const CoherentData db = random_coherent_data(b, rng, 0.5, 0.7);
  const FockState glued = tau(coherent_explicit(a, da), coherent_explicit(b, db));
  const CoherentData dg = tau_coherent_data(a, da, b, db);
  CHECK(oracle::state_distance(glued, coherent_explicit(KreinSpace::parse("+--++"), dg)) < 1e-12);
}

TEST_CASE("slice region reproduces the inner product") {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    const KreinSpace space = rng.signature(1 + t % 3);
    const Hypersurface sigma{space};
    const CoherentData left = random_coherent_data(space, rng, 0.5, 0.7);
    const CoherentData right = random_coherent_data(space, rng, 0.5, 0.7);
    const SliceResult r = slice_inner(sigma, left, right);
    CHECK(r.max_deviation() < 1e-8);
    CHECK(r.odd_trace_max < 1e-12);
    CHECK(r.even_trace_dev < 1e-10);
    CHECK(std::abs(r.g_sum - r.minus_half_b) < 1e-10);
    const Complex brute = slice_inner_bruteforce(sigma, left, right);
    CHECK(std::abs(brute - r.fock_overlap) < 1e-8 * std::abs(r.fock_overlap));
  }
}

TEST_CASE("axioms") {
  const Report r = axiom_suite(42, 20);
  CHECK(r.pass());
  CHECK(!r.notes().empty());
}

TEST_CASE("hypothesis guard") {
  const KreinSpace space = KreinSpace::parse("+-");
  try {
    (void)amplitude_closed(base_region(space), plane_data(1.2));
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::abs(e.norm() - 1.2) < 1e-12);
  }
}
