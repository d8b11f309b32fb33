// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockrein/coherent.hpp"
#include "fockrein/error.hpp"
#include "fockrein/gbqft.hpp"
#include "oracles.hpp"

using namespace fockrein;

namespace {

const Complex I(0.0, 1.0);

// Fixed three-dimensional data; reference values come from an independent
// evaluation of exp(Λ̂† + ξ̂†)ψ₀ by a dense matrix exponential.
struct Fixture {
  KreinSpace space = KreinSpace::parse("+-+");
  CoherentData left = CoherentData::zero(3);
  CoherentData right = CoherentData::zero(3);

  Fixture() {
    const CMatrix s = space.signs().cast<Complex>().asDiagonal();
    const Complex a(0.3, 0.1);
    CMatrix skew(3, 3);
    skew << 0.0, a, -0.2 * I, -a, 0.0, 0.25, 0.2 * I, -0.25, 0.0;
    CMatrix skew2(3, 3);
    skew2 << 0.0, Complex(-0.1, 0.2), 0.15, Complex(0.1, -0.2), 0.0, -0.05 * I, -0.15, 0.05 * I, 0.0;
    KVector xi(3);
    xi << Complex(0.4, -0.1), 0.2 * I, -0.3;
    KVector xi2(3);
    xi2 << 0.1, Complex(-0.2, 0.3), 0.05 * I;
    left = {KOperator::conjugate_linear(s * skew), xi};
    right = {KOperator::conjugate_linear(s * skew2), xi2};
  }
};

CoherentData plane_data(Complex a) {
  CMatrix m(2, 2);
  m << 0.0, a, -a, 0.0;
  return {KOperator::conjugate_linear(m), KVector::Zero(2)};
}

}  // namespace

TEST_CASE("reference coefficients and overlap") {
  const Fixture f;
  const FockState k = coherent_explicit(f.space, f.left);
  CHECK(std::abs(k[0] - 1.0) < 1e-15);
  CHECK(std::abs(k[0b011] - Complex(0.075, -0.025)) < 1e-15);
  CHECK(std::abs(k[0b101] - 0.05 * I) < 1e-15);
  CHECK(std::abs(k[0b111] - Complex(0.0020833333333333333, 0.002291666666666666)) < 1e-15);
  const Complex expected(1.0019625, 0.049775);
  CHECK(std::abs(fock_inner(k, coherent_explicit(f.space, f.right)) - expected) < 1e-14);
  CHECK(std::abs(overlap_closed(f.space, f.left, f.right) - expected) < 1e-14);
}

TEST_CASE("trivial data") {
  const KreinSpace space = KreinSpace::parse("+-");
  const FockState vac = FockState::vacuum(space);
  CHECK(oracle::state_distance(coherent_series(space, CoherentData::zero(2)), vac) == 0.0);
  CHECK(oracle::state_distance(coherent_explicit(space, CoherentData::zero(2)), vac) == 0.0);

  Rng rng(1);
  const KVector xi = rng.vector(2);
  const CoherentData linear_only{KOperator::zero(2, Linearity::conjugate_linear), xi};
  const FockState expected = vac + (1.0 / std::sqrt(2.0)) * create(xi, vac);
  CHECK(oracle::state_distance(coherent_series(space, linear_only), expected) < 1e-15);
  const FockState k = coherent_explicit(space, linear_only);
  CHECK(oracle::state_distance(k, expected) < 1e-15);
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(k[Mask{1} << j] - 0.5 * inner(space, xi, oracle::basis(2, j))) < 1e-15);
  }
}

TEST_CASE("two-dimensional positive example") {
  const KreinSpace plane = KreinSpace::parse("++");
  for (Complex a : {Complex(0.5, 0.0), Complex(0.1, 0.7)}) {
    const CoherentData data = plane_data(a);
    CHECK(std::abs(coherent_series(plane, data)[0b11] - std::conj(a) / 4.0) < 1e-15);
    CHECK(std::abs(coherent_explicit(plane, data)[0b11] - std::conj(a) / 4.0) < 1e-15);
    CHECK(std::abs(overlap_closed(plane, data, data) - (1.0 + std::norm(a))) < 1e-12);
  }
  CHECK(std::abs(overlap_closed(plane, CoherentData::zero(2), CoherentData::zero(2)) - 1.0) == 0.0);
}

TEST_CASE("construction routes agree") {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const KreinSpace space = rng.signature(1 + t % 6);
    const CoherentData data = random_coherent_data(space, rng, 2.0 * rng.uniform(), 2.0 * rng.uniform());
    const FockState k = coherent_explicit(space, data);
    CHECK(oracle::state_distance(coherent_series(space, data), k) < 1e-12);
    CHECK(oracle::state_distance(coherent_explicit_literal(space, data), k) < 1e-12);
  }
  CHECK_THROWS_AS(coherent_explicit_literal(KreinSpace::with_counts(4, 4), CoherentData::zero(8)), UsageError);
}

TEST_CASE("Pfaffian") {
  Rng rng(3);
  for (int n : {2, 4, 6}) {
    CMatrix a = rng.matrix(n, n);
    a = a - CMatrix(a.transpose());
    const Complex pf = pfaffian(a);
    CHECK(std::abs(pf - oracle::pfaffian_matchings(a)) < 1e-12);
    CHECK(std::abs(pf * pf - a.determinant()) < 1e-10);
  }
  CHECK(pfaffian(CMatrix::Zero(3, 3)) == Complex(0.0));
  CHECK(pfaffian(CMatrix::Zero(0, 0)) == Complex(1.0));
}

TEST_CASE("closed overlap matches the Fock inner product") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const KreinSpace space = rng.signature(1 + t % 6);
    const CoherentData left = random_coherent_data(space, rng, 0.7, 1.5 * rng.uniform());
    const CoherentData right = random_coherent_data(space, rng, 0.7, 1.5 * rng.uniform());
    const Complex fock = fock_inner(coherent_explicit(space, left), coherent_explicit(space, right));
    CHECK(std::abs(overlap_closed(space, left, right) - fock) <= 1e-8 * std::abs(fock));
    CHECK(std::abs(wave_function(space, left, coherent_explicit(space, right)) - fock) <= 1e-12 * std::abs(fock));
  }
}

TEST_CASE("zero parameter overlap") {
  Rng rng(5);
  const KreinSpace space = KreinSpace::parse("+--+");
  const KVector xi = rng.vector(4);
  const KVector xi2 = rng.vector(4);
  const CoherentData left{KOperator::zero(4, Linearity::conjugate_linear), xi};
  const CoherentData right{KOperator::zero(4, Linearity::conjugate_linear), xi2};
  CHECK(std::abs(overlap_closed(space, left, right) - (1.0 + 0.5 * inner(space, xi2, xi))) < 1e-12);
}

TEST_CASE("even components ignore the linear part") {
  Rng rng(6);
  const KreinSpace space = KreinSpace::parse("+-+-+");
  const KOperator lam = rng.conj_antisymmetric(space);
  const FockState a = coherent_explicit(space, {lam, rng.vector(5)});
  const FockState b = coherent_explicit(space, {lam, rng.vector(5)});
  for (Mask m = 0; m < 32; ++m) {
    if (degree_of(m) % 2 == 0) {
      CHECK(a[m] == b[m]);
    } else if (degree_of(m) == 1) {
      CHECK(a[m] != b[m]);
    }
  }
}

TEST_CASE("wave function") {
  Rng rng(7);
  const KreinSpace space = KreinSpace::parse("++-");
  const CoherentData data = random_coherent_data(space, rng, 0.6, 1.0);
  CHECK(std::abs(wave_function(space, data, FockState::vacuum(space)) - 1.0) < 1e-15);

  // Holomorphic in the ξ coordinates: the Cauchy-Riemann residual vanishes.
  FockState psi(space);
  for (Mask m = 0; m < 8; ++m) psi[m] = rng.unit_disc();
  const double h = 1e-5;
  for (int k = 0; k < 3; ++k) {
    CoherentData re = data;
    CoherentData im = data;
    re.xi(k) += h;
    im.xi(k) += I * h;
    const Complex base = wave_function(space, data, psi);
    const Complex d_re = (wave_function(space, re, psi) - base) / h;
    const Complex d_im = (wave_function(space, im, psi) - base) / h;
    CHECK(std::abs(d_im - I * d_re) < 1e-6);
  }
}

TEST_CASE("distinct data give distinct states") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const KreinSpace space = rng.signature(2 + t % 3);
    const FockState a = coherent_explicit(space, random_coherent_data(space, rng, 0.5, 1.0));
    const FockState b = coherent_explicit(space, random_coherent_data(space, rng, 0.5, 1.0));
    CHECK(oracle::state_distance(a, b) > 1e-6);
  }
}

TEST_CASE("coherent states span the Fock space") {
  Rng rng(9);
  for (int d = 1; d <= 4; ++d) {
    const KreinSpace space = rng.signature(d);
    const auto size = static_cast<Eigen::Index>(1) << d;
    CMatrix family(size, size);
    for (Eigen::Index c = 0; c < size; ++c) {
      family.col(c) = coherent_explicit(space, random_coherent_data(space, rng, 0.8, 1.0)).coefficients();
    }
    CHECK(Eigen::FullPivLU<CMatrix>(family).rank() == size);
  }
}

TEST_CASE("overlap outside the hypothesis is rejected") {
  const KreinSpace plane = KreinSpace::parse("++");
  const CoherentData data = plane_data(1.2);
  try {
    (void)overlap_closed(plane, data, data);
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::abs(e.norm() - 1.44) < 1e-12);
  }
}

TEST_CASE("invalid data") {
  const KreinSpace plane = KreinSpace::parse("++");
  CMatrix sym(2, 2);
  sym << 0.0, 0.3, 0.3, 0.0;
  CHECK_THROWS_AS(coherent_explicit(plane, {KOperator::conjugate_linear(sym), KVector::Zero(2)}), UsageError);
  CHECK_THROWS_AS(coherent_explicit(plane, {KOperator::linear(CMatrix::Zero(2, 2)), KVector::Zero(2)}), UsageError);
  CHECK_THROWS_AS(coherent_explicit(plane, CoherentData::zero(3)), UsageError);
}
