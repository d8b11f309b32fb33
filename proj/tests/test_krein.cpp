// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockrein/error.hpp"
#include "fockrein/fredholm.hpp"
#include "fockrein/krein.hpp"
#include "fockrein/random.hpp"
#include "oracles.hpp"

using namespace fockrein;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("inner product conventions") {
  const KreinSpace pm = KreinSpace::parse("+-");
  CHECK(inner(pm, oracle::basis(2, 1), oracle::basis(2, 1)) == Complex(-1.0));
  const KreinSpace p = KreinSpace::parse("+");
  KVector v(1);
  v << I;
  CHECK(inner(p, v, v) == Complex(1.0));
  KVector w(1);
  w << 2.0;
  CHECK(inner(p, v, w) == -2.0 * I);
  CHECK_THROWS_AS(inner(pm, v, w), UsageError);
}

TEST_CASE("signature parsing") {
  CHECK(KreinSpace::parse("+ +--").dim() == 4);
  CHECK(KreinSpace::parse("++--").balanced());
  CHECK(KreinSpace::parse("+-+").negated() == KreinSpace::parse("-+-"));
  CHECK_THROWS_AS(KreinSpace::parse("+x-"), UsageError);
}

TEST_CASE("completeness relation in dimension 4") {
  Rng rng(7);
  const KreinSpace space = KreinSpace::parse("+-+-");
  for (int t = 0; t < 20; ++t) {
    const KVector v = rng.vector(4);
    const KVector w = rng.vector(4);
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      const KVector e = oracle::basis(4, i);
      sum += static_cast<double>(space.sign(i)) * inner(space, v, e) * inner(space, e, w);
    }
    CHECK(std::abs(sum - inner(space, v, w)) < 1e-12);
  }
}

TEST_CASE("trace") {
  const KreinSpace three = KreinSpace::parse("+-+");
  CHECK(trace(three, KOperator::identity(3)) == Complex(3.0));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 2.0 + I;
  d(1, 1) = -0.5;
  CHECK(std::abs(trace(KreinSpace::parse("+-"), KOperator::linear(d)) - (1.5 + I)) < 1e-15);
  CHECK_THROWS_AS(trace(KreinSpace::parse("+-"), KOperator::conjugate_linear(d)), UsageError);

  Rng rng(11);
  const KreinSpace four = KreinSpace::parse("++--");
  for (int t = 0; t < 20; ++t) {
    const KOperator g = rng.adapted_isometry(four);
    const KOperator lam = KOperator::linear(rng.matrix(4, 4));
    const KOperator conj = compose(compose(g, lam), KOperator::linear(g.matrix().inverse()));
    CHECK(std::abs(trace(four, conj) - trace(four, lam)) < 1e-12);
  }
}

TEST_CASE("Krein adjoint") {
  const KreinSpace pm = KreinSpace::parse("+-");
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  const CMatrix adj = adjoint(pm, KOperator::linear(m)).matrix();
  CHECK(adj(1, 0) == Complex(-1.0));
  CHECK(oracle::max_abs(CMatrix(adj - adj(1, 0) * oracle::basis(2, 1) * oracle::basis(2, 0).transpose())) == 0.0);

  Rng rng(5);
  const KreinSpace five = KreinSpace::parse("+--+-");
  for (int t = 0; t < 100; ++t) {
    const KOperator b = KOperator::linear(rng.matrix(5, 5));
    const KVector v = rng.vector(5);
    const KVector w = rng.vector(5);
    CHECK(std::abs(inner(five, adjoint(five, b).apply(v), w) - inner(five, v, b.apply(w))) < 1e-12);
    CHECK(oracle::max_abs(CMatrix(adjoint(five, adjoint(five, b)).matrix() - b.matrix())) < 1e-15);
  }
  const KreinSpace plus = KreinSpace::parse("++");
  const CMatrix r = rng.matrix(2, 2);
  CHECK(oracle::max_abs(CMatrix(adjoint(plus, KOperator::linear(r)).matrix() - r.adjoint())) == 0.0);
}

TEST_CASE("conjugate anti-symmetry") {
  const Complex a(0.4, -0.3);
  CMatrix m(2, 2);
  m << 0.0, a, -a, 0.0;
  CHECK(is_conj_antisymmetric(KreinSpace::parse("++"), KOperator::conjugate_linear(m)));
  m << 0.0, a, a, 0.0;
  CHECK(is_conj_antisymmetric(KreinSpace::parse("+-"), KOperator::conjugate_linear(m)));
  CHECK_FALSE(is_conj_antisymmetric(KreinSpace::parse("++"), KOperator::conjugate_linear(m)));
  CHECK_FALSE(is_conj_antisymmetric(KreinSpace::parse("+-"), KOperator::linear(m)));

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const KreinSpace space = rng.signature(1 + t % 5);
    const int d = space.dim();
    const KOperator lam = rng.conj_antisymmetric(space);
    const KVector v = rng.vector(d);
    const KVector w = rng.vector(d);
    CHECK(std::abs(inner(space, v, lam.apply(w)) + inner(space, w, lam.apply(v))) < 1e-12);

    const KOperator sq = compose(lam, lam);
    CHECK(sq.is_linear());
    CHECK(oracle::max_abs(CMatrix(adjoint(space, sq).matrix() - sq.matrix())) < 1e-12);
    CHECK(std::abs(inner(space, v, sq.apply(v)) + inner(space, lam.apply(v), lam.apply(v))) < 1e-12);
  }
}

TEST_CASE("scaling by i") {
  Rng rng(9);
  const KreinSpace space = KreinSpace::parse("+-+");
  for (int t = 0; t < 100; ++t) {
    const KOperator lam = rng.conj_antisymmetric(space);
    const KOperator il = scale_i(lam);
    CHECK(is_conj_antisymmetric(space, il));
    const KVector v = rng.vector(3);
    CHECK(oracle::max_abs(CVector(il.apply(v) - I * lam.apply(v))) < 1e-15);
    CHECK(oracle::max_abs(CVector(il.apply(I * v) - lam.apply(v))) < 1e-15);
    CHECK(oracle::max_abs(CMatrix(scale_i(il).matrix() + lam.matrix())) < 1e-15);
  }
  CHECK(oracle::max_abs(scale_i(KOperator::zero(2, Linearity::conjugate_linear)).matrix()) == 0.0);
  CHECK_THROWS_AS(scale_i(KOperator::identity(2)), UsageError);
}

TEST_CASE("structural predicates") {
  const KreinSpace pm = KreinSpace::parse("+-");
  const StructuralFlags id = structural_predicates(pm, KOperator::identity(2));
  CHECK(id.real_isometry);
  CHECK(id.involution);
  CHECK(id.adapted);
  CHECK_FALSE(id.real_anti_isometry);

  CMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  const StructuralFlags u = structural_predicates(pm, KOperator::conjugate_linear(swap));
  CHECK(u.involution);
  CHECK(u.real_anti_isometry);
  CHECK(u.adapted);
  CHECK(u.real_antisymmetric);
}

TEST_CASE("operator norm") {
  CHECK(std::abs(operator_norm(KOperator::identity(3)) - 1.0) < 1e-15);
  CHECK(std::abs(operator_norm(Complex(0.0, 2.5) * KOperator::identity(3)) - 2.5) < 1e-14);
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 2.0;
  CHECK(std::abs(operator_norm(KOperator::linear(m)) - 2.0) < 1e-15);
  CHECK(std::abs(operator_norm(KOperator::conjugate_linear(m)) - 2.0) < 1e-15);
}

TEST_CASE("composition of conjugate-linear maps") {
  Rng rng(1);
  const KOperator a = KOperator::conjugate_linear(rng.matrix(3, 3));
  const KOperator b = KOperator::conjugate_linear(rng.matrix(3, 3));
  const KOperator ab = compose(a, b);
  CHECK(ab.is_linear());
  const KVector v = rng.vector(3);
  CHECK(oracle::max_abs(CVector(ab.apply(v) - a.apply(b.apply(v)))) < 1e-14);
  const KOperator c = compose(ab, a);
  CHECK_FALSE(c.is_linear());
  CHECK(oracle::max_abs(CVector(c.apply(v) - a.apply(b.apply(a.apply(v))))) < 1e-14);
}

TEST_CASE("trace-log determinant root") {
  CMatrix zero = CMatrix::Zero(3, 3);
  CHECK(sqrt_det_one_minus(zero, "A") == Complex(1.0));
  const Complex a(0.3, 0.2);
  const CMatrix scalar = a * CMatrix::Identity(2, 2);
  CHECK(std::abs(sqrt_det_one_minus(scalar, "A") - (1.0 - a)) < 1e-14);

  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    CMatrix m = rng.matrix(4, 4);
    m *= 0.8 / operator_norm(m);
    const Complex root = sqrt_det_one_minus(m, "A");
    const Complex det = (CMatrix::Identity(4, 4) - m).determinant();
    CHECK(std::abs(root * root - det) < 1e-12);
  }

  // Odd powers can have vanishing trace; the series must still run to the end.
  CMatrix nil = CMatrix::Zero(2, 2);
  nil << 0.0, 0.6, 0.6, 0.0;
  CHECK(std::abs(sqrt_det_one_minus(nil, "A") - std::sqrt(Complex(1.0 - 0.36))) < 1e-14);

  CMatrix big = 1.5 * CMatrix::Identity(2, 2);
  try {
    (void)sqrt_det_one_minus(big, "A");
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::abs(e.norm() - 1.5) < 1e-12);
    CHECK(std::string(e.what()).find("||A||_op") != std::string::npos);
  }
}
