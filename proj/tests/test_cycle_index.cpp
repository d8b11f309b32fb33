// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "fockrein/cycle_index.hpp"
#include "fockrein/error.hpp"

using namespace fockrein;

TEST_CASE("pairing graph of a permutation") {
  const std::array<int, 2> id{0, 1};
  const std::array<int, 2> swap{1, 0};
  CHECK(p_sigma(id) == Exponents{1});
  CHECK(p_sigma(swap) == Exponents{1});
  // One-line form (1, 3, 2, 4): σ-edges {1,3} and {2,4} close a single 4-cycle.
  const std::array<int, 4> crossing{0, 2, 1, 3};
  CHECK(p_sigma(crossing) == Exponents{0, 1});
  const std::array<int, 4> parallel{1, 0, 3, 2};
  CHECK(p_sigma(parallel) == Exponents{2, 0});

  const std::array<int, 3> odd{0, 1, 2};
  const std::array<int, 4> repeated{0, 1, 1, 3};
  CHECK_THROWS_AS(p_sigma(odd), UsageError);
  CHECK_THROWS_AS(p_sigma(repeated), UsageError);
}

TEST_CASE("small polynomials") {
  CHECK(p_n_enumerate(1).to_string("p_1") == "p_1 = 2 x1");
  CHECK(p_n_enumerate(2).to_string("p_2") == "p_2 = 8 x1^2 + 16 x2");
  CHECK(p_n_recursive(2).to_string("p_2") == "p_2 = 8 x1^2 + 16 x2");
  CHECK(q_n_closed(1).to_string("q_1") == "q_1 = 1 y1");
  CHECK(q_n_closed(2).to_string("q_2") == "q_2 = 1/2 y1^2 + 1/2 y2");
  CHECK(q_n_closed(0).to_string("q_0") == "q_0 = 1");
  CHECK(p_n_enumerate(3).coefficient_sum() == 720);
}

TEST_CASE("reference enumeration values") {
  // Independent enumeration of S^6 and S^8.
  CHECK(p_n_enumerate(3).to_string("p_3") == "p_3 = 48 x1^3 + 288 x1 x2 + 384 x3");
  const CycleIndexPoly p4 = p_n_recursive(4);
  CHECK(p4.to_string("p_4") == "p_4 = 384 x1^4 + 4608 x1^2 x2 + 12288 x1 x3 + 4608 x2^2 + 18432 x4");
  CHECK(p_n_enumerate(4) == p4);
  CHECK(q_n_closed(4).to_string("q_4") ==
        "q_4 = 1/24 y1^4 + 1/4 y1^2 y2 + 1/3 y1 y3 + 1/8 y2^2 + 1/4 y4");
}

TEST_CASE("recursion and closed form") {
  for (int n = 0; n <= 8; ++n) {
    const CycleIndexPoly p = p_n_recursive(n);
    const CycleIndexPoly q = q_n_closed(n);
    CHECK(q_n_recursive(n) == q);
    CHECK(q_from_p(p, n) == q);
    CHECK(p_from_q(q, n) == p);
    CHECK(p.coefficient_sum() == Rational(factorial_big(2 * n)));
    CHECK(q.coefficient_sum() == 1);
    CHECK(p.weight_homogeneous(n));
    CHECK(q.weight_homogeneous(n));
    for (const auto& [e, c] : p.terms()) {
      CHECK(c > 0);
      CHECK(denominator(c) == 1);
    }
  }
}

TEST_CASE("exponential series identity") {
  CHECK(series_identity_check(1).pass());
  CHECK(series_identity_check(2).pass());
  CHECK(series_identity_check(8).pass());
}

TEST_CASE("evaluation") {
  const Complex c(0.3, -1.2);
  const std::vector<Complex> one{c};
  CHECK(evaluate_poly(q_n_closed(1), one) == c);
  const std::vector<Complex> two{0.0, c};
  CHECK(std::abs(evaluate_poly(q_n_closed(2), two) - c / 2.0) < 1e-15);
  const std::vector<Complex> ones{1.0, 1.0};
  CHECK(evaluate_poly(p_n_recursive(2), ones) == Complex(24.0));
  CHECK_THROWS_AS(evaluate_poly(q_n_closed(2), one), UsageError);
}

TEST_CASE("relabeling symmetry") {
  std::mt19937_64 gen(12);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      std::vector<int> sigma(static_cast<std::size_t>(2 * n));
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), gen);
      // Swap the two vertices of a fixed edge, and swap two σ-edges.
      std::vector<int> moved = sigma;
      for (int& v : moved) {
        if (v == 0) v = 1;
        else if (v == 1) v = 0;
      }
      const Exponents before = p_sigma(sigma);
      CHECK(p_sigma(moved) == before);
      if (n >= 2) {
        std::vector<int> blocks = sigma;
        std::swap(blocks[0], blocks[2]);
        std::swap(blocks[1], blocks[3]);
        CHECK(p_sigma(blocks) == before);
      }
    }
  }
}

TEST_CASE("symmetry group order") {
  for (int n = 0; n <= 6; ++n) {
    const BigInt f = factorial_big(n);
    CHECK(symmetry_group_order(n) == (BigInt(1) << (2 * n)) * f * f);
  }
}

TEST_CASE("enumeration guard") { CHECK_THROWS_AS(p_n_enumerate(6), UsageError); }
