// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/gbqft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fockrein/cycle_index.hpp"
#include "fockrein/error.hpp"
#include "fockrein/fredholm.hpp"

namespace fockrein {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int parity_sign(long long k) { return (k & 1) ? -1 : 1; }

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

KVector stack(const KVector& a, const KVector& b) {
  KVector out(a.size() + b.size());
  out << a, b;
  return out;
}

double scale_of(Complex reference) { return std::max(1.0, std::abs(reference)); }

}  // namespace

Hypersurface Hypersurface::reversed() const {
  return {space.negated(),
          orientation == Orientation::standard ? Orientation::reversed : Orientation::standard};
}

KVector transport(const KVector& v) { return v.conjugate(); }

KOperator transport(const KOperator& op) { return {op.matrix().conjugate(), op.linearity()}; }

CoherentData transport(const CoherentData& data) {
  return {transport(data.lambda), transport(data.xi)};
}

Region Region::make(const KreinSpace& boundary, const KOperator& u, double tol) {
  require_dim(boundary, u, "region map");
  if (!boundary.balanced()) {
    throw UsageError("region boundary needs equally many positive and negative directions");
  }
  if (u.is_linear()) throw UsageError("region map must be conjugate-linear");
  const StructuralFlags f = structural_predicates(boundary, u, tol);
  if (!f.involution) throw UsageError("region map is not an involution");
  if (!f.real_anti_isometry) throw UsageError("region map is not a real anti-isometry");
  if (!f.adapted) throw UsageError("region map is not adapted to the decomposition");
  return Region(boundary, u);
}

KOperator base_region_map(const KreinSpace& space) {
  if (!space.balanced()) {
    throw UsageError("region boundary needs equally many positive and negative directions");
  }
  const int d = space.dim();
  std::vector<int> pos;
  std::vector<int> neg;
  for (int i = 0; i < d; ++i) (space.sign(i) > 0 ? pos : neg).push_back(i);
  CMatrix u = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    u(pos[k], neg[k]) = 1.0;
    u(neg[k], pos[k]) = 1.0;
  }
  return KOperator::conjugate_linear(std::move(u));
}

Region base_region(const KreinSpace& space) { return Region::make(space, base_region_map(space)); }

Region random_region(const KreinSpace& space, Rng& rng) {
  const KOperator u0 = base_region_map(space);
  const KOperator g = rng.adapted_isometry(space);
  const KOperator g_inv = KOperator::linear(g.matrix().adjoint());
  return Region::make(space, compose(compose(g, u0), g_inv));
}

Region random_region(int dim, std::uint64_t seed) {
  if (dim <= 0 || dim % 2 != 0) throw UsageError("region dimension must be positive and even");
  Rng rng(seed);
  return random_region(KreinSpace::with_counts(dim / 2, dim / 2), rng);
}

Region disjoint_union(const Region& a, const Region& b) {
  return Region::make(direct_sum(a.boundary(), b.boundary()), direct_sum(a.u(), b.u()));
}

Region slice_region(const Hypersurface& sigma) {
  const int d = sigma.space.dim();
  CMatrix u = CMatrix::Zero(2 * d, 2 * d);
  u.topRightCorner(d, d) = CMatrix::Identity(d, d);
  u.bottomLeftCorner(d, d) = CMatrix::Identity(d, d);
  return Region::make(direct_sum(sigma.reversed().space, sigma.space),
                      KOperator::conjugate_linear(std::move(u)));
}

FockState iota(const FockState& psi) {
  FockState out(psi.space().negated());
  for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) {
    const long long n = degree_of(m);
    out[m] = static_cast<double>(parity_sign(n * (n - 1) / 2)) * std::conj(psi[m]);
  }
  return out;
}

FockState tau(const FockState& first, const FockState& second) {
  const int d1 = first.dim();
  FockState out(direct_sum(first.space(), second.space()));
  for (Mask a = 0; a < static_cast<Mask>(first.size()); ++a) {
    if (first[a] == Complex(0.0)) continue;
    for (Mask b = 0; b < static_cast<Mask>(second.size()); ++b) {
      const int m = degree_of(a);
      const int n = degree_of(b);
      const double weight = factorial(m) * factorial(n) / factorial(m + n);
      out[a | (b << d1)] = weight * first[a] * second[b];
    }
  }
  return out;
}

FockState swap_blocks(const FockState& psi, int first_dim) {
  const int d = psi.dim();
  if (first_dim < 0 || first_dim > d) throw UsageError("block size outside the space");
  const int second_dim = d - first_dim;
  std::vector<int> sig;
  for (int i = first_dim; i < d; ++i) sig.push_back(psi.space().sign(i));
  for (int i = 0; i < first_dim; ++i) sig.push_back(psi.space().sign(i));
  FockState out{KreinSpace(std::move(sig))};
  const Mask low = (Mask{1} << first_dim) - 1;
  for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) {
    const Mask a = m & low;
    const Mask b = m >> first_dim;
    const long long sign = static_cast<long long>(degree_of(a)) * degree_of(b);
    out[b | (a << second_dim)] = static_cast<double>(parity_sign(sign)) * psi[m];
  }
  return out;
}

CoherentData iota_coherent_data(const CoherentData& data) {
  return {transport(data.lambda), -transport(data.xi)};
}

CoherentData tau_coherent_data(const KreinSpace& first_space, const CoherentData& first,
                               const KreinSpace& second_space, const CoherentData& second) {
  validate(first_space, first);
  validate(second_space, second);
  const KreinSpace total = direct_sum(first_space, second_space);
  const KVector x = stack(first.xi, KVector::Zero(second_space.dim()));
  const KVector y = stack(KVector::Zero(first_space.dim()), second.xi);
  const CMatrix s = total.signs().cast<Complex>().asDiagonal();
  // η ↦ a{η,b} has matrix a·bᵀ·S
  const CMatrix mixing = 0.5 * (x * y.transpose() * s - y * x.transpose() * s);
  return {KOperator::conjugate_linear(block_diag(first.lambda.matrix(), second.lambda.matrix()) +
                                      mixing),
          x + y};
}

Complex amplitude_bruteforce(const Region& region, const FockState& psi) {
  const KreinSpace& space = region.boundary();
  if (!(psi.space() == space)) throw UsageError("state does not live on the region boundary");
  const int d = space.dim();
  const CMatrix& u = region.u().matrix();
  Complex total = psi[0];
  std::vector<KVector> args;
  for (int n = 1; 2 * n <= d; ++n) {
    const FockState part = psi.component(2 * n);
    if (part.is_zero()) continue;
    std::vector<int> js(static_cast<std::size_t>(n), 0);
    Complex sum = 0.0;
    while (true) {
      args.clear();
      int sign = 1;
      for (int j : js) {
        KVector e = KVector::Zero(d);
        e(j) = 1.0;
        args.emplace_back(u.col(j));
        args.push_back(std::move(e));
        sign *= space.sign(j);
      }
      sum += static_cast<double>(sign) * evaluate(part, args);
      int pos = 0;
      while (pos < n && ++js[static_cast<std::size_t>(pos)] == d) js[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
    total += factorial(2 * n) / factorial(n) * sum;
  }
  return total;
}

Complex amplitude_degree_lemma(const Region& region, const KOperator& lambda, int n) {
  if (n < 0) throw UsageError("degree index must be nonnegative");
  if (!is_conj_antisymmetric(region.boundary(), lambda)) {
    throw UsageError("coherent parameter is not conjugate anti-symmetric");
  }
  if (n == 0) return 1.0;
  const CMatrix ul = compose(region.u(), lambda).matrix();
  std::vector<Complex> y(static_cast<std::size_t>(n));
  CMatrix power = ul;
  for (int k = 1; k <= n; ++k) {
    y[static_cast<std::size_t>(k - 1)] = -0.5 * power.trace();
    power = power * ul;
  }
  return evaluate_poly(q_n_closed(n), y);
}

Complex amplitude_degreewise(const Region& region, const CoherentData& data) {
  validate(region.boundary(), data);
  Complex total = 0.0;
  for (int n = 0; 2 * n <= region.boundary().dim(); ++n) {
    total += amplitude_degree_lemma(region, data.lambda, n);
  }
  return total;
}

Complex amplitude_closed(const Region& region, const CoherentData& data) {
  validate(region.boundary(), data);
  return sqrt_det_one_minus(compose(region.u(), data.lambda).matrix(), "u Lambda");
}

double SliceResult::max_deviation() const {
  const double scale = scale_of(fock_overlap);
  return std::max({std::abs(slice_amplitude - fock_overlap), std::abs(closed_overlap - fock_overlap),
                   std::abs(slice_amplitude - closed_overlap)}) /
         scale;
}

SliceResult slice_inner(const Hypersurface& sigma, const CoherentData& left,
                        const CoherentData& right) {
  const KreinSpace& space = sigma.space;
  validate(space, left);
  validate(space, right);
  SliceResult r;
  r.fock_overlap = fock_inner(coherent_explicit(space, left), coherent_explicit(space, right));
  r.closed_overlap = overlap_closed(space, left, right);

  const Hypersurface reversed = sigma.reversed();
  const Region region = slice_region(sigma);
  const CoherentData glued =
      tau_coherent_data(reversed.space, iota_coherent_data(left), space, right);
  r.slice_amplitude = amplitude_closed(region, glued);

  const CMatrix a = compose(left.lambda, right.lambda).matrix();
  KVector v = left.xi;
  const double start = std::max(hilbert_norm(v), 1e-300);
  for (int k = 0; k < 10000; ++k) {
    r.g.push_back(-0.5 * inner(space, right.xi, v));
    r.g_sum += r.g.back();
    if (hilbert_norm(v) < 1e-17 * start) break;
    v = a * v;
  }
  r.minus_half_b = -0.5 * overlap_b(space, left, right);

  const KOperator unglued = KOperator::conjugate_linear(
      block_diag(transport(left.lambda).matrix(), right.lambda.matrix()));
  const CMatrix ul = compose(region.u(), unglued).matrix();
  constexpr int kMaxPower = 12;
  CMatrix power = ul;
  CMatrix a_power = a;
  for (int k = 1; k <= kMaxPower; ++k) {
    if (k % 2 == 1) {
      r.odd_trace_max = std::max(r.odd_trace_max, std::abs(power.trace()));
    } else {
      r.even_trace_dev =
          std::max(r.even_trace_dev, std::abs(power.trace() - 2.0 * a_power.trace()));
      a_power = a_power * a;
    }
    power = power * ul;
  }
  return r;
}

Complex slice_inner_bruteforce(const Hypersurface& sigma, const CoherentData& left,
                               const CoherentData& right) {
  const Region region = slice_region(sigma);
  const FockState glued =
      tau(iota(coherent_explicit(sigma.space, left)), coherent_explicit(sigma.space, right));
  return amplitude_bruteforce(region, glued);
}

FockState random_state(const KreinSpace& space, Rng& rng) {
  FockState psi(space);
  for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) psi[m] = rng.unit_disc();
  return psi;
}

FockState random_parity_state(const KreinSpace& space, int parity, Rng& rng) {
  FockState psi(space);
  for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) {
    const Complex c = rng.unit_disc();
    if ((degree_of(m) & 1) == (parity & 1)) psi[m] = c;
  }
  return psi;
}

CoherentData random_coherent_data(const KreinSpace& space, Rng& rng, double lambda_norm,
                                  double xi_norm) {
  const KOperator lam = scale_to_norm(rng.conj_antisymmetric(space), lambda_norm);
  KVector xi = rng.vector(space.dim());
  const double n = hilbert_norm(xi);
  if (n > 0.0) xi *= xi_norm / n;
  return {lam, xi};
}

Report axiom_suite(std::uint64_t seed, int trials, double tol) {
  Report report("axioms", seed);
  ErrorTracker t1("state_space_hermitian", tol);
  ErrorTracker t1b_inv("reversal_involution", tol);
  ErrorTracker t1b_iso("reversal_graded_isometry", tol);
  ErrorTracker t2_iso("product_isometry", tol);
  ErrorTracker t2_sym("graded_transposition", tol);
  ErrorTracker t2b("reversal_product_compatibility", tol);
  ErrorTracker t3x("slice_pairing", tol);
  ErrorTracker t5a("disjoint_union_multiplicativity", tol);
  ErrorTracker t5a_coh("disjoint_union_coherent_closed", tol);

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    const KreinSpace s1 = rng.signature(1 + static_cast<int>(rng.below(3)));
    const KreinSpace s2 = rng.signature(1 + static_cast<int>(rng.below(3)));
    const int p1 = static_cast<int>(rng.below(2));
    const int p2 = static_cast<int>(rng.below(2));
    const FockState psi1 = random_parity_state(s1, p1, rng);
    const FockState phi1 = random_parity_state(s1, p1, rng);
    const FockState psi2 = random_parity_state(s2, p2, rng);
    const FockState phi2 = random_parity_state(s2, p2, rng);

    const Complex ip = fock_inner(psi1, phi1);
    t1.observe(std::conj(fock_inner(phi1, psi1)), ip);

    t1b_inv.observe_deviation((iota(iota(psi1)).coefficients() - psi1.coefficients()).cwiseAbs().maxCoeff());
    // ⟨ιψ, ιφ⟩_Σ̄ = (−1)^{|ψ|} conj⟨ψ, φ⟩_Σ
    t1b_iso.observe(fock_inner(iota(psi1), iota(phi1)),
                    static_cast<double>(parity_sign(p1)) * std::conj(ip));

    t2_iso.observe(fock_inner(tau(psi1, psi2), tau(phi1, phi2)), ip * fock_inner(psi2, phi2));
    const FockState forward = tau(psi1, psi2);
    const FockState backward = swap_blocks(tau(psi2, psi1), s2.dim());
    t2_sym.observe_deviation(
        (backward.coefficients() -
         static_cast<double>(parity_sign(p1 * p2)) * forward.coefficients())
            .cwiseAbs()
            .maxCoeff());
    t2b.observe_deviation((iota(forward).coefficients() -
                           static_cast<double>(parity_sign(p1 * p2)) *
                               tau(iota(psi1), iota(psi2)).coefficients())
                              .cwiseAbs()
                              .maxCoeff());

    const Hypersurface sigma{s1, Orientation::standard};
    const Region slice = slice_region(sigma);
    const FockState eta = random_state(s1, rng);
    const FockState chi = random_state(s1, rng);
    t3x.observe(amplitude_bruteforce(slice, tau(iota(eta), chi)), fock_inner(eta, chi));

    const Region m1 = random_region(KreinSpace::parse(rng.below(2) ? "+-" : "-+"), rng);
    const Region m2 = random_region(KreinSpace::parse(rng.below(2) ? "+-" : "-+"), rng);
    const Region joined = disjoint_union(m1, m2);
    const FockState a1 = random_parity_state(m1.boundary(), p1, rng);
    const FockState a2 = random_parity_state(m2.boundary(), p2, rng);
    t5a.observe(amplitude_bruteforce(joined, tau(a1, a2)),
                amplitude_bruteforce(m1, a1) * amplitude_bruteforce(m2, a2));

    const CoherentData c1 = random_coherent_data(m1.boundary(), rng, 0.5, 0.7);
    const CoherentData c2 = random_coherent_data(m2.boundary(), rng, 0.5, 0.7);
    const CoherentData glued = tau_coherent_data(m1.boundary(), c1, m2.boundary(), c2);
    t5a_coh.observe(amplitude_closed(joined, glued),
                    amplitude_closed(m1, c1) * amplitude_closed(m2, c2));
  }
  for (const auto* tr : {&t1, &t1b_inv, &t1b_iso, &t2_iso, &t2_sym, &t2b, &t3x, &t5a, &t5a_coh}) {
    report.add(*tr);
  }
  report.note("self-gluing of a single region: not checked");
  report.set_config({{"trials", trials}, {"tol", tol}});
  return report;
}

}  // namespace fockrein
