// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "fockrein/coherent.hpp"
#include "fockrein/cycle_index.hpp"
#include "fockrein/error.hpp"
#include "fockrein/fock.hpp"
#include "fockrein/gbqft.hpp"
#include "fockrein/lie.hpp"
#include "fockrein/random.hpp"

namespace fockrein {

namespace {

double max_entry(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_entry(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double state_deviation(const FockState& a, const FockState& b) {
  if (!(a.space() == b.space())) return std::numeric_limits<double>::infinity();
  return max_entry(CVector(a.coefficients() - b.coefficients()));
}

Rng trial_rng(const RunConfig& cfg, int trial) {
  return Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(trial));
}

// Dimension for trial t cycling through [lo, hi], or the configured one.
int trial_dim(const RunConfig& cfg, int t, int lo, int hi) {
  if (auto s = cfg.fixed_space()) return s->dim();
  return lo + t % (hi - lo + 1);
}

KreinSpace trial_space(const RunConfig& cfg, Rng& rng, int t, int lo, int hi) {
  if (cfg.signature) return KreinSpace::parse(*cfg.signature);
  return rng.signature(trial_dim(cfg, t, lo, hi));
}

// Random arrangement of d/2 positive and d/2 negative signs.
KreinSpace balanced_space(Rng& rng, int d) {
  std::vector<int> sig(static_cast<std::size_t>(d), -1);
  std::fill(sig.begin(), sig.begin() + d / 2, 1);
  std::shuffle(sig.begin(), sig.end(), rng.engine());
  return KreinSpace(std::move(sig));
}

KreinSpace trial_region_space(const RunConfig& cfg, Rng& rng, int t) {
  if (auto s = cfg.fixed_space()) {
    if (cfg.signature) return *s;
    return balanced_space(rng, s->dim());
  }
  return balanced_space(rng, 2 * (1 + t % 3));
}

KVector basis_vector(int d, int i) {
  KVector e = KVector::Zero(d);
  e(i) = 1.0;
  return e;
}

template <class F>
bool throws_guard(F&& f, double min_norm) {
  try {
    f();
  } catch (const HypothesisViolation& e) {
    return e.norm() >= min_norm;
  }
  return false;
}

void add_all(Report& report, std::initializer_list<const ErrorTracker*> trackers) {
  for (const auto* t : trackers) report.add(*t);
}

}  // namespace

void RunConfig::validate() const {
  if (dim && (*dim < 1 || *dim > kMaxFockDim)) {
    throw UsageError("dim must lie in 1.." + std::to_string(kMaxFockDim));
  }
  if (signature) {
    const KreinSpace s = KreinSpace::parse(*signature);
    if (s.dim() == 0) throw UsageError("signature is empty");
    if (s.dim() > kMaxFockDim) throw UsageError("signature is too long");
    if (dim && *dim != s.dim()) {
      throw UsageError("signature length " + std::to_string(s.dim()) + " does not match dim " +
                       std::to_string(*dim));
    }
  }
  if (trials && *trials < 1) throw UsageError("trials must be at least 1");
  if (tol && !(*tol > 0.0)) throw UsageError("tol must be positive");
  if (max_degree < 0) throw UsageError("max-degree must be nonnegative");
}

std::optional<KreinSpace> RunConfig::fixed_space() const {
  if (signature) return KreinSpace::parse(*signature);
  if (dim) return KreinSpace::with_counts((*dim + 1) / 2, *dim / 2);
  return std::nullopt;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["dim"] = dim ? nlohmann::json(*dim) : nlohmann::json(nullptr);
  j["signature"] = signature ? nlohmann::json(*signature) : nlohmann::json(nullptr);
  j["seed"] = seed;
  j["trials"] = trials ? nlohmann::json(*trials) : nlohmann::json(nullptr);
  j["tol"] = tol ? nlohmann::json(*tol) : nlohmann::json(nullptr);
  j["max_degree"] = max_degree;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"krein",     "car",    "lie",          "coherent",
                                              "amplitude", "axioms", "combinatorics"};
  return names;
}

Report krein_suite(const RunConfig& cfg) {
  Report report("krein", cfg.seed);
  ErrorTracker herm("hermitian_symmetry", cfg.tol_or(1e-14));
  ErrorTracker complete("completeness", cfg.tol_or(1e-12));
  ErrorTracker sq_linear("square_is_linear", 0.0);
  ErrorTracker sq_self("square_self_adjoint", cfg.tol_or(1e-12));
  ErrorTracker sq_neg("square_krein_negative", cfg.tol_or(1e-12));
  ErrorTracker criterion("conj_antisymmetry_criterion", 0.0);
  ErrorTracker defn("conj_antisymmetry_definition", cfg.tol_or(1e-12));
  ErrorTracker invol("involution_predicates_agree", 0.0);
  ErrorTracker trace_inv("trace_conjugation_invariance", cfg.tol_or(1e-10), ErrorMode::relative);
  const int trials = cfg.trials_or(100);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg, t);
    const KreinSpace space = trial_space(cfg, rng, t, 1, 6);
    const int d = space.dim();
    const KVector v = rng.vector(d);
    const KVector w = rng.vector(d);
    herm.observe(std::conj(inner(space, v, w)), inner(space, w, v));

    const KOperator g = rng.adapted_isometry(space);
    KVector sum = KVector::Zero(d);
    for (int i = 0; i < d; ++i) {
      const KVector b = g.apply(basis_vector(d, i));
      sum += static_cast<double>(space.sign(i)) * inner(space, b, v) * b;
    }
    complete.observe_deviation(max_entry(CVector(sum - v)));

    const KOperator lam = rng.conj_antisymmetric(space);
    const KOperator sq = compose(lam, lam);
    sq_linear.observe_flag(sq.is_linear());
    sq_self.observe_deviation(max_entry(CMatrix(adjoint(space, sq).matrix() - sq.matrix())));
    sq_neg.observe(inner(space, v, sq.apply(v)), -inner(space, lam.apply(v), lam.apply(v)));

    defn.observe(inner(space, lam.apply(v), w), -inner(space, lam.apply(w), v));
    const KOperator generic = KOperator::conjugate_linear(rng.matrix(d, d));
    const double gap = std::abs(inner(space, generic.apply(v), w) + inner(space, generic.apply(w), v));
    criterion.observe_flag(is_conj_antisymmetric(space, lam) &&
                           (is_conj_antisymmetric(space, generic) == (gap < 1e-9)));

    std::vector<KOperator> involutions;
    CMatrix diag = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) diag(i, i) = rng.below(2) ? 1.0 : -1.0;
    involutions.push_back(KOperator::linear(diag));
    involutions.push_back(KOperator::conjugate_linear(CMatrix::Identity(d, d)));
    const CMatrix p = rng.matrix(d, d) + 2.0 * CMatrix::Identity(d, d);
    involutions.push_back(KOperator::linear(p * diag * p.inverse()));
    if (space.balanced()) involutions.push_back(random_region(space, rng).u());
    for (const KOperator& j : involutions) {
      const StructuralFlags f = structural_predicates(space, j);
      invol.observe_flag(f.involution && f.real_antisymmetric == f.real_anti_isometry);
    }

    const KOperator lin = KOperator::linear(rng.matrix(d, d));
    const KOperator g_inv = KOperator::linear(g.matrix().adjoint());
    trace_inv.observe(trace(space, compose(compose(g, lin), g_inv)), trace(space, lin));
  }
  add_all(report, {&herm, &complete, &sq_linear, &sq_self, &sq_neg, &criterion, &defn, &invol,
                   &trace_inv});
  report.set_config(cfg.to_json());
  return report;
}

Report car_sweep(const RunConfig& cfg) {
  Report report("car", cfg.seed);
  const int trials = cfg.trials_or(100);
  const double tol = cfg.tol_or(1e-10);
  std::vector<KreinSpace> spaces;
  if (cfg.signature) {
    spaces.push_back(KreinSpace::parse(*cfg.signature));
  } else {
    const int lo = cfg.dim.value_or(1);
    const int hi = cfg.dim.value_or(6);
    for (int d = lo; d <= hi; ++d) {
      for (unsigned pattern = 0; pattern < (1u << d); ++pattern) {
        std::vector<int> sig;
        for (int i = 0; i < d; ++i) sig.push_back((pattern >> i) & 1u ? -1 : 1);
        spaces.emplace_back(std::move(sig));
      }
    }
  }
  ErrorTracker grading("creation_grading", 0.0);
  ErrorTracker definite("pm_definiteness", 0.0);
  std::uint64_t offset = 0;
  for (const KreinSpace& space : spaces) {
    const std::size_t per_dim = std::size_t{1} << space.dim();
    const int share = cfg.signature
                          ? trials
                          : static_cast<int>((static_cast<std::size_t>(trials) + per_dim - 1) / per_dim);
    report.merge(car_suite(space, share, cfg.seed ^ (offset << 32), tol));
    Rng rng = Rng::for_trial(cfg.seed ^ (offset << 32), 0xfeedULL);
    ++offset;

    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(space.dim())));
    FockState psi(space);
    FockState mixed(space);
    for (Mask m = 0; m < static_cast<Mask>(psi.size()); ++m) {
      if (degree_of(m) == n) psi[m] = rng.unit_disc();
      mixed[m] = rng.unit_disc();
    }
    const FockState up = create(rng.vector(space.dim()), psi);
    grading.observe_flag(up.is_zero() || up.pure_degree() == n + 1);
    const auto [plus, minus] = pm_decompose(mixed);
    const Complex pp = fock_inner(plus, plus);
    const Complex mm = fock_inner(minus, minus);
    definite.observe_flag((plus.is_zero() || pp.real() > 0.0) && (minus.is_zero() || mm.real() < 0.0));
  }
  add_all(report, {&grading, &definite});
  report.set_config(cfg.to_json());
  return report;
}

Report lie_suite(const RunConfig& cfg) {
  Report report("lie", cfg.seed);
  const double tol = cfg.tol_or(1e-10);
  ErrorTracker hom("rep_homomorphism", tol);
  ErrorTracker hom_general("rep_homomorphism_general", tol);
  ErrorTracker adj("rep_star_is_adjoint", tol);
  ErrorTracker abelian("pair_parts_abelian", tol);
  ErrorTracker jacobi("jacobi_identity", tol);
  ErrorTracker action("pair_operators_from_action", tol);
  ErrorTracker gip_real("gip_real_on_real_form", cfg.tol_or(1e-9));
  ErrorTracker ad_inv("gip_ad_invariance", cfg.tol_or(1e-9));
  Report norms("norm_identities", cfg.seed);
  const int trials = cfg.trials_or(100);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg, t);
    const KreinSpace space = trial_space(cfg, rng, t, 1, 3);
    const int d = space.dim();
    if (d <= 3) {
      const std::vector<LieElement> basics{
          LieElement::current(KOperator::linear(rng.matrix(d, d))),
          LieElement::pair_annihilator(rng.conj_antisymmetric(space)),
          LieElement::pair_creator(rng.conj_antisymmetric(space)),
          LieElement::annihilator(rng.vector(d)),
          LieElement::creator(rng.vector(d)),
      };
      for (const LieElement& x : basics) {
        const CMatrix rx = rep(space, x);
        for (const LieElement& y : basics) {
          const CMatrix ry = rep(space, y);
          hom.observe_deviation(max_entry(CMatrix(rep(space, bracket(space, x, y)) - (rx * ry - ry * rx))));
        }
        adj.observe_deviation(max_entry(CMatrix(rep(space, star(space, x)) - fock_adjoint(space, rx))));
      }
      const LieElement x = random_element(space, rng);
      const LieElement y = random_element(space, rng);
      const LieElement z = random_element(space, rng);
      const CMatrix rx = rep(space, x);
      const CMatrix ry = rep(space, y);
      hom_general.observe_deviation(
          max_entry(CMatrix(rep(space, bracket(space, x, y)) - (rx * ry - ry * rx))));
      adj.observe_deviation(max_entry(CMatrix(rep(space, star(space, x)) - fock_adjoint(space, rx))));

      const LieElement zero = LieElement::zero(d);
      abelian.observe_deviation(max_deviation(bracket(space, basics[1], LieElement::pair_annihilator(rng.conj_antisymmetric(space))), zero));
      abelian.observe_deviation(max_deviation(bracket(space, basics[2], LieElement::pair_creator(rng.conj_antisymmetric(space))), zero));

      const LieElement jac = bracket(space, x, bracket(space, y, z)) + bracket(space, y, bracket(space, z, x)) +
                             bracket(space, z, bracket(space, x, y));
      jacobi.observe_deviation(max_deviation(jac, zero));

      const KOperator lam = rng.conj_antisymmetric(space);
      action.observe_deviation(std::max(
          max_entry(CMatrix(pair_annihilation(space, lam) - pair_annihilation_from_action(space, lam))),
          max_entry(CMatrix(pair_creation(space, lam) - pair_creation_from_action(space, lam)))));

    }
    {
      const KreinSpace s3 = cfg.fixed_space() ? space : rng.signature(3);
      const LieElement a = random_real_element(s3, rng);
      const LieElement b = random_real_element(s3, rng);
      const LieElement x = random_element(s3, rng);
      const LieElement y = random_element(s3, rng);
      gip_real.observe_deviation(std::abs(gip(s3, a, b).imag()));
      ad_inv.observe(gip(s3, bracket(s3, a, x), y) + gip(s3, x, bracket(s3, a, y)), 0.0);
    }
    if (d <= 4) {
      const KOperator lam = scale_to_norm(rng.conj_antisymmetric(space), 0.3 + rng.uniform());
      norms.merge(norm_identities(space, lam, rng.vector(d), cfg.tol_or(1e-8)));
    }
  }
  add_all(report, {&hom, &hom_general, &adj, &abelian, &jacobi, &action, &gip_real, &ad_inv});
  report.merge(norms);
  report.set_config(cfg.to_json());
  return report;
}

Report coherent_suite(const RunConfig& cfg) {
  Report report("coherent", cfg.seed);
  ErrorTracker routes("series_equals_explicit", cfg.tol_or(1e-12));
  ErrorTracker literal("literal_equals_explicit", cfg.tol_or(1e-12));
  ErrorTracker overlap("overlap_closed_vs_fock", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker wave("wave_function_vs_overlap", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker zero_anchor("overlap_zero_parameter_anchor", cfg.tol_or(1e-12));
  ErrorTracker dim2_anchor("overlap_dim2_anchor", cfg.tol_or(1e-12));
  ErrorTracker even_indep("even_part_xi_independent", 0.0);
  ErrorTracker injective("injectivity_spot_check", 0.0);
  ErrorTracker rank("span_full_rank", 0.0);
  ErrorTracker guard("hypothesis_guard_overlap", 0.0);
  const int trials = cfg.trials_or(200);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg, t);
    const KreinSpace space = trial_space(cfg, rng, t, 1, 6);
    const int d = space.dim();
    const CoherentData left = random_coherent_data(space, rng, 0.7 * rng.uniform(), 2.0 * rng.uniform());
    const CoherentData right = random_coherent_data(space, rng, 0.7 * rng.uniform(), 2.0 * rng.uniform());
    const FockState k_left = coherent_explicit(space, left);
    const FockState k_right = coherent_explicit(space, right);

    routes.observe_deviation(state_deviation(coherent_series(space, left), k_left));
    if (d <= 6) literal.observe_deviation(state_deviation(coherent_explicit_literal(space, left), k_left));

    const Complex fock = fock_inner(k_left, k_right);
    overlap.observe(overlap_closed(space, left, right), fock);
    wave.observe(wave_function(space, left, k_right), fock);

    const CoherentData flat_left{KOperator::zero(d, Linearity::conjugate_linear), left.xi};
    const CoherentData flat_right{KOperator::zero(d, Linearity::conjugate_linear), right.xi};
    zero_anchor.observe(overlap_closed(space, flat_left, flat_right),
                        1.0 + 0.5 * inner(space, right.xi, left.xi));

    const CoherentData other_xi{left.lambda, rng.vector(d)};
    const FockState k_other = coherent_explicit(space, other_xi);
    double even_dev = 0.0;
    for (Mask m = 0; m < static_cast<Mask>(k_left.size()); ++m) {
      if (degree_of(m) % 2 == 0) even_dev = std::max(even_dev, std::abs(k_other[m] - k_left[m]));
    }
    even_indep.observe_deviation(even_dev);
    injective.observe_flag(state_deviation(k_left, k_right) > 1e-9 ||
                           (left.xi - right.xi).norm() + (left.lambda.matrix() - right.lambda.matrix()).norm() < 1e-9);

    if (d <= 4) {
      const auto size = static_cast<Eigen::Index>(k_left.size());
      CMatrix family(size, size);
      for (Eigen::Index c = 0; c < size; ++c) {
        family.col(c) = coherent_explicit(space, random_coherent_data(space, rng, 0.8, 1.0)).coefficients();
      }
      const Eigen::FullPivLU<CMatrix> lu(family);
      rank.observe_flag(lu.rank() == size);
    }
  }

  const KreinSpace plane = KreinSpace::parse("++");
  for (Complex a : {Complex(0.5, 0.0), Complex(0.3, -0.4), Complex(-0.8, 0.1)}) {
    CMatrix m(2, 2);
    m << 0.0, a, -a, 0.0;
    const CoherentData data{KOperator::conjugate_linear(m), KVector::Zero(2)};
    dim2_anchor.observe(overlap_closed(plane, data, data), 1.0 + std::norm(a));
    dim2_anchor.observe(fock_inner(coherent_explicit(plane, data), coherent_explicit(plane, data)),
                        1.0 + std::norm(a));
    CMatrix big(2, 2);
    big << 0.0, 1.1 * a / std::abs(a), -1.1 * a / std::abs(a), 0.0;
    const CoherentData outside{KOperator::conjugate_linear(big), KVector::Zero(2)};
    guard.observe_flag(throws_guard([&] { (void)overlap_closed(plane, outside, outside); }, 1.0));
  }
  add_all(report, {&routes, &literal, &overlap, &wave, &zero_anchor, &dim2_anchor, &even_indep,
                   &injective, &rank, &guard});
  report.set_config(cfg.to_json());
  return report;
}

Report amplitude_suite(const RunConfig& cfg) {
  Report report("amplitude", cfg.seed);
  ErrorTracker determinant("closed_vs_bruteforce", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker degreewise("closed_vs_degreewise", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker lemma("degree_lemma_vs_bruteforce", cfg.tol_or(1e-9));
  ErrorTracker xi_indep("xi_independence", 0.0);
  ErrorTracker anchor("dim2_anchor", cfg.tol_or(1e-12));
  ErrorTracker guard("hypothesis_guard_amplitude", 0.0);
  const int trials = cfg.trials_or(200);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg, t);
    const KreinSpace space = trial_region_space(cfg, rng, t);
    const Region region = random_region(space, rng);
    const CoherentData data = random_coherent_data(space, rng, 0.5 * rng.uniform(), 1.0);
    const FockState k = coherent_explicit(space, data);
    const Complex closed = amplitude_closed(region, data);
    Complex sum = 0.0;
    for (int n = 0; 2 * n <= space.dim(); ++n) {
      const Complex brute = amplitude_bruteforce(region, k.component(2 * n));
      lemma.observe(amplitude_degree_lemma(region, data.lambda, n), brute);
      sum += brute;
    }
    determinant.observe(closed, sum);
    degreewise.observe(amplitude_degreewise(region, data), closed);

    const CoherentData other{data.lambda, rng.vector(space.dim())};
    xi_indep.observe_deviation(
        std::max(std::abs(amplitude_closed(region, other) - closed),
                 std::abs(amplitude_bruteforce(region, coherent_explicit(space, other)) -
                          amplitude_bruteforce(region, k))));

    if (t < 10) {
      const double norm = 1.0 + rng.uniform();
      const CoherentData outside{scale_to_norm(rng.conj_antisymmetric(space), norm), data.xi};
      guard.observe_flag(throws_guard([&] { (void)amplitude_closed(region, outside); }, 1.0));
    }
  }

  const KreinSpace split = KreinSpace::parse("+-");
  const Region worked = base_region(split);
  for (Complex a : {Complex(0.5, 0.0), Complex(0.2, 0.6), Complex(-0.7, -0.1)}) {
    CMatrix m(2, 2);
    m << 0.0, a, a, 0.0;
    const CoherentData data{KOperator::conjugate_linear(m), KVector::Zero(2)};
    anchor.observe(amplitude_closed(worked, data), 1.0 - std::conj(a));
    anchor.observe(amplitude_bruteforce(worked, coherent_explicit(split, data)), 1.0 - std::conj(a));
  }
  CMatrix big(2, 2);
  big << 0.0, 1.2, 1.2, 0.0;
  guard.observe_flag(throws_guard(
      [&] { (void)amplitude_closed(worked, {KOperator::conjugate_linear(big), KVector::Zero(2)}); },
      1.0));
  add_all(report, {&determinant, &degreewise, &lemma, &xi_indep, &anchor, &guard});
  report.set_config(cfg.to_json());
  return report;
}

Report gluing_suite(const RunConfig& cfg) {
  Report report("axioms", cfg.seed);
  const int trials = cfg.trials_or(100);
  report.merge(axiom_suite(cfg.seed, trials, cfg.tol_or(1e-10)));

  ErrorTracker iota_coh("iota_coherent", cfg.tol_or(1e-12));
  ErrorTracker iota_inv("iota_involution", cfg.tol_or(1e-12));
  ErrorTracker tau_coh("tau_coherent_factorization", cfg.tol_or(1e-12));
  ErrorTracker tau_iso("tau_isometry", cfg.tol_or(1e-10), ErrorMode::relative);
  ErrorTracker three_way("slice_three_way", cfg.tol_or(1e-8));
  ErrorTracker slice_brute("slice_bruteforce", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker g_series("slice_g_series", cfg.tol_or(1e-8), ErrorMode::relative);
  ErrorTracker odd("slice_odd_traces", cfg.tol_or(1e-12));
  ErrorTracker even("slice_even_traces", cfg.tol_or(1e-10));
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed ^ 0x5ca1ab1eULL, static_cast<std::uint64_t>(t));
    const KreinSpace s1 = trial_space(cfg, rng, t, 1, 4);
    const KreinSpace s2 = rng.signature(1 + static_cast<int>(rng.below(3)));
    const CoherentData c1 = random_coherent_data(s1, rng, 0.5 * rng.uniform(), 0.7 * rng.uniform());
    const CoherentData c1b = random_coherent_data(s1, rng, 0.5 * rng.uniform(), 0.7 * rng.uniform());
    const CoherentData c2 = random_coherent_data(s2, rng, 0.5 * rng.uniform(), 0.7 * rng.uniform());
    const CoherentData c2b = random_coherent_data(s2, rng, 0.5 * rng.uniform(), 0.7 * rng.uniform());
    const FockState k1 = coherent_explicit(s1, c1);
    const FockState k1b = coherent_explicit(s1, c1b);
    const FockState k2 = coherent_explicit(s2, c2);
    const FockState k2b = coherent_explicit(s2, c2b);

    iota_coh.observe_deviation(
        state_deviation(iota(k1), coherent_explicit(s1.negated(), iota_coherent_data(c1))));
    iota_inv.observe_deviation(state_deviation(iota(iota(k1)), k1));
    if (s1.dim() + s2.dim() <= 6) {
      const FockState glued = tau(k1, k2);
      tau_coh.observe_deviation(state_deviation(
          glued, coherent_explicit(direct_sum(s1, s2), tau_coherent_data(s1, c1, s2, c2))));
      tau_iso.observe(fock_inner(glued, tau(k1b, k2b)), fock_inner(k1, k1b) * fock_inner(k2, k2b));
    }

    const Hypersurface sigma{s1, Orientation::standard};
    const SliceResult r = slice_inner(sigma, c1, c1b);
    three_way.observe_deviation(r.max_deviation());
    g_series.observe(r.g_sum, r.minus_half_b);
    odd.observe_deviation(r.odd_trace_max);
    even.observe_deviation(r.even_trace_dev);
    if (s1.dim() <= 3) slice_brute.observe(slice_inner_bruteforce(sigma, c1, c1b), r.fock_overlap);
  }
  add_all(report, {&iota_coh, &iota_inv, &tau_coh, &tau_iso, &three_way, &slice_brute, &g_series,
                   &odd, &even});
  report.set_config(cfg.to_json());
  return report;
}

Report combinatorics_suite(const RunConfig& cfg) {
  Report report("combinatorics", cfg.seed);
  const int max_n = cfg.max_degree;
  ErrorTracker enum_rec("enumeration_equals_recursion", 0.0);
  ErrorTracker rec_closed("recursion_equals_closed_form", 0.0);
  ErrorTracker p_roundtrip("p_q_rescaling_roundtrip", 0.0);
  ErrorTracker coeff_sum("p_coefficient_sum", 0.0);
  ErrorTracker q_sum("q_coefficient_sum", 0.0);
  ErrorTracker homogeneous("weight_homogeneity", 0.0);
  ErrorTracker anchors("anchors", 0.0);
  ErrorTracker invariance("relabeling_invariance", 0.0);
  ErrorTracker group_order("symmetry_group_order", 0.0);

  for (int n = 0; n <= std::min(max_n, 4); ++n) enum_rec.observe_flag(p_n_enumerate(n) == p_n_recursive(n));
  for (int n = 0; n <= max_n; ++n) {
    const CycleIndexPoly p = p_n_recursive(n);
    const CycleIndexPoly q = q_n_recursive(n);
    rec_closed.observe_flag(q == q_n_closed(n) && q_from_p(p, n) == q);
    p_roundtrip.observe_flag(p_from_q(q, n) == p);
    coeff_sum.observe_flag(p.coefficient_sum() == Rational(factorial_big(2 * n)));
    q_sum.observe_flag(q.coefficient_sum() == Rational(1));
    homogeneous.observe_flag(p.weight_homogeneous(n) && q.weight_homogeneous(n));
  }
  anchors.observe_flag(p_n_recursive(1).to_string("p_1") == "p_1 = 2 x1");
  anchors.observe_flag(q_n_closed(2).to_string("q_2") == "q_2 = 1/2 y1^2 + 1/2 y2");
  anchors.observe_flag(p_n_recursive(2).to_string("p_2") == "p_2 = 8 x1^2 + 16 x2");
  anchors.observe_flag(q_n_closed(1).to_string("q_1") == "q_1 = 1 y1");
  report.merge(series_identity_check(std::max(max_n, 1)));

  const int trials = cfg.trials_or(100);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(cfg, t);
    const int n = 1 + t % 5;
    std::vector<int> sigma(static_cast<std::size_t>(2 * n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng.engine());
    // α acts on positions, β on values; both preserve the pairing {2k, 2k+1}.
    auto pairing_map = [&]() {
      std::vector<int> blocks(static_cast<std::size_t>(n));
      std::iota(blocks.begin(), blocks.end(), 0);
      std::shuffle(blocks.begin(), blocks.end(), rng.engine());
      std::vector<int> map(static_cast<std::size_t>(2 * n));
      for (int k = 0; k < n; ++k) {
        const int flip = static_cast<int>(rng.below(2));
        map[static_cast<std::size_t>(2 * k)] = 2 * blocks[static_cast<std::size_t>(k)] + flip;
        map[static_cast<std::size_t>(2 * k + 1)] = 2 * blocks[static_cast<std::size_t>(k)] + 1 - flip;
      }
      return map;
    };
    const std::vector<int> alpha = pairing_map();
    const std::vector<int> beta = pairing_map();
    std::vector<int> relabeled(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      relabeled[i] = beta[static_cast<std::size_t>(sigma[static_cast<std::size_t>(alpha[i])])];
    }
    invariance.observe_flag(p_sigma(relabeled) == p_sigma(sigma));
  }
  for (int n = 0; n <= 6; ++n) {
    const BigInt f = factorial_big(n);
    group_order.observe_flag(symmetry_group_order(n) == (BigInt(1) << (2 * n)) * f * f);
  }
  add_all(report, {&enum_rec, &rec_closed, &p_roundtrip, &coeff_sum, &q_sum, &homogeneous, &anchors,
                   &invariance, &group_order});
  report.set_config(cfg.to_json());
  return report;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  using Runner = std::function<Report(const RunConfig&)>;
  const std::vector<std::pair<std::string, Runner>> table{
      {"krein", krein_suite},         {"car", car_sweep},           {"lie", lie_suite},
      {"coherent", coherent_suite},   {"amplitude", amplitude_suite}, {"axioms", gluing_suite},
      {"combinatorics", combinatorics_suite},
  };
  if (name == "all") {
    Report all("all", cfg.seed);
    for (const auto& [suite, run] : table) {
      const Report part = run(cfg);
      for (CheckRecord rec : part.checks()) {
        rec.name = suite + "/" + rec.name;
        all.add(rec);
      }
      for (const auto& n : part.notes()) all.note(suite + ": " + n);
    }
    all.set_config(cfg.to_json());
    return all;
  }
  for (const auto& [suite, run] : table) {
    if (suite == name) return run(cfg);
  }
  throw UsageError("unknown suite \"" + name + "\"");
}

}  // namespace fockrein
