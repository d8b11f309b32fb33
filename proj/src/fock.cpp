// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/fock.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "fockrein/error.hpp"
#include "fockrein/random.hpp"

namespace fockrein {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Mask full_size(int dim) { return Mask{1} << dim; }

void check_fock_dim(const KreinSpace& space) {
  if (space.dim() > kMaxFockDim) {
    throw UsageError("Fock space of dimension " + std::to_string(space.dim()) +
                     " exceeds the supported maximum " + std::to_string(kMaxFockDim));
  }
}

// (−1)^{#{j ∈ mask : j < i}}
double order_sign(Mask mask, int i) {
  const Mask below = mask & ((Mask{1} << i) - 1);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double max_entry(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

int degree_of(Mask mask) noexcept { return std::popcount(mask); }

int sign_product(const KreinSpace& space, Mask mask) {
  int s = 1;
  for (int i = 0; i < space.dim(); ++i) {
    if (mask & (Mask{1} << i)) s *= space.sign(i);
  }
  return s;
}

std::vector<int> indices_of(Mask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

FockState::FockState(const KreinSpace& space) : space_(space) {
  check_fock_dim(space_);
  coeffs_ = CVector::Zero(static_cast<Eigen::Index>(full_size(space_.dim())));
}

FockState::FockState(const KreinSpace& space, CVector coefficients)
    : space_(space), coeffs_(std::move(coefficients)) {
  check_fock_dim(space_);
  if (coeffs_.size() != static_cast<Eigen::Index>(full_size(space_.dim()))) {
    throw UsageError("Fock state needs 2^d coefficients");
  }
}

FockState FockState::vacuum(const KreinSpace& space) { return basis(space, 0); }

FockState FockState::basis(const KreinSpace& space, Mask mask) {
  FockState s(space);
  if (mask >= full_size(space.dim())) throw UsageError("basis index outside the Fock space");
  s[mask] = 1.0;
  return s;
}

Complex FockState::coefficient(std::span<const int> increasing) const {
  Mask mask = 0;
  int prev = -1;
  for (int i : increasing) {
    if (i <= prev || i >= dim()) throw UsageError("index tuple must be strictly increasing and in range");
    mask |= Mask{1} << i;
    prev = i;
  }
  return (*this)[mask];
}

FockState FockState::component(int n) const {
  FockState out(space_);
  if (n < 0 || n > dim()) return out;
  for (Mask m = 0; m < full_size(dim()); ++m) {
    if (degree_of(m) == n) out[m] = (*this)[m];
  }
  return out;
}

std::optional<int> FockState::pure_degree() const {
  std::optional<int> found;
  for (Mask m = 0; m < full_size(dim()); ++m) {
    if ((*this)[m] == Complex(0.0)) continue;
    const int n = degree_of(m);
    if (found && *found != n) return std::nullopt;
    found = n;
  }
  return found;
}

std::optional<int> FockState::f_degree() const {
  std::optional<int> found;
  for (Mask m = 0; m < full_size(dim()); ++m) {
    if ((*this)[m] == Complex(0.0)) continue;
    const int p = degree_of(m) & 1;
    if (found && *found != p) return std::nullopt;
    found = p;
  }
  return found;
}

bool FockState::is_zero() const { return coeffs_.isZero(0.0); }

void FockState::require_same_space(const FockState& other) const {
  if (!(space_ == other.space_)) throw UsageError("Fock states live over different spaces");
}

FockState& FockState::operator+=(const FockState& other) {
  require_same_space(other);
  coeffs_ += other.coeffs_;
  return *this;
}

FockState& FockState::operator-=(const FockState& other) {
  require_same_space(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

FockState& FockState::operator*=(Complex c) {
  coeffs_ *= c;
  return *this;
}

Complex evaluate(const FockState& psi, std::span<const KVector> args) {
  const int n = static_cast<int>(args.size());
  const int d = psi.dim();
  for (const auto& v : args) require_dim(psi.space(), v, "evaluation argument");
  if (n > d) return 0.0;
  if (n == 0) return psi[0];
  Complex sum = 0.0;
  CMatrix a(n, n);
  for (Mask m = 0; m < full_size(d); ++m) {
    if (degree_of(m) != n || psi[m] == Complex(0.0)) continue;
    const auto idx = indices_of(m);
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) a(k, l) = args[static_cast<std::size_t>(k)](idx[static_cast<std::size_t>(l)]);
    }
    sum += psi[m] * a.determinant();
  }
  return sum;
}

Eigen::VectorXd fock_metric(const KreinSpace& space) {
  check_fock_dim(space);
  const Mask size = full_size(space.dim());
  Eigen::VectorXd g(static_cast<Eigen::Index>(size));
  for (Mask m = 0; m < size; ++m) {
    const int n = degree_of(m);
    const double f = factorial(n);
    g(static_cast<Eigen::Index>(m)) = std::ldexp(f * f, n) * sign_product(space, m);
  }
  return g;
}

Complex fock_inner(const FockState& eta, const FockState& psi) {
  if (!(eta.space() == psi.space())) throw UsageError("Fock states live over different spaces");
  const Eigen::VectorXd g = fock_metric(psi.space());
  Complex sum = 0.0;
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    sum += g(k) * std::conj(eta.coefficients()(k)) * psi.coefficients()(k);
  }
  return sum;
}

double fock_hilbert_norm(const FockState& psi) {
  const Eigen::VectorXd g = fock_metric(psi.space());
  double sum = 0.0;
  for (Eigen::Index k = 0; k < g.size(); ++k) sum += std::abs(g(k)) * std::norm(psi.coefficients()(k));
  return std::sqrt(sum);
}

// (a_τψ)_J = √2·n·Σ_{i∉J} τ_i (−1)^{#(J<i)} c_{J∪i}, n = |J| + 1
FockState annihilate(const KVector& tau, const FockState& psi) {
  require_dim(psi.space(), tau, "annihilation vector");
  const int d = psi.dim();
  FockState out(psi.space());
  for (Mask j = 0; j < full_size(d); ++j) {
    const int n = degree_of(j) + 1;
    if (n > d) continue;
    Complex acc = 0.0;
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if (j & bit) continue;
      acc += tau(i) * order_sign(j, i) * psi[j | bit];
    }
    out[j] = kSqrt2 * n * acc;
  }
  return out;
}

// (a†_τψ)_J = (1/(√2·|J|)) Σ_{j∈J} (−1)^{#(J<j)} s_j conj(τ_j) c_{J∖j}
FockState create(const KVector& tau, const FockState& psi) {
  require_dim(psi.space(), tau, "creation vector");
  const int d = psi.dim();
  FockState out(psi.space());
  for (Mask j = 1; j < full_size(d); ++j) {
    Complex acc = 0.0;
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(j & bit)) continue;
      acc += order_sign(j, i) * static_cast<double>(psi.space().sign(i)) * std::conj(tau(i)) *
             psi[j & ~bit];
    }
    out[j] = acc / (kSqrt2 * degree_of(j));
  }
  return out;
}

CMatrix annihilation_matrix(const KreinSpace& space, const KVector& tau) {
  check_fock_dim(space);
  require_dim(space, tau, "annihilation vector");
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(full_size(d));
  CMatrix x = CMatrix::Zero(size, size);
  for (Mask k = 1; k < full_size(d); ++k) {
    const int n = degree_of(k);
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(k & bit)) continue;
      const Mask j = k & ~bit;
      x(j, k) = kSqrt2 * n * order_sign(j, i) * tau(i);
    }
  }
  return x;
}

CMatrix creation_matrix(const KreinSpace& space, const KVector& tau) {
  check_fock_dim(space);
  require_dim(space, tau, "creation vector");
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(full_size(d));
  CMatrix x = CMatrix::Zero(size, size);
  for (Mask j = 1; j < full_size(d); ++j) {
    const double scale = 1.0 / (kSqrt2 * degree_of(j));
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(j & bit)) continue;
      x(j, j & ~bit) = scale * order_sign(j, i) * static_cast<double>(space.sign(i)) * std::conj(tau(i));
    }
  }
  return x;
}

FockState apply_operator(const CMatrix& op, const FockState& psi) {
  if (op.rows() != static_cast<Eigen::Index>(psi.size()) || op.cols() != op.rows()) {
    throw UsageError("Fock operator size does not match the state");
  }
  return FockState(psi.space(), op * psi.coefficients());
}

CMatrix fock_adjoint(const KreinSpace& space, const CMatrix& op) {
  const Eigen::VectorXd g = fock_metric(space);
  if (op.rows() != g.size() || op.cols() != g.size()) throw UsageError("Fock operator size mismatch");
  const Eigen::VectorXcd gc = g.cast<Complex>();
  const Eigen::VectorXcd ginv = g.cwiseInverse().cast<Complex>();
  return ginv.asDiagonal() * op.adjoint() * gc.asDiagonal();
}

double fock_operator_norm(const KreinSpace& space, const CMatrix& op) {
  const Eigen::VectorXd w = fock_metric(space).cwiseAbs().cwiseSqrt();
  if (op.rows() != w.size() || op.cols() != w.size()) throw UsageError("Fock operator size mismatch");
  const CMatrix scaled = w.cast<Complex>().asDiagonal() * op * w.cwiseInverse().cast<Complex>().asDiagonal();
  return operator_norm(scaled);
}

std::pair<FockState, FockState> pm_decompose(const FockState& psi) {
  FockState plus(psi.space());
  FockState minus(psi.space());
  for (Mask m = 0; m < full_size(psi.dim()); ++m) {
    (sign_product(psi.space(), m) > 0 ? plus : minus)[m] = psi[m];
  }
  return {plus, minus};
}

Report car_suite(const KreinSpace& space, int trials, std::uint64_t seed, double tol) {
  Report report("car", seed);
  const int d = space.dim();
  const auto size = static_cast<Eigen::Index>(full_size(d));
  const CMatrix id = CMatrix::Identity(size, size);
  ErrorTracker additivity("additivity", tol);
  ErrorTracker homogeneity("homogeneity", tol);
  ErrorTracker aa("anticommutator_annihilation", tol);
  ErrorTracker cc("anticommutator_creation", tol);
  ErrorTracker ca("anticommutator_mixed", tol);
  ErrorTracker adj("adjointness", tol);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    const KVector xi = rng.vector(d);
    const KVector tau = rng.vector(d);
    const Complex alpha = rng.unit_disc();
    const CMatrix a_xi = annihilation_matrix(space, xi);
    const CMatrix a_tau = annihilation_matrix(space, tau);
    const CMatrix c_xi = creation_matrix(space, xi);
    const CMatrix c_tau = creation_matrix(space, tau);

    additivity.observe_deviation(
        std::max(max_entry(annihilation_matrix(space, xi + tau) - a_xi - a_tau),
                 max_entry(creation_matrix(space, xi + tau) - c_xi - c_tau)));
    homogeneity.observe_deviation(
        std::max(max_entry(annihilation_matrix(space, alpha * xi) - alpha * a_xi),
                 max_entry(creation_matrix(space, alpha * xi) - std::conj(alpha) * c_xi)));
    aa.observe_deviation(max_entry(a_xi * a_tau + a_tau * a_xi));
    cc.observe_deviation(max_entry(c_xi * c_tau + c_tau * c_xi));
    ca.observe_deviation(max_entry(c_xi * a_tau + a_tau * c_xi - inner(space, xi, tau) * id));
    adj.observe_deviation(max_entry(fock_adjoint(space, a_tau) - c_tau));
  }
  for (const auto* t : {&additivity, &homogeneity, &aa, &cc, &ca, &adj}) report.add(*t);
  report.set_config({{"signature", space.to_string()}, {"trials", trials}, {"tol", tol}});
  return report;
}

}  // namespace fockrein
