// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockrein/cycle_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "fockrein/error.hpp"

namespace fockrein {

namespace {

constexpr int kEnumerationMax = 5;

int weight_of(const Exponents& e) {
  int w = 0;
  for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<int>(k + 1) * e[k];
  return w;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational pow_int(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Walks the partition-of-n tree: all (j_1..j_n) with Σ k j_k = n.
void partitions(int n, int k, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (k > n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int j = 0; j * k <= remaining; ++j) {
    cur[static_cast<std::size_t>(k - 1)] = j;
    partitions(n, k + 1, remaining - j * k, cur, out);
  }
  cur[static_cast<std::size_t>(k - 1)] = 0;
}

CycleIndexPoly multiply_truncated(const CycleIndexPoly& a, const CycleIndexPoly& b, int max_weight) {
  CycleIndexPoly out(a.family(), a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      if (weight_of(e) > max_weight) continue;
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

}  // namespace

BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

CycleIndexPoly::CycleIndexPoly(VariableFamily family, int num_vars)
    : family_(family), num_vars_(num_vars) {
  if (num_vars < 0) throw UsageError("negative variable count");
}

CycleIndexPoly CycleIndexPoly::one(VariableFamily family, int num_vars) {
  CycleIndexPoly p(family, num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), 1);
  return p;
}

void CycleIndexPoly::add_term(Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) > num_vars_) {
    const bool extra_nonzero =
        std::any_of(e.begin() + num_vars_, e.end(), [](int v) { return v != 0; });
    if (extra_nonzero) throw UsageError("term uses a variable beyond the polynomial's range");
  }
  e.resize(static_cast<std::size_t>(num_vars_), 0);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CycleIndexPoly::coefficient(const Exponents& e) const {
  Exponents key = e;
  key.resize(static_cast<std::size_t>(num_vars_), 0);
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CycleIndexPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool CycleIndexPoly::weight_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [weight](const auto& kv) { return weight_of(kv.first) == weight; });
}

CycleIndexPoly CycleIndexPoly::widened(int num_vars) const {
  CycleIndexPoly out(family_, num_vars);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string CycleIndexPoly::to_string(const std::string& name) const {
  std::ostringstream os;
  os << name << " = ";
  if (terms_.empty()) {
    os << "0";
    return os.str();
  }
  const char var = family_ == VariableFamily::x ? 'x' : 'y';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    os << fockrein::to_string(mag);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << ' ' << var << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
    }
  }
  return os.str();
}

bool operator==(const CycleIndexPoly& a, const CycleIndexPoly& b) {
  return a.family_ == b.family_ && a.terms_ == b.terms_;
}

Exponents p_sigma(std::span<const int> sigma) {
  const int size = static_cast<int>(sigma.size());
  if (size % 2 != 0) throw UsageError("pairing permutation must have even length");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : sigma) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("not a permutation of 0..2n-1");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  const int n = size / 2;
  // partner along the σ-edges
  std::vector<int> other(static_cast<std::size_t>(size));
  for (int k = 0; k < n; ++k) {
    const int a = sigma[static_cast<std::size_t>(2 * k)];
    const int b = sigma[static_cast<std::size_t>(2 * k + 1)];
    other[static_cast<std::size_t>(a)] = b;
    other[static_cast<std::size_t>(b)] = a;
  }
  Exponents j(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (int start = 0; start < size; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    int fixed_edges = 0;
    int v = start;
    do {
      used[static_cast<std::size_t>(v)] = true;
      const int w = v ^ 1;
      used[static_cast<std::size_t>(w)] = true;
      ++fixed_edges;
      v = other[static_cast<std::size_t>(w)];
    } while (v != start);
    ++j[static_cast<std::size_t>(fixed_edges - 1)];
  }
  return j;
}

CycleIndexPoly p_n_enumerate(int n) {
  if (n < 0) throw UsageError("n must be nonnegative");
  if (n > kEnumerationMax) {
    throw UsageError("enumeration is limited to n <= " + std::to_string(kEnumerationMax));
  }
  std::map<Exponents, long long> counts;
  std::vector<int> sigma(static_cast<std::size_t>(2 * n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    ++counts[p_sigma(sigma)];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CycleIndexPoly p(VariableFamily::x, n);
  for (const auto& [e, c] : counts) p.add_term(e, Rational(c));
  return p;
}

CycleIndexPoly p_n_recursive(int n) {
  if (n < 0) throw UsageError("n must be nonnegative");
  std::vector<CycleIndexPoly> p;
  p.push_back(CycleIndexPoly::one(VariableFamily::x, n));
  for (int m = 1; m <= n; ++m) {
    CycleIndexPoly next(VariableFamily::x, n);
    const BigInt mf = factorial_big(m);
    for (int k = 1; k <= m; ++k) {
      const BigInt falling = mf / factorial_big(m - k);
      const Rational scale =
          Rational(BigInt(1) << (2 * k)) * Rational(falling * falling) / Rational(2 * m);
      for (const auto& [e, c] : p[static_cast<std::size_t>(m - k)].terms()) {
        Exponents shifted = e;
        ++shifted[static_cast<std::size_t>(k - 1)];
        next.add_term(std::move(shifted), scale * c);
      }
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

CycleIndexPoly q_from_p(const CycleIndexPoly& p, int n) {
  if (p.family() != VariableFamily::x) throw UsageError("expected an x-family polynomial");
  const BigInt nf = factorial_big(n);
  const Rational denom = Rational(BigInt(1) << (2 * n)) * Rational(nf * nf);
  CycleIndexPoly q(VariableFamily::y, p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    q.add_term(e, c * pow_int(Rational(2), total_degree(e)) / denom);
  }
  return q;
}

CycleIndexPoly p_from_q(const CycleIndexPoly& q, int n) {
  if (q.family() != VariableFamily::y) throw UsageError("expected a y-family polynomial");
  const BigInt nf = factorial_big(n);
  const Rational scale = Rational(BigInt(1) << (2 * n)) * Rational(nf * nf);
  CycleIndexPoly p(VariableFamily::x, q.num_vars());
  for (const auto& [e, c] : q.terms()) {
    p.add_term(e, c * scale / pow_int(Rational(2), total_degree(e)));
  }
  return p;
}

CycleIndexPoly q_n_recursive(int n) { return q_from_p(p_n_recursive(n), n); }

CycleIndexPoly q_n_closed(int n) {
  if (n < 0) throw UsageError("n must be nonnegative");
  CycleIndexPoly q(VariableFamily::y, n);
  std::vector<Exponents> all;
  Exponents cur(static_cast<std::size_t>(n), 0);
  partitions(n, 1, n, cur, all);
  for (const auto& e : all) {
    Rational c = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      c /= Rational(factorial_big(e[k]));
      c /= pow_int(Rational(static_cast<long long>(k + 1)), e[k]);
    }
    q.add_term(e, c);
  }
  return q;
}

Report series_identity_check(int max_weight) {
  if (max_weight < 1) throw UsageError("series identity needs a weight of at least 1");
  const int n = max_weight;
  CycleIndexPoly exponent(VariableFamily::y, n);
  for (int k = 1; k <= n; ++k) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k - 1)] = 1;
    exponent.add_term(std::move(e), Rational(1, k));
  }
  // exp(P) = Σ_m P^m / m!; P has no constant term, so m ≤ N suffices.
  CycleIndexPoly sum = CycleIndexPoly::one(VariableFamily::y, n);
  CycleIndexPoly power = CycleIndexPoly::one(VariableFamily::y, n);
  for (int m = 1; m <= n; ++m) {
    power = multiply_truncated(power, exponent, n);
    for (const auto& [e, c] : power.terms()) sum.add_term(e, c / Rational(factorial_big(m)));
  }
  Report report("series_identity", 0);
  ErrorTracker slices("exp_weight_slices_equal_q", 0.0);
  for (int w = 0; w <= n; ++w) {
    CycleIndexPoly slice(VariableFamily::y, n);
    for (const auto& [e, c] : sum.terms()) {
      if (weight_of(e) == w) slice.add_term(e, c);
    }
    const CycleIndexPoly expected = q_n_closed(w).widened(n);
    slices.observe_flag(slice == expected);
  }
  report.add(slices);
  report.set_config({{"max_weight", max_weight}});
  return report;
}

std::complex<double> evaluate_poly(const CycleIndexPoly& poly,
                                   std::span<const std::complex<double>> values) {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : poly.terms()) {
    std::complex<double> term = c.convert_to<double>();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (k >= values.size()) {
        throw UsageError("no value supplied for variable " + std::to_string(k + 1));
      }
      for (int r = 0; r < e[k]; ++r) term *= values[k];
    }
    sum += term;
  }
  return sum;
}

BigInt symmetry_group_order(int n) {
  if (n < 0) throw UsageError("n must be nonnegative");
  auto count_permutations = [](int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    BigInt c = 0;
    do {
      ++c;
    } while (std::next_permutation(v.begin(), v.end()));
    return c;
  };
  const BigInt s2 = count_permutations(2);
  const BigInt sn = count_permutations(n);
  BigInt order = sn * sn;
  for (int i = 0; i < 2 * n; ++i) order *= s2;
  return order;
}

}  // namespace fockrein
