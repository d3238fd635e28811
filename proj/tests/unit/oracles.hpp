#pragma once

// Slow, obviously-correct reference computations shared by the unit tests.
// None of these call into the library's algorithms.

#include "kdeck/cyclic.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<int> trial_divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t totient(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

inline std::vector<int> members(const std::vector<bool>& in) {
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

inline std::vector<std::int64_t> indicator(const kdeck::CyclicSet& e) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(e.modulus()), 0);
  for (int j = 0; j < e.modulus(); ++j) f[static_cast<std::size_t>(j)] = e.contains(j) ? 1 : 0;
  return f;
}

/// N_{f,k} by decoding every flat index into (x_1, ..., x_{k-1}) and summing.
inline std::vector<std::int64_t> brute_deck(const std::vector<std::int64_t>& f, int k) {
  const int n = static_cast<int>(f.size());
  std::size_t total = 1;
  for (int i = 1; i < k; ++i) total *= static_cast<std::size_t>(n);
  std::vector<std::int64_t> out(total, 0);
  std::vector<int> xs(static_cast<std::size_t>(k - 1));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = k - 2; i >= 0; --i) {
      xs[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    std::int64_t acc = 0;
    for (int x = 0; x < n; ++x) {
      std::int64_t term = f[static_cast<std::size_t>(x)];
      for (int xi : xs) term *= f[static_cast<std::size_t>((x + xi) % n)];
      acc += term;
    }
    out[idx] = acc;
  }
  return out;
}

/// f^(s) = sum_j f(j) exp(-2 pi i j s / n) in long double.
inline std::complex<long double> direct_ft(const std::vector<std::int64_t>& f, int s) {
  const auto n = static_cast<long double>(f.size());
  std::complex<long double> acc = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const long double angle =
        -2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * static_cast<std::size_t>(s)) % f.size()) / n;
    acc += static_cast<long double>(f[j]) * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

/// All rotations of E, as sorted element lists.
inline std::set<std::vector<int>> rotation_orbit(const std::vector<int>& e, int n) {
  std::set<std::vector<int>> orbit;
  for (int t = 0; t < n; ++t) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int x : e) in[static_cast<std::size_t>((x + t) % n)] = true;
    orbit.insert(members(in));
  }
  return orbit;
}

/// Deterministic input generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  std::int64_t uniform64(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  kdeck::CyclicSet set(int n, double p = 0.5) {
    kdeck::CyclicSet e(n);
    for (int j = 0; j < n; ++j)
      if (coin(p)) e.insert(j);
    return e;
  }

  std::vector<std::int64_t> values(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = uniform64(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oracle
