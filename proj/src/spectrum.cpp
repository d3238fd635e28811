#include "kdeck/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace kdeck {

SpectrumContext::SpectrumContext(int n) : n_(n), table_(n) {
  for (int a : table_.divisors()) {
    const IntPolynomial phi = cyclotomic(n / a);
    phi_big_.push_back(phi.coefficients());
    std::vector<std::int64_t> small;
    bool fits = true;
    for (const auto& c : phi.coefficients()) {
      try {
        small.push_back(narrow(c).value());
      } catch (const ArithmeticOverflow&) {
        fits = false;
        break;
      }
    }
    phi_small_.push_back(fits ? std::move(small) : std::vector<std::int64_t>{});
    phi_fits_.push_back(fits);
  }
}

std::size_t SpectrumContext::divisor_index(int g) const {
  const auto& ds = table_.divisors();
  return static_cast<std::size_t>(std::lower_bound(ds.begin(), ds.end(), g) - ds.begin());
}

namespace {

// Exponent of zeta_d carried by position j at frequency s, with g = gcd(s, n).
inline std::size_t fold_exponent(std::int64_t j, std::int64_t s, std::int64_t n, std::int64_t g) {
  const std::int64_t d = n / g;
  return static_cast<std::size_t>(mod((n - mod(j * s, n)) / g, d));
}

}  // namespace

bool SpectrumContext::is_zero(std::span<const std::int64_t> f, int s) const {
  if (f.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("is_zero: length mismatch");
  s = static_cast<int>(mod(s, n_));
  const int g = table_.class_of(s);
  const int d = n_ / g;
  const std::size_t idx = divisor_index(g);
  try {
    std::vector<Checked64> c(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < n_; ++j)
      if (f[static_cast<std::size_t>(j)] != 0) c[fold_exponent(j, s, n_, g)] += f[static_cast<std::size_t>(j)];
    std::vector<std::int64_t> plain(c.size());
    std::transform(c.begin(), c.end(), plain.begin(), [](Checked64 x) { return x.value(); });
    if (phi_fits_[idx]) return divisible_by_monic(plain, phi_small_[idx]);
    std::vector<BigInt> big(plain.begin(), plain.end());
    return divisible_by_monic(big, phi_big_[idx]);
  } catch (const ArithmeticOverflow&) {
    std::vector<BigInt> c(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < n_; ++j) c[fold_exponent(j, s, n_, g)] += f[static_cast<std::size_t>(j)];
    return divisible_by_monic(c, phi_big_[idx]);
  }
}

bool SpectrumContext::is_zero(const IntFunction& f, int s) const {
  if (f.modulus() != n_) throw std::invalid_argument("is_zero: modulus mismatch");
  if (auto small = f.small_numerators()) return is_zero(*small, s);
  s = static_cast<int>(mod(s, n_));
  const int g = table_.class_of(s);
  std::vector<BigInt> c(static_cast<std::size_t>(n_ / g), 0);
  for (int j = 0; j < n_; ++j) c[fold_exponent(j, s, n_, g)] += f.numerators()[static_cast<std::size_t>(j)];
  return divisible_by_monic(c, phi_big_[divisor_index(g)]);
}

bool SpectrumContext::is_zero(const CyclicSet& e, int s) const {
  if (e.modulus() != n_) throw std::invalid_argument("is_zero: modulus mismatch");
  s = static_cast<int>(mod(s, n_));
  const int g = table_.class_of(s);
  const int d = n_ / g;
  std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
  for (int j : e.elements()) ++c[fold_exponent(j, s, n_, g)];
  const std::size_t idx = divisor_index(g);
  if (phi_fits_[idx]) return divisible_by_monic(c, phi_small_[idx]);
  std::vector<BigInt> big(c.begin(), c.end());
  return divisible_by_monic(big, phi_big_[idx]);
}

template <class Test>
SpectrumReport SpectrumContext::build_report(Test&& zero_at) const {
  SpectrumReport r{n_, CyclicSet(n_), CyclicSet(n_), {}};
  for (int a : table_.divisors()) {
    const int s = a % n_;
    const bool z = zero_at(s);
    // Class constancy spot check on the last member of <a>, which is n - a.
    const int other = n_ - a;
    if (other != s && other > 0 && zero_at(other) != z)
      throw std::logic_error("spectrum: zero pattern not constant on gcd class");
    if (z) {
      r.zero_mask = r.zero_mask | table_.gcd_class(a);
    } else {
      r.full_support = r.full_support | table_.gcd_class(a);
      r.support_divisors.push_back(a);
    }
  }
  return r;
}

SpectrumReport SpectrumContext::report(const IntFunction& f) const {
  if (f.modulus() != n_) throw std::invalid_argument("report: modulus mismatch");
  if (auto small = f.small_numerators()) return build_report([&](int s) { return is_zero(*small, s); });
  return build_report([&](int s) { return is_zero(f, s); });
}

SpectrumReport SpectrumContext::report(const CyclicSet& e) const {
  return build_report([&](int s) { return is_zero(e, s); });
}

bool ft_is_zero(const IntFunction& f, int s) { return SpectrumContext(f.modulus()).is_zero(f, s); }
bool ft_is_zero(const CyclicSet& e, int s) { return SpectrumContext(e.modulus()).is_zero(e, s); }
SpectrumReport zero_set(const IntFunction& f) { return SpectrumContext(f.modulus()).report(f); }
SpectrumReport zero_set(const CyclicSet& e) { return SpectrumContext(e.modulus()).report(e); }

bool is_periodic(const IntFunction& f, int a) {
  const int n = f.modulus();
  if (a < 1 || n % a != 0) throw std::invalid_argument("is_periodic: period must divide n");
  const auto& v = f.numerators();
  for (int x = 0; x < n; ++x)
    if (v[static_cast<std::size_t>(x)] != v[static_cast<std::size_t>((x + a) % n)]) return false;
  return true;
}

bool is_periodic(const CyclicSet& e, int a) {
  const int n = e.modulus();
  if (a < 1 || n % a != 0) throw std::invalid_argument("is_periodic: period must divide n");
  return e.rotated(a) == e;
}

int gap(const CyclicSet& a) {
  const int n = a.modulus();
  if (a.empty()) return n;
  // Start just after a member so every run is seen unbroken.
  const auto start = static_cast<int>(a.bits().find_first());
  int best = 0, run = 0;
  for (int i = 1; i <= n; ++i) {
    if (a.contains(start + i)) {
      run = 0;
    } else {
      best = std::max(best, ++run);
    }
  }
  return best;
}

CyclicSet a_x(int n, std::int64_t x) {
  CyclicSet out(n);
  for (int k = 0; k < n; ++k)
    if (std::gcd(k, n) <= x) out.insert(k);
  return out;
}

std::vector<std::complex<double>> float_dft(std::span<const double> f) {
  const auto n = f.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += f[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

std::vector<std::complex<double>> float_idft(std::span<const std::complex<double>> g) {
  const auto n = g.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += g[k] * std::polar(1.0, angle);
    }
    out[j] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace kdeck
