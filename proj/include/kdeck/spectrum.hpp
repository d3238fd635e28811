#pragma once

#include "kdeck/cyclic.hpp"
#include "kdeck/deck.hpp"
#include "kdeck/polynomial.hpp"

#include <complex>
#include <span>
#include <vector>

namespace kdeck {

/// Exact zero pattern of the Fourier transform
/// f^(s) = sum_j f(j) zeta_n^{-js}.
struct SpectrumReport {
  int n;
  CyclicSet zero_mask;      // s with f^(s) = 0
  CyclicSet full_support;   // complement of zero_mask
  std::vector<int> support_divisors;  // a | n with <a> inside the support
};

/// Per-modulus cache of the cyclotomic polynomials Phi_{n/a} for a | n.
/// Zero tests fold f into C(x) of degree < d = n / gcd(s, n) and ask whether
/// Phi_d divides it; floating point is never consulted.
class SpectrumContext {
 public:
  explicit SpectrumContext(int n);

  [[nodiscard]] int modulus() const { return n_; }
  [[nodiscard]] const GcdClassTable& classes() const { return table_; }

  [[nodiscard]] bool is_zero(std::span<const std::int64_t> f, int s) const;
  [[nodiscard]] bool is_zero(const IntFunction& f, int s) const;
  [[nodiscard]] bool is_zero(const CyclicSet& e, int s) const;

  /// One test per divisor, propagated over its gcd class; one extra member of
  /// each class is re-tested and a mismatch throws std::logic_error.
  [[nodiscard]] SpectrumReport report(const IntFunction& f) const;
  [[nodiscard]] SpectrumReport report(const CyclicSet& e) const;

 private:
  template <class Test>
  SpectrumReport build_report(Test&& zero_at) const;
  [[nodiscard]] std::size_t divisor_index(int d) const;

  int n_;
  GcdClassTable table_;
  std::vector<std::vector<std::int64_t>> phi_small_;  // indexed like table_.divisors(), Phi_{n/a}
  std::vector<std::vector<BigInt>> phi_big_;
  std::vector<bool> phi_fits_;
};

bool ft_is_zero(const IntFunction& f, int s);
bool ft_is_zero(const CyclicSet& e, int s);
SpectrumReport zero_set(const IntFunction& f);
SpectrumReport zero_set(const CyclicSet& e);

/// f(x + a) = f(x) for all x; a must divide n.
bool is_periodic(const IntFunction& f, int a);
bool is_periodic(const CyclicSet& e, int a);

/// Longest cyclic run of consecutive residues missing from A; n for empty A.
int gap(const CyclicSet& a);

/// {k in Z_n : gcd(k, n) <= x}
CyclicSet a_x(int n, std::int64_t x);

/// Naive DFT with the negative-exponent convention, twiddles indexed exactly
/// by (j*k mod n).
std::vector<std::complex<double>> float_dft(std::span<const double> f);
/// Inverse of float_dft (includes the 1/n factor).
std::vector<std::complex<double>> float_idft(std::span<const std::complex<double>> g);

}  // namespace kdeck
