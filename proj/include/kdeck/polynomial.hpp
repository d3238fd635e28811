#pragma once

#include "kdeck/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace kdeck {

/// Dense polynomial over Z; coefficient i multiplies x^i. The highest stored
/// coefficient is nonzero unless the polynomial is zero (empty vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);

  /// x^d - 1
  static IntPolynomial x_pow_minus_one(int d);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] BigInt coefficient(int i) const;
  [[nodiscard]] std::string str() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct DivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by a monic polynomial; exact over Z. Throws std::invalid_argument
/// if the divisor is not monic.
DivMod divmod_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// The d-th cyclotomic polynomial, obtained from x^d - 1 by exact division
/// through Phi_e for every proper divisor e of d. Results are memoized.
IntPolynomial cyclotomic(int d);

/// True iff the monic polynomial divides sum_i c[i] x^i. The remainder runs
/// on checked int64 and reruns on BigInt if a coefficient overflows.
bool divisible_by_monic(std::span<const std::int64_t> c, std::span<const std::int64_t> monic);
bool divisible_by_monic(std::span<const BigInt> c, std::span<const BigInt> monic);

}  // namespace kdeck
