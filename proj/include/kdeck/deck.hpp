#pragma once

#include "kdeck/cyclic.hpp"
#include "kdeck/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kdeck {

/// Rational-valued function on Z_n held as integer numerators over one
/// positive common denominator.
class IntFunction {
 public:
  IntFunction(int n, std::vector<BigInt> numerators, BigInt denominator = 1);

  static IntFunction indicator(const CyclicSet& e);
  static IntFunction from_ints(int n, std::span<const std::int64_t> values, std::int64_t denominator = 1);

  [[nodiscard]] int modulus() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] const std::vector<BigInt>& numerators() const { return values_; }
  [[nodiscard]] const BigInt& denominator() const { return denom_; }
  [[nodiscard]] bool is_indicator() const;
  /// Numerators as int64, or nullopt if one does not fit.
  [[nodiscard]] std::optional<std::vector<std::int64_t>> small_numerators() const;

  /// x -> f(x - t).
  [[nodiscard]] IntFunction translated(std::int64_t t) const;

 private:
  std::vector<BigInt> values_;
  BigInt denom_;
};

/// Table of N_{f,k}(x_1, ..., x_{k-1}) over Z_n^{k-1}, flattened row-major
/// (x_1 is the slowest index). Values are kept in lowest terms: integral decks
/// hold int64 values, anything else holds BigInt numerators over a common
/// denominator.
class Deck {
 public:
  struct Rational {
    std::vector<BigInt> numerators;
    BigInt denominator;
    friend bool operator==(const Rational&, const Rational&) = default;
  };

  Deck(int n, int k, std::vector<std::int64_t> values);
  Deck(int n, int k, std::vector<BigInt> numerators, BigInt denominator);

  [[nodiscard]] int modulus() const { return n_; }
  [[nodiscard]] int order() const { return k_; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool is_integral() const { return std::holds_alternative<std::vector<std::int64_t>>(values_); }
  /// Only valid when is_integral().
  [[nodiscard]] std::span<const std::int64_t> int_values() const;
  [[nodiscard]] BigRational at(std::size_t flat_index) const;
  [[nodiscard]] BigRational at(std::span<const int> xs) const;
  [[nodiscard]] BigInt denominator() const;
  [[nodiscard]] BigInt numerator(std::size_t flat_index) const;
  [[nodiscard]] std::size_t flat_index(std::span<const int> xs) const;

  friend bool operator==(const Deck&, const Deck&) = default;

 private:
  void normalize();

  int n_;
  int k_;
  std::variant<std::vector<std::int64_t>, Rational> values_;
};

struct DeckOptions {
  /// Upper bound on n^(k-1) table entries.
  std::uint64_t max_entries = std::uint64_t{1} << 31;
};

/// Thrown when a deck table would exceed DeckOptions::max_entries.
struct DeckTooLarge : std::length_error {
  DeckTooLarge(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required;
  std::uint64_t budget;
};

/// Number of table entries n^(k-1), saturating at UINT64_MAX.
std::uint64_t deck_entries(int n, int k);

/// Direct evaluation of sum_x f(x) f(x+x_1) ... f(x+x_{k-1}).
Deck deck(const IntFunction& f, int k, const DeckOptions& options = {});

/// Triple correlation of a set through N(x1, x2) = |E & (E - x1) & (E - x2)|.
Deck deck3_set(const CyclicSet& e);

/// deck3_set for a single-word mask (n <= 64), written into out[0..n*n).
void deck3_word(std::uint64_t mask, int n, std::span<std::int64_t> out);

/// Throws std::invalid_argument when the shapes differ.
bool decks_equal(const Deck& a, const Deck& b);

/// FNV-1a 64 over the canonical serialization (n, k, denominator, values).
std::uint64_t deck_fingerprint(const Deck& d);
std::string fingerprint_hex(std::uint64_t fp);

}  // namespace kdeck
