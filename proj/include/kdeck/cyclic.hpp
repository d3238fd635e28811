#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdeck {

/// Strictly increasing list of the positive divisors of n (n >= 1).
std::vector<int> divisors(int n);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct ArithProfile {
  std::int64_t totient;
  std::int64_t divisor_count;
  std::vector<PrimePower> factorization;  // sorted by prime
};

ArithProfile arith_profile(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// A subset of Z_n. Elements are stored as their canonical residues 0..n-1;
/// every integer handed to a constructor is reduced mod n first.
class CyclicSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  explicit CyclicSet(int n);
  CyclicSet(int n, std::span<const std::int64_t> elements);
  CyclicSet(int n, std::initializer_list<std::int64_t> elements);

  static CyclicSet from_word(int n, std::uint64_t mask);
  /// Hex mask with optional 0x prefix; bit j set means j is a member.
  /// Throws std::invalid_argument if a bit at position >= n is set.
  static CyclicSet from_hex(int n, std::string_view hex);
  static CyclicSet from_bits(Bits bits);
  static CyclicSet full(int n);

  [[nodiscard]] int modulus() const { return static_cast<int>(bits_.size()); }
  [[nodiscard]] bool contains(std::int64_t j) const;
  [[nodiscard]] std::size_t size() const { return bits_.count(); }
  [[nodiscard]] bool empty() const { return bits_.none(); }
  [[nodiscard]] std::vector<int> elements() const;
  [[nodiscard]] const Bits& bits() const { return bits_; }
  /// Mask as a machine word; requires n <= 64.
  [[nodiscard]] std::uint64_t word() const;
  /// Lowercase hex with 0x prefix.
  [[nodiscard]] std::string to_hex() const;

  void insert(std::int64_t j);
  void erase(std::int64_t j);

  /// E + t.
  [[nodiscard]] CyclicSet rotated(std::int64_t t) const;
  /// -E.
  [[nodiscard]] CyclicSet reflected() const;
  [[nodiscard]] CyclicSet complement() const;

  friend CyclicSet operator&(const CyclicSet& a, const CyclicSet& b);
  friend CyclicSet operator|(const CyclicSet& a, const CyclicSet& b);

  friend bool operator==(const CyclicSet& a, const CyclicSet& b) { return a.bits_ == b.bits_; }
  /// Mask-as-integer order (bit j weighs 2^j); sets must share a modulus.
  friend bool operator<(const CyclicSet& a, const CyclicSet& b);

 private:
  explicit CyclicSet(Bits bits) : bits_(std::move(bits)) {}
  Bits bits_;
};

CyclicSet rotate(const CyclicSet& e, std::int64_t t);
CyclicSet reflect(const CyclicSet& e);

/// The rotation of E whose mask is the smallest integer.
CyclicSet canonical_rotation(const CyclicSet& e);

/// Some t with F = E + t, or nullopt. Throws std::invalid_argument when the
/// moduli differ.
std::optional<int> translation_equivalent(const CyclicSet& e, const CyclicSet& f);

/// {k in Z_n : gcd(k, n) = a}; throws std::invalid_argument unless a | n.
CyclicSet gcd_class(int n, int a);
/// aZ_n for a divisor a of n.
CyclicSet subgroup(int n, int a);

/// Classes <a> and subgroups aZ_n for every divisor a of n.
class GcdClassTable {
 public:
  explicit GcdClassTable(int n);

  [[nodiscard]] int modulus() const { return n_; }
  [[nodiscard]] const std::vector<int>& divisors() const { return divisors_; }
  [[nodiscard]] const CyclicSet& gcd_class(int a) const;
  [[nodiscard]] const CyclicSet& subgroup(int a) const;
  /// gcd(k, n) for a residue k.
  [[nodiscard]] int class_of(int k) const { return class_of_[static_cast<std::size_t>(k)]; }

 private:
  [[nodiscard]] std::size_t index_of(int a) const;

  int n_;
  std::vector<int> divisors_;
  std::vector<CyclicSet> classes_;
  std::vector<CyclicSet> subgroups_;
  std::vector<int> class_of_;
};

/// Splits k into a + b with gcd(a, n) = gcd(b, n) = 1 for odd n, via the
/// prime-by-prime residue choice and CRT. Throws std::invalid_argument for
/// even n.
std::pair<std::int64_t, std::int64_t> coprime_decomposition(std::int64_t n, std::int64_t k);

/// Single-word masks for n <= 64, used by the exhaustive classifier.
namespace word {

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Mask of E + t (0 <= t < n).
constexpr std::uint64_t rotate(std::uint64_t mask, int n, int t) {
  if (t == 0) return mask;
  return ((mask << t) | (mask >> (n - t))) & full_mask(n);
}

std::uint64_t canonical(std::uint64_t mask, int n);

/// True when no rotation of mask is a smaller integer.
bool is_canonical(std::uint64_t mask, int n);

/// Smallest t > 0 with E + t = E.
int period(std::uint64_t mask, int n);

}  // namespace word

}  // namespace kdeck
