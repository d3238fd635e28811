#pragma once

#include "kdeck/cyclic.hpp"
#include "kdeck/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kdeck {

/// n is 1, 2, 4, 6, 8, 10, a power of an odd prime, or a product of at most
/// three odd primes counted with multiplicity.
bool good_n_predicate(std::int64_t n);

/// Canonical masks (least rotation as an integer) of Z_n in increasing order,
/// one per translation class. Fredricksen-Kessler-Maiorana over bit strings
/// read from bit n-1 down to bit 0, so lexicographic order is integer order.
class NecklaceEnumerator {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= 64.
  explicit NecklaceEnumerator(int n);
  std::optional<std::uint64_t> next();

 private:
  int n_;
  std::vector<int> a_;  // a_[1..n], a_[i] is bit n-i
  bool started_ = false;
  bool done_ = false;
  [[nodiscard]] std::uint64_t mask() const;
};

/// (1/n) sum_{d | n} phi(d) 2^(n/d)
BigInt necklace_count(int n);

struct ClassifyOptions {
  int max_n = 18;
  std::size_t max_exceptions = 100;
  /// 0 picks KDECK_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

inline constexpr int kClassifyHardCap = 20;

struct ExceptionPair {
  CyclicSet e;
  CyclicSet f;
};

struct ClassificationReport {
  int n = 0;
  std::uint64_t num_subsets = 0;
  std::uint64_t num_translation_classes = 0;
  std::uint64_t num_deck_classes = 0;
  bool determined = true;
  std::vector<ExceptionPair> exceptions;     // capped
  std::uint64_t exception_pair_count = 0;    // unordered pairs of representatives sharing a deck
  std::uint64_t exception_subset_count = 0;  // subsets in a deck class with more than one translation class
  std::vector<std::vector<CyclicSet>> colliding_classes;  // representatives, capped like exceptions
  double elapsed_seconds = 0.0;
};

/// Groups every subset of Z_n by its 3-deck. Throws std::invalid_argument if
/// n < 1 or n exceeds options.max_n or the hard cap.
ClassificationReport classify(int n, const ClassifyOptions& options = {});

/// exception_subset_count / 2^n.
BigRational exception_fraction(int n, const ClassifyOptions& options = {});

struct McReport {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::vector<std::uint64_t> zero_counts;  // per frequency
  std::uint64_t any_zero_count = 0;
  /// Samples equal to the empty set or Z_n; their transforms vanish trivially.
  std::uint64_t constant_sample_count = 0;
  std::uint64_t nonconstant_zero_count = 0;
  std::optional<BigRational> exact_half_probability;  // even n
  std::vector<double> zero_rates;
  std::vector<double> zero_rate_std_errors;
  double any_zero_rate = 0.0;
  double any_zero_std_error = 0.0;
};

/// Uniform random subsets; sample j draws its bits from Philox stream j.
/// Counts are independent of the thread count.
McReport zero_probability_mc(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

/// The random subset used as sample j.
CyclicSet mc_sample(int n, std::uint64_t seed, std::uint64_t j);

enum class Certificate { Nonvanishing, Prefix, Extendable, Unknown };
std::string to_string(Certificate c);

/// Strongest sufficient condition for 3-deck determinacy that E meets.
/// Throws std::invalid_argument for empty E.
Certificate determinacy_certificate(const CyclicSet& e);

/// Thread count to use when a caller passes 0.
unsigned default_threads();

}  // namespace kdeck
