#include "kdeck/analysis.hpp"

#include "kdeck/deck.hpp"
#include "kdeck/extendable.hpp"
#include "kdeck/rng.hpp"
#include "kdeck/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace kdeck {

bool good_n_predicate(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("good_n_predicate: n must be positive");
  switch (n) {
    case 1: case 2: case 4: case 6: case 8: case 10: return true;
    default: break;
  }
  if (n % 2 == 0) return false;
  const auto profile = arith_profile(n);
  if (profile.factorization.size() == 1) return true;
  int omega = 0;
  for (const auto& pp : profile.factorization) omega += pp.exponent;
  return omega <= 3;
}

NecklaceEnumerator::NecklaceEnumerator(int n) : n_(n), a_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 1 || n > 64) throw std::invalid_argument("necklaces: n must lie in [1, 64]");
}

std::uint64_t NecklaceEnumerator::mask() const {
  std::uint64_t m = 0;
  for (int i = 1; i <= n_; ++i)
    if (a_[static_cast<std::size_t>(i)] != 0) m |= std::uint64_t{1} << (n_ - i);
  return m;
}

std::optional<std::uint64_t> NecklaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return mask();  // all zeros
  }
  for (;;) {
    int i = n_;
    while (i > 0 && a_[static_cast<std::size_t>(i)] == 1) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    a_[static_cast<std::size_t>(i)] = 1;
    for (int j = i + 1; j <= n_; ++j) a_[static_cast<std::size_t>(j)] = a_[static_cast<std::size_t>(j - i)];
    if (n_ % i == 0) return mask();
  }
}

BigInt necklace_count(int n) {
  if (n < 1) throw std::invalid_argument("necklace_count: n must be positive");
  BigInt total = 0;
  for (int d : divisors(n)) total += BigInt(arith_profile(d).totient) * (BigInt(1) << (n / d));
  return total / n;
}

unsigned default_threads() {
  if (const char* env = std::getenv("KDECK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1 || total < 2) {
    fn(0U, std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

Deck word_deck(std::uint64_t mask, int n) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  deck3_word(mask, n, values);
  return Deck(n, 3, std::move(values));
}

}  // namespace

ClassificationReport classify(int n, const ClassifyOptions& options) {
  if (n < 1) throw std::invalid_argument("classify: n must be positive");
  if (n > options.max_n || n > kClassifyHardCap)
    throw std::invalid_argument("classify: n = " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(std::min(options.max_n, kClassifyHardCap)));
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned threads = options.threads != 0 ? options.threads : default_threads();

  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (fingerprint, canonical mask)
  std::vector<std::vector<Entry>> parts(std::max(1U, threads));
  parallel_ranges(total, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Entry>& out = parts[w];
    std::vector<std::int64_t> buf(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (!word::is_canonical(mask, n)) continue;
      deck3_word(mask, n, buf);
      out.emplace_back(deck_fingerprint(Deck(n, 3, buf)), mask);
    }
  });
  std::vector<Entry> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());

  ClassificationReport r;
  r.n = n;
  r.num_subsets = total;
  r.num_translation_classes = all.size();
  if (BigInt(r.num_translation_classes) != necklace_count(n))
    throw std::logic_error("classify: translation class count disagrees with the necklace formula");

  // Fingerprints only group; each group is split by exact deck equality.
  std::vector<std::vector<std::uint64_t>> colliding;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    if (j - i == 1) {
      ++r.num_deck_classes;
    } else {
      std::vector<std::pair<Deck, std::vector<std::uint64_t>>> exact;
      for (std::size_t t = i; t < j; ++t) {
        Deck d = word_deck(all[t].second, n);
        auto it = std::find_if(exact.begin(), exact.end(), [&](const auto& c) { return c.first == d; });
        if (it == exact.end()) {
          exact.emplace_back(std::move(d), std::vector<std::uint64_t>{all[t].second});
        } else {
          it->second.push_back(all[t].second);
        }
      }
      r.num_deck_classes += exact.size();
      for (auto& c : exact)
        if (c.second.size() > 1) colliding.push_back(std::move(c.second));
    }
    i = j;
  }

  for (auto& c : colliding) std::sort(c.begin(), c.end());
  std::sort(colliding.begin(), colliding.end());
  for (const auto& c : colliding) {
    for (std::uint64_t m : c) r.exception_subset_count += static_cast<std::uint64_t>(word::period(m, n));
    r.exception_pair_count += c.size() * (c.size() - 1) / 2;
    if (r.colliding_classes.size() < options.max_exceptions) {
      std::vector<CyclicSet> reps;
      for (std::uint64_t m : c) reps.push_back(CyclicSet::from_word(n, m));
      r.colliding_classes.push_back(std::move(reps));
    }
    for (std::size_t a = 0; a < c.size() && r.exceptions.size() < options.max_exceptions; ++a)
      for (std::size_t b = a + 1; b < c.size() && r.exceptions.size() < options.max_exceptions; ++b) {
        ExceptionPair p{CyclicSet::from_word(n, c[a]), CyclicSet::from_word(n, c[b])};
        if (!decks_equal(deck3_set(p.e), deck3_set(p.f)) || translation_equivalent(p.e, p.f))
          throw std::logic_error("classify: exception pair failed re-verification");
        r.exceptions.push_back(std::move(p));
      }
  }
  r.determined = colliding.empty();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BigRational exception_fraction(int n, const ClassifyOptions& options) {
  const auto r = classify(n, options);
  return BigRational(BigInt(r.exception_subset_count), BigInt(r.num_subsets));
}

CyclicSet mc_sample(int n, std::uint64_t seed, std::uint64_t j) {
  PhiloxStream stream(seed, j);
  CyclicSet e(n);
  std::uint64_t word = 0;
  for (int i = 0; i < n; ++i) {
    if (i % 64 == 0) word = stream.next_u64();
    if ((word >> (i % 64)) & 1U) e.insert(i);
  }
  return e;
}

McReport zero_probability_mc(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw std::invalid_argument("mc: n must be positive");
  if (samples < 1) throw std::invalid_argument("mc: samples must be at least 1");
  const SpectrumContext ctx(n);
  const unsigned workers = std::max(1U, threads);
  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  std::vector<std::uint64_t> any(workers, 0), constant(workers, 0), nonconstant_zero(workers, 0);
  parallel_ranges(samples, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t j = lo; j < hi; ++j) {
      const CyclicSet e = mc_sample(n, seed, j);
      const bool is_constant = e.empty() || e.size() == static_cast<std::size_t>(n);
      if (is_constant) ++constant[w];
      const auto rep = ctx.report(e);
      if (rep.zero_mask.empty()) continue;
      ++any[w];
      if (!is_constant) ++nonconstant_zero[w];
      for (int s : rep.zero_mask.elements()) ++counts[w][static_cast<std::size_t>(s)];
    }
  });

  McReport r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  r.generator = std::string(Philox4x32::name);
  r.zero_counts.assign(static_cast<std::size_t>(n), 0);
  for (unsigned w = 0; w < workers; ++w) {
    r.any_zero_count += any[w];
    r.constant_sample_count += constant[w];
    r.nonconstant_zero_count += nonconstant_zero[w];
    for (std::size_t s = 0; s < r.zero_counts.size(); ++s) r.zero_counts[s] += counts[w][s];
  }
  if (n % 2 == 0) {
    BigInt binom = 1;
    for (int i = 1; i <= n / 2; ++i) binom = binom * (n / 2 + i) / i;
    r.exact_half_probability = BigRational(binom, BigInt(1) << n);
  }
  const double total = static_cast<double>(samples);
  auto stderr_of = [&](double p) { return std::sqrt(p * (1.0 - p) / total); };
  for (std::uint64_t c : r.zero_counts) {
    const double p = static_cast<double>(c) / total;
    r.zero_rates.push_back(p);
    r.zero_rate_std_errors.push_back(stderr_of(p));
  }
  r.any_zero_rate = static_cast<double>(r.any_zero_count) / total;
  r.any_zero_std_error = stderr_of(r.any_zero_rate);
  return r;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::Nonvanishing: return "NONVANISHING";
    case Certificate::Prefix: return "PREFIX";
    case Certificate::Extendable: return "EXTENDABLE";
    case Certificate::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Certificate determinacy_certificate(const CyclicSet& e) {
  if (e.empty()) throw std::invalid_argument("determinacy_certificate: empty set");
  const int n = e.modulus();
  const auto rep = zero_set(e);
  if (rep.zero_mask.empty()) return Certificate::Nonvanishing;
  const auto dn = arith_profile(n).divisor_count;
  bool prefix = true;
  for (std::int64_t s = 1; s <= dn && prefix; ++s) prefix = rep.full_support.contains(s);
  if (prefix) return Certificate::Prefix;
  if (extendable_by_index(rep.full_support)) return Certificate::Extendable;
  return Certificate::Unknown;
}

}  // namespace kdeck
