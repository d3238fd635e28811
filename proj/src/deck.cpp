#include "kdeck/deck.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace kdeck {

// ---------------------------------------------------------------------------
// IntFunction

IntFunction::IntFunction(int n, std::vector<BigInt> numerators, BigInt denominator)
    : values_(std::move(numerators)), denom_(std::move(denominator)) {
  if (n < 1) throw std::invalid_argument("IntFunction: modulus must be positive");
  if (values_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("IntFunction: expected " + std::to_string(n) + " values");
  if (denom_ < 1) throw std::invalid_argument("IntFunction: denominator must be positive");
}

IntFunction IntFunction::indicator(const CyclicSet& e) {
  std::vector<BigInt> v(static_cast<std::size_t>(e.modulus()), 0);
  for (int j : e.elements()) v[static_cast<std::size_t>(j)] = 1;
  return IntFunction(e.modulus(), std::move(v), 1);
}

IntFunction IntFunction::from_ints(int n, std::span<const std::int64_t> values, std::int64_t denominator) {
  std::vector<BigInt> v(values.begin(), values.end());
  return IntFunction(n, std::move(v), denominator);
}

bool IntFunction::is_indicator() const {
  return denom_ == 1 && std::all_of(values_.begin(), values_.end(), [](const BigInt& x) { return x == 0 || x == 1; });
}

std::optional<std::vector<std::int64_t>> IntFunction::small_numerators() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  try {
    for (const auto& v : values_) out.push_back(narrow(v).value());
  } catch (const ArithmeticOverflow&) {
    return std::nullopt;
  }
  return out;
}

IntFunction IntFunction::translated(std::int64_t t) const {
  const int n = modulus();
  std::vector<BigInt> out(values_.size());
  for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(mod(x + t, n))] = values_[static_cast<std::size_t>(x)];
  return IntFunction(n, std::move(out), denom_);
}

// ---------------------------------------------------------------------------
// Deck

std::uint64_t deck_entries(int n, int k) {
  std::uint64_t total = 1;
  for (int i = 1; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

DeckTooLarge::DeckTooLarge(std::uint64_t req, std::uint64_t bud)
    : std::length_error("deck needs " + std::to_string(req) + " entries, budget is " + std::to_string(bud)),
      required(req),
      budget(bud) {}

Deck::Deck(int n, int k, std::vector<std::int64_t> values) : n_(n), k_(k), values_(std::move(values)) {
  if (n < 1 || k < 2) throw std::invalid_argument("Deck: need n >= 1 and k >= 2");
  if (std::get<0>(values_).size() != deck_entries(n, k)) throw std::invalid_argument("Deck: wrong table size");
}

Deck::Deck(int n, int k, std::vector<BigInt> numerators, BigInt denominator)
    : n_(n), k_(k), values_(Rational{std::move(numerators), std::move(denominator)}) {
  if (n < 1 || k < 2) throw std::invalid_argument("Deck: need n >= 1 and k >= 2");
  auto& r = std::get<Rational>(values_);
  if (r.numerators.size() != deck_entries(n, k)) throw std::invalid_argument("Deck: wrong table size");
  if (r.denominator == 0) throw std::invalid_argument("Deck: zero denominator");
  normalize();
}

void Deck::normalize() {
  auto* r = std::get_if<Rational>(&values_);
  if (r == nullptr) return;
  if (r->denominator < 0) {
    r->denominator = -r->denominator;
    for (auto& v : r->numerators) v = -v;
  }
  BigInt g = r->denominator;
  for (const auto& v : r->numerators) {
    if (g == 1) break;
    g = gcd_value<BigInt>(g, v);
  }
  if (g > 1) {
    r->denominator /= g;
    for (auto& v : r->numerators) v /= g;
  }
  if (r->denominator != 1) return;
  std::vector<std::int64_t> small;
  small.reserve(r->numerators.size());
  try {
    for (const auto& v : r->numerators) small.push_back(narrow(v).value());
  } catch (const ArithmeticOverflow&) {
    return;
  }
  values_ = std::move(small);
}

std::size_t Deck::size() const { return deck_entries(n_, k_); }

std::span<const std::int64_t> Deck::int_values() const {
  if (!is_integral()) throw std::logic_error("Deck::int_values on a rational deck");
  return std::get<0>(values_);
}

BigInt Deck::denominator() const {
  if (is_integral()) return 1;
  return std::get<Rational>(values_).denominator;
}

BigInt Deck::numerator(std::size_t i) const {
  if (is_integral()) return BigInt(std::get<0>(values_).at(i));
  return std::get<Rational>(values_).numerators.at(i);
}

BigRational Deck::at(std::size_t i) const { return BigRational(numerator(i), denominator()); }

std::size_t Deck::flat_index(std::span<const int> xs) const {
  if (xs.size() != static_cast<std::size_t>(k_ - 1)) throw std::invalid_argument("Deck: wrong number of coordinates");
  std::size_t idx = 0;
  for (int x : xs) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(x, n_));
  return idx;
}

BigRational Deck::at(std::span<const int> xs) const { return at(flat_index(xs)); }

// ---------------------------------------------------------------------------

namespace {

template <class Int>
std::vector<Int> deck_table(const std::vector<Int>& f, int n, int k) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Int> out(deck_entries(n, k));
  // prod[level][x] = f(x) f(x + x_1) ... f(x + x_level)
  std::vector<std::vector<Int>> prod(static_cast<std::size_t>(k), std::vector<Int>(un));
  prod[0] = f;
  std::function<void(int, std::size_t)> walk = [&](int level, std::size_t idx) {
    const auto& cur = prod[static_cast<std::size_t>(level)];
    if (level == k - 1) {
      Int s = 0;
      for (const auto& v : cur) s += v;
      out[idx] = s;
      return;
    }
    auto& next = prod[static_cast<std::size_t>(level) + 1];
    for (std::size_t shift = 0; shift < un; ++shift) {
      for (std::size_t x = 0; x < un; ++x) {
        const auto& c = cur[x];
        next[x] = c == 0 ? Int(0) : Int(c * f[(x + shift) % un]);
      }
      walk(level + 1, idx * un + shift);
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace

Deck deck(const IntFunction& f, int k, const DeckOptions& options) {
  const int n = f.modulus();
  if (k < 2) throw std::invalid_argument("deck: k must be at least 2");
  const auto entries = deck_entries(n, k);
  if (entries > options.max_entries) throw DeckTooLarge(entries, options.max_entries);

  BigInt denom = 1;
  for (int i = 0; i < k; ++i) denom *= f.denominator();

  if (auto small = f.small_numerators()) {
    try {
      std::vector<Checked64> fv(small->begin(), small->end());
      auto table = deck_table(fv, n, k);
      if (denom == 1) {
        std::vector<std::int64_t> vals(table.size());
        std::transform(table.begin(), table.end(), vals.begin(), [](Checked64 c) { return c.value(); });
        return Deck(n, k, std::move(vals));
      }
      std::vector<BigInt> nums(table.size());
      std::transform(table.begin(), table.end(), nums.begin(), [](Checked64 c) { return to_big(c); });
      return Deck(n, k, std::move(nums), denom);
    } catch (const ArithmeticOverflow&) {
      // fall through to the exact path
    }
  }
  auto table = deck_table(f.numerators(), n, k);
  return Deck(n, k, std::move(table), denom);
}

namespace {

using Blocks = std::vector<std::uint64_t>;

Blocks to_blocks(const CyclicSet::Bits& b) {
  Blocks out;
  out.reserve(b.num_blocks());
  boost::to_block_range(b, std::back_inserter(out));
  return out;
}

}  // namespace

Deck deck3_set(const CyclicSet& e) {
  const int n = e.modulus();
  const auto un = static_cast<std::size_t>(n);
  // shifted[x] = E - x
  std::vector<Blocks> shifted;
  shifted.reserve(un);
  for (int x = 0; x < n; ++x) shifted.push_back(to_blocks(e.rotated(-x).bits()));
  const std::size_t w = shifted[0].size();
  std::vector<std::int64_t> vals(un * un);
  Blocks row(w);
  for (std::size_t x1 = 0; x1 < un; ++x1) {
    for (std::size_t i = 0; i < w; ++i) row[i] = shifted[0][i] & shifted[x1][i];
    for (std::size_t x2 = 0; x2 < un; ++x2) {
      std::int64_t c = 0;
      for (std::size_t i = 0; i < w; ++i) c += std::popcount(row[i] & shifted[x2][i]);
      vals[x1 * un + x2] = c;
    }
  }
  return Deck(n, 3, std::move(vals));
}

void deck3_word(std::uint64_t mask, int n, std::span<std::int64_t> out) {
  if (n < 1 || n > 64) throw std::invalid_argument("deck3_word: n must be in [1, 64]");
  const auto un = static_cast<std::size_t>(n);
  if (out.size() < un * un) throw std::invalid_argument("deck3_word: output too small");
  std::uint64_t shifted[64];
  for (int x = 0; x < n; ++x) shifted[x] = word::rotate(mask, n, x == 0 ? 0 : n - x);
  for (std::size_t x1 = 0; x1 < un; ++x1) {
    const std::uint64_t row = mask & shifted[x1];
    for (std::size_t x2 = 0; x2 < un; ++x2) out[x1 * un + x2] = std::popcount(row & shifted[x2]);
  }
}

bool decks_equal(const Deck& a, const Deck& b) {
  if (a.modulus() != b.modulus() || a.order() != b.order())
    throw std::invalid_argument("decks_equal: decks have different shapes");
  return a == b;
}

namespace {

struct Fnv1a {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void byte(unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void text(const std::string& s) {
    u64(s.size());
    for (char c : s) byte(static_cast<unsigned char>(c));
  }
};

}  // namespace

std::uint64_t deck_fingerprint(const Deck& d) {
  Fnv1a h;
  h.u64(static_cast<std::uint64_t>(d.modulus()));
  h.u64(static_cast<std::uint64_t>(d.order()));
  h.text(d.denominator().str());
  if (d.is_integral()) {
    for (auto v : d.int_values()) h.u64(static_cast<std::uint64_t>(v));
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) h.text(d.numerator(i).str());
  }
  return h.h;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

}  // namespace kdeck
