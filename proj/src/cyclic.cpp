#include "kdeck/cyclic.hpp"

#include "kdeck/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kdeck {

namespace {

void require_modulus(int n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive, got " + std::to_string(n));
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_string(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::vector<int> divisors(int n) {
  require_modulus(n);
  std::vector<int> small, large;
  for (int d = 1; static_cast<std::int64_t>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

ArithProfile arith_profile(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("arith_profile: n must be positive");
  ArithProfile p{n, 1, {}};
  std::int64_t rest = n;
  for (std::int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    p.factorization.push_back({q, e});
  }
  if (rest > 1) p.factorization.push_back({rest, 1});
  for (const auto& [q, e] : p.factorization) {
    p.totient = p.totient / q * (q - 1);
    p.divisor_count *= e + 1;
  }
  return p;
}

// ---------------------------------------------------------------------------
// CyclicSet

CyclicSet::CyclicSet(int n) {
  require_modulus(n);
  bits_.resize(static_cast<std::size_t>(n));
}

CyclicSet::CyclicSet(int n, std::span<const std::int64_t> elements) : CyclicSet(n) {
  for (auto e : elements) insert(e);
}

CyclicSet::CyclicSet(int n, std::initializer_list<std::int64_t> elements) : CyclicSet(n) {
  for (auto e : elements) insert(e);
}

CyclicSet CyclicSet::from_word(int n, std::uint64_t mask) {
  require_modulus(n);
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("mask has bits at positions >= n");
  CyclicSet s(n);
  for (int j = 0; j < n; ++j)
    if ((mask >> j) & 1U) s.bits_.set(static_cast<std::size_t>(j));
  return s;
}

CyclicSet CyclicSet::from_hex(int n, std::string_view hex) {
  require_modulus(n);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw std::invalid_argument("empty hex mask");
  CyclicSet s(n);
  std::size_t pos = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
    const int v = hex_digit(*it);
    if (v < 0) throw std::invalid_argument("invalid hex digit in mask");
    for (int b = 0; b < 4; ++b) {
      if (((v >> b) & 1) == 0) continue;
      if (pos + b >= static_cast<std::size_t>(n))
        throw std::invalid_argument("mask has bits at positions >= n");
      s.bits_.set(pos + b);
    }
  }
  return s;
}

CyclicSet CyclicSet::from_bits(Bits bits) {
  require_modulus(static_cast<int>(bits.size()));
  return CyclicSet(std::move(bits));
}

CyclicSet CyclicSet::full(int n) {
  CyclicSet s(n);
  s.bits_.set();
  return s;
}

bool CyclicSet::contains(std::int64_t j) const {
  return bits_.test(static_cast<std::size_t>(mod(j, modulus())));
}

std::vector<int> CyclicSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::uint64_t CyclicSet::word() const {
  if (modulus() > 64) throw std::logic_error("word() requires n <= 64");
  return bits_.empty() ? 0 : bits_.to_ulong();
}

std::string CyclicSet::to_hex() const {
  const int n = modulus();
  const int digits = (n + 3) / 4;
  std::string out = "0x";
  bool leading = true;
  for (int d = digits - 1; d >= 0; --d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const int pos = 4 * d + b;
      if (pos < n && bits_.test(static_cast<std::size_t>(pos))) v |= 1 << b;
    }
    if (leading && v == 0 && d > 0) continue;
    leading = false;
    out.push_back("0123456789abcdef"[v]);
  }
  return out;
}

void CyclicSet::insert(std::int64_t j) { bits_.set(static_cast<std::size_t>(mod(j, modulus()))); }

void CyclicSet::erase(std::int64_t j) { bits_.reset(static_cast<std::size_t>(mod(j, modulus()))); }

CyclicSet CyclicSet::rotated(std::int64_t t) const {
  const int n = modulus();
  const auto s = static_cast<std::size_t>(mod(t, n));
  if (s == 0) return *this;
  return CyclicSet((bits_ << s) | (bits_ >> (static_cast<std::size_t>(n) - s)));
}

CyclicSet CyclicSet::reflected() const {
  const int n = modulus();
  CyclicSet out(n);
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
    out.bits_.set(static_cast<std::size_t>(mod(-static_cast<std::int64_t>(i), n)));
  return out;
}

CyclicSet CyclicSet::complement() const { return CyclicSet(~bits_); }

CyclicSet operator&(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("moduli differ");
  return CyclicSet(a.bits_ & b.bits_);
}

CyclicSet operator|(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("moduli differ");
  return CyclicSet(a.bits_ | b.bits_);
}

bool operator<(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("moduli differ");
  return a.bits_ < b.bits_;
}

CyclicSet rotate(const CyclicSet& e, std::int64_t t) { return e.rotated(t); }

CyclicSet reflect(const CyclicSet& e) { return e.reflected(); }

CyclicSet canonical_rotation(const CyclicSet& e) {
  CyclicSet best = e;
  for (int t = 1; t < e.modulus(); ++t) {
    CyclicSet r = e.rotated(t);
    if (r < best) best = std::move(r);
  }
  return best;
}

std::optional<int> translation_equivalent(const CyclicSet& e, const CyclicSet& f) {
  if (e.modulus() != f.modulus()) throw std::invalid_argument("translation_equivalent: moduli differ");
  if (e.size() != f.size()) return std::nullopt;
  if (e.empty()) return 0;
  const int n = e.modulus();
  // Any translation maps the first element of E onto some element of F.
  const auto first = static_cast<std::int64_t>(e.bits().find_first());
  for (int y : f.elements()) {
    const auto t = static_cast<int>(mod(y - first, n));
    if (e.rotated(t) == f) return t;
  }
  return std::nullopt;
}

CyclicSet gcd_class(int n, int a) {
  require_modulus(n);
  if (a < 1 || n % a != 0)
    throw std::invalid_argument("gcd_class: " + std::to_string(a) + " does not divide " + std::to_string(n));
  CyclicSet out(n);
  for (int k = 0; k < n; ++k)
    if (std::gcd(k, n) == a) out.insert(k);
  return out;
}

CyclicSet subgroup(int n, int a) {
  require_modulus(n);
  if (a < 1 || n % a != 0)
    throw std::invalid_argument("subgroup: " + std::to_string(a) + " does not divide " + std::to_string(n));
  CyclicSet out(n);
  for (int k = 0; k < n; k += a) out.insert(k);
  return out;
}

// ---------------------------------------------------------------------------
// GcdClassTable

GcdClassTable::GcdClassTable(int n) : n_(n), divisors_(kdeck::divisors(n)) {
  class_of_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) class_of_[static_cast<std::size_t>(k)] = std::gcd(k, n);
  classes_.reserve(divisors_.size());
  subgroups_.reserve(divisors_.size());
  for (int a : divisors_) {
    CyclicSet c(n);
    for (int k = 0; k < n; ++k)
      if (class_of_[static_cast<std::size_t>(k)] == a) c.insert(k);
    classes_.push_back(std::move(c));
    subgroups_.push_back(kdeck::subgroup(n, a));
  }
}

std::size_t GcdClassTable::index_of(int a) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), a);
  if (it == divisors_.end() || *it != a)
    throw std::invalid_argument(std::to_string(a) + " does not divide " + std::to_string(n_));
  return static_cast<std::size_t>(it - divisors_.begin());
}

const CyclicSet& GcdClassTable::gcd_class(int a) const { return classes_[index_of(a)]; }

const CyclicSet& GcdClassTable::subgroup(int a) const { return subgroups_[index_of(a)]; }

// ---------------------------------------------------------------------------

std::pair<std::int64_t, std::int64_t> coprime_decomposition(std::int64_t n, std::int64_t k) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("coprime_decomposition: n must be odd and positive");
  // Residue of a modulo each distinct prime p | n, then CRT over rad(n).
  std::int64_t a = 0;
  std::int64_t radical = 1;
  for (const auto& [p, e] : arith_profile(n).factorization) {
    const std::int64_t a_p = mod(k, p) == 1 ? 2 : 1;
    // Solve a' = a (mod radical), a' = a_p (mod p).
    const auto [g, inv, unused] = xgcd<std::int64_t>(radical % p, p);
    (void)g;
    (void)unused;
    const std::int64_t step = mod(mod(a_p - a, p) * mod(inv, p), p);
    a += radical * step;
    radical *= p;
  }
  return {a, k - a};
}

// ---------------------------------------------------------------------------

namespace word {

std::uint64_t canonical(std::uint64_t mask, int n) {
  std::uint64_t best = mask;
  for (int t = 1; t < n; ++t) best = std::min(best, rotate(mask, n, t));
  return best;
}

bool is_canonical(std::uint64_t mask, int n) {
  for (int t = 1; t < n; ++t)
    if (rotate(mask, n, t) < mask) return false;
  return true;
}

int period(std::uint64_t mask, int n) {
  for (int t = 1; t < n; ++t)
    if (n % t == 0 && rotate(mask, n, t) == mask) return t;
  return n;
}

}  // namespace word

}  // namespace kdeck
