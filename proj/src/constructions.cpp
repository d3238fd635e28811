#include "kdeck/constructions.hpp"

#include "kdeck/deck.hpp"
#include "kdeck/spectrum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace kdeck {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::Even: return "even-2k";
    case PairKind::Pqrd: return "pqrd";
    case PairKind::TwoDeck: return "two-deck";
  }
  return "unknown";
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Deck set_deck(const CyclicSet& e, int k) {
  if (k == 3) return deck3_set(e);
  return deck(IntFunction::indicator(e), k);
}

}  // namespace

PairVerification verify_pair(const CyclicSet& e, const CyclicSet& f, int deck_order) {
  PairVerification v;
  v.deck_order = deck_order;
  v.decks_equal = decks_equal(set_deck(e, deck_order), set_deck(f, deck_order));
  v.translates = translation_equivalent(e, f).has_value();
  v.decks_equal_at_3 = deck_order == 3 ? v.decks_equal : decks_equal(deck3_set(e), deck3_set(f));
  return v;
}

CounterexamplePair even_pair(int k) {
  if (k < 6) throw std::invalid_argument("even_pair: k must be at least 6");
  const int n = 2 * k;
  CyclicSet e(n), f(n);
  e.insert(0);
  f.insert(0);
  f.insert(1);
  for (int j = 3; j <= k - 1; ++j) {
    e.insert(j);
    f.insert(j);
  }
  e.insert(k + 1);
  e.insert(k + 2);
  f.insert(k + 2);
  CounterexamplePair pair{n, e, f, PairKind::Even, {}};
  pair.verified = verify_pair(e, f, 3);
  return pair;
}

CounterexamplePair pqrd_pair(int p, int q, int r, int d) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("pqrd_pair: p and q must be prime");
  if (p == q) throw std::invalid_argument("pqrd_pair: p and q must differ");
  if (r < 2 || d < 2) throw std::invalid_argument("pqrd_pair: r and d must be at least 2");
  const std::int64_t n64 = std::int64_t{p} * q * r * d;
  if (n64 > (1 << 20)) throw std::invalid_argument("pqrd_pair: modulus too large");
  const int n = static_cast<int>(n64);
  CyclicSet a(n), b(n);
  for (int j = 0; j < r; ++j) {
    for (int l = 0; l < q; ++l) a.insert(l * (n / q) + j * d);
    for (int l = 0; l < p; ++l) b.insert(l * (n / p) + j * d);
  }
  if (a.size() != static_cast<std::size_t>(q * r) || b.size() != static_cast<std::size_t>(p * r))
    throw std::logic_error("pqrd_pair: generator sets collide");
  const CyclicSet b1 = b.rotated(1), bd = b.rotated(d + 1);
  if (!(a & b1).empty() || !(a & bd).empty()) throw std::logic_error("pqrd_pair: unions are not disjoint");
  const CyclicSet e = a | b1, f = a | bd;
  CounterexamplePair pair{n, e, f, PairKind::Pqrd, {}};
  pair.verified = verify_pair(e, f, 3);
  return pair;
}

CounterexamplePair two_deck_pair(const CyclicSet& a, const CyclicSet& b) {
  const int n = a.modulus();
  if (b.modulus() != n) throw std::invalid_argument("two_deck_pair: moduli differ");
  CyclicSet e(n), f(n);
  for (int x : a.elements())
    for (int y : b.elements()) {
      e.insert(x + y);
      f.insert(x - y);
    }
  const std::size_t want = a.size() * b.size();
  if (e.size() != want) throw std::invalid_argument("two_deck_pair: A + B has repeated sums");
  if (f.size() != want) throw std::invalid_argument("two_deck_pair: A - B has repeated differences");
  if (translation_equivalent(b, b.reflected())) throw std::invalid_argument("two_deck_pair: -B is a translate of B");
  CounterexamplePair pair{n, e, f, PairKind::TwoDeck, {}};
  pair.verified = verify_pair(e, f, 2);
  return pair;
}

RealPair cosine_pair(int n) {
  if (n < 4) throw std::invalid_argument("cosine_pair: n must be at least 4");
  RealPair out{std::vector<double>(static_cast<std::size_t>(n), 0.0), std::vector<double>(static_cast<std::size_t>(n))};
  for (int k = 0; k < n; ++k)
    out.g[static_cast<std::size_t>(k)] = std::cos(2.0 * std::numbers::pi * k / n);
  return out;
}

std::vector<double> g_alpha(int n, double alpha) {
  if (n <= 2 || n % 2 != 0) throw std::invalid_argument("g_alpha: n must be even and greater than 2");
  std::vector<double> chi(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j <= n / 2; ++j) chi[static_cast<std::size_t>(j)] = 1.0;
  auto spec = float_dft(chi);
  const std::complex<double> i(0.0, 1.0);
  spec[1] *= std::exp(2.0 * std::numbers::pi * i * alpha);
  spec[static_cast<std::size_t>(n - 1)] *= std::exp(-2.0 * std::numbers::pi * i * alpha);
  const auto g = float_idft(spec);
  std::vector<double> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (std::abs(g[j].imag()) > 1e-9) throw std::runtime_error("g_alpha: inverse transform is not real");
    out[j] = g[j].real();
  }
  return out;
}

std::vector<double> real_deck3(std::span<const double> f) {
  const std::size_t n = f.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      double acc = 0.0;
      for (std::size_t x = 0; x < n; ++x) acc += f[x] * f[(x + x1) % n] * f[(x + x2) % n];
      out[x1 * n + x2] = acc;
    }
  return out;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_difference: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace kdeck
