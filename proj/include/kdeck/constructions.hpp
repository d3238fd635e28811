#pragma once

#include "kdeck/cyclic.hpp"

#include <span>
#include <string>
#include <vector>

namespace kdeck {

enum class PairKind { Even, Pqrd, TwoDeck };

std::string to_string(PairKind kind);

struct PairVerification {
  int deck_order = 3;  // 2 for the two-deck kind
  bool decks_equal = false;
  bool translates = false;
  /// Only meaningful for the two-deck kind, where the 3-decks are expected to differ.
  bool decks_equal_at_3 = false;

  /// Same deck of the stated order and not translates.
  [[nodiscard]] bool claim_holds() const { return decks_equal && !translates; }
};

struct CounterexamplePair {
  int n;
  CyclicSet e;
  CyclicSet f;
  PairKind kind;
  PairVerification verified;
};

/// n = 2k, E = {0, 3, 4, ..., k-1, k+1, k+2}, F = {0, 1, 3, 4, ..., k-1, k+2}.
/// Throws std::invalid_argument for k < 6.
CounterexamplePair even_pair(int k);

/// n = pqrd, E = A u (B + 1), F = A u (B + d + 1) with
/// A = {l n/q + j d}, B = {l n/p + j d}, j < r. Throws std::invalid_argument
/// unless p != q are primes and r, d >= 2.
CounterexamplePair pqrd_pair(int p, int q, int r, int d);

/// E = A + B and F = A - B (sumsets); equal 2-decks when the sums and differences are
/// all distinct. Throws std::invalid_argument on a collision or when -B is a
/// translate of B.
CounterexamplePair two_deck_pair(const CyclicSet& a, const CyclicSet& b);

/// Exact verification at the given deck order.
PairVerification verify_pair(const CyclicSet& e, const CyclicSet& f, int deck_order);

struct RealPair {
  std::vector<double> f;
  std::vector<double> g;
};

/// f = 0 and g(k) = cos(2 pi k / n); throws std::invalid_argument for n < 4.
RealPair cosine_pair(int n);

/// Inverse DFT of exp(2 pi i h(l)) * FT(chi_E)(l) with E = {1..n/2},
/// h(1) = alpha, h(-1) = -alpha and h = 0 elsewhere. Throws
/// std::invalid_argument for odd n or n <= 2, std::runtime_error if the
/// result is not real to 1e-9.
std::vector<double> g_alpha(int n, double alpha);

/// Floating-point triple correlation, n*n entries with x1 the slow index.
std::vector<double> real_deck3(std::span<const double> f);

/// max |a_i - b_i|
double max_abs_difference(std::span<const double> a, std::span<const double> b);

}  // namespace kdeck
