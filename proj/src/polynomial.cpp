#include "kdeck/polynomial.hpp"

#include "kdeck/cyclic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kdeck {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : c_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPolynomial IntPolynomial::x_pow_minus_one(int d) {
  if (d < 1) throw std::invalid_argument("x^d - 1 needs d >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    BigInt mag = abs_value(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

DivMod divmod_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.coefficients().back() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  const int db = monic.degree();
  std::vector<BigInt> r = a.coefficients();
  if (a.degree() < db) return {IntPolynomial{}, a};
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const auto& m = monic.coefficients();
  for (int i = a.degree(); i >= db; --i) {
    const BigInt c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * m[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  static std::mutex mu;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::x_pow_minus_one(d);
  for (int e : divisors(d)) {
    if (e == d) break;
    auto [quot, rem] = divmod_monic(p, cyclotomic(e));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    p = std::move(quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

namespace {

template <class Int>
bool remainder_is_zero(std::vector<Int> r, std::span<const Int> m) {
  while (!r.empty() && r.back() == 0) r.pop_back();
  const auto db = m.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    const Int c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * m[j];
  }
  for (std::size_t i = 0; i < std::min(db, r.size()); ++i)
    if (r[i] != 0) return false;
  return true;
}

}  // namespace

bool divisible_by_monic(std::span<const std::int64_t> c, std::span<const std::int64_t> monic) {
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("divisible_by_monic: divisor must be monic");
  try {
    std::vector<Checked64> r(c.begin(), c.end());
    std::vector<Checked64> m(monic.begin(), monic.end());
    return remainder_is_zero<Checked64>(std::move(r), m);
  } catch (const ArithmeticOverflow&) {
    std::vector<BigInt> r(c.begin(), c.end());
    std::vector<BigInt> m(monic.begin(), monic.end());
    return remainder_is_zero<BigInt>(std::move(r), m);
  }
}

bool divisible_by_monic(std::span<const BigInt> c, std::span<const BigInt> monic) {
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("divisible_by_monic: divisor must be monic");
  return remainder_is_zero<BigInt>(std::vector<BigInt>(c.begin(), c.end()), monic);
}

}  // namespace kdeck
