#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kdeck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown by Checked64 when a result leaves the int64 range. Callers that
/// need exact answers catch it and redo the computation with BigInt.
struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow") {}
};

/// int64 with trapping arithmetic. Lets the exact algorithms run on machine
/// words and fall back to BigInt only when a value actually grows.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend constexpr auto operator<=>(Checked64, Checked64) = default;
  friend constexpr bool operator==(Checked64, Checked64) = default;

 private:
  std::int64_t v_ = 0;
};

inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }
inline Checked64 abs_value(Checked64 a) { return a < 0 ? -a : a; }
inline BigInt abs_value(const BigInt& a) { return boost::multiprecision::abs(a); }

inline BigInt to_big(Checked64 a) { return BigInt(a.value()); }
inline BigInt to_big(const BigInt& a) { return a; }

template <class Int>
Int from_int64(std::int64_t v) {
  return Int(v);
}

/// Narrow a BigInt into Checked64, throwing ArithmeticOverflow if it does not fit.
inline Checked64 narrow(const BigInt& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow();
  return a.convert_to<std::int64_t>();
}

template <class Int>
struct Xgcd {
  Int g;  // nonnegative
  Int x;
  Int y;  // x*a + y*b == g
};

template <class Int>
Xgcd<Int> xgcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

template <class Int>
Int gcd_value(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Canonical residue of a modulo n in [0, n). n must be positive.
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// "p/q" with q omitted when it is 1.
std::string to_string(const BigRational& r);

}  // namespace kdeck
