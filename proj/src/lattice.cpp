#include "kdeck/lattice.hpp"

namespace kdeck {

SmithForm smith_normal_form(const IntMatrix& m) {
  auto r = smith_reduce<BigInt>(m, SnfTracking{true, true, false});
  return {std::move(r.U), std::move(r.D), std::move(r.V), r.rank};
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  const auto r = smith_reduce<BigInt>(m, SnfTracking{false, false, false});
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.D(i, i));
  return out;
}

std::vector<std::vector<BigInt>> integer_kernel(std::span<const BigInt> v) {
  const std::size_t m = v.size();
  IntMatrix row(1, m);
  for (std::size_t j = 0; j < m; ++j) row(0, j) = v[j];
  const auto r = smith_reduce<BigInt>(row, SnfTracking{false, false, true});
  // v = U D V with D = (d, 0, ..., 0); v.w = 0 iff (V w)_0 = 0 when d != 0.
  const std::size_t first = r.rank == 0 ? 0 : 1;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t c = first; c < m; ++c) {
    std::vector<BigInt> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = r.V_inverse(i, c);
    for (const auto& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace kdeck
