#include "kdeck/extendable.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdeck {

int AdditiveConstraintSystem::position(int k) const {
  const auto it = std::lower_bound(support.begin(), support.end(), k);
  if (it == support.end() || *it != k) return -1;
  return static_cast<int>(it - support.begin());
}

std::vector<std::int64_t> AdditiveConstraintSystem::row_vector(std::size_t i) const {
  std::vector<std::int64_t> r(support.size(), 0);
  const Row& row = rows[i];
  r[static_cast<std::size_t>(position(row.x))] += 1;
  r[static_cast<std::size_t>(position(row.y))] += 1;
  r[static_cast<std::size_t>(position(row.s))] -= 1;
  return r;
}

IntMatrix AdditiveConstraintSystem::matrix() const {
  IntMatrix m(rows.size(), support.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = row_vector(i);
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[j];
  }
  return m;
}

AdditiveConstraintSystem build_constraints(const CyclicSet& a) {
  AdditiveConstraintSystem sys;
  sys.n = a.modulus();
  sys.support = a.elements();
  const auto& s = sys.support;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      const int sum = (s[i] + s[j]) % sys.n;
      if (a.contains(sum)) sys.rows.push_back({s[i], s[j], sum});
    }
  return sys;
}

ModOneFunction ModOneFunction::normalized() const {
  ModOneFunction out = *this;
  BigInt g = denominator;
  for (auto& x : out.numerators) {
    x %= denominator;
    if (x < 0) x += denominator;
    g = gcd_value<BigInt>(g, x);
  }
  if (g > 1) {
    for (auto& x : out.numerators) x /= g;
    out.denominator /= g;
  }
  return out;
}

namespace {

std::vector<BigInt> support_vector(const AdditiveConstraintSystem& sys) {
  return {sys.support.begin(), sys.support.end()};
}

template <class Int>
bool saturated(const Matrix<Int>& basis) {
  const auto r = smith_reduce<Int>(basis, SnfTracking{false, false, false});
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.D(i, i) != 1) return false;
  return true;
}

// Rows span the dual of the additive group S; the linear group has dual
// ker(v). With g = gcd(v), a wrapping row maps to n under w -> w.v, so
// [Z^m : L] >= n / g with equality exactly when ker(v) lies inside L.
template <class Int>
bool index_criterion(const AdditiveConstraintSystem& sys) {
  const std::size_t m = sys.support.size();
  std::int64_t g = 0;
  for (int k : sys.support) g = gcd(g, k);
  RowLattice<Int> lattice(m);
  bool wrap = false;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    wrap = wrap || sys.rows[i].wraps(sys.n);
    const auto r = sys.row_vector(i);
    if (!lattice.insert(std::vector<Int>(r.begin(), r.end()))) continue;
    if (wrap && lattice.rank() == m && lattice.index() * Int(g) == Int(sys.n)) return true;
  }
  if (wrap) return lattice.rank() == m && lattice.index() * Int(g) == Int(sys.n);
  // L lies inside ker(v); they coincide iff ranks match and L is saturated.
  if (g == 0) return lattice.rank() == m && lattice.index() == Int(1);
  return lattice.rank() + 1 == m && saturated(lattice.basis());
}

// t in [0, 1) with t * v_j = h_j (mod 1) for all j, if any.
std::optional<BigRational> fit_slope(std::span<const BigInt> v, const ModOneFunction& h) {
  auto fits = [&](const BigRational& t) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const BigRational diff = t * v[j] - h.value(j);
      if (boost::multiprecision::denominator(diff) != 1) return false;
    }
    return true;
  };
  // c . v = g, so g t = c . h (mod 1).
  BigInt g = 0;
  std::vector<BigInt> c(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    const auto x = xgcd<BigInt>(g, v[j]);
    for (auto& ci : c) ci *= x.x;
    c[j] += x.y;
    g = x.g;
  }
  if (g == 0) return fits(BigRational(0)) ? std::optional<BigRational>(0) : std::nullopt;
  BigRational ch = 0;
  for (std::size_t j = 0; j < v.size(); ++j) ch += BigRational(c[j]) * h.value(j);
  ch -= BigRational(boost::multiprecision::numerator(ch) / boost::multiprecision::denominator(ch));
  if (ch < 0) ch += 1;
  for (BigInt z = 0; z < g; ++z) {
    const BigRational t = (ch + BigRational(z)) / BigRational(g);
    if (fits(t)) return t;
  }
  return std::nullopt;
}

ModOneFunction column_function(const AdditiveConstraintSystem& sys, const IntMatrix& v_inverse, std::size_t col,
                               const BigInt& denominator) {
  ModOneFunction h{sys.n, sys.support, std::vector<BigInt>(sys.support.size()), denominator};
  for (std::size_t j = 0; j < sys.support.size(); ++j) h.numerators[j] = v_inverse(j, col);
  return h.normalized();
}

}  // namespace

bool extendable_by_index(const CyclicSet& a) {
  if (a.empty()) throw std::invalid_argument("extendable: empty domain");
  const auto sys = build_constraints(a);
  try {
    return index_criterion<Checked64>(sys);
  } catch (const ArithmeticOverflow&) {
    return index_criterion<BigInt>(sys);
  }
}

ExtendabilityVerdict extendable_by_duality(const CyclicSet& a) {
  if (a.empty()) throw std::invalid_argument("extendable: empty domain");
  const auto sys = build_constraints(a);
  const std::size_t m = sys.support.size();
  const auto v = support_vector(sys);
  // M = U D V; S = {h : D V h in Z^r}, so in y = V h coordinates S is
  // generated by e_i / d_i (i < rank) and the free lines e_i (i >= rank).
  const auto snf = smith_reduce<BigInt>(sys.matrix(), SnfTracking{false, false, true});
  const auto& d = snf.D;
  const auto& vinv = snf.V_inverse;

  ExtendabilityVerdict verdict;
  for (const auto& w : integer_kernel(v)) {
    // w is in the row lattice iff u = w V^{-1} lies in the row lattice of D.
    std::vector<BigInt> u(m, 0);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t j = 0; j < m; ++j) u[c] += w[j] * vinv(j, c);
    for (std::size_t i = 0; i < m; ++i) {
      const bool member = i < snf.rank ? u[i] % d(i, i) == 0 : u[i] == 0;
      if (member) continue;
      // A generator h with w . h = u_i y_i not an integer refutes linearity.
      const BigInt denom = i < snf.rank ? d(i, i) : BigInt(2 * abs_value(u[i]));
      verdict.witness = column_function(sys, vinv, i, denom);
      return verdict;
    }
  }

  verdict.extendable = true;
  SlopeCertificate cert;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (d(i, i) == 1) continue;
    auto h = column_function(sys, vinv, i, d(i, i));
    auto t = fit_slope(v, h);
    if (!t) throw std::logic_error("extendable: torsion generator has no slope");
    cert.torsion.push_back({std::move(h), *t});
  }
  for (std::size_t i = snf.rank; i < m; ++i) {
    // The free direction must be a rational multiple of v.
    std::optional<BigRational> ratio;
    for (std::size_t j = 0; j < m; ++j) {
      if (v[j] == 0) continue;
      ratio = BigRational(vinv(j, i), v[j]);
      break;
    }
    if (!ratio) throw std::logic_error("extendable: free direction with zero slope vector");
    for (std::size_t j = 0; j < m; ++j)
      if (*ratio * v[j] != BigRational(vinv(j, i))) throw std::logic_error("extendable: free direction not linear");
    if (cert.torus_ratio) throw std::logic_error("extendable: more than one free direction");
    cert.torus_ratio = ratio;
  }
  verdict.slope = std::move(cert);
  return verdict;
}

ExtendabilityVerdict is_extendable(const CyclicSet& a, const ExtendabilityOptions& options) {
  const bool fast = extendable_by_index(a);
  if (!options.certificates) return {fast, std::nullopt, std::nullopt};
  auto verdict = extendable_by_duality(a);
  if (verdict.extendable != fast) throw std::logic_error("extendable: index and duality routes disagree");
  return verdict;
}

std::optional<BigRational> linearity_check(const ModOneFunction& h) {
  std::optional<std::size_t> k0;
  for (std::size_t i = 0; i < h.support.size(); ++i)
    if (h.support[i] != 0) {
      k0 = i;
      break;
    }
  if (!k0) throw std::invalid_argument("linearity_check: domain has no nonzero element");
  const ModOneFunction hn = h.normalized();
  const int base = h.support[*k0];
  for (int z = 0; z < base; ++z) {
    const BigRational t = (hn.value(*k0) + z) / BigRational(base);
    bool ok = true;
    for (std::size_t i = 0; i < h.support.size() && ok; ++i)
      ok = boost::multiprecision::denominator(BigRational(t * h.support[i] - hn.value(i))) == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

bool is_additive(const ModOneFunction& h) {
  const int n = h.n;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < h.support.size(); ++i) pos[static_cast<std::size_t>(mod(h.support[i], n))] = static_cast<int>(i);
  for (std::size_t i = 0; i < h.support.size(); ++i)
    for (std::size_t j = 0; j < h.support.size(); ++j) {
      const int s = pos[static_cast<std::size_t>(mod(h.support[i] + h.support[j], n))];
      if (s < 0) continue;
      const BigInt r = h.numerators[i] + h.numerators[j] - h.numerators[static_cast<std::size_t>(s)];
      if (r % h.denominator != 0) return false;
    }
  return true;
}

bool ExtendabilityMemo::operator()(const CyclicSet& a) {
  std::string key = std::to_string(a.modulus()) + ":" + a.to_hex();
  {
    std::lock_guard lock(mu_);
    if (auto it = seen_.find(key); it != seen_.end()) return it->second;
  }
  const bool v = extendable_by_index(a);
  std::lock_guard lock(mu_);
  seen_.emplace(std::move(key), v);
  return v;
}

std::size_t ExtendabilityMemo::size() const {
  std::lock_guard lock(mu_);
  return seen_.size();
}

}  // namespace kdeck
