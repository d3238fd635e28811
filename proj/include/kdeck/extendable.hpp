#pragma once

#include "kdeck/cyclic.hpp"
#include "kdeck/lattice.hpp"
#include "kdeck/numeric.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kdeck {

/// Constraints h(x) + h(y) - h(x + y) = 0 (mod 1) for x <= y with x, y and
/// x + y (mod n) all in A. Row i touches support positions only.
struct AdditiveConstraintSystem {
  struct Row {
    int x;
    int y;
    int s;  // (x + y) mod n
    [[nodiscard]] bool wraps(int n) const { return x + y >= n; }
  };

  int n = 0;
  std::vector<int> support;  // sorted residues of A
  std::vector<Row> rows;

  /// Position of residue k in support, or -1.
  [[nodiscard]] int position(int k) const;
  [[nodiscard]] std::vector<std::int64_t> row_vector(std::size_t i) const;
  [[nodiscard]] IntMatrix matrix() const;
};

AdditiveConstraintSystem build_constraints(const CyclicSet& a);

/// h : A -> R/Z with rational values numerators[i] / denominator on support[i].
struct ModOneFunction {
  int n = 0;
  std::vector<int> support;
  std::vector<BigInt> numerators;
  BigInt denominator = 1;

  [[nodiscard]] BigRational value(std::size_t i) const { return BigRational(numerators[i], denominator); }
  /// Same function with every value reduced into [0, 1) over the smallest denominator.
  [[nodiscard]] ModOneFunction normalized() const;
};

/// A torsion generator of the additive group together with a slope L that
/// reproduces it: h(k) = L k (mod 1) on A.
struct GeneratorSlope {
  ModOneFunction generator;
  BigRational slope;
};

struct SlopeCertificate {
  std::vector<GeneratorSlope> torsion;
  /// When the additive group has a continuous part, it is the line s * r * v
  /// with v = (k)_{k in A}; this is r.
  std::optional<BigRational> torus_ratio;
};

struct ExtendabilityVerdict {
  bool extendable = false;
  std::optional<ModOneFunction> witness;   // additive and not linear
  std::optional<SlopeCertificate> slope;   // only when extendable
};

struct ExtendabilityOptions {
  /// Build the witness or slope certificate through the Smith form route.
  bool certificates = true;
};

/// Decides whether every additive h : A -> R/Z is k -> L k (mod 1). Uses the
/// lattice index criterion, and the Smith form duality route for certificates
/// (the two must agree, otherwise std::logic_error). Throws
/// std::invalid_argument for empty A.
ExtendabilityVerdict is_extendable(const CyclicSet& a, const ExtendabilityOptions& options = {});

/// Verdict from the incremental row-lattice index alone.
bool extendable_by_index(const CyclicSet& a);

/// Verdict, witness and certificate from the Smith form of the raw constraint
/// matrix: extendable iff every integer vector orthogonal to v lies in the row
/// lattice of the constraints.
ExtendabilityVerdict extendable_by_duality(const CyclicSet& a);

/// Brute-force slope search: with k0 the least nonzero element of A, tries
/// t = (h(k0) + z) / k0 for z = 0..k0-1 against every k in A. Throws
/// std::invalid_argument if A has no nonzero element.
std::optional<BigRational> linearity_check(const ModOneFunction& h);

/// h(x) + h(y) = h(x + y) (mod 1) whenever x, y, x + y lie in A, checked pair
/// by pair without the constraint matrix.
bool is_additive(const ModOneFunction& h);

/// Thread-safe memo of extendable_by_index keyed by the set.
class ExtendabilityMemo {
 public:
  bool operator()(const CyclicSet& a);
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, bool> seen_;
};

}  // namespace kdeck
