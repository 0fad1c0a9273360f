#pragma once

#include <cstdint>
#include <vector>

#include "lgb/instance.hpp"

namespace lgb {

/// An integer power series kept only up to an inclusive degree cap.
/// Coefficient arithmetic is overflow-checked; it never wraps.
class TruncatedSeries {
 public:
  /// The zero series with coefficients 0..cap.
  explicit TruncatedSeries(int cap);

  /// Adopts cap = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<std::int64_t> coeffs);

  /// The constant series 1.
  static TruncatedSeries one(int cap);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  void add_at(int d, std::int64_t value);  // checked +=
  void add(const TruncatedSeries& other);  // checked coefficientwise +=

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Multiply by (1 - z^d): coefficient i becomes c_i - c_{i-d}.
TruncatedSeries mul_one_minus_z_pow(TruncatedSeries s, int d);

/// Multiply by 1/(1 - z^d), i.e. stride-d prefix sums. Inverse of the above.
TruncatedSeries div_one_minus_z_pow(TruncatedSeries s, int d);

/// 1/(1-z)^n truncated at cap; coefficient at i is C(n-1+i, i).
TruncatedSeries inv_one_minus_z_pow_n(int n, int cap);

/// A series cut strictly before its first nonpositive coefficient. When no
/// such coefficient exists within the cap, finite is false and the stored
/// prefix is everything observable; degrees beyond it are unknown, not zero.
struct BracketSeries {
  std::vector<std::int64_t> coeffs;
  bool finite = false;

  /// Highest stored degree; requires a nonempty coefficient list.
  int degree() const;

  /// Coefficient at d, reading past the stored prefix as 0. Only valid
  /// there when the series is finite.
  std::int64_t coeff_or_zero(int d) const;

  friend bool operator==(const BracketSeries&, const BracketSeries&) = default;
};

BracketSeries bracket(const TruncatedSeries& s);

/// The closed-form Hilbert series of a generic sequence,
/// bracket of prod(1 - z^{d_i}) / (1-z)^n, truncated at cap.
BracketSeries generic_hilbert_series(const InstanceSpec& spec, int cap);

}  // namespace lgb
