#pragma once

#include <cstdint>
#include <vector>

namespace lgb {

/// A generic homogeneous sequence is described by its shape alone:
/// n variables, m polynomials, and the degree of each polynomial.
struct InstanceSpec {
  int n = 0;
  int m = 0;
  std::vector<int> degrees;

  /// Throws std::invalid_argument unless n >= 1, m >= 1, degrees has m
  /// entries and every d_i >= 1.
  void validate() const;

  /// sum(d_i - 1) + 1
  std::int64_t macaulay_bound() const;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

}  // namespace lgb
