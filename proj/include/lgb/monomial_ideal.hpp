#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lgb/monomial.hpp"
#include "lgb/series.hpp"

namespace lgb {

/// A monomial ideal held by its minimal generating set, bucketed by degree.
/// The zero ideal has no generators; the unit ideal is generated by 1.
/// Instances are immutable values except for append_frontier, which the
/// degree-incremental construction uses to grow the ideal in place.
class MonomialIdeal {
 public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(int n);

  /// Builds the ideal generated by gens, reduced to minimal generators.
  static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

  int vars() const { return n_; }
  bool is_zero() const { return count_ == 0; }
  bool is_unit() const;
  std::size_t generator_count() const { return count_; }
  int max_generator_degree() const;

  /// Minimal generators, ascending by degree, descending grevlex within
  /// each degree.
  std::vector<Monomial> generators() const;

  /// bucket d holds the generators of degree d (possibly empty).
  const std::vector<std::vector<Monomial>>& degree_buckets() const {
    return buckets_;
  }

  /// True iff some generator divides m.
  bool contains(const Monomial& m) const;

  /// J : x_v — divide each generator by x_v where possible, re-minimalized.
  MonomialIdeal colon_variable(VariableIndex v) const;

  /// J + <x_v> — generators containing x_v collapse away.
  MonomialIdeal plus_variable(VariableIndex v) const;

  /// Appends degree-d generators that are already minimal with respect to
  /// this ideal: no existing generator divides them and they are pairwise
  /// distinct. d must be at least the current maximal generator degree.
  void append_frontier(int d, std::span<const Monomial> gens);

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::vector<Monomial>> buckets_;
};

/// Reduce a generator list to the minimal interreduced set: duplicates and
/// any monomial strictly divisible by another are dropped. Idempotent and
/// order-insensitive; result sorted ascending by degree, descending grevlex
/// within a degree.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Hilbert series of R/J truncated at cap, by the recursive generator
/// splitting H(J) = H(J + <x_i>) + z * H(J : x_i) with closed-form base
/// cases for the zero ideal, the unit ideal, and pure-variable ideals.
TruncatedSeries hps(const MonomialIdeal& J, int cap);

/// Number of degree-d monomials outside J.
std::int64_t hilbert_function(const MonomialIdeal& J, int d);

}  // namespace lgb
