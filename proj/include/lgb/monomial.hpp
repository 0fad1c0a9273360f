#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgb {

/// 1-based variable index into x_1..x_n. Under grevlex x_1 is the largest
/// variable and x_n the smallest.
struct VariableIndex {
  int index = 0;
  friend bool operator==(VariableIndex, VariableIndex) = default;
};

/// A monomial in a fixed number of variables, stored as a dense exponent
/// vector with its total degree cached. Values are immutable once built.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::int32_t> exponents)
      : exponents_(std::move(exponents)),
        degree_(std::accumulate(exponents_.begin(), exponents_.end(),
                                std::int32_t{0})) {
    for ([[maybe_unused]] auto e : exponents_) assert(e >= 0);
  }

  /// The constant monomial 1 in n variables.
  static Monomial one(int n) {
    return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(n), 0));
  }

  static Monomial variable(int n, VariableIndex v) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
    assert(v.index >= 1 && v.index <= n);
    e[static_cast<std::size_t>(v.index - 1)] = 1;
    return Monomial(std::move(e));
  }

  int vars() const { return static_cast<int>(exponents_.size()); }
  std::int32_t degree() const { return degree_; }

  std::int32_t exponent(VariableIndex v) const {
    assert(v.index >= 1 && v.index <= vars());
    return exponents_[static_cast<std::size_t>(v.index - 1)];
  }

  const std::vector<std::int32_t>& exponents() const { return exponents_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

 private:
  friend class DegreeEnumerator;
  std::vector<std::int32_t> exponents_;
  std::int32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison. Higher total degree wins; on
/// equal degree the monomial whose rightmost differing exponent is smaller
/// is the greater one.
inline std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

/// True iff a divides b (every exponent of a is <= the matching one of b).
inline bool divides(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  if (a.degree() > b.degree()) return false;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

inline Monomial mul(const Monomial& a, VariableIndex v) {
  assert(v.index >= 1 && v.index <= a.vars());
  auto e = a.exponents();
  ++e[static_cast<std::size_t>(v.index - 1)];
  return Monomial(std::move(e));
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  auto e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return Monomial(std::move(e));
}

/// Exact quotient a / b; requires divides(b, a).
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  assert(divides(b, a));
  auto e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents()[i];
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  auto e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  for (std::size_t i = 0; i < a.exponents().size(); ++i)
    if (a.exponents()[i] > 0 && b.exponents()[i] > 0) return false;
  return true;
}

/// The smallest variable (largest index) present in a. Throws on degree 0.
VariableIndex smallest_variable(const Monomial& a);

/// C(n+d-1, d), the number of degree-d monomials in n variables.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::int64_t monomial_count(int n, int d);

namespace detail {
template <typename Fn>
void enumerate_rec(std::vector<std::int32_t>& exps, Monomial& scratch, int pos,
                   std::int32_t rem, Fn& fn) {
  if (pos == 0) {
    exps[0] = rem;
    fn(static_cast<const Monomial&>(scratch));
    exps[0] = 0;
    return;
  }
  for (std::int32_t v = 0; v <= rem; ++v) {
    exps[static_cast<std::size_t>(pos)] = v;
    enumerate_rec(exps, scratch, pos - 1, rem - v, fn);
  }
  exps[static_cast<std::size_t>(pos)] = 0;
}
}  // namespace detail

class DegreeEnumerator {
 public:
  /// Visits every monomial of total degree d in n variables, in descending
  /// grevlex order. The Monomial reference handed to fn aliases an internal
  /// buffer; copy it to retain it past the call.
  template <typename Fn>
  static void visit(int n, int d, Fn&& fn) {
    assert(n >= 1 && d >= 0);
    Monomial scratch = Monomial::one(n);
    scratch.degree_ = d;
    detail::enumerate_rec(scratch.exponents_, scratch, n - 1, d, fn);
  }
};

template <typename Fn>
void for_each_in_degree(int n, int d, Fn&& fn) {
  DegreeEnumerator::visit(n, d, std::forward<Fn>(fn));
}

/// All degree-d monomials in n variables, descending grevlex, no duplicates.
std::vector<Monomial> enumerate_degree(int n, int d);

/// Render as "x1^2*x3" style text: factors joined by "*", ascending variable
/// index, exponent suffix only when >= 2; the constant monomial prints as "1".
std::string to_string(const Monomial& m);

/// Parse the to_string grammar back into a monomial over n variables.
/// Throws std::invalid_argument on malformed input or out-of-range indices.
Monomial parse_monomial(std::string_view text, int n);

}  // namespace lgb
