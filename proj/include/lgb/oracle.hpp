#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgb/instance.hpp"
#include "lgb/monomial.hpp"
#include "lgb/monomial_ideal.hpp"

namespace lgb::oracle {

/// Arithmetic in F_p for an odd prime p. Elements are canonical residues
/// 0 <= x < p held in int64.
struct PrimeField {
  std::int64_t p = 32003;

  explicit PrimeField(std::int64_t prime);

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a + b;
    return r >= p ? r - p : r;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    return r < 0 ? r + p : r;
  }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p - a; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p; }
  std::int64_t inv(std::int64_t a) const;  // Fermat; requires a != 0
};

bool is_prime(std::int64_t p);

/// A homogeneous polynomial over F_p: nonzero terms in descending grevlex.
class Polynomial {
 public:
  Polynomial() = default;

  /// Terms need not be sorted; zero coefficients are dropped and equal
  /// monomials are not allowed.
  explicit Polynomial(std::vector<std::pair<Monomial, std::int64_t>> terms);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const Monomial& leading_monomial() const { return terms_.front().first; }
  std::int64_t leading_coeff() const { return terms_.front().second; }
  const std::vector<std::pair<Monomial, std::int64_t>>& terms() const {
    return terms_;
  }

 private:
  std::vector<std::pair<Monomial, std::int64_t>> terms_;
};

struct RandomSequenceConfig {
  InstanceSpec spec;
  std::int64_t prime = 32003;
  std::uint64_t seed = 1;
};

/// m dense homogeneous polynomials: f_i carries every monomial of degree
/// d_i with a coefficient drawn uniformly from F_p \ {0}. Identical seeds
/// give identical sequences on every platform (mt19937_64 with rejection
/// sampling).
std::vector<Polynomial> random_homogeneous_sequence(const RandomSequenceConfig& cfg);

/// Full reduction of f modulo basis: no term of the result is divisible by
/// any basis leading monomial.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& field);

/// Buchberger's algorithm under grevlex for a homogeneous input. Pairs are
/// processed in increasing lcm degree with the coprimality criterion; once
/// every pair of degree <= e is done and the quotient is seen to vanish in
/// degree e, higher pairs cannot contribute new minimal leading monomials
/// and the run stops. Elements are monic.
std::vector<Polynomial> buchberger(std::vector<Polynomial> input,
                                   const PrimeField& field);

/// Minimal generators of the leading-monomial ideal of a Groebner basis.
MonomialIdeal minimal_lm_set(const std::vector<Polynomial>& basis, int n);

/// Self-check: every S-polynomial of basis pairs reduces to zero.
bool is_groebner(const std::vector<Polynomial>& basis, const PrimeField& field);

/// Raised when a verification instance is larger than the configured
/// monomial budget allows.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws budget_error unless #M_D fits within budget for D = degree_bound.
void ensure_within_budget(const InstanceSpec& spec, std::int64_t budget);

struct VerifyTrial {
  std::uint64_t seed = 0;
  bool match = false;
  MonomialIdeal oracle_lm;
};

/// One end-to-end trial: draw a random sequence, run Buchberger, compare
/// its minimal leading monomials against expected.
VerifyTrial verify_one(const InstanceSpec& spec, std::uint64_t seed,
                       std::int64_t prime, const MonomialIdeal& expected);

}  // namespace lgb::oracle
