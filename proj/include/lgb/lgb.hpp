#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lgb/instance.hpp"
#include "lgb/monomial_ideal.hpp"
#include "lgb/series.hpp"

namespace lgb {

/// Candidate-construction strategy for one degree step. Each tier shrinks
/// the work of the previous one and all of them produce the same basis:
///   0 — scan all of M_d
///   1 — products x_i * b over the degree-(d-1) standard monomials b
///   2 — only variables from the pivot x_t on (t from the largest b)
///   3 — membership-test only x_t * b; larger-variable products are free
///   4 — tier 3, testing only generators divisible by x_t
enum class Tier : int { t0 = 0, t1 = 1, t2 = 2, t3 = 3, t4 = 4 };

Tier tier_from_level(int level);  // throws std::invalid_argument outside 0..4

/// Raised when a degree step needs a negative number of new generators,
/// which contradicts the generic Hilbert series.
class genericity_error : public std::runtime_error {
 public:
  genericity_error(int degree, std::int64_t deficit);
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Per-degree record of how much work the chosen tier did.
struct DegreeTrace {
  int d = 0;
  std::int64_t candidates_checked = 0;   // |M~_d| submitted to membership tests
  std::int64_t b_d_size = 0;             // #B_d
  std::int64_t n_d = 0;                  // new generators at this degree
  std::int64_t relevant_generators = 0;  // generators consulted by the tests

  friend bool operator==(const DegreeTrace&, const DegreeTrace&) = default;
};

struct LgbResult {
  InstanceSpec spec;
  int degree_bound = 0;
  MonomialIdeal leading_monomials;
  std::vector<DegreeTrace> traces;
};

/// Aggregate instrumentation for benchmarking one run.
struct RunCounters {
  std::uint64_t divisibility_checks = 0;  // individual generator probes
  std::int64_t total_candidates = 0;      // sum of candidates_checked
  std::int64_t peak_candidate_set = 0;    // max per-degree candidate set size
};

/// Highest degree at which new leading monomials can appear: one plus the
/// degree of the generic Hilbert series when n <= m, else the Macaulay
/// bound sum(d_i - 1) + 1.
int degree_bound(const InstanceSpec& spec);

/// Snapshot of the degree-incremental state before processing degree d.
struct LgbState {
  int n = 1;
  int d = 0;                              // degree about to be processed
  MonomialIdeal leading = MonomialIdeal(1);  // L_G^{(d-1)}
  std::vector<Monomial> standard_prev;    // B~_{d-1}, descending grevlex
};

struct CandidateSets {
  std::vector<Monomial> to_check;     // descending grevlex, deduplicated
  std::vector<Monomial> pre_checked;  // ditto, disjoint from to_check
  std::optional<VariableIndex> pivot; // x_t, present for tiers 2..4
};

/// Degree-d candidate construction for the given tier. At d = 1 the pivot
/// is taken to be x_1 (the previous standard monomial is the constant 1,
/// which has no smallest variable).
CandidateSets candidates(Tier tier, const LgbState& state);

/// The generators membership tests consult at degree d: everything of
/// degree <= d-1, narrowed at tier 4 to those divisible by the pivot.
/// Sorted ascending by degree, descending grevlex within a degree.
std::vector<Monomial> relevant_generators(Tier tier, const MonomialIdeal& leading,
                                          int d,
                                          std::optional<VariableIndex> pivot);

/// Baseline construction: scan all of M_d each degree and re-derive the
/// Hilbert series of <L_G> after every step, stopping when it matches the
/// generic series.
LgbResult lgb_basic(const InstanceSpec& spec);

/// Degree-bounded construction without per-degree Hilbert recomputation,
/// using the requested candidate tier. All tiers return the same basis.
/// threads > 1 splits the membership tests; the result is identical.
LgbResult lgb_improved(const InstanceSpec& spec, Tier tier, int threads = 1,
                       RunCounters* counters = nullptr);

/// True iff every degree-d monomial grevlex-greater than a minimal
/// generator of degree d lies in the ideal.
bool weakly_revlex_check(const MonomialIdeal& leading);

}  // namespace lgb
