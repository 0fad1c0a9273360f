#include "lgb/lgb.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <thread>

#include "lgb/checked.hpp"

namespace lgb {

Tier tier_from_level(int level) {
  if (level < 0 || level > 4)
    throw std::invalid_argument("tier must be between 0 and 4");
  return static_cast<Tier>(level);
}

genericity_error::genericity_error(int degree, std::int64_t deficit)
    : std::runtime_error("genericity violation at degree " + std::to_string(degree) +
                         ": candidate set is short by " + std::to_string(-deficit) +
                         " monomials against the generic Hilbert series"),
      degree_(degree) {}

int degree_bound(const InstanceSpec& spec) {
  spec.validate();
  const auto macaulay = spec.macaulay_bound();
  if (spec.n > spec.m) {
    if (macaulay > 1'000'000)
      throw std::invalid_argument("degree bound too large to iterate");
    return static_cast<int>(macaulay);
  }
  // Finite series: the first nonpositive coefficient appears no later than
  // the Macaulay bound of any n-subset of the degrees, so this cap suffices.
  const auto series = generic_hilbert_series(spec, static_cast<int>(std::min<std::int64_t>(macaulay + 1, 4'000'000)));
  if (!series.finite)
    throw std::logic_error("degree_bound: generic series unexpectedly infinite for n <= m");
  return static_cast<int>(series.coeffs.size());
}

namespace {

// Deduplicate a descending-grevlex-sorted vector in place.
void sort_unique_desc(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), GrevlexGreater{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int pivot_index(const LgbState& state) {
  if (state.d == 1) return 1;  // B~_0 = {1}: treat the constant as pivoting on x_1
  assert(!state.standard_prev.empty());
  return smallest_variable(state.standard_prev.front()).index;
}

std::vector<Monomial> variable_products(const std::vector<Monomial>& base,
                                        int from, int to) {
  std::vector<Monomial> out;
  out.reserve(base.size() * static_cast<std::size_t>(std::max(0, to - from + 1)));
  for (const auto& b : base)
    for (int i = from; i <= to; ++i) out.push_back(mul(b, VariableIndex{i}));
  sort_unique_desc(out);
  return out;
}

struct GeneratorView {
  // Flat, ascending by degree; membership scans stop at the first divisor.
  std::vector<Monomial> gens;

  bool contains(const Monomial& m, std::uint64_t& probes) const {
    for (const auto& g : gens) {
      if (g.degree() > m.degree()) break;
      ++probes;
      if (divides(g, m)) return true;
    }
    return false;
  }
};

// Keeps candidate order; splitting across threads does not change the result.
std::vector<Monomial> filter_outside(const std::vector<Monomial>& candidates,
                                     const GeneratorView& view, int threads,
                                     std::uint64_t& probes) {
  if (threads <= 1 || candidates.size() < 4096) {
    std::vector<Monomial> out;
    for (const auto& m : candidates)
      if (!view.contains(m, probes)) out.push_back(m);
    return out;
  }
  const std::size_t parts = static_cast<std::size_t>(threads);
  std::vector<std::vector<Monomial>> results(parts);
  std::vector<std::uint64_t> counts(parts, 0);
  std::vector<std::thread> workers;
  const std::size_t chunk = (candidates.size() + parts - 1) / parts;
  for (std::size_t t = 0; t < parts; ++t) {
    workers.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i)
        if (!view.contains(candidates[i], counts[t])) results[t].push_back(candidates[i]);
    });
  }
  for (auto& w : workers) w.join();
  std::vector<Monomial> out;
  for (std::size_t t = 0; t < parts; ++t) {
    out.insert(out.end(), std::make_move_iterator(results[t].begin()),
               std::make_move_iterator(results[t].end()));
    probes += counts[t];
  }
  return out;
}

}  // namespace

CandidateSets candidates(Tier tier, const LgbState& state) {
  const int n = state.n;
  const int d = state.d;
  assert(d >= 1);
  if (state.standard_prev.empty())
    throw std::logic_error("candidates: no standard monomials left below the degree bound");
  CandidateSets out;
  switch (tier) {
    case Tier::t0:
      out.to_check = enumerate_degree(n, d);
      break;
    case Tier::t1:
      out.to_check = variable_products(state.standard_prev, 1, n);
      break;
    case Tier::t2: {
      const int t = pivot_index(state);
      out.pivot = VariableIndex{t};
      out.to_check = variable_products(state.standard_prev, t, n);
      break;
    }
    case Tier::t3:
    case Tier::t4: {
      const int t = pivot_index(state);
      out.pivot = VariableIndex{t};
      // x_t * b is injective in b and preserves the order, so to_check is
      // already sorted and duplicate-free.
      out.to_check.reserve(state.standard_prev.size());
      for (const auto& b : state.standard_prev)
        out.to_check.push_back(mul(b, VariableIndex{t}));
      if (t < n) {
        auto pre = variable_products(state.standard_prev, t + 1, n);
        out.pre_checked.reserve(pre.size());
        std::set_difference(pre.begin(), pre.end(), out.to_check.begin(),
                            out.to_check.end(), std::back_inserter(out.pre_checked),
                            GrevlexGreater{});
      }
      break;
    }
  }
  return out;
}

std::vector<Monomial> relevant_generators(Tier tier, const MonomialIdeal& leading,
                                          int d,
                                          std::optional<VariableIndex> pivot) {
  if (tier == Tier::t4 && !pivot)
    throw std::invalid_argument("relevant_generators: tier 4 needs the pivot variable");
  std::vector<Monomial> out;
  const auto& buckets = leading.degree_buckets();
  const int top = std::min<int>(d - 1, static_cast<int>(buckets.size()) - 1);
  for (int deg = 0; deg <= top; ++deg) {
    for (const auto& g : buckets[static_cast<std::size_t>(deg)]) {
      if (tier == Tier::t4 && g.exponent(*pivot) == 0) continue;
      out.push_back(g);
    }
  }
  return out;
}

namespace {

struct DegreeOutcome {
  std::vector<Monomial> b_d;  // descending grevlex
  std::int64_t checked = 0;
  std::int64_t relevant = 0;
};

DegreeOutcome run_degree(Tier tier, const LgbState& state, int threads,
                         RunCounters* counters, std::uint64_t& probes) {
  DegreeOutcome out;
  const GeneratorView view{relevant_generators(
      tier, state.leading, state.d,
      tier >= Tier::t2 ? std::optional<VariableIndex>{VariableIndex{pivot_index(state)}}
                       : std::nullopt)};
  out.relevant = static_cast<std::int64_t>(view.gens.size());

  if (tier == Tier::t0) {
    // Stream M_d instead of materializing it; at tier 0 the candidate count
    // is the full monomial count.
    out.checked = monomial_count(state.n, state.d);
    std::vector<Monomial> block;
    const std::size_t block_size = 1 << 15;
    block.reserve(block_size);
    auto flush = [&] {
      auto survivors = filter_outside(block, view, threads, probes);
      out.b_d.insert(out.b_d.end(), std::make_move_iterator(survivors.begin()),
                     std::make_move_iterator(survivors.end()));
      block.clear();
    };
    for_each_in_degree(state.n, state.d, [&](const Monomial& m) {
      block.push_back(m);
      if (block.size() == block_size) flush();
    });
    flush();
    if (counters) {
      counters->total_candidates = checked::add(counters->total_candidates, out.checked);
      counters->peak_candidate_set = std::max(counters->peak_candidate_set, out.checked);
    }
    return out;
  }

  auto sets = candidates(tier, state);
  out.checked = static_cast<std::int64_t>(sets.to_check.size());
  if (counters) {
    counters->total_candidates = checked::add(counters->total_candidates, out.checked);
    counters->peak_candidate_set =
        std::max(counters->peak_candidate_set,
                 out.checked + static_cast<std::int64_t>(sets.pre_checked.size()));
  }
  auto survivors = filter_outside(sets.to_check, view, threads, probes);
  out.b_d.reserve(survivors.size() + sets.pre_checked.size());
  std::merge(survivors.begin(), survivors.end(), sets.pre_checked.begin(),
             sets.pre_checked.end(), std::back_inserter(out.b_d), GrevlexGreater{});
  return out;
}

}  // namespace

LgbResult lgb_improved(const InstanceSpec& spec, Tier tier, int threads,
                       RunCounters* counters) {
  spec.validate();
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const int bound = degree_bound(spec);
  const int cap = bound + 1;
  const BracketSeries target = generic_hilbert_series(spec, cap);

  LgbState state;
  state.n = spec.n;
  state.leading = MonomialIdeal(spec.n);
  state.standard_prev = {Monomial::one(spec.n)};

  LgbResult result{spec, bound, MonomialIdeal(spec.n), {}};
  std::uint64_t probes = 0;

  for (int d = 1; d <= bound; ++d) {
    state.d = d;
    auto outcome = run_degree(tier, state, threads, counters, probes);
    auto& b_d = outcome.b_d;

    const std::int64_t h_d = target.coeff_or_zero(d);
    const std::int64_t n_d = checked::sub(static_cast<std::int64_t>(b_d.size()), h_d);
    if (n_d < 0) throw genericity_error(d, n_d);

    state.leading.append_frontier(
        d, std::span<const Monomial>(b_d.data(), static_cast<std::size_t>(n_d)));
    state.standard_prev.assign(
        std::make_move_iterator(b_d.begin() + static_cast<std::ptrdiff_t>(n_d)),
        std::make_move_iterator(b_d.end()));

    result.traces.push_back(DegreeTrace{d, outcome.checked,
                                        static_cast<std::int64_t>(b_d.size()), n_d,
                                        outcome.relevant});
  }
  if (counters) counters->divisibility_checks += probes;
  result.leading_monomials = std::move(state.leading);
  return result;
}

LgbResult lgb_basic(const InstanceSpec& spec) {
  spec.validate();
  const int bound = degree_bound(spec);
  const int cap = bound + 1;
  const BracketSeries target = generic_hilbert_series(spec, cap);

  MonomialIdeal leading(spec.n);
  std::vector<DegreeTrace> traces;
  std::uint64_t probes = 0;

  int d = 0;
  while (bracket(hps(leading, cap)) != target) {
    if (d > cap)
      throw std::logic_error("lgb_basic: no convergence below the degree bound");
    const GeneratorView view{relevant_generators(Tier::t0, leading, d, std::nullopt)};
    std::vector<Monomial> b_d;
    for_each_in_degree(spec.n, d, [&](const Monomial& m) {
      if (!view.contains(m, probes)) b_d.push_back(m);
    });
    const std::int64_t h_d = target.coeff_or_zero(d);
    const std::int64_t n_d = checked::sub(static_cast<std::int64_t>(b_d.size()), h_d);
    if (n_d < 0) throw genericity_error(d, n_d);
    leading.append_frontier(
        d, std::span<const Monomial>(b_d.data(), static_cast<std::size_t>(n_d)));
    if (d >= 1)
      traces.push_back(DegreeTrace{d, monomial_count(spec.n, d),
                                   static_cast<std::int64_t>(b_d.size()), n_d,
                                   static_cast<std::int64_t>(view.gens.size())});
    ++d;
  }
  return LgbResult{spec, bound, std::move(leading), std::move(traces)};
}

bool weakly_revlex_check(const MonomialIdeal& leading) {
  const auto& buckets = leading.degree_buckets();
  for (std::size_t d = 1; d < buckets.size(); ++d) {
    if (buckets[d].empty()) continue;
    // Generators sit in descending order; everything above the smallest one
    // must be in the ideal.
    const Monomial& least = buckets[d].back();
    bool ok = true;
    for_each_in_degree(leading.vars(), static_cast<int>(d), [&](const Monomial& m) {
      if (!ok) return;
      if (grevlex_cmp(m, least) <= 0) return;
      if (!leading.contains(m)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace lgb
