#include "lgb/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <queue>
#include <random>

#include "lgb/lgb.hpp"

namespace lgb::oracle {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t prime) : p(prime) {
  if (p <= 2 || !is_prime(p))
    throw std::invalid_argument("field: modulus must be an odd prime");
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  assert(a % p != 0);
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Polynomial::Polynomial(std::vector<std::pair<Monomial, std::int64_t>> terms)
    : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
    return grevlex_cmp(a.first, b.first) > 0;
  });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].first == terms_[i - 1].first)
      throw std::invalid_argument("polynomial: duplicate monomial");
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].first.degree() != terms_[0].first.degree())
      throw std::invalid_argument("polynomial: not homogeneous");
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().first.degree();
}

std::vector<Polynomial> random_homogeneous_sequence(const RandomSequenceConfig& cfg) {
  cfg.spec.validate();
  PrimeField field(cfg.prime);
  std::mt19937_64 rng(cfg.seed);
  // Rejection sampling keeps the draw identical across platforms; the
  // standard distributions make no such promise.
  auto draw_nonzero = [&]() -> std::int64_t {
    const std::uint64_t range = static_cast<std::uint64_t>(field.p - 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    for (;;) {
      std::uint64_t r = rng();
      if (r < limit) return static_cast<std::int64_t>(r % range) + 1;
    }
  };
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(cfg.spec.m));
  for (int i = 0; i < cfg.spec.m; ++i) {
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for_each_in_degree(cfg.spec.n, cfg.spec.degrees[static_cast<std::size_t>(i)],
                       [&](const Monomial& m) { terms.emplace_back(m, draw_nonzero()); });
    out.emplace_back(std::move(terms));
  }
  return out;
}

namespace {

using TermMap = std::map<Monomial, std::int64_t, GrevlexGreater>;

TermMap to_map(const Polynomial& f) {
  TermMap m;
  for (const auto& [mono, c] : f.terms()) m.emplace(mono, c);
  return m;
}

Polynomial from_map(TermMap&& m) {
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  terms.reserve(m.size());
  for (auto& [mono, c] : m) terms.emplace_back(mono, c);
  return Polynomial(std::move(terms));
}

// work -= c * shift * g
void subtract_multiple(TermMap& work, std::int64_t c, const Monomial& shift,
                       const Polynomial& g, const PrimeField& field) {
  for (const auto& [mono, a] : g.terms()) {
    const Monomial target = mul(shift, mono);
    auto [it, inserted] = work.emplace(target, 0);
    it->second = field.sub(it->second, field.mul(c, a));
    if (it->second == 0) work.erase(it);
  }
}

Polynomial make_monic(Polynomial f, const PrimeField& field) {
  if (f.is_zero() || f.leading_coeff() == 1) return f;
  const std::int64_t s = field.inv(f.leading_coeff());
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  terms.reserve(f.terms().size());
  for (const auto& [mono, c] : f.terms()) terms.emplace_back(mono, field.mul(s, c));
  return Polynomial(std::move(terms));
}

std::int64_t standard_monomial_count(const std::vector<Polynomial>& basis, int n,
                                     int d) {
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis)
    if (g.degree() <= d) lms.push_back(g.leading_monomial());
  std::int64_t count = 0;
  for_each_in_degree(n, d, [&](const Monomial& m) {
    for (const auto& lm : lms)
      if (divides(lm, m)) return;
    ++count;
  });
  return count;
}

struct Pair {
  int i = 0, j = 0;
  int lcm_degree = 0;
};
struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    return a.lcm_degree > b.lcm_degree;  // min-heap on degree
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& field) {
  TermMap work = to_map(f);
  std::vector<std::pair<Monomial, std::int64_t>> result;
  while (!work.empty()) {
    const auto& [lm, lc] = *work.begin();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_monomial(), lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      result.emplace_back(lm, lc);
      work.erase(work.begin());
      continue;
    }
    const Monomial shift = quotient(lm, reducer->leading_monomial());
    const std::int64_t c = field.mul(lc, field.inv(reducer->leading_coeff()));
    subtract_multiple(work, c, shift, *reducer, field);
  }
  return Polynomial(std::move(result));
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> input,
                                   const PrimeField& field) {
  std::vector<Polynomial> basis;
  for (auto& f : input)
    if (!f.is_zero()) basis.push_back(make_monic(std::move(f), field));
  if (basis.empty()) return basis;
  const int n = basis.front().leading_monomial().vars();

  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue;
  auto enqueue_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const auto& a = basis[static_cast<std::size_t>(i)].leading_monomial();
      const auto& b = basis[static_cast<std::size_t>(j)].leading_monomial();
      if (coprime(a, b)) continue;  // Buchberger's first criterion
      queue.push(Pair{i, j, lcm(a, b).degree()});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) enqueue_pairs(j);

  while (!queue.empty()) {
    const int e = queue.top().lcm_degree;
    while (!queue.empty() && queue.top().lcm_degree == e) {
      const Pair pr = queue.top();
      queue.pop();
      const Polynomial& f = basis[static_cast<std::size_t>(pr.i)];
      const Polynomial& g = basis[static_cast<std::size_t>(pr.j)];
      const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      TermMap work;
      subtract_multiple(work, field.p - 1, quotient(l, f.leading_monomial()), f, field);
      subtract_multiple(work, 1, quotient(l, g.leading_monomial()), g, field);
      Polynomial s = normal_form(from_map(std::move(work)), basis, field);
      if (!s.is_zero()) {
        basis.push_back(make_monic(std::move(s), field));
        enqueue_pairs(static_cast<int>(basis.size()) - 1);
      }
    }
    // All pairs of lcm degree <= e are done, so the basis is a Groebner
    // basis up to degree e and the quotient dimension there is exact. Once
    // it hits zero no minimal generator can appear beyond e.
    if (standard_monomial_count(basis, n, e) == 0) break;
  }
  return basis;
}

MonomialIdeal minimal_lm_set(const std::vector<Polynomial>& basis, int n) {
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial());
  return MonomialIdeal::from_generators(n, std::move(lms));
}

bool is_groebner(const std::vector<Polynomial>& basis, const PrimeField& field) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial& f = basis[i];
      const Polynomial& g = basis[j];
      if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
      const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      TermMap work;
      subtract_multiple(work, field.p - 1, quotient(l, f.leading_monomial()), f, field);
      subtract_multiple(work, 1, quotient(l, g.leading_monomial()), g, field);
      if (!normal_form(from_map(std::move(work)), basis, field).is_zero())
        return false;
    }
  }
  return true;
}

void ensure_within_budget(const InstanceSpec& spec, std::int64_t budget) {
  const int bound = degree_bound(spec);
  std::int64_t count = 0;
  try {
    count = monomial_count(spec.n, bound);
  } catch (const std::overflow_error&) {
    count = std::numeric_limits<std::int64_t>::max();
  }
  if (count > budget)
    throw budget_error("verification instance needs " + std::to_string(count) +
                       " degree-" + std::to_string(bound) +
                       " monomials, over the budget of " + std::to_string(budget));
}

VerifyTrial verify_one(const InstanceSpec& spec, std::uint64_t seed,
                       std::int64_t prime, const MonomialIdeal& expected) {
  RandomSequenceConfig cfg{spec, prime, seed};
  PrimeField field(prime);
  auto sequence = random_homogeneous_sequence(cfg);
  auto basis = buchberger(std::move(sequence), field);
  VerifyTrial trial{seed, false, minimal_lm_set(basis, spec.n)};
  trial.match = trial.oracle_lm == expected;
  return trial;
}

}  // namespace lgb::oracle
