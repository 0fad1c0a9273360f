#include "lgb/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lgb {

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("monomial ideal: n must be >= 1");
}

bool MonomialIdeal::is_unit() const {
  return !buckets_.empty() && !buckets_[0].empty();
}

int MonomialIdeal::max_generator_degree() const {
  for (std::size_t d = buckets_.size(); d-- > 0;)
    if (!buckets_[d].empty()) return static_cast<int>(d);
  return -1;  // zero ideal
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(count_);
  for (const auto& bucket : buckets_)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  assert(m.vars() == n_);
  const int dmax = std::min<int>(m.degree(), static_cast<int>(buckets_.size()) - 1);
  for (int d = 0; d <= dmax; ++d) {
    for (const auto& g : buckets_[static_cast<std::size_t>(d)])
      if (divides(g, m)) return true;
  }
  return false;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Ascending degree: a strict divisor always has smaller degree, and a
  // same-degree pair can only collide by being equal.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_cmp(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool covered = false;
    for (const auto& k : kept) {
      if (k.degree() >= g.degree()) break;  // kept is degree-sorted
      if (divides(k, g)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
  MonomialIdeal J(n);
  for (const auto& g : gens) {
    if (g.vars() != n)
      throw std::invalid_argument("monomial ideal: generator has wrong variable count");
  }
  auto minimal = minimalize(std::move(gens));
  if (!minimal.empty()) {
    J.buckets_.resize(static_cast<std::size_t>(minimal.back().degree()) + 1);
    for (auto& g : minimal) {
      J.buckets_[static_cast<std::size_t>(g.degree())].push_back(std::move(g));
    }
    J.count_ = minimal.size();
  }
  return J;
}

void MonomialIdeal::append_frontier(int d, std::span<const Monomial> gens) {
  assert(d >= max_generator_degree());
  if (gens.empty()) return;
  if (static_cast<int>(buckets_.size()) <= d)
    buckets_.resize(static_cast<std::size_t>(d) + 1);
  auto& bucket = buckets_[static_cast<std::size_t>(d)];
  for (const auto& g : gens) {
    assert(g.vars() == n_ && g.degree() == d);
    assert(!contains(g));
    bucket.push_back(g);
  }
  count_ += gens.size();
}

MonomialIdeal MonomialIdeal::colon_variable(VariableIndex v) const {
  assert(v.index >= 1 && v.index <= n_);
  // Generators untouched by x_v stay minimal among themselves, as do the
  // divided ones; only untouched-divisible-by-divided pairs can appear, so a
  // full re-minimalization is unnecessary.
  std::vector<Monomial> divided;
  std::vector<Monomial> untouched;
  for (const auto& bucket : buckets_) {
    for (const auto& g : bucket) {
      if (g.exponent(v) > 0) {
        auto e = g.exponents();
        --e[static_cast<std::size_t>(v.index - 1)];
        divided.emplace_back(std::move(e));
      } else {
        untouched.push_back(g);
      }
    }
  }
  std::sort(divided.begin(), divided.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return grevlex_cmp(a, b) > 0;
            });
  MonomialIdeal out(n_);
  if (!divided.empty() && divided.front().degree() == 0) {
    // Some generator was x_v itself; the colon is the unit ideal.
    out.buckets_.assign(1, {Monomial::one(n_)});
    out.count_ = 1;
    return out;
  }
  int maxdeg = divided.empty() ? -1 : divided.back().degree();
  std::vector<Monomial> kept;
  kept.reserve(untouched.size());
  for (auto& g : untouched) {
    bool covered = false;
    for (const auto& k : divided) {
      if (k.degree() >= g.degree()) break;
      if (divides(k, g)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      maxdeg = std::max<int>(maxdeg, g.degree());
      kept.push_back(std::move(g));
    }
  }
  if (maxdeg < 0) return out;  // zero ideal
  out.buckets_.resize(static_cast<std::size_t>(maxdeg) + 1);
  for (auto& g : divided)
    out.buckets_[static_cast<std::size_t>(g.degree())].push_back(std::move(g));
  for (auto& g : kept)
    out.buckets_[static_cast<std::size_t>(g.degree())].push_back(std::move(g));
  for (auto& bucket : out.buckets_) {
    std::sort(bucket.begin(), bucket.end(), GrevlexGreater{});
    out.count_ += bucket.size();
  }
  return out;
}

MonomialIdeal MonomialIdeal::plus_variable(VariableIndex v) const {
  assert(v.index >= 1 && v.index <= n_);
  if (is_unit()) return *this;
  std::vector<Monomial> kept;
  kept.reserve(count_ + 1);
  kept.push_back(Monomial::variable(n_, v));
  for (const auto& bucket : buckets_)
    for (const auto& g : bucket)
      if (g.exponent(v) == 0) kept.push_back(g);
  MonomialIdeal out(n_);
  out.buckets_.resize(2);
  std::size_t count = 0;
  for (auto& g : kept) {
    auto deg = static_cast<std::size_t>(g.degree());
    if (deg >= out.buckets_.size()) out.buckets_.resize(deg + 1);
    out.buckets_[deg].push_back(std::move(g));
    ++count;
  }
  out.count_ = count;
  // Re-establish the within-bucket order for the degree-1 bucket, where the
  // new variable was prepended.
  std::sort(out.buckets_[1].begin(), out.buckets_[1].end(), GrevlexGreater{});
  return out;
}

namespace {

// Accumulates z^shift * H_{R/J} into acc, truncated at acc.cap().
void hps_rec(const MonomialIdeal& J, int shift, TruncatedSeries& acc) {
  const int cap = acc.cap();
  if (shift > cap) return;
  if (J.is_unit()) return;
  const auto& buckets = J.degree_buckets();

  // Base case: only degree-1 generators (or none) leave 1/(1-z)^(n-p).
  bool pure = true;
  for (std::size_t d = 2; d < buckets.size(); ++d)
    if (!buckets[d].empty()) {
      pure = false;
      break;
    }
  if (pure) {
    const int p = buckets.size() > 1 ? static_cast<int>(buckets[1].size()) : 0;
    TruncatedSeries tail = inv_one_minus_z_pow_n(J.vars() - p, cap - shift);
    for (int i = 0; i + shift <= cap; ++i) acc.add_at(i + shift, tail.coeff(i));
    return;
  }

  // Pivot: the variable hitting the most generators of degree >= 2,
  // ties to the smallest index. Minimality keeps any variable that is
  // itself a generator out of every higher-degree generator, so the winner
  // always appears in a monomial of degree > 1.
  std::vector<std::int64_t> hits(static_cast<std::size_t>(J.vars()), 0);
  for (std::size_t d = 2; d < buckets.size(); ++d)
    for (const auto& g : buckets[d]) {
      const auto& e = g.exponents();
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) ++hits[i];
    }
  int pivot = 0;
  for (int i = 1; i < J.vars(); ++i)
    if (hits[static_cast<std::size_t>(i)] > hits[static_cast<std::size_t>(pivot)])
      pivot = i;
  const VariableIndex xv{pivot + 1};

  hps_rec(J.plus_variable(xv), shift, acc);
  hps_rec(J.colon_variable(xv), shift + 1, acc);
}

}  // namespace

TruncatedSeries hps(const MonomialIdeal& J, int cap) {
  TruncatedSeries acc(cap);
  hps_rec(J, 0, acc);
  return acc;
}

std::int64_t hilbert_function(const MonomialIdeal& J, int d) {
  if (d < 0) throw std::invalid_argument("hilbert_function: d must be >= 0");
  return hps(J, d).coeff(d);
}

}  // namespace lgb
