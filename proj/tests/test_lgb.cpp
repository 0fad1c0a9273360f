#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "lgb/lgb.hpp"
#include "test_util.hpp"

using namespace lgb;

namespace {

Monomial mono(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }

const InstanceSpec kToy{3, 4, {2, 2, 3, 4}};

std::vector<Monomial> toy_basis() {
  return {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 3, 0}), mono({0, 2, 1}),
          mono({1, 0, 3}), mono({0, 1, 3}), mono({0, 0, 4})};
}

InstanceSpec uniform(int n, int m, int deg) {
  return InstanceSpec{n, m, std::vector<int>(static_cast<std::size_t>(m), deg)};
}

}  // namespace

TEST_CASE("degree bounds") {
  CHECK(degree_bound(kToy) == 4);
  CHECK(degree_bound(uniform(18, 19, 2)) == 10);
  CHECK(degree_bound(uniform(14, 10, 2)) == 11);
  CHECK(degree_bound(InstanceSpec{3, 1, {2}}) == 2);  // Macaulay for n > m
  CHECK(degree_bound(InstanceSpec{2, 2, {1, 1}}) == 1);
}

TEST_CASE("candidate sets at the degree-1 bootstrap") {
  LgbState state;
  state.n = 3;
  state.d = 1;
  state.leading = MonomialIdeal(3);
  state.standard_prev = {Monomial::one(3)};

  for (Tier tier : {Tier::t0, Tier::t1, Tier::t2}) {
    const auto sets = candidates(tier, state);
    CHECK(sets.to_check.size() == 3);
    CHECK(sets.pre_checked.empty());
  }
  for (Tier tier : {Tier::t3, Tier::t4}) {
    const auto sets = candidates(tier, state);
    REQUIRE(sets.to_check.size() == 1);
    CHECK(sets.to_check[0] == mono({1, 0, 0}));
    CHECK(sets.pre_checked == std::vector<Monomial>{mono({0, 1, 0}), mono({0, 0, 1})});
    CHECK(sets.pivot == VariableIndex{1});
  }
}

TEST_CASE("candidate sets at toy degree 3") {
  // After degree 2 the leading monomials are x1^2, x1*x2 and the standard
  // monomials are the other four of M_2.
  LgbState state;
  state.n = 3;
  state.d = 3;
  state.leading = MonomialIdeal::from_generators(3, {mono({2, 0, 0}), mono({1, 1, 0})});
  state.standard_prev = {mono({0, 2, 0}), mono({1, 0, 1}), mono({0, 1, 1}),
                         mono({0, 0, 2})};

  const auto t0 = candidates(Tier::t0, state);
  CHECK(t0.to_check.size() == 10);

  const auto t1 = candidates(Tier::t1, state);
  CHECK(t1.to_check.size() == 8);  // 12 products, 4 collisions

  const auto t2 = candidates(Tier::t2, state);
  CHECK(t2.pivot == VariableIndex{2});  // largest standard monomial is x2^2
  CHECK(t2.to_check.size() == 6);

  const auto t3 = candidates(Tier::t3, state);
  REQUIRE(t3.pivot == VariableIndex{2});
  CHECK(t3.to_check == std::vector<Monomial>{mono({0, 3, 0}), mono({1, 1, 1}),
                                             mono({0, 2, 1}), mono({0, 1, 2})});
  CHECK(t3.pre_checked == std::vector<Monomial>{mono({1, 0, 2}), mono({0, 0, 3})});
}

TEST_CASE("relevant generators") {
  const auto leading = MonomialIdeal::from_generators(
      3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 3, 0}), mono({0, 2, 1})});
  CHECK(relevant_generators(Tier::t3, leading, 4, std::nullopt).size() == 4);
  CHECK(relevant_generators(Tier::t3, leading, 3, std::nullopt).size() == 2);
  CHECK(relevant_generators(Tier::t4, leading, 4, VariableIndex{3}) ==
        std::vector<Monomial>{mono({0, 2, 1})});
  CHECK(relevant_generators(Tier::t4, MonomialIdeal(3), 4, VariableIndex{1}).empty());
  CHECK_THROWS_AS(relevant_generators(Tier::t4, leading, 4, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("the toy instance is solved exactly, basic and improved") {
  const auto expected = MonomialIdeal::from_generators(3, toy_basis());
  CHECK(lgb_basic(kToy).leading_monomials == expected);
  for (int level = 0; level <= 4; ++level) {
    const auto run = lgb_improved(kToy, tier_from_level(level));
    CHECK(run.leading_monomials == expected);
    CHECK(run.degree_bound == 4);
    CHECK(run.traces.size() == 4);
  }
}

TEST_CASE("univariate and underdetermined instances") {
  CHECK(lgb_basic(InstanceSpec{1, 1, {3}}).leading_monomials.generators() ==
        std::vector<Monomial>{mono({3})});

  const auto run = lgb_improved(InstanceSpec{3, 1, {2}}, Tier::t4);
  CHECK(run.leading_monomials.generators() == std::vector<Monomial>{mono({2, 0, 0})});
  CHECK(run.degree_bound == 2);
  REQUIRE(run.traces.size() == 2);
  CHECK(run.traces[0].n_d == 0);
  CHECK(run.traces[1].n_d == 1);
}

TEST_CASE("two generic quadrics in two variables") {
  const auto run = lgb_basic(InstanceSpec{2, 2, {2, 2}});
  CHECK(run.leading_monomials.generators() ==
        std::vector<Monomial>{mono({2, 0}), mono({1, 1}), mono({0, 3})});
}

TEST_CASE("every tier and the baseline agree on a small grid") {
  for (int n = 2; n <= 5; ++n) {
    for (int m : {n - 1, n, n + 1}) {
      if (m < 1) continue;
      for (int deg : {2, 3}) {
        const auto spec = uniform(n, m, deg);
        const auto baseline = lgb_basic(spec).leading_monomials;
        for (int level = 0; level <= 4; ++level) {
          INFO("n=", n, " m=", m, " deg=", deg, " tier=", level);
          CHECK(lgb_improved(spec, tier_from_level(level)).leading_monomials ==
                baseline);
        }
      }
    }
  }
}

TEST_CASE("traces satisfy the defining identities") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 6);
    InstanceSpec spec{n, m, {}};
    for (int i = 0; i < m; ++i)
      spec.degrees.push_back(1 + static_cast<int>(rng() % 3));
    if (monomial_count(spec.n, degree_bound(spec)) > 100'000) continue;
    const int bound = degree_bound(spec);
    const auto target = generic_hilbert_series(spec, bound + 1);
    const auto tier = tier_from_level(static_cast<int>(rng() % 5));
    const auto run = lgb_improved(spec, tier);
    REQUIRE(static_cast<int>(run.traces.size()) == bound);
    for (int i = 0; i < bound; ++i) {
      const auto& t = run.traces[static_cast<std::size_t>(i)];
      CHECK(t.d == i + 1);
      CHECK(t.n_d == t.b_d_size - target.coeff_or_zero(t.d));
      CHECK(t.n_d >= 0);
    }
  }
}

TEST_CASE("tier candidate counts shrink monotonically") {
  for (const auto& spec : {uniform(8, 9, 2), uniform(6, 4, 2), kToy}) {
    std::vector<LgbResult> runs;
    for (int level = 0; level <= 4; ++level)
      runs.push_back(lgb_improved(spec, tier_from_level(level)));
    for (std::size_t row = 0; row < runs[0].traces.size(); ++row) {
      for (int k = 0; k + 1 <= 2; ++k) {
        CHECK(runs[static_cast<std::size_t>(k + 1)].traces[row].candidates_checked <=
              runs[static_cast<std::size_t>(k)].traces[row].candidates_checked);
      }
      CHECK(runs[4].traces[row].relevant_generators <=
            runs[3].traces[row].relevant_generators);
      CHECK(runs[4].traces[row].candidates_checked ==
            runs[3].traces[row].candidates_checked);
    }
  }
}

TEST_CASE("weakly reverse-lexicographic check") {
  CHECK(weakly_revlex_check(MonomialIdeal::from_generators(3, toy_basis())));
  CHECK_FALSE(weakly_revlex_check(MonomialIdeal::from_generators(2, {mono({0, 1})})));
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = std::max(1, n - 1 + static_cast<int>(rng() % 3));
    const auto spec = uniform(n, m, 2 + static_cast<int>(rng() % 2));
    if (monomial_count(spec.n, degree_bound(spec)) > 50'000) continue;
    CHECK(weakly_revlex_check(lgb_improved(spec, Tier::t4).leading_monomials));
  }
}

TEST_CASE("threaded membership testing changes nothing") {
  const auto spec = uniform(10, 8, 2);
  const auto solo = lgb_improved(spec, Tier::t1, 1);
  const auto quad = lgb_improved(spec, Tier::t1, 4);
  CHECK(solo.leading_monomials == quad.leading_monomials);
  CHECK(solo.traces == quad.traces);

  RunCounters c1, c4;
  (void)lgb_improved(spec, Tier::t0, 1, &c1);
  (void)lgb_improved(spec, Tier::t0, 4, &c4);
  CHECK(c1.divisibility_checks == c4.divisibility_checks);
  CHECK(c1.total_candidates == c4.total_candidates);
}

TEST_CASE("divisibility work shrinks monotonically from tier 0 to tier 4") {
  const auto spec = uniform(8, 9, 2);
  std::array<RunCounters, 5> counters;
  for (int level = 0; level <= 4; ++level)
    (void)lgb_improved(spec, tier_from_level(level), 1,
                       &counters[static_cast<std::size_t>(level)]);
  for (int level = 0; level < 4; ++level) {
    CHECK(counters[static_cast<std::size_t>(level + 1)].divisibility_checks <=
          counters[static_cast<std::size_t>(level)].divisibility_checks);
  }
  CHECK(counters[4].divisibility_checks < counters[0].divisibility_checks);
  CHECK(counters[4].total_candidates < counters[0].total_candidates);
  CHECK(counters[4].peak_candidate_set <= counters[0].peak_candidate_set);
}

TEST_CASE("genericity violations carry the offending degree") {
  const genericity_error err(7, -3);
  CHECK(err.degree() == 7);
  CHECK(std::string(err.what()).find("degree 7") != std::string::npos);
}

TEST_CASE("hilbert series of the output matches the target") {
  for (const auto& spec :
       {kToy, uniform(4, 5, 2), uniform(5, 4, 2), InstanceSpec{4, 3, {2, 3, 3}}}) {
    const int bound = degree_bound(spec);
    const auto run = lgb_improved(spec, Tier::t4);
    const auto target = generic_hilbert_series(spec, bound + 1);
    const auto actual = hps(run.leading_monomials, bound + 1);
    for (int d = 0; d <= bound; ++d)
      CHECK(actual.coeff(d) == target.coeff_or_zero(d));
    if (spec.n <= spec.m) CHECK(bracket(actual) == target);
  }
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(degree_bound(InstanceSpec{0, 1, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(degree_bound(InstanceSpec{2, 2, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(degree_bound(InstanceSpec{2, 1, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(lgb_improved(kToy, Tier::t4, 0), std::invalid_argument);
  CHECK_THROWS_AS(tier_from_level(5), std::invalid_argument);
}
