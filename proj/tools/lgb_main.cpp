// Command-line front end: compute | hilbert | stats | verify | bench.
// Exit codes: 0 ok, 2 invalid input, 3 genericity violation, 4 oracle mismatch.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgb/io.hpp"
#include "lgb/lgb.hpp"
#include "lgb/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitMismatch = 4;

struct SpecOptions {
  int n = 0;
  int m = 0;
  std::string degrees;

  lgb::InstanceSpec resolve() const {
    lgb::InstanceSpec spec;
    spec.n = n;
    spec.degrees = lgb::io::parse_degree_list(degrees);
    spec.m = m > 0 ? m : static_cast<int>(spec.degrees.size());
    spec.validate();
    return spec;
  }
};

void add_spec_options(CLI::App& cmd, SpecOptions& opts) {
  cmd.add_option("-n", opts.n, "number of variables")->required();
  cmd.add_option("-m", opts.m,
                 "number of polynomials (default: inferred from -d)");
  cmd.add_option("-d", opts.degrees,
                 "degree list, e.g. 2,2,3,4 or 2^19 (v^count shorthand)")
      ->required();
}

std::string format_result_text(const lgb::LgbResult& r) {
  std::string out;
  out += "n=" + std::to_string(r.spec.n) + " m=" + std::to_string(r.spec.m) +
         " D=" + std::to_string(r.degree_bound) + " generators=" +
         std::to_string(r.leading_monomials.generator_count()) + "\n";
  const auto& buckets = r.leading_monomials.degree_buckets();
  for (std::size_t d = 0; d < buckets.size(); ++d) {
    if (buckets[d].empty()) continue;
    out += "  d=" + std::to_string(d) + ":";
    for (const auto& g : buckets[d]) out += " " + lgb::to_string(g);
    out += "\n";
  }
  out += "trace:\n  " + std::string("d,candidates_checked,b_d_size,n_d,relevant_generators\n");
  for (const auto& t : r.traces) {
    out += "  " + std::to_string(t.d) + "," + std::to_string(t.candidates_checked) +
           "," + std::to_string(t.b_d_size) + "," + std::to_string(t.n_d) + "," +
           std::to_string(t.relevant_generators) + "\n";
  }
  return out;
}

int run_compute(const SpecOptions& opts, int tier_level, const std::string& format,
                int threads) {
  const auto spec = opts.resolve();
  const auto tier = lgb::tier_from_level(tier_level);
  const auto result = lgb::lgb_improved(spec, tier, threads);
  if (format == "json") {
    std::cout << lgb::io::to_json(result).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << lgb::io::traces_to_csv(result.traces);
  } else {
    std::cout << format_result_text(result);
  }
  return kExitOk;
}

int run_hilbert(const SpecOptions& opts, const std::string& format) {
  const auto spec = opts.resolve();
  if (format == "csv")
    throw std::invalid_argument("hilbert: csv output is only for trace tables");
  const int cap = lgb::degree_bound(spec) + 1;
  const auto series = lgb::generic_hilbert_series(spec, cap);
  if (format == "json") {
    std::cout << lgb::io::to_json(series).dump(2) << "\n";
  } else {
    std::cout << lgb::io::series_to_text(series) << "\n";
    std::cout << (series.finite ? "finite" : "infinite (shown through degree " +
                                                 std::to_string(series.degree()) + ")")
              << "\n";
  }
  return kExitOk;
}

int run_stats(const SpecOptions& opts, const std::vector<int>& tier_levels,
              const std::string& format, int threads) {
  const auto spec = opts.resolve();
  std::vector<lgb::LgbResult> runs;
  for (int level : tier_levels)
    runs.push_back(lgb::lgb_improved(spec, lgb::tier_from_level(level), threads));
  if (format == "json") {
    lgb::io::json out = lgb::io::json::array();
    for (std::size_t i = 0; i < runs.size(); ++i)
      out.push_back({{"tier", tier_levels[i]}, {"result", lgb::io::to_json(runs[i])}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::string header = "d";
  for (int level : tier_levels) {
    header += ",tier" + std::to_string(level) + "_candidates";
    header += ",tier" + std::to_string(level) + "_generators";
  }
  std::cout << header << "\n";
  const std::size_t rows = runs.front().traces.size();
  for (std::size_t row = 0; row < rows; ++row) {
    std::string line = std::to_string(runs.front().traces[row].d);
    for (const auto& run : runs) {
      line += "," + std::to_string(run.traces[row].candidates_checked);
      line += "," + std::to_string(run.traces[row].relevant_generators);
    }
    std::cout << line << "\n";
  }
  return kExitOk;
}

int run_verify(const SpecOptions& opts, int seeds, std::int64_t prime,
               std::int64_t budget, const std::string& format) {
  const auto spec = opts.resolve();
  if (format == "csv")
    throw std::invalid_argument("verify: csv output is only for trace tables");
  lgb::oracle::ensure_within_budget(spec, budget);
  const auto expected = lgb::lgb_improved(spec, lgb::Tier::t4).leading_monomials;
  bool all_match = true;
  lgb::io::json trials = lgb::io::json::array();
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = static_cast<std::uint64_t>(i) + 1;
    const auto trial = lgb::oracle::verify_one(spec, seed, prime, expected);
    all_match = all_match && trial.match;
    lgb::io::json j{{"seed", trial.seed},
                    {"match", trial.match},
                    {"lgb_lm", lgb::io::to_json(expected).at("generators")},
                    {"oracle_lm", lgb::io::to_json(trial.oracle_lm).at("generators")}};
    if (format == "json") {
      trials.push_back(std::move(j));
    } else {
      std::cout << j.dump() << "\n";
    }
  }
  if (format == "json") {
    std::cout << lgb::io::json{{"trials", trials}, {"all_match", all_match}}.dump(2)
              << "\n";
  } else {
    std::cout << (all_match ? "PASS" : "FAIL") << ": " << seeds
              << " seed(s) checked\n";
  }
  return all_match ? kExitOk : kExitMismatch;
}

int run_bench(const SpecOptions& opts, const std::vector<int>& tier_levels,
              int threads) {
  const auto spec = opts.resolve();
  std::cout << "tier,wall_ms,total_candidates,divisibility_checks,peak_candidate_set\n";
  for (int level : tier_levels) {
    lgb::RunCounters counters;
    const auto start = std::chrono::steady_clock::now();
    (void)lgb::lgb_improved(spec, lgb::tier_from_level(level), threads, &counters);
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    std::cout << level << "," << wall << "," << counters.total_candidates << ","
              << counters.divisibility_checks << "," << counters.peak_candidate_set
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leading monomials of minimal Groebner bases of generic sequences"};
  app.require_subcommand(1);

  SpecOptions spec_opts;
  int tier_level = 4;
  std::string format = "text";
  int threads = 1;
  int seeds = 5;
  std::int64_t prime = 32003;
  std::int64_t budget = 50'000;
  std::string tiers_text = "0,1,2,3,4";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* compute = app.add_subcommand("compute", "leading monomials plus trace table");
  add_spec_options(*compute, spec_opts);
  compute->add_option("--tier", tier_level, "candidate tier 0..4")
      ->check(CLI::Range(0, 4));
  compute->add_option("--threads", threads, "membership-test threads")
      ->check(CLI::PositiveNumber);
  add_format(compute);

  auto* hilbert = app.add_subcommand("hilbert", "generic Hilbert series");
  add_spec_options(*hilbert, spec_opts);
  add_format(hilbert);

  auto* stats = app.add_subcommand("stats", "per-degree tier comparison table");
  add_spec_options(*stats, spec_opts);
  stats->add_option("--tiers", tiers_text, "comma list of tiers to run");
  stats->add_option("--threads", threads)->check(CLI::PositiveNumber);
  add_format(stats);

  auto* verify = app.add_subcommand("verify", "compare against a Buchberger run");
  add_spec_options(*verify, spec_opts);
  verify->add_option("--seeds", seeds, "number of random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--prime", prime, "field characteristic");
  verify->add_option("--budget", budget, "degree-D monomial budget");
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "wall time and work counters per tier");
  add_spec_options(*bench, spec_opts);
  bench->add_option("--tiers", tiers_text, "comma list of tiers to run");
  bench->add_option("--threads", threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (compute->parsed()) return run_compute(spec_opts, tier_level, format, threads);
    if (hilbert->parsed()) return run_hilbert(spec_opts, format);
    if (stats->parsed())
      return run_stats(spec_opts, lgb::io::parse_degree_list(tiers_text), format,
                       threads);
    if (verify->parsed()) return run_verify(spec_opts, seeds, prime, budget, format);
    if (bench->parsed())
      return run_bench(spec_opts, lgb::io::parse_degree_list(tiers_text), threads);
  } catch (const lgb::genericity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const lgb::oracle::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
