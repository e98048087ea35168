#pragma once

// Benchmark pipeline: builds the match hypergraph of an instance, derives
// the per-interval profit target from the variant's seed matching, runs the
// requested algorithms and reports one CSV row per (interval, algorithm).
// Reports are deterministic for a fixed seed and config except the runtime
// column, which prints 0 when timing is disabled.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "rpc/flow_solver.hpp"
#include "rpc/generator.hpp"
#include "rpc/greedy.hpp"
#include "rpc/hypergraph.hpp"
#include "rpc/instance.hpp"
#include "rpc/ls2.hpp"
#include "rpc/matchgen.hpp"
#include "rpc/oracle.hpp"

namespace rpc {

// Target rule: absolute cents when given; otherwise interpolated from the
// variant's seed matching. rpc1: target = llround(factor * w(seed)).
// rpcplus: target = LB + llround(factor * (w(seed) - LB)) where LB =
// min(profit_target_bound(seed, lambda), floor(0.6 w(seed))), so factors
// 1 / 0.5 / 0 give the three canonical targets.
struct TargetRule {
  std::optional<Money> absolute;
  double factor = 1.0;
};

struct IntervalReport {
  int interval = 0;
  std::string algorithm;
  Money target_cents = 0;
  int served = 0;
  int matches = 0;
  Money profit_cents = 0;
  int negative_matches = 0;
  std::int64_t runtime_ms = 0;
  double occupancy = 0.0;
  bool feasible = false;
  int drivers = 0;
  int passengers = 0;
  Money seed_weight = 0;
};

// Fills inst.matches by running match generation with the instance's own
// pricing substream, so results are identical whether matches are built
// in-process or on a reloaded serialized instance.
inline void build_instance_matches(Instance& inst, const MatchCaps& caps,
                                   const FeeSchedule& fees, const CostSetting& setting) {
  MatchGenEnv env;
  env.net = &inst.network;
  env.speeds = &inst.speeds;
  env.peak = inst.is_peak();
  env.caps = caps;
  env.fees = fees;
  env.setting = setting;
  std::mt19937_64 rng = substream(inst.seed, inst.interval, StreamPhase::kPricing);
  inst.matches = enumerate_matches(inst.drivers, inst.passengers, env, rng);
  inst.has_matches = true;
}

inline Money target_from_rule(const std::string& variant, const Hypergraph& h, int lambda,
                              const TargetRule& rule, Money* seed_weight_out = nullptr) {
  if (variant == "rp") {
    if (seed_weight_out) *seed_weight_out = 0;
    return 0;
  }
  Matching seed = variant == "rpc1" ? max_weight_matching(h) : simple_greedy(h);
  if (seed_weight_out) *seed_weight_out = seed.weight;
  if (rule.absolute) return *rule.absolute;
  if (variant == "rpc1") return std::llround(rule.factor * static_cast<double>(seed.weight));
  Money lb = std::min(profit_target_bound(h, seed, lambda), 6 * seed.weight / 10);
  return lb + std::llround(rule.factor * static_cast<double>(seed.weight - lb));
}

inline std::optional<Matching> dispatch_algorithm(const std::string& algo,
                                                  const std::string& variant,
                                                  const Hypergraph& h, Money target, int lambda) {
  if (algo == "exactnf2") {
    if (variant == "rp") return max_weight_matching(h);
    return solve_rpc1_exact(h, target);
  }
  if (algo == "greedy") return greedy_rpc1(h, target);
  if (algo == "simplegreedy") {
    Matching m = simple_greedy(h);
    if (variant != "rp" && m.weight < target) return std::nullopt;
    return m;
  }
  if (algo == "ls2") return ls2(h, target, lambda);
  if (algo == "oracle") {
    if (variant == "rpc1") return brute_rpc1(h, target);
    if (variant == "rpcplus") return brute_rpcplus(h, target);
    return brute_rp(h);
  }
  throw std::invalid_argument("unknown algorithm: " + algo);
}

// Runs each algorithm on one priced instance and reports per-algorithm rows.
inline std::vector<IntervalReport> run_batch(const Instance& inst, const std::string& variant,
                                             const std::vector<std::string>& algorithms,
                                             const TargetRule& rule, bool measure_runtime = true) {
  if (!inst.has_matches) throw std::invalid_argument("instance has no matches");
  std::unordered_map<DriverId, int> capacities;
  int lambda = 1;
  for (const Driver& d : inst.drivers) {
    capacities.emplace(d.id, d.capacity);
    lambda = std::max(lambda, d.capacity);
  }
  Hypergraph h = build_hypergraph(inst.matches, &capacities);

  Money seed_weight = 0;
  Money target = target_from_rule(variant, h, lambda, rule, &seed_weight);

  std::vector<IntervalReport> reports;
  for (const std::string& algo : algorithms) {
    IntervalReport rep;
    rep.interval = inst.interval;
    rep.algorithm = algo;
    rep.target_cents = variant == "rp" ? 0 : target;
    rep.drivers = static_cast<int>(inst.drivers.size());
    rep.passengers = static_cast<int>(inst.passengers.size());
    rep.seed_weight = seed_weight;
    auto t0 = std::chrono::steady_clock::now();
    std::optional<Matching> result = dispatch_algorithm(algo, variant, h, target, lambda);
    auto t1 = std::chrono::steady_clock::now();
    if (measure_runtime)
      rep.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (result) {
      rep.feasible = true;
      rep.served = result->served;
      rep.matches = result->size();
      rep.profit_cents = result->weight;
      for (EdgeId id : result->edge_ids)
        if (h.edge(id).weight < 0) ++rep.negative_matches;
    }
    rep.occupancy = rep.drivers > 0
                        ? static_cast<double>(rep.served + rep.drivers) / rep.drivers
                        : 0.0;
    reports.push_back(std::move(rep));
  }
  return reports;
}

inline std::string report_csv(const std::vector<IntervalReport>& reports) {
  std::string out =
      "interval,algorithm,target_cents,served,matches,profit_cents,negative_matches,"
      "runtime_ms,occupancy\n";
  char line[256];
  for (const IntervalReport& r : reports) {
    std::snprintf(line, sizeof line, "%d,%s,%lld,%d,%d,%lld,%d,%lld,%.6f\n", r.interval,
                  r.algorithm.c_str(), static_cast<long long>(r.target_cents), r.served,
                  r.matches, static_cast<long long>(r.profit_cents), r.negative_matches,
                  static_cast<long long>(r.runtime_ms), r.occupancy);
    out += line;
  }
  return out;
}

// Aggregates per algorithm: totals over intervals plus mean occupancy.
inline nlohmann::json report_summary(const std::vector<IntervalReport>& reports) {
  struct Agg {
    long long served = 0, matches = 0, profit = 0, negative = 0, runtime = 0;
    long long feasible = 0, infeasible = 0;
    double occupancy_sum = 0;
    long long rows = 0;
  };
  std::unordered_map<std::string, Agg> by_algo;
  std::vector<std::string> order;
  for (const IntervalReport& r : reports) {
    if (!by_algo.count(r.algorithm)) order.push_back(r.algorithm);
    Agg& a = by_algo[r.algorithm];
    a.served += r.served;
    a.matches += r.matches;
    a.profit += r.profit_cents;
    a.negative += r.negative_matches;
    a.runtime += r.runtime_ms;
    (r.feasible ? a.feasible : a.infeasible) += 1;
    a.occupancy_sum += r.occupancy;
    a.rows += 1;
  }
  nlohmann::json algos = nlohmann::json::object();
  for (const std::string& name : order) {
    const Agg& a = by_algo[name];
    algos[name] = {{"served", a.served},
                   {"matches", a.matches},
                   {"profit_cents", a.profit},
                   {"negative_matches", a.negative},
                   {"runtime_ms", a.runtime},
                   {"feasible_intervals", a.feasible},
                   {"infeasible_intervals", a.infeasible},
                   {"mean_occupancy", a.rows ? a.occupancy_sum / a.rows : 0.0}};
  }
  return nlohmann::json{{"rows", reports.size()}, {"algorithms", algos}};
}

struct BenchOptions {
  std::vector<std::string> algorithms;
  TargetRule target;
  bool measure_runtime = true;
  int intervals = -1;  // -1: the config's full day
};

struct BenchResult {
  std::vector<IntervalReport> reports;
  std::string csv;
  nlohmann::json summary;
};

// Full-day pipeline: generate, enumerate matches, solve, report — interval
// by interval over one shared road network.
inline BenchResult run_bench(const GenConfig& config, const BenchOptions& options) {
  RoadNetwork network = build_grid_network(config);
  MatchCaps caps = config.caps;
  caps.tau = config.resolved_tau();
  CostSetting setting = cost_setting_from_name(config.cost_setting);
  const int total = options.intervals < 0 ? config.day.intervals : options.intervals;

  BenchResult result;
  for (int interval = 0; interval < total; ++interval) {
    Instance inst = generate_instance(config, network, interval);
    build_instance_matches(inst, caps, config.fees, setting);
    std::vector<IntervalReport> rows =
        run_batch(inst, config.variant, options.algorithms, options.target,
                  options.measure_runtime);
    result.reports.insert(result.reports.end(), rows.begin(), rows.end());
  }
  result.csv = report_csv(result.reports);
  result.summary = report_summary(result.reports);
  result.summary["variant"] = config.variant;
  result.summary["seed"] = config.seed;
  result.summary["target_factor"] = options.target.factor;
  result.summary["intervals"] = total;
  return result;
}

}  // namespace rpc
