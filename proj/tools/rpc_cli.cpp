// Command-line front end: instance generation, match enumeration, single
// solves, day-long benchmarks and the exhaustive reference solver. Every
// option can also be set through an RPC_-prefixed environment variable.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpc/generator.hpp"
#include "rpc/instance.hpp"
#include "rpc/oracle.hpp"
#include "rpc/runner.hpp"

namespace {

rpc::GenConfig load_config(const std::string& path, const std::string& variant_override,
                           std::optional<std::uint64_t> seed_override) {
  rpc::GenConfig config;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    nlohmann::json j;
    in >> j;
    config = rpc::config_from_json(j);
  }
  if (!variant_override.empty()) config.variant = variant_override;
  if (seed_override) config.seed = *seed_override;
  return config;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

nlohmann::json solution_json(const rpc::Hypergraph& h, const std::optional<rpc::Matching>& m,
                             rpc::Money target) {
  nlohmann::json j;
  j["target_cents"] = target;
  j["feasible"] = m.has_value();
  if (m) {
    j["served"] = m->served;
    j["matches"] = m->size();
    j["profit_cents"] = m->weight;
    nlohmann::json edges = nlohmann::json::array();
    for (rpc::EdgeId id : m->edge_ids) {
      const rpc::HyperEdge& e = h.edge(id);
      edges.push_back({{"edge", e.id},
                       {"driver", e.driver},
                       {"passengers", e.passengers},
                       {"profit_cents", e.weight}});
    }
    j["edges"] = edges;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"profit-constrained ridesharing solvers and benchmark harness"};
  app.require_subcommand(1);

  std::string config_path, variant, out_path, in_path, algo = "exactnf2", algos_csv;
  std::string cost_setting = "base";
  std::optional<std::uint64_t> seed;
  int interval = 0, intervals = -1;
  double target_factor = 1.0, tau = -1.0;
  std::optional<long long> target_cents;
  bool no_timing = false;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "generator config JSON")->envname("RPC_CONFIG");
    cmd->add_option("--variant", variant, "problem variant: rpc1|rpcplus|rp")
        ->envname("RPC_VARIANT");
    cmd->add_option("--seed", seed, "seed override")->envname("RPC_SEED");
  };
  auto add_pricing = [&](CLI::App* cmd) {
    cmd->add_option("--tau", tau, "candidate prefilter discount (default by variant)")
        ->envname("RPC_TAU");
    cmd->add_option("--cost-setting", cost_setting, "base|S1..S6")->envname("RPC_COST_SETTING");
  };
  auto add_target = [&](CLI::App* cmd) {
    cmd->add_option("--target-factor", target_factor,
                    "profit target as a fraction of the seed matching")
        ->envname("RPC_TARGET_FACTOR");
    cmd->add_option("--target-cents", target_cents, "absolute profit target, cents")
        ->envname("RPC_TARGET_CENTS");
  };

  CLI::App* gen = app.add_subcommand("generate", "sample one interval's instance");
  add_config(gen);
  gen->add_option("--interval", interval, "interval index")->envname("RPC_INTERVAL");
  gen->add_option("-o,--out", out_path, "output instance JSON")->required();

  CLI::App* matches = app.add_subcommand("matches", "enumerate and price feasible matches");
  matches->add_option("-i,--in", in_path, "instance JSON")->required();
  matches->add_option("-o,--out", out_path, "output instance JSON")->required();
  add_pricing(matches);

  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("-i,--in", in_path, "instance JSON")->required();
  solve->add_option("--algo", algo, "exactnf2|greedy|simplegreedy|ls2|oracle")
      ->envname("RPC_ALGO");
  solve->add_option("--variant", variant, "problem variant override")->envname("RPC_VARIANT");
  solve->add_option("-o,--out", out_path, "write solution JSON here (stdout otherwise)");
  add_target(solve);
  add_pricing(solve);

  CLI::App* bench = app.add_subcommand("bench", "run a full day and report CSV + summary");
  add_config(bench);
  bench->add_option("--algos", algos_csv, "comma-separated algorithm list")
      ->envname("RPC_ALGOS");
  bench->add_option("--intervals", intervals, "limit the number of intervals")
      ->envname("RPC_INTERVALS");
  bench->add_flag("--no-timing", no_timing, "report runtime_ms as 0 for reproducible output");
  bench->add_option("-o,--out", out_path, "output prefix (.csv and .json appended)")->required();
  add_target(bench);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solve");
  oracle->add_option("-i,--in", in_path, "instance JSON")->required();
  oracle->add_option("--variant", variant, "problem variant override")->envname("RPC_VARIANT");
  add_target(oracle);
  add_pricing(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      rpc::GenConfig config = load_config(config_path, variant, seed);
      rpc::RoadNetwork network = rpc::build_grid_network(config);
      rpc::Instance inst = rpc::generate_instance(config, network, interval);
      rpc::save_instance(inst, out_path);
      std::cout << "instance: " << inst.drivers.size() << " drivers, "
                << inst.passengers.size() << " passengers -> " << out_path << "\n";
      return 0;
    }

    if (*bench) {
      rpc::GenConfig config = load_config(config_path, variant, seed);
      rpc::BenchOptions options;
      options.algorithms = algos_csv.empty()
                               ? (config.variant == "rpc1"
                                      ? std::vector<std::string>{"exactnf2", "greedy"}
                                      : std::vector<std::string>{"simplegreedy", "ls2"})
                               : split_list(algos_csv);
      options.target.factor = target_factor;
      if (target_cents) options.target.absolute = *target_cents;
      options.measure_runtime = !no_timing;
      options.intervals = intervals;
      rpc::BenchResult result = rpc::run_bench(config, options);
      write_file(out_path + ".csv", result.csv);
      write_file(out_path + ".json", result.summary.dump(2) + "\n");
      std::cout << result.summary.dump(2) << "\n";
      return 0;
    }

    rpc::Instance inst = rpc::load_instance(in_path);
    const std::string var = variant.empty() ? inst.variant : variant;
    rpc::MatchCaps caps;
    caps.tau = tau >= 0 ? tau : (var == "rpc1" ? 0.6 : 0.8);
    rpc::CostSetting setting = rpc::cost_setting_from_name(cost_setting);

    if (*matches) {
      rpc::build_instance_matches(inst, caps, rpc::FeeSchedule{}, setting);
      rpc::save_instance(inst, out_path);
      std::cout << "matches: " << inst.matches.size() << " -> " << out_path << "\n";
      return 0;
    }

    if (*solve || *oracle) {
      if (!inst.has_matches) rpc::build_instance_matches(inst, caps, rpc::FeeSchedule{}, setting);
      std::unordered_map<rpc::DriverId, int> capacities;
      int lambda = 1;
      for (const rpc::Driver& d : inst.drivers) {
        capacities.emplace(d.id, d.capacity);
        lambda = std::max(lambda, d.capacity);
      }
      rpc::Hypergraph h = rpc::build_hypergraph(inst.matches, &capacities);
      rpc::TargetRule rule;
      rule.factor = target_factor;
      if (target_cents) rule.absolute = *target_cents;
      rpc::Money target = rpc::target_from_rule(var, h, lambda, rule);
      std::string chosen = *oracle ? std::string("oracle") : algo;
      std::optional<rpc::Matching> result =
          rpc::dispatch_algorithm(chosen, var, h, target, lambda);
      if (result) {
        rpc::ValidationResult check = rpc::validate_matching(h, *result);
        if (!check.ok) throw std::logic_error("solver returned invalid matching: " + check.message);
      }
      std::string body = solution_json(h, result, target).dump(2) + "\n";
      if (out_path.empty())
        std::cout << body;
      else
        write_file(out_path, body);
      return result ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
