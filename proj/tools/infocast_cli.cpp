// infocast: batch driver for broadcast network-coding experiments.
//
//   infocast --scenario single_hop --algorithm greedy --decoder simple --runs 50 --seed 7 --out ./res
//   infocast --figure grid --runs 100 --workers 4 --out ./grid
//
// A config file (--config) takes the same keys as the long flags, e.g.
//   scenario = "grid"
//   runs = 20
// Flags given on the command line win over the file.
//
// Exit status: 0 ok, 2 usage/config error, 3 I/O error, 4 too many incomplete runs.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "infocast/campaign.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kIo = 3;
constexpr int kIncomplete = 4;

}  // namespace

int main(int argc, char** argv) {
  using namespace infocast;

  CLI::App app{"Informed network coding broadcast simulator"};
  app.set_config("--config", "", "Config file mirroring the long flags");

  std::optional<std::string> figure, scenario, algorithm, decoder, scheduling, degree_table;
  std::optional<std::size_t> nodes, symbols, degree_cap, max_rounds;
  std::optional<double> erasure;
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::string out_dir = "results";
  double max_incomplete = 0.0;

  app.add_option("--figure", figure, "Preset: 1hop, 1hop-full, grid, random, clustered, mobile, mobile-full");
  app.add_option("--scenario", scenario, "single_hop | grid | random | clustered | mobile");
  app.add_option("--algorithm", algorithm, "systematic_rlnc | anc | opportunistic | greedy | equalizing");
  app.add_option("--decoder", decoder, "simple | full");
  app.add_option("--runs", runs, "Seeded runs per variant")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "First seed; run i uses seed + i");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--nodes", nodes, "Receivers (single-hop) or total nodes");
  app.add_option("--symbols", symbols, "Original symbols (multi-hop: must equal --nodes)");
  app.add_option("--erasure", erasure, "Erasure probability (single-hop only)")->check(CLI::Range(0.0, 1.0));
  app.add_option("--scheduling", scheduling, "sequential | random");
  app.add_option("--degree-cap", degree_cap, "Truncate every selection to this many symbols")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-rounds", max_rounds, "Round limit per run")->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--degree-table", degree_table, "ANC degree table file (\"r D\" pairs)");
  std::optional<std::size_t> grid_rows, grid_cols, clusters, bridges;
  std::optional<double> density, radius, arena, dt, speed_min, speed_max;
  auto* topo = "Topology";
  app.add_option("--grid-rows", grid_rows, "Grid rows")->group(topo);
  app.add_option("--grid-cols", grid_cols, "Grid columns")->group(topo);
  app.add_option("--density", density, "Target mean degree (random, clustered, mobile)")->group(topo);
  app.add_option("--clusters", clusters, "Clusters in the clustered scenario")->group(topo);
  app.add_option("--bridges", bridges, "Bridge links between adjacent clusters")->group(topo);
  app.add_option("--radius", radius, "Mobile radio range (m)")->group(topo);
  app.add_option("--arena", arena, "Mobile arena side (m); 0 calibrates to --density")->group(topo);
  app.add_option("--dt", dt, "Seconds of movement per round")->group(topo);
  app.add_option("--speed-min", speed_min, "Minimum node speed (m/s)")->group(topo);
  app.add_option("--speed-max", speed_max, "Maximum node speed (m/s)")->group(topo);
  app.add_option("--max-incomplete", max_incomplete, "Tolerated fraction of incomplete runs")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  Campaign campaign;
  try {
    if (figure) {
      campaign = figure_preset(*figure);
    } else {
      campaign.variants.push_back({});
    }
    ScenarioConfig& base = campaign.base;
    if (scenario) {
      base.scenario = parse_scenario(*scenario);
      if (!erasure && base.multi_hop()) base.erasure_p = 0.0;
    }
    if (nodes) base.n_nodes = *nodes;
    if (symbols) {
      base.n_symbols = *symbols;
    } else if (base.multi_hop()) {
      base.n_symbols = base.n_nodes;
    }
    if (erasure) base.erasure_p = *erasure;
    if (scheduling) base.scheduling = parse_scheduling(*scheduling);
    if (max_rounds) base.max_rounds = *max_rounds;
    if (grid_rows) base.grid_rows = *grid_rows;
    if (grid_cols) base.grid_cols = *grid_cols;
    if (density) base.density = *density;
    if (clusters) base.clusters = *clusters;
    if (bridges) base.bridges = *bridges;
    if (radius) base.radius = *radius;
    if (arena) base.arena = *arena;
    if (dt) base.dt = *dt;
    if (speed_min) base.speed_min = *speed_min;
    if (speed_max) base.speed_max = *speed_max;
    if (degree_table) base.degree_table = DegreeTable::load(*degree_table, base.n_symbols);

    if (algorithm || decoder || !figure) {
      Variant v = campaign.variants.front();
      if (algorithm) v.algorithm = parse_algorithm(*algorithm);
      if (decoder) v.decoder = parse_decoder(*decoder);
      campaign.variants = {v};
    }
    for (auto& v : campaign.variants) {
      if (degree_cap) v.degree_cap = degree_cap;
    }
    campaign.runs = runs;
    campaign.seed_base = seed;
    campaign.workers = workers;
    base.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::vector<VariantResult> results;
  try {
    for (const auto& v : campaign.variants) {
      std::cerr << "running " << v.label() << " x" << campaign.runs << "\n";
      results.push_back(run_variant(campaign, v));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    write_results(results, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }

  emit_summary(results, std::cout);

  for (const auto& r : results) {
    const double frac = static_cast<double>(r.incomplete) / static_cast<double>(r.runs);
    if (frac > max_incomplete) {
      std::cerr << r.variant.label() << ": " << r.incomplete << " of " << r.runs << " runs did not complete\n";
      return kIncomplete;
    }
  }
  return 0;
}
