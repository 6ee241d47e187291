#include "infocast/scenario_config.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace infocast {

namespace {

template <typename Enum, std::size_t N>
Enum parse_name(std::string_view name, const std::array<std::pair<Enum, std::string_view>, N>& names,
                std::string_view what) {
  std::string listing;
  for (const auto& [value, text] : names) {
    if (text == name) return value;
    listing += listing.empty() ? "" : ", ";
    listing += text;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(name) + "' (expected one of: " +
                              listing + ")");
}

template <typename Enum, std::size_t N>
std::string_view name_of(Enum v, const std::array<std::pair<Enum, std::string_view>, N>& names) {
  for (const auto& [value, text] : names) {
    if (value == v) return text;
  }
  return "?";
}

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarios{{
    {Scenario::single_hop, "single_hop"},
    {Scenario::grid, "grid"},
    {Scenario::random, "random"},
    {Scenario::clustered, "clustered"},
    {Scenario::mobile, "mobile"},
}};

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithms{{
    {Algorithm::systematic_rlnc, "systematic_rlnc"},
    {Algorithm::anc, "anc"},
    {Algorithm::opportunistic, "opportunistic"},
    {Algorithm::greedy, "greedy"},
    {Algorithm::equalizing, "equalizing"},
}};

constexpr std::array<std::pair<DecoderMode, std::string_view>, 2> kDecoders{{
    {DecoderMode::simple, "simple"},
    {DecoderMode::full, "full"},
}};

constexpr std::array<std::pair<Scheduling, std::string_view>, 2> kSchedulings{{
    {Scheduling::sequential, "sequential"},
    {Scheduling::random, "random"},
}};

}  // namespace

std::string_view to_string(Scenario v) { return name_of(v, kScenarios); }
std::string_view to_string(Algorithm v) { return name_of(v, kAlgorithms); }
std::string_view to_string(DecoderMode v) { return name_of(v, kDecoders); }
std::string_view to_string(Scheduling v) { return name_of(v, kSchedulings); }

Scenario parse_scenario(std::string_view name) { return parse_name(name, kScenarios, "scenario"); }
Algorithm parse_algorithm(std::string_view name) { return parse_name(name, kAlgorithms, "algorithm"); }
DecoderMode parse_decoder(std::string_view name) { return parse_name(name, kDecoders, "decoder"); }
Scheduling parse_scheduling(std::string_view name) { return parse_name(name, kSchedulings, "scheduling"); }

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid scenario config: " + msg); };
  if (n_nodes < 1) fail("need at least one node");
  if (n_symbols < 1) fail("need at least one symbol");
  if (!(erasure_p >= 0.0 && erasure_p <= 1.0)) fail("erasure probability must lie in [0, 1]");
  if (multi_hop()) {
    if (n_symbols != n_nodes) fail("multi-hop scenarios carry one symbol per node (symbols == nodes)");
    if (erasure_p != 0.0) fail("erasures apply to the single-hop scenario only");
    if (n_nodes < 2) fail("multi-hop scenarios need at least two nodes");
  }
  if (degree_cap && *degree_cap < 1) fail("degree cap must be >= 1");
  if (max_rounds < 1) fail("max_rounds must be >= 1");
  if (scenario == Scenario::grid && grid_rows * grid_cols != n_nodes) fail("grid rows * cols must equal the node count");
  if (scenario == Scenario::clustered && (clusters < 2 || n_nodes % clusters != 0)) {
    fail("clustered scenario needs >= 2 clusters dividing the node count");
  }
  if (density <= 0.0) fail("density must be positive");
  if (scenario == Scenario::mobile) {
    if (radius <= 0.0 || dt <= 0.0 || arena < 0.0) fail("mobile radius and dt must be positive");
    if (speed_min <= 0.0 || speed_max < speed_min) fail("need 0 < speed_min <= speed_max");
  }
  if (degree_table && degree_table->n_symbols() != n_symbols) fail("degree table size does not match the symbol count");
}

bool same_experiment(const ScenarioConfig& a, const ScenarioConfig& b) {
  auto table_values = [](const ScenarioConfig& c) {
    return c.degree_table ? c.degree_table->values() : std::vector<std::size_t>{};
  };
  return a.scenario == b.scenario && a.algorithm == b.algorithm && a.decoder == b.decoder && a.n_nodes == b.n_nodes &&
         a.n_symbols == b.n_symbols && a.erasure_p == b.erasure_p && a.scheduling == b.scheduling &&
         a.degree_cap == b.degree_cap && a.max_rounds == b.max_rounds && a.grid_rows == b.grid_rows &&
         a.grid_cols == b.grid_cols && a.density == b.density && a.clusters == b.clusters && a.bridges == b.bridges &&
         a.radius == b.radius && a.arena == b.arena && a.dt == b.dt && a.speed_min == b.speed_min &&
         a.speed_max == b.speed_max && table_values(a) == table_values(b);
}

}  // namespace infocast
