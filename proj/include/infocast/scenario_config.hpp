// Scenario description consumed by the simulation engine.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "infocast/algorithms.hpp"

namespace infocast {

enum class Scenario { single_hop, grid, random, clustered, mobile };
enum class Algorithm { systematic_rlnc, anc, opportunistic, greedy, equalizing };
enum class DecoderMode { simple, full };
enum class Scheduling { sequential, random };

std::string_view to_string(Scenario v);
std::string_view to_string(Algorithm v);
std::string_view to_string(DecoderMode v);
std::string_view to_string(Scheduling v);

/// Parsers throw std::invalid_argument listing the accepted names.
Scenario parse_scenario(std::string_view name);
Algorithm parse_algorithm(std::string_view name);
DecoderMode parse_decoder(std::string_view name);
Scheduling parse_scheduling(std::string_view name);

struct ScenarioConfig {
  Scenario scenario = Scenario::single_hop;
  Algorithm algorithm = Algorithm::greedy;
  DecoderMode decoder = DecoderMode::simple;
  /// Receivers in the single-hop scenario; total nodes otherwise.
  std::size_t n_nodes = 100;
  /// Must equal n_nodes in multi-hop scenarios (one symbol per node).
  std::size_t n_symbols = 100;
  /// Per-receiver erasure probability; single-hop only.
  double erasure_p = 0.5;
  Scheduling scheduling = Scheduling::sequential;
  /// Truncates every selection to its first `degree_cap` symbols.
  std::optional<std::size_t> degree_cap;
  std::uint64_t seed = 1;
  /// Single-hop: source transmissions. Multi-hop: rounds.
  std::size_t max_rounds = 20000;

  // Topology knobs.
  std::size_t grid_rows = 10;
  std::size_t grid_cols = 10;
  double density = 8.0;  ///< target mean degree for random, clustered and mobile
  std::size_t clusters = 4;
  std::size_t bridges = 1;
  double radius = 50.0;  ///< mobile communication range (m)
  double arena = 0.0;    ///< mobile arena side (m); 0 = calibrated to `density`
  double dt = 1.0;       ///< seconds of movement per round
  double speed_min = 2.0;
  double speed_max = 4.0;

  /// ANC degree table; the default hypergeometric table when unset.
  std::optional<DegreeTable> degree_table;

  bool multi_hop() const { return scenario != Scenario::single_hop; }
  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// True when the two configs differ at most in their seed.
bool same_experiment(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace infocast
