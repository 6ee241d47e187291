// Per-run metric trace produced by the engine.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "infocast/scenario_config.hpp"
#include "infocast/state.hpp"

namespace infocast {

/// One delivered packet, as seen by the receiver right after decoding it.
struct DeliveryRecord {
  std::uint32_t received = 0;   ///< receiver's delivery count, starting at 1
  std::uint32_t recovered = 0;  ///< receiver's recovered count after decoding
  std::uint32_t degree = 0;
  bool immediate = false;  ///< yielded at least one new symbol right away

  friend bool operator==(const DeliveryRecord&, const DeliveryRecord&) = default;
};

struct NodeTrace {
  NodeId node = 0;
  std::uint32_t initial_recovered = 0;
  std::vector<DeliveryRecord> deliveries;
  std::uint32_t delay = 0;
  /// Delivery count at which the node held every symbol.
  std::optional<std::uint32_t> completed_at;
  std::optional<std::size_t> completion_round;

  friend bool operator==(const NodeTrace&, const NodeTrace&) = default;
};

/// Information potential at the end of a round.
struct PotentialSample {
  std::size_t round = 0;
  /// Mean over non-isolated nodes of their neighbor-averaged potential.
  double mean = 0.0;
  /// Per node; empty for isolated nodes.
  std::vector<std::optional<double>> per_node;

  friend bool operator==(const PotentialSample&, const PotentialSample&) = default;
};

struct RunLog {
  ScenarioConfig config;
  std::vector<NodeTrace> nodes;  ///< measured nodes only (receivers in single-hop)
  std::vector<PotentialSample> potential;
  bool complete = false;
  std::size_t rounds = 0;
  std::size_t transmissions = 0;
};

}  // namespace infocast
