// Round-based broadcast simulation with an ideal collision-free MAC.
//
// Every round each transmitter fires once (sequential or shuffled order).
// A transmission reaches the sender's current neighbors; in the single-hop
// scenario each receiver independently erases it with probability p. Senders
// see their neighbors' decoded sets exactly (perfect, instantaneous
// feedback). All transmitters start with an uncoded pass over the symbols
// they originate before any coding decision is made.
//
// Random streams, all derived from the run seed:
//   topology and mobility, channel erasures, schedule shuffles, and one
//   selection stream per node.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infocast/codec.hpp"
#include "infocast/run_log.hpp"
#include "infocast/scenario_config.hpp"
#include "infocast/state.hpp"

namespace infocast {

struct NodeRuntime {
  NodeBuffer buffer;
  std::optional<GaussJordanDecoder> decoder;  ///< full decoding only
  std::size_t received = 0;
  std::size_t delay = 0;

  /// A node starting with `initial` symbols; full mode seeds the decoder
  /// with their unit vectors.
  static NodeRuntime make(NodeId id, std::size_t n_symbols, DecoderMode mode, const std::vector<SymbolId>& initial);
};

struct DeliveryReport {
  bool innovative = false;
  std::vector<SymbolId> new_symbols;
  bool immediate() const { return !new_symbols.empty(); }
};

/// Simple mode keeps a packet only if it is immediately decodable; full
/// mode runs Gauss-Jordan. Always counts the reception; counts a delay when
/// no new symbol became available.
DeliveryReport deliver(NodeRuntime& receiver, const CodedPacket& packet, DecoderMode mode);

/// Runs the scenario until every measured node holds every symbol or
/// `max_rounds` elapse (then the log is flagged incomplete).
RunLog run(const ScenarioConfig& config);

}  // namespace infocast
