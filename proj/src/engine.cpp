#include "infocast/engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "infocast/algorithms.hpp"
#include "infocast/chooser.hpp"
#include "infocast/metrics.hpp"
#include "infocast/topology.hpp"

namespace infocast {

NodeRuntime NodeRuntime::make(NodeId id, std::size_t n_symbols, DecoderMode mode,
                              const std::vector<SymbolId>& initial) {
  NodeRuntime rt;
  rt.buffer = {id, BitVector::from_indices(n_symbols, initial)};
  if (mode == DecoderMode::full) {
    rt.decoder.emplace(n_symbols);
    for (auto s : initial) rt.decoder->insert(xor_combine(std::span(&s, 1), n_symbols));
  }
  return rt;
}

DeliveryReport deliver(NodeRuntime& receiver, const CodedPacket& packet, DecoderMode mode) {
  DeliveryReport report;
  ++receiver.received;
  if (mode == DecoderMode::simple) {
    if (auto s = simple_decode(receiver.buffer.recovered, packet)) {
      receiver.buffer.recovered.set(*s);
      report.innovative = true;
      report.new_symbols.push_back(*s);
    }
  } else {
    if (!receiver.decoder) throw std::logic_error("deliver: full decoding without a decoder");
    auto result = receiver.decoder->insert(packet);
    report.innovative = result.innovative;
    for (auto s : result.newly_decoded) receiver.buffer.recovered.set(s);
    report.new_symbols = std::move(result.newly_decoded);
  }
  if (!report.immediate()) ++receiver.delay;
  return report;
}

namespace {

enum Stream : std::uint64_t { kTopology = 1, kChannel = 2, kSchedule = 3, kNodeBase = 1000 };

class Simulation {
 public:
  explicit Simulation(const ScenarioConfig& config)
      : config_(config),
        n_symbols_(config.n_symbols),
        topology_rng_(mix_seed(config.seed, kTopology)),
        channel_rng_(mix_seed(config.seed, kChannel)),
        schedule_rng_(mix_seed(config.seed, kSchedule)),
        degrees_(config.degree_table ? *config.degree_table : default_degree_table(config.n_symbols)) {
    config_.validate();
    build_topology();
    build_nodes();
  }

  RunLog run() {
    log_.config = config_;
    std::size_t round = 0;
    while (round < config_.max_rounds && !all_complete()) {
      if (mobility_ && round > 0) topology_ = step_mobility(*mobility_, config_.dt, config_.radius, topology_rng_);
      std::vector<NodeId> order = transmitters_;
      if (config_.scheduling == Scheduling::random) std::shuffle(order.begin(), order.end(), schedule_rng_);
      for (NodeId x : order) transmit(x);
      sample_potential(round);
      for (auto& trace : log_.nodes) {
        if (trace.completed_at && !trace.completion_round) trace.completion_round = round;
      }
      ++round;
    }
    log_.rounds = round;
    log_.complete = all_complete();
    return std::move(log_);
  }

 private:
  void build_topology() {
    switch (config_.scenario) {
      case Scenario::single_hop:
        topology_ = build_star(config_.n_nodes);
        break;
      case Scenario::grid:
        topology_ = build_grid(config_.grid_rows, config_.grid_cols);
        break;
      case Scenario::random:
        topology_ = build_random_geometric({config_.n_nodes, config_.density, 1000.0, 100}, topology_rng_);
        break;
      case Scenario::clustered:
        topology_ =
            build_clustered(config_.n_nodes, config_.clusters, config_.bridges, config_.density, topology_rng_).graph;
        break;
      case Scenario::mobile: {
        const double side = config_.arena > 0.0 ? config_.arena
                                                : calibrated_arena_side(config_.n_nodes, config_.radius,
                                                                        config_.density, config_.speed_min,
                                                                        config_.speed_max);
        mobility_ = init_mobility({config_.n_nodes, side, config_.radius, config_.speed_min, config_.speed_max},
                                  topology_rng_);
        topology_ = unit_disk_graph(mobility_->position, config_.radius);
        break;
      }
    }
  }

  void build_nodes() {
    const std::size_t total = topology_.size();
    nodes_.reserve(total);
    for (NodeId i = 0; i < total; ++i) {
      std::vector<SymbolId> initial;
      if (!config_.multi_hop()) {
        if (i == 0) {
          initial.resize(n_symbols_);
          std::iota(initial.begin(), initial.end(), SymbolId{0});
        }
      } else {
        initial.push_back(i);
      }
      nodes_.push_back(NodeRuntime::make(i, n_symbols_, config_.decoder, initial));
      choosers_.emplace_back(mix_seed(config_.seed, kNodeBase + i));
      uncoded_cursor_.push_back(0);
      rlnc_cursor_.push_back(0);
    }

    if (config_.multi_hop()) {
      transmitters_.resize(total);
      std::iota(transmitters_.begin(), transmitters_.end(), NodeId{0});
    } else {
      transmitters_ = {0};
    }
    for (NodeId i = config_.multi_hop() ? 0 : 1; i < total; ++i) {
      NodeTrace trace;
      trace.node = i;
      trace.initial_recovered = static_cast<std::uint32_t>(nodes_[i].buffer.recovered.count());
      if (trace.initial_recovered == n_symbols_) trace.completed_at = 0;
      trace_index_.push_back(log_.nodes.size());
      log_.nodes.push_back(std::move(trace));
    }
    // Maps node id -> trace slot; the single-hop source has none.
    std::vector<std::size_t> slot(total, kNoTrace);
    for (std::size_t k = 0; k < log_.nodes.size(); ++k) slot[log_.nodes[k].node] = k;
    trace_index_ = std::move(slot);
  }

  bool all_complete() const {
    return std::all_of(log_.nodes.begin(), log_.nodes.end(), [](const NodeTrace& t) { return t.completed_at.has_value(); });
  }

  /// Uncoded pass: the single-hop source sends every symbol once in order;
  /// a multi-hop node sends its own symbol in its first opportunity.
  std::optional<SymbolId> next_uncoded(NodeId x) {
    std::size_t& cursor = uncoded_cursor_[x];
    if (config_.multi_hop()) {
      if (cursor > 0) return std::nullopt;
      cursor = 1;
      return x;
    }
    if (cursor >= n_symbols_) return std::nullopt;
    return static_cast<SymbolId>(cursor++);
  }

  NeighborTable neighbor_table(NodeId x) const {
    NeighborTable table;
    for (NodeId j : topology_.neighbors(x)) table.add(j, nodes_[j].buffer.recovered);
    return table;
  }

  std::size_t anc_estimate(NodeId x, const NeighborTable& table) const {
    // The single-hop source always holds every symbol, so its own count says
    // nothing about its receivers. It sizes packets for the poorest receiver
    // that still misses something.
    const std::size_t own = nodes_[x].buffer.recovered.count();
    if (config_.multi_hop()) return own;
    std::size_t poorest = own;
    for (const auto& e : table.entries()) poorest = std::min(poorest, e.recovered.count());
    return poorest;
  }

  std::vector<SymbolId> select(NodeId x) {
    const NeighborTable table = neighbor_table(x);
    const NodeBuffer& own = nodes_[x].buffer;
    Chooser& chooser = choosers_[x];
    switch (config_.algorithm) {
      case Algorithm::opportunistic:
        return opportunistic_select(own, table, chooser).combined;
      case Algorithm::greedy:
        return greedy_select(own, table, chooser).combined;
      case Algorithm::equalizing:
        return equalizing_select(own, table, chooser).combined;
      case Algorithm::anc:
        return anc_select(own, table, degrees_, anc_estimate(x, table), chooser).combined;
      case Algorithm::systematic_rlnc:
        return systematic_rlnc_select(own, RlncPhase::coded, rlnc_cursor_[x], table, chooser).combined;
    }
    return {};
  }

  void transmit(NodeId x) {
    std::vector<SymbolId> combined;
    if (auto s = next_uncoded(x)) {
      combined.push_back(*s);
    } else {
      combined = select(x);
      if (config_.degree_cap && combined.size() > *config_.degree_cap) combined.resize(*config_.degree_cap);
    }
    if (combined.empty()) return;

    const CodedPacket packet = xor_combine(combined, n_symbols_);
    const auto packet_degree = static_cast<std::uint32_t>(combined.size());
    ++log_.transmissions;

    std::bernoulli_distribution erased(config_.multi_hop() ? 0.0 : config_.erasure_p);
    for (NodeId j : topology_.neighbors(x)) {
      // Drawn for every receiver so that the erasure pattern does not depend
      // on which receivers are still active.
      if (!config_.multi_hop() && erased(channel_rng_)) continue;
      const std::size_t slot = trace_index_[j];
      if (slot == kNoTrace) continue;
      NodeTrace& trace = log_.nodes[slot];
      if (trace.completed_at) continue;

      NodeRuntime& rx = nodes_[j];
      const DeliveryReport report = deliver(rx, packet, config_.decoder);
      const auto recovered = static_cast<std::uint32_t>(rx.buffer.recovered.count());
      trace.deliveries.push_back({static_cast<std::uint32_t>(rx.received), recovered, packet_degree, report.immediate()});
      trace.delay = static_cast<std::uint32_t>(rx.delay);
      if (recovered == n_symbols_) trace.completed_at = static_cast<std::uint32_t>(rx.received);
    }
  }

  void sample_potential(std::size_t round) {
    std::vector<BitVector> buffers;
    buffers.reserve(nodes_.size());
    for (const auto& n : nodes_) buffers.push_back(n.buffer.recovered);

    PotentialSample sample;
    sample.round = round;
    sample.per_node.resize(nodes_.size());
    double total = 0.0;
    std::size_t counted = 0;
    for (NodeId i = 0; i < nodes_.size(); ++i) {
      if (auto report = information_potential(topology_, buffers, i)) {
        sample.per_node[i] = report->mean;
        total += report->mean;
        ++counted;
      }
    }
    sample.mean = counted > 0 ? total / static_cast<double>(counted) : 0.0;
    log_.potential.push_back(std::move(sample));
  }

  static constexpr std::size_t kNoTrace = static_cast<std::size_t>(-1);

  ScenarioConfig config_;
  std::size_t n_symbols_;
  std::mt19937_64 topology_rng_;
  std::mt19937_64 channel_rng_;
  std::mt19937_64 schedule_rng_;
  DegreeTable degrees_;

  Topology topology_;
  std::optional<MobilityState> mobility_;
  std::vector<NodeRuntime> nodes_;
  std::vector<RngChooser> choosers_;
  std::vector<std::size_t> uncoded_cursor_;
  std::vector<std::size_t> rlnc_cursor_;
  std::vector<NodeId> transmitters_;
  std::vector<std::size_t> trace_index_;
  RunLog log_;
};

}  // namespace

RunLog run(const ScenarioConfig& config) { return Simulation(config).run(); }

}  // namespace infocast
