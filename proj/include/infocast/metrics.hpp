// Recovery rate, codeword degree, packet delay and information potential,
// aggregated across nodes and seeded runs.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "infocast/bit_vector.hpp"
#include "infocast/run_log.hpp"
#include "infocast/topology.hpp"

namespace infocast {

struct CurvePoint {
  std::size_t x = 0;
  double mean = 0.0;
  /// 95% normal-approximation half width over the pooled samples at x.
  double ci_half = 0.0;
  std::size_t n = 0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct AggregateCurve {
  std::vector<CurvePoint> points;

  /// Mean at x, or nullopt when no sample landed there.
  std::optional<double> at(std::size_t x) const;
  /// Largest mean over the curve (0 for an empty curve).
  double peak() const;
};

/// Running per-x sums. Merging accumulators equals accumulating the union
/// of their samples, so per-run partial aggregates can be combined later.
class CurveAccumulator {
 public:
  void add(std::size_t x, double value);
  void merge(const CurveAccumulator& other);
  AggregateCurve finish() const;
  bool empty() const { return count_.empty(); }

 private:
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
  std::vector<std::size_t> count_;
};

/// Recovered count of `trace` after its x-th delivery, carried forward past
/// the last one.
std::size_t recovered_at(const NodeTrace& trace, std::size_t x);

/// Largest delivery count observed in the run.
std::size_t max_received(const RunLog& log);

// Per-run accumulation; x ranges over [0, x_max].
void accumulate_recovery(const RunLog& log, std::size_t x_max, CurveAccumulator& acc);
void accumulate_degree(const RunLog& log, CurveAccumulator& acc);
void accumulate_delay(const RunLog& log, std::size_t x_max, CurveAccumulator& acc);
void accumulate_potential(const RunLog& log, CurveAccumulator& acc);

/// Throws std::invalid_argument on an empty set or mixed configurations.
AggregateCurve recovery_curve(std::span<const RunLog> logs);
/// Mean degree of the x-th delivered packet, over nodes that received one.
AggregateCurve avg_degree_curve(std::span<const RunLog> logs);
/// Cumulative delay after x deliveries, carried forward past completion.
AggregateCurve delay_curve(std::span<const RunLog> logs);
/// Neighborhood information potential keyed by round.
AggregateCurve potential_curve(std::span<const RunLog> logs);

struct DelaySummary {
  /// Delay at completion; empty for nodes that never completed (censored).
  std::vector<std::optional<std::size_t>> per_node;
  double mean = 0.0;      ///< over completed nodes
  std::size_t max = 0;    ///< worst completed node
  std::size_t censored = 0;
};

DelaySummary packet_delay(const RunLog& log);

/// Delivery count at which the last measured node completed; empty if some
/// node never completed.
std::optional<std::size_t> full_recovery_point(const RunLog& log);
/// Mean completion delivery count over completed nodes.
std::optional<double> mean_completion_point(const RunLog& log);

struct PotentialReport {
  std::vector<std::size_t> per_neighbor;  ///< |B_j \ B_x| in neighbor order
  double mean = 0.0;
};

/// Symbols each neighbor holds that `node` lacks. Empty for isolated nodes.
std::optional<PotentialReport> information_potential(const Topology& topology, std::span<const BitVector> buffers,
                                                     NodeId node);

}  // namespace infocast
