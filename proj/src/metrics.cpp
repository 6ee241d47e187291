#include "infocast/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infocast {

std::optional<double> AggregateCurve::at(std::size_t x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x,
                             [](const CurvePoint& p, std::size_t value) { return p.x < value; });
  if (it == points.end() || it->x != x) return std::nullopt;
  return it->mean;
}

double AggregateCurve::peak() const {
  double best = 0.0;
  for (const auto& p : points) best = std::max(best, p.mean);
  return best;
}

void CurveAccumulator::add(std::size_t x, double value) {
  if (x >= count_.size()) {
    sum_.resize(x + 1, 0.0);
    sum_sq_.resize(x + 1, 0.0);
    count_.resize(x + 1, 0);
  }
  sum_[x] += value;
  sum_sq_[x] += value * value;
  ++count_[x];
}

void CurveAccumulator::merge(const CurveAccumulator& other) {
  if (other.count_.size() > count_.size()) {
    sum_.resize(other.count_.size(), 0.0);
    sum_sq_.resize(other.count_.size(), 0.0);
    count_.resize(other.count_.size(), 0);
  }
  for (std::size_t x = 0; x < other.count_.size(); ++x) {
    sum_[x] += other.sum_[x];
    sum_sq_[x] += other.sum_sq_[x];
    count_[x] += other.count_[x];
  }
}

AggregateCurve CurveAccumulator::finish() const {
  AggregateCurve curve;
  for (std::size_t x = 0; x < count_.size(); ++x) {
    const std::size_t n = count_[x];
    if (n == 0) continue;
    const double mean = sum_[x] / static_cast<double>(n);
    double ci = 0.0;
    if (n > 1) {
      const double var = std::max(0.0, (sum_sq_[x] - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1));
      ci = 1.96 * std::sqrt(var / static_cast<double>(n));
    }
    curve.points.push_back({x, mean, ci, n});
  }
  return curve;
}

std::size_t recovered_at(const NodeTrace& trace, std::size_t x) {
  if (x == 0 || trace.deliveries.empty()) return trace.initial_recovered;
  return trace.deliveries[std::min(x, trace.deliveries.size()) - 1].recovered;
}

std::size_t max_received(const RunLog& log) {
  std::size_t m = 0;
  for (const auto& node : log.nodes) m = std::max(m, node.deliveries.size());
  return m;
}

void accumulate_recovery(const RunLog& log, std::size_t x_max, CurveAccumulator& acc) {
  for (const auto& node : log.nodes) {
    for (std::size_t x = 0; x <= x_max; ++x) acc.add(x, static_cast<double>(recovered_at(node, x)));
  }
}

void accumulate_degree(const RunLog& log, CurveAccumulator& acc) {
  for (const auto& node : log.nodes) {
    for (const auto& d : node.deliveries) acc.add(d.received, static_cast<double>(d.degree));
  }
}

void accumulate_delay(const RunLog& log, std::size_t x_max, CurveAccumulator& acc) {
  for (const auto& node : log.nodes) {
    std::size_t delay = 0;
    acc.add(0, 0.0);
    for (std::size_t x = 1; x <= x_max; ++x) {
      if (x <= node.deliveries.size() && !node.deliveries[x - 1].immediate) ++delay;
      acc.add(x, static_cast<double>(delay));
    }
  }
}

void accumulate_potential(const RunLog& log, CurveAccumulator& acc) {
  for (const auto& sample : log.potential) acc.add(sample.round, sample.mean);
}

namespace {

void check_homogeneous(std::span<const RunLog> logs) {
  if (logs.empty()) throw std::invalid_argument("metrics: no run logs");
  for (const auto& log : logs) {
    if (!same_experiment(log.config, logs.front().config)) {
      throw std::invalid_argument("metrics: run logs come from different configurations");
    }
  }
}

std::size_t max_received(std::span<const RunLog> logs) {
  std::size_t m = 0;
  for (const auto& log : logs) m = std::max(m, max_received(log));
  return m;
}

}  // namespace

AggregateCurve recovery_curve(std::span<const RunLog> logs) {
  check_homogeneous(logs);
  const std::size_t x_max = max_received(logs);
  CurveAccumulator acc;
  for (const auto& log : logs) accumulate_recovery(log, x_max, acc);
  return acc.finish();
}

AggregateCurve avg_degree_curve(std::span<const RunLog> logs) {
  check_homogeneous(logs);
  CurveAccumulator acc;
  for (const auto& log : logs) accumulate_degree(log, acc);
  return acc.finish();
}

AggregateCurve delay_curve(std::span<const RunLog> logs) {
  check_homogeneous(logs);
  const std::size_t x_max = max_received(logs);
  CurveAccumulator acc;
  for (const auto& log : logs) accumulate_delay(log, x_max, acc);
  return acc.finish();
}

AggregateCurve potential_curve(std::span<const RunLog> logs) {
  check_homogeneous(logs);
  CurveAccumulator acc;
  for (const auto& log : logs) accumulate_potential(log, acc);
  return acc.finish();
}

DelaySummary packet_delay(const RunLog& log) {
  DelaySummary out;
  double total = 0.0;
  std::size_t completed = 0;
  for (const auto& node : log.nodes) {
    if (!node.completed_at) {
      out.per_node.emplace_back();
      ++out.censored;
      continue;
    }
    out.per_node.emplace_back(node.delay);
    total += node.delay;
    out.max = std::max<std::size_t>(out.max, node.delay);
    ++completed;
  }
  if (completed > 0) out.mean = total / static_cast<double>(completed);
  return out;
}

std::optional<std::size_t> full_recovery_point(const RunLog& log) {
  std::size_t worst = 0;
  for (const auto& node : log.nodes) {
    if (!node.completed_at) return std::nullopt;
    worst = std::max<std::size_t>(worst, *node.completed_at);
  }
  return worst;
}

std::optional<double> mean_completion_point(const RunLog& log) {
  double total = 0.0;
  std::size_t completed = 0;
  for (const auto& node : log.nodes) {
    if (!node.completed_at) continue;
    total += *node.completed_at;
    ++completed;
  }
  if (completed == 0) return std::nullopt;
  return total / static_cast<double>(completed);
}

std::optional<PotentialReport> information_potential(const Topology& topology, std::span<const BitVector> buffers,
                                                     NodeId node) {
  const auto& neighbors = topology.neighbors(node);
  if (neighbors.empty()) return std::nullopt;
  PotentialReport report;
  std::size_t total = 0;
  for (NodeId j : neighbors) {
    const std::size_t extra = buffers[j].count_and_not(buffers[node]);
    report.per_neighbor.push_back(extra);
    total += extra;
  }
  report.mean = static_cast<double>(total) / static_cast<double>(neighbors.size());
  return report;
}

}  // namespace infocast
