// Scenario graphs: single-hop star, wrap-around grid, random geometric,
// clustered, and random-waypoint mobility snapshots.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "infocast/state.hpp"

namespace infocast {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

/// Undirected adjacency snapshot. Neighbor lists are sorted and symmetric.
class Topology {
 public:
  Topology() = default;
  explicit Topology(std::size_t n_nodes);

  /// Adds the undirected edge {a, b}; duplicates are ignored.
  /// Throws std::invalid_argument on self-loops or out-of-range ids.
  void connect(NodeId a, NodeId b);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<NodeId>& neighbors(NodeId node) const { return adjacency_[node]; }
  bool adjacent(NodeId a, NodeId b) const;
  std::size_t degree(NodeId node) const { return adjacency_[node].size(); }
  std::size_t edge_count() const;
  double mean_degree() const;

  bool is_symmetric() const;
  /// Connected components, each a sorted list of node ids.
  std::vector<std::vector<NodeId>> components() const;
  bool is_connected() const { return size() <= 1 || components().size() == 1; }

  const std::optional<std::vector<Point>>& positions() const { return positions_; }
  void set_positions(std::vector<Point> positions);

  /// "a b" per line, a < b, for debugging dumps.
  void write_edge_list(std::ostream& out) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::optional<std::vector<Point>> positions_;
};

/// Unit-disk graph over `positions` with the given radius.
Topology unit_disk_graph(std::vector<Point> positions, double radius);

/// Node 0 is the source, linked to receivers 1..n_receivers.
Topology build_star(std::size_t n_receivers);

/// Torus with the 8-cell Moore neighborhood. Node id = row * cols + col.
/// Throws std::invalid_argument unless rows, cols >= 3.
Topology build_grid(std::size_t rows, std::size_t cols);

/// Probability that two uniform points in a square of side `side` lie
/// within `radius` of each other (border effects included).
double square_link_probability(double radius, double side);

/// Radius giving an expected degree of `target_degree` for `n` uniform
/// nodes in a square of side `side`.
double radius_for_degree(std::size_t n, double target_degree, double side);

struct GeometricParams {
  std::size_t n = 100;
  double target_degree = 8.0;
  double side = 1000.0;
  std::size_t max_attempts = 100;
};

/// Uniform nodes in a square, linked within the calibrated radius,
/// regenerated until connected. Throws std::runtime_error past the retry cap.
Topology build_random_geometric(const GeometricParams& params, std::mt19937_64& rng);

struct ClusteredTopology {
  Topology graph;
  std::vector<std::size_t> cluster_of;
  std::vector<std::pair<NodeId, NodeId>> bridges;
};

/// `k_clusters` connected random-geometric clusters of n / k nodes each,
/// joined in a ring by `bridges_per_pair` random edges per adjacent pair.
ClusteredTopology build_clustered(std::size_t n, std::size_t k_clusters, std::size_t bridges_per_pair,
                                  double target_degree, std::mt19937_64& rng);

struct MobilityParams {
  std::size_t n = 100;
  double side = 0.0;     ///< arena side in meters; 0 picks the calibrated default
  double radius = 50.0;  ///< communication range in meters
  double speed_min = 2.0;
  double speed_max = 4.0;
};

/// Arena side at which random-waypoint nodes see about `target_degree`
/// neighbors on average for the given radius.
double calibrated_arena_side(std::size_t n, double radius, double target_degree, double speed_min = 2.0,
                             double speed_max = 4.0);

struct MobilityState {
  double side = 0.0;
  double speed_min = 2.0;
  double speed_max = 4.0;
  std::vector<Point> position;
  std::vector<Point> waypoint;
  std::vector<double> speed;
};

/// Uniform initial positions and waypoints, speeds uniform in range.
MobilityState init_mobility(const MobilityParams& params, std::mt19937_64& rng);

/// Random waypoint step with zero pause: each node moves toward its waypoint
/// at its leg speed; a node that reaches the waypoint stops on it and draws
/// a new waypoint and speed. Returns the snapshot at the new positions.
Topology step_mobility(MobilityState& state, double dt, double radius, std::mt19937_64& rng);

}  // namespace infocast
