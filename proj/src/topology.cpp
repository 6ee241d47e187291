#include "infocast/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace infocast {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology::Topology(std::size_t n_nodes) : adjacency_(n_nodes) {}

void Topology::connect(NodeId a, NodeId b) {
  if (a == b) throw std::invalid_argument("Topology: self-loop");
  if (a >= size() || b >= size()) throw std::invalid_argument("Topology: node id out of range");
  auto insert = [](std::vector<NodeId>& list, NodeId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adjacency_[a], b);
  insert(adjacency_[b], a);
}

bool Topology::adjacent(NodeId a, NodeId b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::size_t Topology::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

double Topology::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(size());
}

bool Topology::is_symmetric() const {
  for (NodeId a = 0; a < size(); ++a) {
    for (NodeId b : adjacency_[a]) {
      if (a == b || !adjacent(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<NodeId>> Topology::components() const {
  std::vector<std::vector<NodeId>> out;
  std::vector<bool> seen(size(), false);
  for (NodeId start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (NodeId v : adjacency_[component[i]]) {
        if (!seen[v]) {
          seen[v] = true;
          component.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

void Topology::set_positions(std::vector<Point> positions) {
  if (positions.size() != size()) throw std::invalid_argument("Topology: position count mismatch");
  positions_ = std::move(positions);
}

void Topology::write_edge_list(std::ostream& out) const {
  for (NodeId a = 0; a < size(); ++a) {
    for (NodeId b : adjacency_[a]) {
      if (a < b) out << a << ' ' << b << '\n';
    }
  }
}

Topology unit_disk_graph(std::vector<Point> positions, double radius) {
  Topology t(positions.size());
  for (NodeId a = 0; a < positions.size(); ++a) {
    for (NodeId b = a + 1; b < positions.size(); ++b) {
      if (distance(positions[a], positions[b]) <= radius) t.connect(a, b);
    }
  }
  t.set_positions(std::move(positions));
  return t;
}

Topology build_star(std::size_t n_receivers) {
  if (n_receivers < 1) throw std::invalid_argument("build_star: need at least one receiver");
  Topology t(n_receivers + 1);
  for (NodeId j = 1; j <= n_receivers; ++j) t.connect(0, j);
  return t;
}

Topology build_grid(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("build_grid: torus needs at least 3x3 for 8 distinct neighbors");
  Topology t(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto self = static_cast<NodeId>(r * cols + c);
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const auto rr = static_cast<std::size_t>(static_cast<long>(r + rows) + dr) % rows;
          const auto cc = static_cast<std::size_t>(static_cast<long>(c + cols) + dc) % cols;
          t.connect(self, static_cast<NodeId>(rr * cols + cc));
        }
      }
    }
  }
  return t;
}

double square_link_probability(double radius, double side) {
  if (radius <= 0.0) return 0.0;
  const double d = radius / side;
  if (d >= std::numbers::sqrt2) return 1.0;
  const double d2 = d * d;
  if (d <= 1.0) return std::numbers::pi * d2 - 8.0 * d2 * d / 3.0 + d2 * d2 / 2.0;
  return 1.0 / 3.0 - 2.0 * d2 - d2 * d2 / 2.0 + 4.0 / 3.0 * (2.0 * d2 + 1.0) * std::sqrt(d2 - 1.0) +
         2.0 * d2 * (std::asin(1.0 / d) - std::acos(1.0 / d));
}

double radius_for_degree(std::size_t n, double target_degree, double side) {
  if (n < 2 || target_degree <= 0.0) throw std::invalid_argument("radius_for_degree: need n >= 2 and degree > 0");
  const double p = target_degree / static_cast<double>(n - 1);
  double lo = 0.0;
  double hi = side * std::numbers::sqrt2;
  if (p >= 1.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (square_link_probability(mid, side) < p ? lo : hi) = mid;
  }
  return hi;
}

namespace {

std::vector<Point> uniform_points(std::size_t n, double side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  return pts;
}

}  // namespace

Topology build_random_geometric(const GeometricParams& params, std::mt19937_64& rng) {
  if (params.n < 2 || params.target_degree <= 0.0) {
    throw std::invalid_argument("build_random_geometric: need n >= 2 and target degree > 0");
  }
  const double radius = radius_for_degree(params.n, params.target_degree, params.side);
  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    Topology t = unit_disk_graph(uniform_points(params.n, params.side, rng), radius);
    if (t.is_connected()) return t;
  }
  throw std::runtime_error("build_random_geometric: no connected instance within the retry cap");
}

ClusteredTopology build_clustered(std::size_t n, std::size_t k_clusters, std::size_t bridges_per_pair,
                                  double target_degree, std::mt19937_64& rng) {
  if (k_clusters < 2 || n % k_clusters != 0) {
    throw std::invalid_argument("build_clustered: need k >= 2 clusters dividing n");
  }
  const std::size_t per = n / k_clusters;
  if (bridges_per_pair < 1 || bridges_per_pair > per * per) {
    throw std::invalid_argument("build_clustered: bridges per pair must be in [1, (n/k)^2]");
  }

  GeometricParams cluster{per, target_degree, 1000.0, 100};
  ClusteredTopology out{Topology(n), std::vector<std::size_t>(n), {}};
  std::vector<Point> positions(n);
  for (std::size_t c = 0; c < k_clusters; ++c) {
    const Topology part = build_random_geometric(cluster, rng);
    const auto base = static_cast<NodeId>(c * per);
    for (NodeId a = 0; a < per; ++a) {
      out.cluster_of[base + a] = c;
      positions[base + a] = {(*part.positions())[a].x + 1500.0 * static_cast<double>(c), (*part.positions())[a].y};
      for (NodeId b : part.neighbors(a)) {
        if (a < b) out.graph.connect(base + a, base + b);
      }
    }
  }

  // Ring of clusters; two clusters share a single link pair.
  const std::size_t pairs = k_clusters == 2 ? 1 : k_clusters;
  std::uniform_int_distribution<std::size_t> member(0, per - 1);
  for (std::size_t c = 0; c < pairs; ++c) {
    const auto from = static_cast<NodeId>(c * per);
    const auto to = static_cast<NodeId>(((c + 1) % k_clusters) * per);
    std::size_t added = 0;
    while (added < bridges_per_pair) {
      const NodeId a = from + static_cast<NodeId>(member(rng));
      const NodeId b = to + static_cast<NodeId>(member(rng));
      if (out.graph.adjacent(a, b)) continue;
      out.graph.connect(a, b);
      out.bridges.emplace_back(a, b);
      ++added;
    }
  }
  out.graph.set_positions(std::move(positions));
  return out;
}

namespace {

Point draw_point(double side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, side);
  const double x = coord(rng);
  return {x, coord(rng)};
}

double draw_speed(const MobilityState& s, std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(s.speed_min, s.speed_max)(rng);
}

double measured_rwp_degree(std::size_t n, double side, double radius, double speed_min, double speed_max) {
  std::mt19937_64 rng(0x5eedULL);
  MobilityState state = init_mobility({n, side, radius, speed_min, speed_max}, rng);
  double total = 0.0;
  int samples = 0;
  for (int step = 1; step <= 600; ++step) {
    Topology snap = step_mobility(state, 1.0, radius, rng);
    if (step % 10 == 0) {
      total += snap.mean_degree();
      ++samples;
    }
  }
  return total / samples;
}

}  // namespace

double calibrated_arena_side(std::size_t n, double radius, double target_degree, double speed_min,
                             double speed_max) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, double, double, double, double>, double> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(n, radius, target_degree, speed_min, speed_max);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // Bisection on the side length; the fixed-seed simulation makes the
  // measured degree a deterministic function of the side.
  double lo = radius;
  double hi = radius * std::sqrt(static_cast<double>(n) * std::numbers::pi / target_degree) * 2.0;
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    (measured_rwp_degree(n, mid, radius, speed_min, speed_max) > target_degree ? lo : hi) = mid;
  }
  const double side = 0.5 * (lo + hi);
  cache.emplace(key, side);
  return side;
}

MobilityState init_mobility(const MobilityParams& params, std::mt19937_64& rng) {
  if (params.speed_min <= 0.0 || params.speed_max < params.speed_min) {
    throw std::invalid_argument("init_mobility: need 0 < speed_min <= speed_max");
  }
  MobilityState s;
  s.side = params.side > 0.0 ? params.side : calibrated_arena_side(params.n, params.radius, 8.0, params.speed_min, params.speed_max);
  s.speed_min = params.speed_min;
  s.speed_max = params.speed_max;
  s.position.resize(params.n);
  s.waypoint.resize(params.n);
  s.speed.resize(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    s.position[i] = draw_point(s.side, rng);
    s.waypoint[i] = draw_point(s.side, rng);
    s.speed[i] = draw_speed(s, rng);
  }
  return s;
}

Topology step_mobility(MobilityState& state, double dt, double radius, std::mt19937_64& rng) {
  if (dt <= 0.0) throw std::invalid_argument("step_mobility: dt must be positive");
  for (std::size_t i = 0; i < state.position.size(); ++i) {
    Point& p = state.position[i];
    const Point& w = state.waypoint[i];
    const double travel = state.speed[i] * dt;
    const double remaining = distance(p, w);
    if (remaining <= travel) {
      p = w;
      state.waypoint[i] = draw_point(state.side, rng);
      state.speed[i] = draw_speed(state, rng);
    } else {
      p.x += (w.x - p.x) * travel / remaining;
      p.y += (w.y - p.y) * travel / remaining;
    }
  }
  return unit_disk_graph(state.position, radius);
}

}  // namespace infocast
