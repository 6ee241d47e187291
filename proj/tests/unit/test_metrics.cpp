#include <doctest.h>

#include <cmath>

#include "infocast/engine.hpp"
#include "infocast/metrics.hpp"

using namespace infocast;

namespace {

RunLog synthetic(std::vector<std::vector<std::uint32_t>> recovered_seq, std::size_t n_symbols,
                 std::uint64_t seed = 1) {
  RunLog log;
  log.config.n_symbols = n_symbols;
  log.config.seed = seed;
  NodeId id = 1;
  for (const auto& seq : recovered_seq) {
    NodeTrace t;
    t.node = id++;
    std::uint32_t last = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const bool imm = seq[k] > last;
      t.deliveries.push_back({static_cast<std::uint32_t>(k + 1), seq[k], 2, imm});
      if (!imm) ++t.delay;
      last = seq[k];
    }
    if (last == n_symbols) t.completed_at = static_cast<std::uint32_t>(seq.size());
    log.nodes.push_back(t);
  }
  log.complete = true;
  for (const auto& t : log.nodes) log.complete = log.complete && t.completed_at.has_value();
  return log;
}

ScenarioConfig lossless() {
  ScenarioConfig c;
  c.algorithm = Algorithm::systematic_rlnc;
  c.erasure_p = 0.0;
  return c;
}

}  // namespace

TEST_CASE("recovery curve of lossless uncoded broadcast is the identity") {
  std::vector<RunLog> logs{run(lossless())};
  auto curve = recovery_curve(logs);
  REQUIRE(curve.points.size() == 101);
  for (const auto& p : curve.points) {
    CHECK(p.mean == doctest::Approx(static_cast<double>(p.x)));
    CHECK(p.ci_half == doctest::Approx(0.0));
    CHECK(p.n == 100);
  }
  auto degree = avg_degree_curve(logs);
  for (const auto& p : degree.points) CHECK(p.mean == doctest::Approx(1.0));
  auto delay = packet_delay(logs[0]);
  CHECK(delay.mean == 0.0);
  CHECK(delay.max == 0);
  CHECK(full_recovery_point(logs[0]) == 100u);
}

TEST_CASE("completed nodes carry forward") {
  std::vector<std::uint32_t> slow(120);
  for (std::size_t k = 0; k < 120; ++k) slow[k] = static_cast<std::uint32_t>(std::min<std::size_t>(k + 1, 100));
  std::vector<std::uint32_t> quick(100);
  for (std::size_t k = 0; k < 100; ++k) quick[k] = static_cast<std::uint32_t>(k + 1);
  std::vector<RunLog> logs{synthetic({slow, quick}, 100)};
  auto curve = recovery_curve(logs);
  CHECK(curve.points.size() == 121);
  CHECK(curve.at(120) == doctest::Approx(100.0));
  CHECK(curve.at(110) == doctest::Approx(100.0));
  CHECK(recovered_at(logs[0].nodes[1], 150) == 100);
  CHECK(full_recovery_point(logs[0]) == 120u);
  CHECK(mean_completion_point(logs[0]) == doctest::Approx(110.0));

  auto delay = delay_curve(logs);
  CHECK(delay.at(120) == doctest::Approx(10.0));  // (20 + 0) / 2
}

TEST_CASE("packet delay censors incomplete nodes") {
  auto log = synthetic({{1, 1, 2}, {1, 1}}, 2);
  auto d = packet_delay(log);
  CHECK(d.censored == 1);
  CHECK(d.per_node[0] == std::optional<std::size_t>(1));
  CHECK_FALSE(d.per_node[1]);
  CHECK(d.mean == 1.0);
  CHECK_FALSE(full_recovery_point(log));
}

TEST_CASE("information potential") {
  Topology t(3);
  t.connect(0, 1);
  t.connect(0, 2);
  std::vector<BitVector> same(3, BitVector::from_string("1010"));
  auto none = information_potential(t, same, 0);
  REQUIRE(none);
  CHECK(none->mean == 0.0);

  std::vector<BitVector> b = {BitVector::from_string("10000"), BitVector::from_string("11110"),
                              BitVector::from_string("10000")};
  auto r = information_potential(t, b, 0);
  REQUIRE(r);
  CHECK(r->per_neighbor == std::vector<std::size_t>{3, 0});
  CHECK(r->mean == 1.5);

  Topology isolated(2);
  CHECK_FALSE(information_potential(isolated, std::vector<BitVector>(2, BitVector(2)), 0));
}

TEST_CASE("aggregation is linear over runs") {
  std::vector<RunLog> logs;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto c = lossless();
    c.algorithm = Algorithm::greedy;
    c.erasure_p = 0.5;
    c.n_nodes = 10;
    c.n_symbols = 20;
    c.seed = seed;
    logs.push_back(run(c));
  }
  std::size_t x_max = 0;
  for (const auto& l : logs) x_max = std::max(x_max, max_received(l));

  CurveAccumulator whole;
  for (const auto& l : logs) accumulate_recovery(l, x_max, whole);
  CurveAccumulator left;
  CurveAccumulator right;
  accumulate_recovery(logs[0], x_max, left);
  accumulate_recovery(logs[1], x_max, left);
  accumulate_recovery(logs[2], x_max, right);
  accumulate_recovery(logs[3], x_max, right);
  left.merge(right);
  auto a = whole.finish();
  auto b = left.finish();
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].mean == doctest::Approx(b.points[i].mean));
    CHECK(a.points[i].ci_half == doctest::Approx(b.points[i].ci_half));
    CHECK(a.points[i].n == b.points[i].n);
  }
  CHECK(a.points.size() == x_max + 1);
  CHECK(recovery_curve(logs).points == a.points);
}

TEST_CASE("confidence intervals shrink with more runs") {
  auto base = lossless();
  base.algorithm = Algorithm::greedy;
  base.erasure_p = 0.5;
  base.n_nodes = 20;
  base.n_symbols = 40;
  std::vector<RunLog> logs;
  std::vector<double> widths;
  for (std::uint64_t seed = 1; seed <= 32; ++seed) {
    base.seed = seed;
    logs.push_back(run(base));
    if (seed == 2 || seed == 8 || seed == 32) {
      auto curve = recovery_curve(logs);
      widths.push_back(curve.points[30].ci_half);
    }
  }
  CHECK(widths[0] > widths[1]);
  CHECK(widths[1] > widths[2]);
}

TEST_CASE("curve inputs are validated") {
  std::vector<RunLog> none;
  CHECK_THROWS_AS(recovery_curve(none), std::invalid_argument);
  std::vector<RunLog> mixed{synthetic({{1}}, 1), synthetic({{1}}, 2)};
  CHECK_THROWS_AS(recovery_curve(mixed), std::invalid_argument);
  std::vector<RunLog> seeds{synthetic({{1}}, 1, 1), synthetic({{1}}, 1, 2)};
  CHECK_NOTHROW(recovery_curve(seeds));
}
