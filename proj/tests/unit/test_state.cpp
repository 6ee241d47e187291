#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "infocast/state.hpp"

using namespace infocast;
using namespace infocast::testing;

namespace {

BitVector set_of(std::initializer_list<std::uint32_t> ids, std::size_t n = 4) {
  return BitVector::from_indices(n, std::vector<std::uint32_t>(ids));
}

}  // namespace

TEST_CASE("example state: missing_for") {
  auto st = example_state();
  CHECK(missing_for(st.table, st.own, 2) == set_of({0, 2, 3}));
  CHECK(missing_for(st.table, st.own, 1) == set_of({1}));
  CHECK_THROWS_AS(missing_for(st.table, st.own, 9), std::out_of_range);

  NeighborTable rich;
  rich.add(1, BitVector::from_string("11111"));
  NodeBuffer own{0, BitVector::from_string("10110")};
  CHECK(missing_for(rich, own, 1).none());

  NeighborTable disjoint;
  disjoint.add(1, BitVector::from_string("01001"));
  CHECK(missing_for(disjoint, own, 1) == own.recovered);
}

TEST_CASE("example state: recoverers and holders") {
  auto st = example_state();
  CHECK(recoverers(st.table, set_of({0})) == std::vector<NodeId>{2, 3});
  CHECK(recoverers(st.table, set_of({0, 1})) == std::vector<NodeId>{1, 2, 3});
  CHECK(recoverers(st.table, set_of({})).empty());

  CHECK(holders(st.table, set_of({})) == std::vector<NodeId>{1, 2, 3});
  CHECK(holders(st.table, set_of({0})) == std::vector<NodeId>{1});
  CHECK(holders(st.table, set_of({0, 1})).empty());
}

TEST_CASE("example state: exhaustive subsets") {
  auto st = example_state();
  std::size_t best = 0;
  std::vector<std::uint32_t> best_masks;
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    BitVector c(4);
    for (std::uint32_t s = 0; s < 4; ++s) {
      if (mask & (1U << s)) c.set(s);
    }
    const auto r = recoverers(st.table, c).size();
    if (r > best) {
      best = r;
      best_masks.clear();
    }
    if (r == best) best_masks.push_back(mask);
  }
  CHECK(best == 3);
  CHECK(best_masks == std::vector<std::uint32_t>{0b0011, 0b0110});

  auto report = ideal_packet_oracle(st.own, st.table);
  CHECK(report.max_recoverers == 3);
  REQUIRE(report.witnesses.size() == 2);
}

TEST_CASE("neighbor table") {
  NeighborTable t;
  t.add(4, BitVector(3));
  CHECK(t.contains(4));
  CHECK_FALSE(t.contains(5));
  CHECK_THROWS_AS(t.add(4, BitVector(3)), std::invalid_argument);
  CHECK_THROWS_AS(t.at(5), std::out_of_range);
}

TEST_CASE("property: set algebra") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = 1 + rng() % 6;
    auto st = random_instance(rng, n, m);
    BitVector c(n);
    st.own.recovered.for_each_set([&](std::size_t s) {
      if (rng() % 2) c.set(s);
    });
    BitVector bigger = c;
    st.own.recovered.for_each_set([&](std::size_t s) {
      if (rng() % 3 == 0) bigger.set(s);
    });

    auto rec = recoverers(st.table, c);
    auto hold = holders(st.table, c);
    if (c.any()) {
      for (auto j : rec) CHECK(std::find(hold.begin(), hold.end(), j) == hold.end());
    }
    for (auto j : holders(st.table, bigger)) CHECK(std::find(hold.begin(), hold.end(), j) != hold.end());

    st.own.recovered.for_each_set([&](std::size_t s) {
      BitVector single(n);
      single.set(s);
      auto r1 = recoverers(st.table, single);
      auto h1 = holders(st.table, single);
      CHECK(r1.size() + h1.size() == m);
      for (auto j : r1) CHECK_FALSE(st.table.at(j).test(s));
      for (auto j : h1) CHECK(st.table.at(j).test(s));
    });
  }
}

TEST_CASE("property: recovery tracker matches direct evaluation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const std::size_t m = 1 + rng() % 9;
    auto st = random_instance(rng, n, m);
    RecoveryTracker tracker(st.own, st.table);
    std::vector<SymbolId> pool = st.own.recovered.indices();
    std::shuffle(pool.begin(), pool.end(), rng);
    for (auto s : pool) {
      BitVector with = tracker.combination();
      with.set(s);
      CHECK(tracker.recoverers_if_added(s) == recoverers(st.table, with).size());
      if (rng() % 2) {
        tracker.add(s);
        CHECK(tracker.recoverer_count() == recoverers(st.table, tracker.combination()).size());
        CHECK(tracker.holder_count() == holders(st.table, tracker.combination()).size());
      }
    }
    if (!tracker.order().empty()) CHECK_THROWS(tracker.add(tracker.order().front()));
  }
}
