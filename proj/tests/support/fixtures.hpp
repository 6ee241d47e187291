// Shared test helpers: the four-symbol example state, scripted and
// exhaustive choosers, and random instance generators.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "infocast/algorithms.hpp"
#include "infocast/chooser.hpp"
#include "infocast/state.hpp"

namespace infocast::testing {

/// X = {s1..s4}; N1 = {s1,s3,s4}, N2 = {s2}, N3 = {s2,s4}. Symbols are
/// 0-based (s1 -> 0), neighbors are ids 1..3.
struct ExampleState {
  NodeBuffer own;
  NeighborTable table;
};

ExampleState example_state();

/// The two ideal packets of the example: {s1,s2} and {s2,s3}.
bool is_example_ideal(const std::vector<SymbolId>& combined);

/// Replays a fixed list of picks; throws when the script runs out or a
/// pick is out of range for the options offered. Single-option picks are
/// answered without consuming the script.
class ScriptedChooser final : public Chooser {
 public:
  explicit ScriptedChooser(std::vector<std::size_t> script) : script_(std::move(script)) {}
  std::size_t pick(std::size_t options) override;
  const std::vector<std::size_t>& offered() const { return offered_; }
  bool exhausted() const { return next_ == script_.size(); }

 private:
  std::vector<std::size_t> script_;
  std::size_t next_ = 0;
  std::vector<std::size_t> offered_;
};

/// Exact probability as a fraction.
struct Fraction {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;

  Fraction& operator+=(const Fraction& other);
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
};

/// Runs `fn` once for every sequence of chooser outcomes (depth-first) and
/// calls `visit(probability, result)` for each leaf. `fn` must be
/// deterministic given its picks.
template <typename Result>
void enumerate_branches(const std::function<Result(Chooser&)>& fn,
                        const std::function<void(const Fraction&, const Result&)>& visit);

/// Sum of probabilities of the leaves for which `predicate` holds.
template <typename Result>
Fraction branch_probability(const std::function<Result(Chooser&)>& fn,
                            const std::function<bool(const Result&)>& predicate) {
  Fraction total{0, 1};
  enumerate_branches<Result>(fn, [&](const Fraction& p, const Result& r) {
    if (predicate(r)) total += p;
  });
  return total;
}

/// Random coding node with `n` symbols and `m` neighbors; each buffer bit is
/// set with probability `density`.
ExampleState random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, double own_density = 0.8,
                             double neighbor_density = 0.5);

/// D(r) straight from the definition with exact big-integer arithmetic.
std::vector<std::size_t> exact_degree_table(std::size_t n);

// ---------------------------------------------------------------------------

namespace detail {

class ReplayChooser final : public Chooser {
 public:
  ReplayChooser(std::vector<std::size_t>& picks, std::vector<std::size_t>& options)
      : picks_(picks), options_(options) {}
  std::size_t pick(std::size_t options) override {
    if (options == 0) throw std::logic_error("pick over zero options");
    if (depth_ < picks_.size()) {
      if (options_[depth_] != options) throw std::logic_error("non-deterministic branch structure");
      return picks_[depth_++];
    }
    picks_.push_back(0);
    options_.push_back(options);
    ++depth_;
    return 0;
  }
  std::size_t depth() const { return depth_; }

 private:
  std::vector<std::size_t>& picks_;
  std::vector<std::size_t>& options_;
  std::size_t depth_ = 0;
};

}  // namespace detail

template <typename Result>
void enumerate_branches(const std::function<Result(Chooser&)>& fn,
                        const std::function<void(const Fraction&, const Result&)>& visit) {
  std::vector<std::size_t> picks;
  std::vector<std::size_t> options;
  while (true) {
    detail::ReplayChooser chooser(picks, options);
    Result r = fn(chooser);
    if (chooser.depth() != picks.size()) throw std::logic_error("branch replay consumed fewer picks");
    Fraction p{1, 1};
    for (auto o : options) p.den *= o;
    visit(p, r);
    // Advance to the next leaf: bump the deepest pick that has room left.
    while (!picks.empty() && picks.back() + 1 == options.back()) {
      picks.pop_back();
      options.pop_back();
    }
    if (picks.empty()) return;
    ++picks.back();
  }
}

}  // namespace infocast::testing
