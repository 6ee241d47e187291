// Source of every random decision made by the selection algorithms.
//
// Draw order is part of the contract: an algorithm asks for exactly one
// pick per branch point, in the order it reaches them. A pick over a single
// option consumes no randomness.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace infocast {

class Chooser {
 public:
  virtual ~Chooser() = default;
  /// Returns an index in [0, options). `options` must be >= 1.
  virtual std::size_t pick(std::size_t options) = 0;
};

class RngChooser final : public Chooser {
 public:
  explicit RngChooser(std::uint64_t seed) : engine_(seed) {}

  std::size_t pick(std::size_t options) override {
    if (options <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, options - 1)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent stream seeds from a run seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace infocast
