// Seeded multi-run experiments: every variant runs the same seeds, runs are
// spread over worker threads, and results are merged in seed order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "infocast/metrics.hpp"
#include "infocast/scenario_config.hpp"

namespace infocast {

struct Variant {
  Algorithm algorithm = Algorithm::greedy;
  DecoderMode decoder = DecoderMode::simple;
  std::optional<std::size_t> degree_cap;

  /// e.g. "greedy_simple", "greedy_simple_cap1".
  std::string label() const;
};

struct Campaign {
  ScenarioConfig base;
  std::vector<Variant> variants;
  std::size_t runs = 10;
  std::uint64_t seed_base = 1;
  std::size_t workers = 1;
};

/// Named figure presets: 1hop, 1hop-full, grid, random, clustered, mobile,
/// mobile-full. Throws std::invalid_argument for an unknown name.
Campaign figure_preset(std::string_view name);
std::vector<std::string_view> figure_names();

struct VariantResult {
  Variant variant;
  std::size_t runs = 0;
  std::size_t incomplete = 0;
  AggregateCurve recovery;
  AggregateCurve degree;
  AggregateCurve delay;
  AggregateCurve potential;
  /// Mean over runs of the mean completed-node delay.
  double mean_delay = 0.0;
  /// Mean over runs of the worst completed-node delay.
  double mean_worst_delay = 0.0;
  /// Mean over runs of the mean per-node completion point.
  double mean_completion = 0.0;
  /// Mean over complete runs of the last node's completion point.
  double mean_full_recovery = 0.0;
};

/// Runs `campaign.runs` seeds (seed_base, seed_base+1, ...) for one variant.
VariantResult run_variant(const Campaign& campaign, const Variant& variant);
std::vector<VariantResult> run_campaign(const Campaign& campaign);

/// Header `received,mean,ci_half,n` (first column renamed by `x_label`).
void emit_csv(const AggregateCurve& curve, std::ostream& out, std::string_view x_label = "received");
/// Throws std::runtime_error when the file cannot be written.
void emit_csv(const AggregateCurve& curve, const std::filesystem::path& path, std::string_view x_label = "received");

void emit_summary(const std::vector<VariantResult>& results, std::ostream& out);

/// Writes `<label>_{recovery,degree,delay,potential}.csv` per variant plus
/// summary.csv. Creates `dir` if needed.
void write_results(const std::vector<VariantResult>& results, const std::filesystem::path& dir);

}  // namespace infocast
