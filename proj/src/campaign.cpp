#include "infocast/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "infocast/engine.hpp"

namespace infocast {

std::string Variant::label() const {
  std::string out{to_string(algorithm)};
  out += '_';
  out += to_string(decoder);
  if (degree_cap) out += "_cap" + std::to_string(*degree_cap);
  return out;
}

namespace {

struct Preset {
  std::string_view name;
  Scenario scenario;
  DecoderMode decoder;
  std::vector<Algorithm> algorithms;
  bool with_cap1 = false;
};

const std::vector<Preset>& presets() {
  using A = Algorithm;
  static const std::vector<Preset> table = {
      {"1hop", Scenario::single_hop, DecoderMode::simple, {A::greedy, A::equalizing, A::opportunistic, A::anc}},
      {"1hop-full",
       Scenario::single_hop,
       DecoderMode::full,
       {A::greedy, A::equalizing, A::opportunistic, A::anc, A::systematic_rlnc}},
      {"grid", Scenario::grid, DecoderMode::simple, {A::greedy, A::equalizing, A::opportunistic, A::anc}, true},
      {"random", Scenario::random, DecoderMode::simple, {A::greedy, A::equalizing, A::opportunistic, A::anc}},
      {"clustered", Scenario::clustered, DecoderMode::simple, {A::greedy, A::equalizing, A::opportunistic, A::anc}},
      {"mobile", Scenario::mobile, DecoderMode::simple, {A::greedy, A::equalizing, A::opportunistic, A::anc}},
      {"mobile-full",
       Scenario::mobile,
       DecoderMode::full,
       {A::greedy, A::equalizing, A::opportunistic, A::anc, A::systematic_rlnc}},
  };
  return table;
}

std::string format_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::vector<std::string_view> figure_names() {
  std::vector<std::string_view> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

Campaign figure_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name != name) continue;
    Campaign c;
    c.base.scenario = p.scenario;
    c.base.decoder = p.decoder;
    c.base.n_nodes = 100;
    c.base.n_symbols = 100;
    c.base.erasure_p = p.scenario == Scenario::single_hop ? 0.5 : 0.0;
    for (auto a : p.algorithms) c.variants.push_back({a, p.decoder, std::nullopt});
    if (p.with_cap1) c.variants.push_back({Algorithm::greedy, p.decoder, 1});
    return c;
  }
  std::string msg = "unknown figure '" + std::string(name) + "'; expected one of:";
  for (auto n : figure_names()) msg += " " + std::string(n);
  throw std::invalid_argument(msg);
}

VariantResult run_variant(const Campaign& campaign, const Variant& variant) {
  if (campaign.runs == 0) throw std::invalid_argument("campaign: runs must be positive");
  ScenarioConfig config = campaign.base;
  config.algorithm = variant.algorithm;
  config.decoder = variant.decoder;
  config.degree_cap = variant.degree_cap;
  config.validate();

  std::vector<RunLog> logs(campaign.runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < logs.size(); i = next++) {
      try {
        ScenarioConfig c = config;
        c.seed = campaign.seed_base + i;
        logs[i] = run(c);
        // Per-node potential samples are not aggregated; drop them early.
        for (auto& s : logs[i].potential) s.per_node.clear();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t n_workers = std::clamp<std::size_t>(campaign.workers, 1, logs.size());
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  VariantResult result;
  result.variant = variant;
  result.runs = logs.size();
  result.recovery = recovery_curve(logs);
  result.degree = avg_degree_curve(logs);
  result.delay = delay_curve(logs);
  result.potential = potential_curve(logs);

  std::size_t complete = 0;
  for (const auto& log : logs) {
    const DelaySummary d = packet_delay(log);
    result.mean_delay += d.mean;
    result.mean_worst_delay += static_cast<double>(d.max);
    result.mean_completion += mean_completion_point(log).value_or(0.0);
    if (auto full = full_recovery_point(log)) {
      result.mean_full_recovery += static_cast<double>(*full);
      ++complete;
    } else {
      ++result.incomplete;
    }
  }
  const auto n = static_cast<double>(logs.size());
  result.mean_delay /= n;
  result.mean_worst_delay /= n;
  result.mean_completion /= n;
  if (complete > 0) result.mean_full_recovery /= static_cast<double>(complete);
  return result;
}

std::vector<VariantResult> run_campaign(const Campaign& campaign) {
  std::vector<VariantResult> out;
  for (const auto& v : campaign.variants) out.push_back(run_variant(campaign, v));
  return out;
}

void emit_csv(const AggregateCurve& curve, std::ostream& out, std::string_view x_label) {
  out << x_label << ",mean,ci_half,n\n";
  for (const auto& p : curve.points) {
    out << p.x << ',' << format_double(p.mean, 6) << ',' << format_double(p.ci_half, 6) << ',' << p.n << '\n';
  }
}

void emit_csv(const AggregateCurve& curve, const std::filesystem::path& path, std::string_view x_label) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  emit_csv(curve, out, x_label);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_summary(const std::vector<VariantResult>& results, std::ostream& out) {
  out << "variant,runs,incomplete,mean_delay,mean_worst_delay,mean_completion,mean_full_recovery\n";
  for (const auto& r : results) {
    out << r.variant.label() << ',' << r.runs << ',' << r.incomplete << ',' << format_double(r.mean_delay, 4) << ','
        << format_double(r.mean_worst_delay, 4) << ',' << format_double(r.mean_completion, 4) << ','
        << format_double(r.mean_full_recovery, 4) << '\n';
  }
}

void write_results(const std::vector<VariantResult>& results, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& r : results) {
    const std::string label = r.variant.label();
    emit_csv(r.recovery, dir / (label + "_recovery.csv"));
    emit_csv(r.degree, dir / (label + "_degree.csv"));
    emit_csv(r.delay, dir / (label + "_delay.csv"));
    emit_csv(r.potential, dir / (label + "_potential.csv"), "round");
  }
  std::ofstream out(dir / "summary.csv", std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + (dir / "summary.csv").string() + " for writing");
  emit_summary(results, out);
  if (!out) throw std::runtime_error("write failed: summary.csv");
}

}  // namespace infocast
