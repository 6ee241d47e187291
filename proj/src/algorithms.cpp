#include "infocast/algorithms.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace infocast {

namespace {

SelectionOutcome finish(const NeighborTable& table, std::vector<SymbolId> combined, std::size_t n_symbols) {
  SelectionOutcome out;
  if (!combined.empty()) {
    BitVector c = BitVector::from_indices(n_symbols, combined);
    out.immediate_recoverers = recoverers(table, c);
  }
  out.combined = std::move(combined);
  return out;
}

struct BestCandidate {
  SymbolId symbol = 0;
  std::size_t recoverers = 0;
  bool found = false;
};

/// argmax over `candidates` of |R(C ∪ {s})|, uniform among maximisers.
BestCandidate best_extension(const RecoveryTracker& tracker, const BitVector& candidates, Chooser& chooser) {
  std::vector<SymbolId> best;
  std::size_t best_value = 0;
  candidates.for_each_set([&](std::size_t s) {
    const std::size_t v = tracker.recoverers_if_added(static_cast<SymbolId>(s));
    if (best.empty() || v > best_value) {
      best.assign(1, static_cast<SymbolId>(s));
      best_value = v;
    } else if (v == best_value) {
      best.push_back(static_cast<SymbolId>(s));
    }
  });
  if (best.empty()) return {};
  return {best[chooser.pick(best.size())], best_value, true};
}

}  // namespace

DegreeTable::DegreeTable(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) throw std::invalid_argument("DegreeTable: need entries for r = 0..n with n >= 1");
  const std::size_t n = degrees_.size() - 1;
  for (auto d : degrees_) {
    if (d < 1 || d > n) throw std::invalid_argument("DegreeTable: degree outside [1, n]");
  }
}

std::size_t DegreeTable::operator()(std::size_t recovered) const {
  if (recovered >= degrees_.size()) throw std::out_of_range("DegreeTable: recovered count exceeds n");
  return degrees_[recovered];
}

DegreeTable DegreeTable::parse(std::istream& in, std::size_t n_symbols) {
  std::vector<std::size_t> degrees(n_symbols + 1, 0);
  std::vector<bool> given(n_symbols + 1, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long r = 0;
    long long d = 0;
    if (!(fields >> r)) continue;
    if (!(fields >> d) || r < 0 || static_cast<std::size_t>(r) > n_symbols) {
      throw std::invalid_argument("DegreeTable: malformed entry on line " + std::to_string(line_no));
    }
    if (d < 1 || static_cast<std::size_t>(d) > n_symbols) {
      throw std::invalid_argument("DegreeTable: degree outside [1, n] on line " + std::to_string(line_no));
    }
    degrees[static_cast<std::size_t>(r)] = static_cast<std::size_t>(d);
    given[static_cast<std::size_t>(r)] = true;
  }
  if (!given[0]) throw std::invalid_argument("DegreeTable: no entry for r = 0");
  for (std::size_t r = 1; r <= n_symbols; ++r) {
    if (!given[r]) degrees[r] = degrees[r - 1];
  }
  return DegreeTable(std::move(degrees));
}

DegreeTable DegreeTable::load(const std::filesystem::path& path, std::size_t n_symbols) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("DegreeTable: cannot open " + path.string());
  return parse(in, n_symbols);
}

DegreeTable default_degree_table(std::size_t n_symbols) {
  if (n_symbols < 1) throw std::invalid_argument("default_degree_table: n must be >= 1");
  const std::size_t n = n_symbols;
  std::vector<std::size_t> degrees(n + 1, 1);
  // P(d+1)/P(d) = (r-d+1)(d+1) / (d(n-d)) is decreasing in d, so P is
  // unimodal and the argmax is the first d whose ratio drops to <= 1.
  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t d_max = std::min(r + 1, n);
    std::size_t d = 1;
    while (d < d_max) {
      const unsigned long long up = static_cast<unsigned long long>(r - d + 1) * (d + 1);
      const unsigned long long down = static_cast<unsigned long long>(d) * (n - d);
      if (up <= down) break;
      ++d;
    }
    degrees[r] = d;
  }
  // r = n: nothing is unknown, every degree scores zero; the tie goes to 1.
  return DegreeTable(std::move(degrees));
}

SelectionOutcome opportunistic_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser) {
  RecoveryTracker tracker(own, table);
  const std::size_t m = tracker.neighbor_count();

  std::vector<SymbolId> candidates;
  own.recovered.for_each_set([&](std::size_t s) {
    if (tracker.holding(static_cast<SymbolId>(s)).count() < m) candidates.push_back(static_cast<SymbolId>(s));
  });

  while (!candidates.empty()) {
    tracker.add(candidates[chooser.pick(candidates.size())]);
    // Symbols every current recoverer already holds, not yet combined.
    candidates.clear();
    const BitVector& served = tracker.recoverer_set();
    (own.recovered - tracker.combination()).for_each_set([&](std::size_t s) {
      if (served.is_subset_of(tracker.holding(static_cast<SymbolId>(s)))) {
        candidates.push_back(static_cast<SymbolId>(s));
      }
    });
  }
  return finish(table, tracker.order(), own.recovered.size());
}

SelectionOutcome greedy_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser) {
  RecoveryTracker tracker(own, table);
  BestCandidate next = best_extension(tracker, own.recovered, chooser);
  if (!next.found || next.recoverers == 0) return {};

  std::size_t q = 0;
  while (next.found && next.recoverers >= q) {
    q = next.recoverers;
    tracker.add(next.symbol);
    next = best_extension(tracker, own.recovered - tracker.combination(), chooser);
  }
  return finish(table, tracker.order(), own.recovered.size());
}

SelectionOutcome equalizing_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser) {
  RecoveryTracker tracker(own, table);
  const auto& entries = table.entries();
  BitVector shared = own.recovered;

  while (shared.any() && tracker.holder_count() > 0) {
    // Poorest holder of C that still lacks something in `shared`.
    std::vector<std::size_t> poorest;
    std::size_t poorest_size = 0;
    tracker.holder_set().for_each_set([&](std::size_t j) {
      const BitVector& b = entries[j].recovered;
      if (shared.count_and_not(b) == 0) return;
      const std::size_t size = b.count();
      if (poorest.empty() || size < poorest_size) {
        poorest.assign(1, j);
        poorest_size = size;
      } else if (size == poorest_size) {
        poorest.push_back(j);
      }
    });
    if (poorest.empty()) break;

    const BitVector& chosen = entries[poorest[chooser.pick(poorest.size())]].recovered;
    const BestCandidate pick = best_extension(tracker, shared - chosen, chooser);
    tracker.add(pick.symbol);
    shared &= chosen;
  }
  return finish(table, tracker.order(), own.recovered.size());
}

SelectionOutcome anc_select(const NodeBuffer& own, const NeighborTable& table, const DegreeTable& degrees,
                            std::size_t recovered_estimate, Chooser& chooser) {
  std::vector<SymbolId> pool = own.recovered.indices();
  if (pool.empty()) return {};
  const std::size_t d = std::min(degrees(recovered_estimate), pool.size());
  for (std::size_t i = 0; i < d; ++i) {
    std::swap(pool[i], pool[i + chooser.pick(pool.size() - i)]);
  }
  pool.resize(d);
  return finish(table, std::move(pool), own.recovered.size());
}

SelectionOutcome systematic_rlnc_select(const NodeBuffer& own, RlncPhase phase, std::size_t& next_uncoded,
                                        const NeighborTable& table, Chooser& chooser) {
  const std::size_t n = own.recovered.size();
  if (phase == RlncPhase::systematic) {
    if (next_uncoded >= n) return {};
    std::size_t s = own.recovered.test(next_uncoded) ? next_uncoded : own.recovered.find_next(next_uncoded);
    if (s == BitVector::npos) {
      next_uncoded = n;
      return {};
    }
    next_uncoded = s + 1;
    return finish(table, {static_cast<SymbolId>(s)}, n);
  }

  const std::vector<SymbolId> pool = own.recovered.indices();
  if (pool.empty()) return {};
  std::vector<SymbolId> combined;
  while (combined.empty()) {
    for (auto s : pool) {
      if (chooser.pick(2) == 1) combined.push_back(s);
    }
  }
  return finish(table, std::move(combined), n);
}

IdealPacketReport ideal_packet_oracle(const NodeBuffer& own, const NeighborTable& table) {
  const std::vector<SymbolId> symbols = own.recovered.indices();
  if (symbols.size() > 20) throw std::invalid_argument("ideal_packet_oracle: buffer larger than 20 symbols");

  IdealPacketReport report;
  const std::size_t n = own.recovered.size();
  for (std::uint32_t mask = 1; mask < (1U << symbols.size()); ++mask) {
    BitVector c(n);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (mask & (1U << i)) c.set(symbols[i]);
    }
    const std::size_t r = recoverers(table, c).size();
    if (r == 0) continue;
    if (r > report.max_recoverers) {
      report.max_recoverers = r;
      report.witnesses.clear();
    }
    if (r == report.max_recoverers) report.witnesses.push_back(std::move(c));
  }
  return report;
}

}  // namespace infocast
