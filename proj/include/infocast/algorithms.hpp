// Packet-selection strategies. Each maps the coding node's buffer and its
// neighbor table to the set C of symbols to XOR into the next packet.

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <vector>

#include "infocast/chooser.hpp"
#include "infocast/codec.hpp"
#include "infocast/state.hpp"

namespace infocast {

struct SelectionOutcome {
  /// Chosen symbols in selection order. Empty means "nothing worth sending".
  std::vector<SymbolId> combined;
  /// recoverers(C) at output time.
  std::vector<NodeId> immediate_recoverers;

  bool empty() const { return combined.empty(); }
};

/// Target codeword degree D(r) for a node that has recovered r symbols.
class DegreeTable {
 public:
  DegreeTable() = default;
  /// `degrees[r]` is D(r) for r in [0, n]; n = degrees.size() - 1.
  /// Throws std::invalid_argument unless 1 <= D(r) <= n for every r.
  explicit DegreeTable(std::vector<std::size_t> degrees);

  std::size_t n_symbols() const { return degrees_.empty() ? 0 : degrees_.size() - 1; }
  std::size_t operator()(std::size_t recovered) const;
  const std::vector<std::size_t>& values() const { return degrees_; }

  /// Reads whitespace-separated "r D(r)" pairs ('#' starts a comment).
  /// Pairs may be sparse; missing r inherit the previous entry's degree.
  static DegreeTable parse(std::istream& in, std::size_t n_symbols);
  static DegreeTable load(const std::filesystem::path& path, std::size_t n_symbols);

 private:
  std::vector<std::size_t> degrees_;
};

/// D(r) = argmax over d in [1, min(r+1, n)] of C(r, d-1) * (n-r) / C(n, d):
/// the chance a uniform d-subset holds exactly one of the n-r unknown
/// symbols. Ties go to the smaller degree; D(0) = 1.
DegreeTable default_degree_table(std::size_t n_symbols);

/// Random first symbol among those some neighbor lacks, then random extension
/// restricted to symbols every current recoverer already holds.
SelectionOutcome opportunistic_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser);

/// Rarest symbol first, then keep adding the symbol that maximises the
/// number of recoverers while that number does not drop.
SelectionOutcome greedy_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser);

/// Serve the poorest neighbor that still holds the whole combination, one
/// neighbor per step, keeping every previously served neighbor decodable.
SelectionOutcome equalizing_select(const NodeBuffer& own, const NeighborTable& table, Chooser& chooser);

/// Feedback-free: a uniform random subset of the buffer of size
/// min(D(r), |B_x|). `recovered_estimate` is the r fed to the table.
SelectionOutcome anc_select(const NodeBuffer& own, const NeighborTable& table, const DegreeTable& degrees,
                            std::size_t recovered_estimate, Chooser& chooser);

enum class RlncPhase { systematic, coded };

/// Systematic phase: the next unsent symbol (`next_uncoded`, advanced on
/// return), uncoded. Coded phase: a fair-coin nonzero combination of the
/// whole buffer, redrawn while all-zero.
SelectionOutcome systematic_rlnc_select(const NodeBuffer& own, RlncPhase phase, std::size_t& next_uncoded,
                                        const NeighborTable& table, Chooser& chooser);

struct IdealPacketReport {
  std::size_t max_recoverers = 0;
  std::vector<BitVector> witnesses;
};

/// Exhaustive search over all nonempty C ⊆ B_x. Test oracle only.
/// Throws std::invalid_argument when |B_x| > 20.
IdealPacketReport ideal_packet_oracle(const NodeBuffer& own, const NeighborTable& table);

}  // namespace infocast
