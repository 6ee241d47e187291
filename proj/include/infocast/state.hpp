// Node buffers and the coding node's view of its neighbors' recovered sets.
//
// Notation used throughout: the coding node x holds B_x; neighbor j holds
// B_j. For a candidate combination C ⊆ B_x:
//   recoverers(C) = { j : |C| - |B_j ∩ C| = 1 }   (can decode a new symbol)
//   holders(C)    = { j : C ⊆ B_j }               (already hold all of C)

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infocast/bit_vector.hpp"
#include "infocast/codec.hpp"

namespace infocast {

using NodeId = std::uint32_t;

struct NodeBuffer {
  NodeId node = 0;
  BitVector recovered;
};

/// Recovered sets of the coding node's current neighbors, in insertion order.
class NeighborTable {
 public:
  struct Entry {
    NodeId id;
    BitVector recovered;
  };

  NeighborTable() = default;

  /// Throws std::invalid_argument on a duplicate id.
  void add(NodeId id, BitVector recovered);

  bool contains(NodeId id) const;
  /// Throws std::out_of_range for an unknown neighbor.
  const BitVector& at(NodeId id) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// B_x \ (B_j ∩ B_x): what the coding node could offer neighbor j.
BitVector missing_for(const NeighborTable& table, const NodeBuffer& own, NodeId j);

/// Neighbors missing exactly one symbol of `combination`.
std::vector<NodeId> recoverers(const NeighborTable& table, const BitVector& combination);

/// Neighbors holding every symbol of `combination`.
std::vector<NodeId> holders(const NeighborTable& table, const BitVector& combination);

/// Incremental evaluation of recoverers/holders while a combination grows.
///
/// Neighbors are addressed by their position in the table. For every symbol
/// of B_x the tracker keeps the set of neighbors holding it, plus the
/// neighbor sets missing zero and exactly one symbol of the current
/// combination. Extending the combination by one symbol, or asking how many
/// neighbors would recover from C ∪ {s}, is then a few word operations.
class RecoveryTracker {
 public:
  RecoveryTracker(const NodeBuffer& own, const NeighborTable& table);

  std::size_t neighbor_count() const { return n_neighbors_; }
  const BitVector& own() const { return own_; }
  const BitVector& combination() const { return combination_; }
  const std::vector<SymbolId>& order() const { return order_; }

  /// |recoverers(C ∪ {s})| for the current combination C.
  std::size_t recoverers_if_added(SymbolId s) const;
  std::size_t recoverer_count() const { return missing_one_.count(); }
  std::size_t holder_count() const { return missing_none_.count(); }

  /// Neighbor positions missing exactly one / zero symbols of C.
  const BitVector& recoverer_set() const { return missing_one_; }
  const BitVector& holder_set() const { return missing_none_; }

  /// Neighbor positions holding symbol s (s must be in B_x).
  const BitVector& holding(SymbolId s) const { return holding_[s]; }

  void add(SymbolId s);

 private:
  std::size_t n_neighbors_;
  BitVector own_;
  std::vector<BitVector> holding_;
  BitVector missing_none_;
  BitVector missing_one_;
  BitVector combination_;
  std::vector<SymbolId> order_;
};

}  // namespace infocast
