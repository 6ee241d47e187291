#include "infocast/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace infocast {

void NeighborTable::add(NodeId id, BitVector recovered) {
  if (contains(id)) throw std::invalid_argument("NeighborTable: duplicate neighbor");
  entries_.push_back({id, std::move(recovered)});
}

bool NeighborTable::contains(NodeId id) const {
  return std::any_of(entries_.begin(), entries_.end(), [id](const Entry& e) { return e.id == id; });
}

const BitVector& NeighborTable::at(NodeId id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return e.recovered;
  }
  throw std::out_of_range("NeighborTable: unknown neighbor");
}

BitVector missing_for(const NeighborTable& table, const NodeBuffer& own, NodeId j) {
  return own.recovered - (table.at(j) & own.recovered);
}

std::vector<NodeId> recoverers(const NeighborTable& table, const BitVector& combination) {
  std::vector<NodeId> out;
  for (const auto& e : table.entries()) {
    if (combination.count_and_not(e.recovered) == 1) out.push_back(e.id);
  }
  return out;
}

std::vector<NodeId> holders(const NeighborTable& table, const BitVector& combination) {
  std::vector<NodeId> out;
  for (const auto& e : table.entries()) {
    if (combination.is_subset_of(e.recovered)) out.push_back(e.id);
  }
  return out;
}

RecoveryTracker::RecoveryTracker(const NodeBuffer& own, const NeighborTable& table)
    : n_neighbors_(table.size()),
      own_(own.recovered),
      holding_(own.recovered.size()),
      missing_none_(table.size()),
      missing_one_(table.size()),
      combination_(own.recovered.size()) {
  own_.for_each_set([&](std::size_t s) {
    BitVector& h = holding_[s];
    h = BitVector(n_neighbors_);
    for (std::size_t j = 0; j < n_neighbors_; ++j) {
      if (table.entries()[j].recovered.test(s)) h.set(j);
    }
  });
  missing_none_.set_all();
}

std::size_t RecoveryTracker::recoverers_if_added(SymbolId s) const {
  const BitVector& h = holding_[s];
  // Stay at one missing: missed one already and holds s.
  // Move from zero to one missing: held all of C and lacks s.
  return missing_one_.count_and(h) + missing_none_.count_and_not(h);
}

void RecoveryTracker::add(SymbolId s) {
  if (!own_.test(s)) throw std::invalid_argument("RecoveryTracker: symbol not in own buffer");
  if (combination_.test(s)) throw std::invalid_argument("RecoveryTracker: symbol already combined");
  const BitVector& h = holding_[s];
  BitVector next_one = (missing_one_ & h) | (missing_none_ - h);
  missing_none_ &= h;
  missing_one_ = std::move(next_one);
  combination_.set(s);
  order_.push_back(s);
}

}  // namespace infocast
