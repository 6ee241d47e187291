#include "infocast/codec.hpp"

#include <stdexcept>

namespace infocast {

namespace {

void xor_into(Payload& dst, const Payload& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

CodedPacket xor_combine(std::span<const SymbolId> symbols, std::size_t n_symbols) {
  if (symbols.empty()) throw std::invalid_argument("xor_combine: empty symbol set");
  CodedPacket packet{CoefVector(n_symbols), std::nullopt};
  for (auto s : symbols) {
    if (s >= n_symbols) throw std::out_of_range("xor_combine: symbol id out of range");
    packet.coef.set(s);
  }
  return packet;
}

CodedPacket xor_combine(std::span<const SymbolId> symbols, std::span<const Payload> originals) {
  CodedPacket packet = xor_combine(symbols, originals.size());
  const std::size_t len = originals.empty() ? 0 : originals.front().size();
  Payload data(len, 0);
  packet.coef.for_each_set([&](std::size_t s) {
    if (originals[s].size() != len) throw std::invalid_argument("xor_combine: payload length mismatch");
    xor_into(data, originals[s]);
  });
  packet.payload = std::move(data);
  return packet;
}

std::size_t degree(const CodedPacket& packet) { return packet.coef.count(); }

std::optional<SymbolId> simple_decode(const BitVector& recovered, const CodedPacket& packet) {
  if (packet.coef.count_and_not(recovered) != 1) return std::nullopt;
  return static_cast<SymbolId>((packet.coef - recovered).find_first());
}

GaussJordanDecoder::GaussJordanDecoder(std::size_t n_symbols, std::size_t payload_size)
    : n_symbols_(n_symbols),
      payload_size_(payload_size),
      row_of_pivot_(n_symbols, -1),
      decoded_(n_symbols) {}

GaussJordanDecoder::InsertResult GaussJordanDecoder::insert(const CodedPacket& packet) {
  if (packet.coef.size() != n_symbols_) throw std::invalid_argument("GaussJordanDecoder: dimension mismatch");
  if (payload_size_ > 0 && (!packet.payload || packet.payload->size() != payload_size_)) {
    throw std::invalid_argument("GaussJordanDecoder: payload missing or wrong size");
  }

  Row residue{packet.coef, 0, payload_size_ > 0 ? *packet.payload : Payload{}};

  // Rows share no pivot columns, so one pass eliminates every pivot bit.
  for (const auto& row : rows_) {
    if (residue.coef.test(row.pivot)) {
      residue.coef ^= row.coef;
      if (payload_size_ > 0) xor_into(residue.payload, row.payload);
    }
  }

  InsertResult result;
  if (residue.coef.none()) return result;
  result.innovative = true;

  residue.pivot = residue.coef.find_first();
  for (auto& row : rows_) {
    if (!row.coef.test(residue.pivot)) continue;
    row.coef ^= residue.coef;
    if (payload_size_ > 0) xor_into(row.payload, residue.payload);
    if (row.coef.count() == 1 && !decoded_.test(row.pivot)) {
      decoded_.set(row.pivot);
      result.newly_decoded.push_back(static_cast<SymbolId>(row.pivot));
    }
  }
  if (residue.coef.count() == 1) {
    decoded_.set(residue.pivot);
    result.newly_decoded.push_back(static_cast<SymbolId>(residue.pivot));
  }
  row_of_pivot_[residue.pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(residue));
  return result;
}

std::optional<Payload> GaussJordanDecoder::payload_of(SymbolId symbol) const {
  if (payload_size_ == 0 || symbol >= n_symbols_ || !decoded_.test(symbol)) return std::nullopt;
  return rows_[static_cast<std::size_t>(row_of_pivot_[symbol])].payload;
}

bool GaussJordanDecoder::is_reduced() const {
  for (const auto& row : rows_) {
    if (!row.coef.test(row.pivot)) return false;
    for (const auto& other : rows_) {
      if (&other != &row && other.coef.test(row.pivot)) return false;
    }
  }
  return true;
}

std::vector<CoefVector> GaussJordanDecoder::rows() const {
  std::vector<CoefVector> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.coef);
  return out;
}

}  // namespace infocast
