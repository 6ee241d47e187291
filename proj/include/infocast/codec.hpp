// Binary-field coded packets: XOR combination, the immediate (simple)
// decoder, and an incremental Gauss-Jordan decoder.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infocast/bit_vector.hpp"

namespace infocast {

/// Index of an original symbol in the run's symbol universe [0, n).
using SymbolId = std::uint32_t;

/// One bit per original symbol; the identity of a coded packet.
using CoefVector = BitVector;

using Payload = std::vector<std::uint8_t>;

struct CodedPacket {
  CoefVector coef;
  /// Only carried by codec self-tests; the simulator tracks coefficients alone.
  std::optional<Payload> payload;
};

/// XOR of the listed original symbols over a universe of `n_symbols`.
/// Throws std::invalid_argument on an empty set, std::out_of_range on a bad id.
CodedPacket xor_combine(std::span<const SymbolId> symbols, std::size_t n_symbols);

/// Same as above, also XOR-ing the symbol payloads. `originals[i]` is the
/// payload of symbol i; all payloads must have equal length.
CodedPacket xor_combine(std::span<const SymbolId> symbols, std::span<const Payload> originals);

/// Codeword degree: the number of original symbols combined.
std::size_t degree(const CodedPacket& packet);

/// Returns the single symbol of `packet` missing from `recovered`, if exactly
/// one is missing. Otherwise the packet is not immediately decodable.
std::optional<SymbolId> simple_decode(const BitVector& recovered, const CodedPacket& packet);

/// Gauss-Jordan decoder over GF(2) kept in reduced row echelon form.
///
/// Every stored row has a pivot column that is zero in all other rows. A
/// symbol counts as decoded once its row reduces to the unit vector.
class GaussJordanDecoder {
 public:
  struct InsertResult {
    bool innovative = false;
    std::vector<SymbolId> newly_decoded;
  };

  /// `payload_size` > 0 enables payload tracking; every inserted packet must
  /// then carry a payload of exactly that size.
  explicit GaussJordanDecoder(std::size_t n_symbols, std::size_t payload_size = 0);

  /// Throws std::invalid_argument on dimension or payload mismatch.
  InsertResult insert(const CodedPacket& packet);

  const BitVector& decoded() const { return decoded_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return n_symbols_; }
  bool complete() const { return decoded_.count() == n_symbols_; }

  /// Recovered payload for a decoded symbol (payload mode only).
  std::optional<Payload> payload_of(SymbolId symbol) const;

  /// Checks the echelon invariant: each pivot bit is set in its row only.
  bool is_reduced() const;

  /// Coefficient rows currently stored, in insertion order.
  std::vector<CoefVector> rows() const;

 private:
  struct Row {
    CoefVector coef;
    std::size_t pivot;
    Payload payload;
  };

  std::size_t n_symbols_;
  std::size_t payload_size_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> row_of_pivot_;
  BitVector decoded_;
};

}  // namespace infocast
