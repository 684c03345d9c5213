#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chaos_game.hpp"
#include "sequence_io.hpp"

namespace fcgs {

// One sample per word start. Sample i sits at genomic coordinate
// start_coordinate + i. Windows containing N hold 0 and are flagged in `masked`.
struct FcgsSignal {
  std::vector<double> values;
  std::vector<std::uint8_t> masked;
  int order = 0;
  std::string source_id;
  std::int64_t start_coordinate = 1;
  std::string matrix_id;

  std::size_t size() const noexcept { return values.size(); }
  std::size_t masked_count() const;
};

// Overlapping words at stride 1, in sequence order.
std::vector<std::string> word_stream(const NucleotideSequence& seq, int n);

// The matrix may come from a different sequence (typically the whole
// chromosome the window was cut from).
FcgsSignal encode(const NucleotideSequence& seq, const FcgrMatrix& matrix);

// CSV: "coordinate,value" header then one row per sample.
std::string signal_to_csv(const FcgsSignal& signal);
FcgsSignal signal_from_csv(std::string_view text);

// Binary layout (all little-endian):
//   0  char[8]  magic "FCGSSIG1"
//   8  uint32   order n
//   12 uint32   reserved, 0
//   16 int64    start coordinate (1-based bp)
//   24 uint64   sample count
//   32 float64  samples
std::string signal_to_binary(const FcgsSignal& signal);
FcgsSignal signal_from_binary(std::string_view bytes);

}  // namespace fcgs
