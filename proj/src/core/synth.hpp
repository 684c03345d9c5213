#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sequence_io.hpp"

namespace fcgs {

// 20 kbp: six background stretches around five motif segments of 53-1500 bp.
inline constexpr std::string_view kDefaultSynthLayout =
    "3000,53,2500,200,3500,500,3000,900,3347,1500,1500";

// A, C, G, T probabilities of C. elegans chromosome V (order-1 FCGR cells).
inline constexpr std::array<double, 4> kElegansComposition{0.3226, 0.1774, 0.1769, 0.3231};

struct SynthSpec {
  std::uint64_t seed = 1;
  // Segment lengths alternating background, motif, background, ... starting
  // with background.
  std::vector<std::int64_t> layout;
  double mutation_rate = 0.05;
  // Motif segments alternate this unit and the unit with its last base
  // doubled, giving a mean repeat period of len + 0.5 bp.
  std::string unit = "GAATTC";
  std::string seq_id = "synth";
  std::array<double, 4> composition = kElegansComposition;
};

// "3000,53,2500" -> {3000, 53, 2500}; throws Config on anything malformed.
std::vector<std::int64_t> parse_layout(std::string_view text);

struct SynthResult {
  NucleotideSequence sequence;
  AnnotationTrack truth;  // motif segments labeled intron, background other
};

SynthResult synthesize(const SynthSpec& spec);

}  // namespace fcgs
