#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwt_engine.hpp"
#include "sequence_io.hpp"

namespace fcgs {

// Center of the default band is the 6.5 bp period; edges sit at 7.5 and 5.5 bp.
inline constexpr double kDefaultBandLow = 1.0 / 7.5;
inline constexpr double kDefaultBandHigh = 1.0 / 5.5;
inline constexpr std::int64_t kDefaultMinLength = 40;
inline constexpr std::int64_t kDefaultSmoothing = 25;

struct BandEnergyProfile {
  std::vector<double> values;
  double f_lo = 0.0;
  double f_hi = 0.0;
  std::int64_t start_coordinate = 1;  // coordinate of values[0]

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t coordinate(std::size_t i) const {
    return start_coordinate + static_cast<std::int64_t>(i);
  }
};

// Per-position mean modulus over rows whose frequency lies in [f_lo, f_hi].
// Cone-of-influence cells are left out; positions with no usable cell get 0.
BandEnergyProfile band_energy(const Scalogram& s, double f_lo, double f_hi);

struct CalledInterval {
  std::int64_t start = 0;  // genomic bp, inclusive
  std::int64_t end = 0;
  double mean_energy = 0.0;

  std::int64_t length() const noexcept { return end - start + 1; }
};

struct RegionCall {
  std::vector<CalledInterval> intervals;
  double threshold_used = 0.0;
  std::int64_t min_len = 0;
};

struct CallOptions {
  std::optional<double> threshold;  // nullopt: automatic two-class split
  std::int64_t min_len = kDefaultMinLength;
  std::int64_t smoothing = kDefaultSmoothing;
};

// Centered moving average; the window is truncated at the ends.
std::vector<double> moving_average(const std::vector<double>& values, std::int64_t width);

// Midpoint between the two class means of the split of `values` that
// minimizes the pooled within-class variance.
double two_class_threshold(const std::vector<double>& values);

// Smooth, threshold (strictly above), merge runs separated by fewer than
// min_len/2 bp, then drop runs shorter than min_len.
RegionCall call_regions(const BandEnergyProfile& profile, const CallOptions& opts = {});

struct EvaluationMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mean_boundary_offset = 0.0;  // bp, over edges of matched intervals
  std::int64_t true_positive_bp = 0;
  std::int64_t called_bp = 0;
  std::int64_t truth_bp = 0;
  std::size_t matched_intervals = 0;
  bool precision_undefined = false;  // no calls: precision reported as 0
  bool offset_undefined = false;     // nothing matched: offset reported as 0
};

// Per-bp scores of `calls` against the `label` entries of `truth`. When seq_id
// is non-empty only entries of that sequence are used; otherwise the selected
// entries must all belong to one sequence (InvalidParameter if not).
EvaluationMetrics evaluate(const RegionCall& calls, const AnnotationTrack& truth,
                           RegionLabel label, const std::string& seq_id = {});

// Calls as an annotation track (same 4-column format sequence_io reads).
AnnotationTrack calls_to_track(const RegionCall& calls, const std::string& seq_id,
                               RegionLabel label = RegionLabel::kIntron);

std::string metrics_to_text(const EvaluationMetrics& m);

}  // namespace fcgs
