#include "intron_scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace fcgs {

BandEnergyProfile band_energy(const Scalogram& s, double f_lo, double f_hi) {
  if (!(f_lo > 0.0) || !(f_hi > f_lo)) {
    throw Error(ErrorCode::kInvalidParameter, "band must satisfy 0 < f_lo < f_hi");
  }
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < s.scale_count(); ++i) {
    if (s.frequencies[i] >= f_lo && s.frequencies[i] <= f_hi) rows.push_back(i);
  }
  if (rows.empty()) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "no scale has its frequency in [%.6g, %.6g]", f_lo, f_hi);
    throw Error(ErrorCode::kEmptyBand, buf);
  }

  BandEnergyProfile p;
  p.f_lo = f_lo;
  p.f_hi = f_hi;
  p.start_coordinate = s.start_coordinate;
  p.values.assign(s.width, 0.0);
  for (std::size_t b = 0; b < s.width; ++b) {
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t r : rows) {
      if (s.in_cone(r, b)) continue;
      sum += s.modulus_at(r, b);
      ++used;
    }
    p.values[b] = used ? sum / static_cast<double>(used) : 0.0;
  }
  return p;
}

std::vector<double> moving_average(const std::vector<double>& values, std::int64_t width) {
  if (width < 0) throw Error(ErrorCode::kInvalidParameter, "smoothing width must be >= 0");
  if (width <= 1) return values;
  const auto n = static_cast<std::int64_t>(values.size());
  const std::int64_t before = width / 2;
  const std::int64_t after = width - before - 1;
  std::vector<double> out(values.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t lo = std::max<std::int64_t>(0, i - before);
    const std::int64_t hi = std::min(n - 1, i + after);
    double sum = 0.0;
    for (std::int64_t j = lo; j <= hi; ++j) sum += values[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

double two_class_threshold(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (v.front() == v.back()) return v.front();

  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
  const long double total = prefix[n];

  // Minimizing pooled within-class variance is maximizing S1^2/n1 + S2^2/n2.
  long double best = -1.0L;
  std::size_t best_split = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i - 1] == v[i]) continue;
    const long double s1 = prefix[i];
    const long double s2 = total - s1;
    const long double score = s1 * s1 / static_cast<long double>(i) +
                              s2 * s2 / static_cast<long double>(n - i);
    if (score > best) {
      best = score;
      best_split = i;
    }
  }
  const long double m1 = prefix[best_split] / static_cast<long double>(best_split);
  const long double m2 = (total - prefix[best_split]) / static_cast<long double>(n - best_split);
  return static_cast<double>(0.5L * (m1 + m2));
}

RegionCall call_regions(const BandEnergyProfile& profile, const CallOptions& opts) {
  if (opts.min_len < 1) throw Error(ErrorCode::kInvalidParameter, "min_len must be >= 1");
  if (opts.smoothing < 0) throw Error(ErrorCode::kInvalidParameter, "smoothing must be >= 0");

  RegionCall out;
  out.min_len = opts.min_len;
  const std::vector<double> smooth = moving_average(profile.values, opts.smoothing);
  out.threshold_used = opts.threshold ? *opts.threshold : two_class_threshold(smooth);

  struct Run {
    std::size_t first, last;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    if (!(smooth[i] > out.threshold_used)) continue;
    if (!runs.empty() && runs.back().last + 1 == i) {
      runs.back().last = i;
    } else {
      runs.push_back({i, i});
    }
  }

  std::vector<Run> merged;
  for (const Run& r : runs) {
    if (!merged.empty()) {
      const auto gap = static_cast<std::int64_t>(r.first - merged.back().last - 1);
      if (2 * gap < opts.min_len) {
        merged.back().last = r.last;
        continue;
      }
    }
    merged.push_back(r);
  }

  for (const Run& r : merged) {
    const auto len = static_cast<std::int64_t>(r.last - r.first + 1);
    if (len < opts.min_len) continue;
    double sum = 0.0;
    for (std::size_t i = r.first; i <= r.last; ++i) sum += profile.values[i];
    out.intervals.push_back(
        {profile.coordinate(r.first), profile.coordinate(r.last), sum / static_cast<double>(len)});
  }
  return out;
}

EvaluationMetrics evaluate(const RegionCall& calls, const AnnotationTrack& truth,
                           RegionLabel label, const std::string& seq_id) {
  std::vector<const Interval*> want;
  for (const auto& iv : truth.entries) {
    if (iv.label == label && (seq_id.empty() || iv.seq_id == seq_id)) want.push_back(&iv);
  }
  if (want.empty()) {
    throw Error(ErrorCode::kLabelNotFound,
                "no '" + std::string(to_string(label)) + "' interval in the truth track");
  }
  for (const auto* t : want) {
    if (t->seq_id != want.front()->seq_id) {
      throw Error(ErrorCode::kInvalidParameter,
                  "truth track spans several sequences; select one by seq_id");
    }
  }

  EvaluationMetrics m;
  for (const auto* t : want) m.truth_bp += t->length();
  for (const auto& c : calls.intervals) m.called_bp += c.length();

  // Both lists are sorted and internally disjoint.
  std::size_t j = 0;
  for (const auto* t : want) {
    while (j < calls.intervals.size() && calls.intervals[j].end < t->start) ++j;
    for (std::size_t k = j; k < calls.intervals.size() && calls.intervals[k].start <= t->end; ++k) {
      const auto& c = calls.intervals[k];
      m.true_positive_bp += std::min(c.end, t->end) - std::max(c.start, t->start) + 1;
    }
  }

  double offset_sum = 0.0;
  for (const auto* t : want) {
    const CalledInterval* best = nullptr;
    std::int64_t best_overlap = 0;
    for (const auto& c : calls.intervals) {
      const std::int64_t ov = std::min(c.end, t->end) - std::max(c.start, t->start) + 1;
      if (ov > best_overlap) {
        best_overlap = ov;
        best = &c;
      }
    }
    if (best) {
      offset_sum += static_cast<double>(std::llabs(best->start - t->start) +
                                        std::llabs(best->end - t->end));
      ++m.matched_intervals;
    }
  }

  if (m.called_bp > 0) {
    m.precision = static_cast<double>(m.true_positive_bp) / static_cast<double>(m.called_bp);
  } else {
    m.precision_undefined = true;
  }
  m.recall = static_cast<double>(m.true_positive_bp) / static_cast<double>(m.truth_bp);
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  if (m.matched_intervals > 0) {
    m.mean_boundary_offset = offset_sum / static_cast<double>(2 * m.matched_intervals);
  } else {
    m.offset_undefined = true;
  }
  return m;
}

AnnotationTrack calls_to_track(const RegionCall& calls, const std::string& seq_id,
                               RegionLabel label) {
  std::vector<Interval> entries;
  entries.reserve(calls.intervals.size());
  for (const auto& c : calls.intervals) entries.push_back({seq_id, c.start, c.end, label});
  return AnnotationTrack::from_entries(std::move(entries));
}

std::string metrics_to_text(const EvaluationMetrics& m) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "precision=%.6f\nrecall=%.6f\nf1=%.6f\nmean_boundary_offset_bp=%.3f\n"
                "true_positive_bp=%lld\ncalled_bp=%lld\ntruth_bp=%lld\nmatched_intervals=%zu\n"
                "precision_undefined=%d\noffset_undefined=%d\n",
                m.precision, m.recall, m.f1, m.mean_boundary_offset,
                static_cast<long long>(m.true_positive_bp), static_cast<long long>(m.called_bp),
                static_cast<long long>(m.truth_bp), m.matched_intervals,
                m.precision_undefined ? 1 : 0, m.offset_undefined ? 1 : 0);
  return buf;
}

}  // namespace fcgs
