#include "synth.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <random>

#include "error.hpp"

namespace fcgs {

namespace {

constexpr char kBases[4] = {'A', 'C', 'G', 'T'};

// mt19937_64's output sequence is fixed by the standard; the distributions
// in <random> are not, so the draws are done by hand.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  char base(const std::array<double, 4>& cdf) {
    const double u = uniform();
    for (int i = 0; i < 3; ++i) {
      if (u < cdf[static_cast<std::size_t>(i)]) return kBases[i];
    }
    return kBases[3];
  }

  char other_base(char current) {
    const auto pick = static_cast<int>(uniform() * 3.0);
    int seen = 0;
    for (char b : kBases) {
      if (b == current) continue;
      if (seen++ == pick) return b;
    }
    return current == 'A' ? 'C' : 'A';
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::vector<std::int64_t> parse_layout(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      throw Error(ErrorCode::kConfig, "layout segment '" + std::string(tok) +
                                          "' is not a positive length");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::kConfig, "layout is empty");
  return out;
}

SynthResult synthesize(const SynthSpec& spec) {
  if (spec.layout.empty()) throw Error(ErrorCode::kConfig, "layout is empty");
  for (auto len : spec.layout) {
    if (len < 1) throw Error(ErrorCode::kConfig, "layout lengths must be positive");
  }
  if (!(spec.mutation_rate >= 0.0 && spec.mutation_rate <= 1.0)) {
    throw Error(ErrorCode::kConfig, "mutation rate must lie in [0,1]");
  }
  if (spec.unit.empty()) throw Error(ErrorCode::kConfig, "motif unit is empty");
  const NucleotideSequence unit_check = NucleotideSequence::from_letters("unit", spec.unit);
  if (unit_check.residues.find('N') != std::string::npos) {
    throw Error(ErrorCode::kConfig, "motif unit must use A/C/G/T only");
  }
  const std::string& short_unit = unit_check.residues;
  const std::string long_unit = short_unit + short_unit.back();

  std::array<double, 4> cdf{};
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(spec.composition[i] >= 0.0)) throw Error(ErrorCode::kConfig, "bad composition");
    total += spec.composition[i];
  }
  if (!(total > 0.0)) throw Error(ErrorCode::kConfig, "composition sums to zero");
  double acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    acc += spec.composition[i] / total;
    cdf[i] = acc;
  }

  Draw draw(spec.seed);
  SynthResult out;
  out.sequence.id = spec.seq_id;
  const auto total_len = std::accumulate(spec.layout.begin(), spec.layout.end(), std::int64_t{0});
  out.sequence.residues.reserve(static_cast<std::size_t>(total_len));

  std::vector<Interval> truth;
  for (std::size_t seg = 0; seg < spec.layout.size(); ++seg) {
    const auto len = static_cast<std::size_t>(spec.layout[seg]);
    const std::int64_t start = static_cast<std::int64_t>(out.sequence.residues.size()) + 1;
    std::string& res = out.sequence.residues;
    const bool motif = seg % 2 == 1;
    if (motif) {
      std::string block;
      for (std::size_t k = 0; block.size() < len; ++k) block += (k % 2 == 0) ? short_unit : long_unit;
      block.resize(len);
      for (char& c : block) {
        if (spec.mutation_rate > 0.0 && draw.uniform() < spec.mutation_rate) c = draw.other_base(c);
      }
      res += block;
    } else {
      for (std::size_t i = 0; i < len; ++i) res.push_back(draw.base(cdf));
    }
    truth.push_back({spec.seq_id, start, start + static_cast<std::int64_t>(len) - 1,
                     motif ? RegionLabel::kIntron : RegionLabel::kOther});
  }
  out.truth = AnnotationTrack::from_entries(std::move(truth));
  return out;
}

}  // namespace fcgs
