#pragma once

// Reference data and independent oracles shared by the test binaries. The
// oracles restate definitions directly (walk the chaos game, tally words in a
// map, sum the wavelet transform term by term) without calling into the
// library code they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace testing {

inline const std::string kS = "GAATTCCTAAGCCTAAGCCT";

inline const std::vector<std::string> kMonomers = {"G", "A", "A", "T", "T", "C", "C",
                                                    "T", "A", "A", "G", "C", "C", "T",
                                                    "A", "A", "G", "C", "C", "T"};
inline const std::vector<std::string> kDimers = {"GA", "AA", "AT", "TT", "TC", "CC", "CT",
                                                  "TA", "AA", "AG", "GC", "CC", "CT", "TA",
                                                  "AA", "AG", "GC", "CC", "CT"};
inline const std::vector<std::string> kTrimers = {"GAA", "AAT", "ATT", "TTC", "TCC", "CCT",
                                                   "CTA", "TAA", "AAG", "AGC", "GCC", "CCT",
                                                   "CTA", "TAA", "AAG", "AGC", "GCC", "CCT"};

// Reference chromosome V matrices, four decimals, row-major.
inline const std::vector<double> kChrVFcgr1 = {0.1774, 0.1769, 0.3226, 0.3231};
inline const std::vector<double> kChrVFcgr2 = {
    0.0333, 0.0305, 0.0333, 0.033,   //
    0.0627, 0.0509, 0.0618, 0.0487,  //
    0.0489, 0.0506, 0.0619, 0.0628,  //
    0.1339, 0.0893, 0.0642, 0.1341};

inline const std::vector<double> kChrVFcgs1 = {
    0.1769, 0.3226, 0.3226, 0.3231, 0.3231, 0.1774, 0.1774, 0.3231, 0.3226, 0.3226,
    0.1769, 0.1774, 0.1774, 0.3231, 0.3226, 0.3226, 0.1769, 0.1774, 0.1774, 0.3231};

inline std::string chrv_fcgr2_csv() {
  return "# fcgr order=2 counted_words=0 source_id=chrV\n"
         "0.0333,0.0305,0.0333,0.033\n"
         "0.0627,0.0509,0.0618,0.0487\n"
         "0.0489,0.0506,0.0619,0.0628\n"
         "0.1339,0.0893,0.0642,0.1341\n";
}

struct Point {
  double x, y;
};

// X_i = (X_{i-1} + corner) / 2 from (1/2, 1/2).
inline Point walk(std::string_view word) {
  Point p{0.5, 0.5};
  for (char b : word) {
    const double cx = (b == 'G' || b == 'T') ? 1.0 : 0.0;
    const double cy = (b == 'C' || b == 'G') ? 1.0 : 0.0;
    p = {(p.x + cx) / 2.0, (p.y + cy) / 2.0};
  }
  return p;
}

// Row counted from the top (y = 1), column from the left (x = 0).
inline std::pair<std::size_t, std::size_t> quantize(std::string_view word) {
  const double side = std::ldexp(1.0, static_cast<int>(word.size()));
  const Point p = walk(word);
  const auto col = static_cast<std::size_t>(std::floor(p.x * side));
  const auto row = static_cast<std::size_t>(side) - 1 - static_cast<std::size_t>(std::floor(p.y * side));
  return {row, col};
}

inline std::vector<std::string> all_words(int k) {
  std::vector<std::string> out{""};
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char b : std::string("ACGT")) next.push_back(w + b);
    }
    out.swap(next);
  }
  return out;
}

// Frequencies of N-free k-windows placed by the quantization rule.
inline std::vector<double> tally_fcgr(std::string_view seq, int k) {
  std::map<std::string, double> counts;
  double total = 0;
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= seq.size(); ++i) {
    const std::string w(seq.substr(i, static_cast<std::size_t>(k)));
    if (w.find('N') != std::string::npos) continue;
    counts[w] += 1;
    total += 1;
  }
  const std::size_t side = std::size_t{1} << k;
  std::vector<double> cells(side * side, 0.0);
  for (const auto& [w, c] : counts) {
    const auto [r, col] = quantize(w);
    cells[r * side + col] = c / total;
  }
  return cells;
}

inline std::complex<double> morlet_closed_form(double t, double w0) {
  const double norm = std::pow(std::numbers::pi, -0.25);
  const std::complex<double> carrier = std::polar(1.0, w0 * t) - std::exp(-w0 * w0 / 2.0);
  return norm * carrier * std::exp(-t * t / 2.0);
}

// W(a, b) = sum_t f(t) conj(a^-1/2 psi((t - b)/a)), |t - b| <= ceil(8a).
inline std::complex<double> cwt_term_sum(const std::vector<double>& f, double a, std::size_t b,
                                         double w0) {
  const auto h = static_cast<long>(std::ceil(8.0 * a));
  std::complex<double> acc = 0.0;
  for (long u = -h; u <= h; ++u) {
    const long t = static_cast<long>(b) + u;
    if (t < 0 || t >= static_cast<long>(f.size())) continue;
    acc += f[static_cast<std::size_t>(t)] *
           std::conj(morlet_closed_form(static_cast<double>(u) / a, w0) / std::sqrt(a));
  }
  return acc;
}

inline std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) v = u(rng);
  return out;
}

inline std::string random_dna(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string out(n, 'A');
  for (auto& c : out) c = "ACGT"[rng() % 4];
  return out;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("fcgs_test_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
