#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcgs_encoder.hpp"

namespace fcgs {

using Complex = std::complex<double>;

struct MorletParams {
  double omega0 = 5.4285;        // carrier, rad per unit wavelet time
  std::size_t support_len = 601;  // points in the mother tabulation
  double half_width = 8.0;        // mother tabulated on [-half_width, half_width]

  // f0 = omega0 / 2pi, cycles per sample at scale 1.
  double f0() const;
  // Rounds support_len up to the next odd count.
  MorletParams canonical() const;
  // omega0 > 5, support_len >= 3, half_width > 0; throws InvalidParameter.
  void validate() const;
};

// psi(t) = pi^-1/4 (exp(i w0 t) - exp(-w0^2/2)) exp(-t^2/2)
Complex morlet(double t, const MorletParams& params);

// support_len samples of psi evenly spaced over [-half_width, half_width].
std::vector<Complex> mother_tabulation(const MorletParams& params);

// (1/sqrt(a)) psi(t/a) at integer t in [-half, half], half = ceil(a * half_width).
struct Daughter {
  double scale = 1.0;
  std::size_t half = 0;
  std::vector<Complex> taps;  // taps[half + t]

  Complex at(std::ptrdiff_t t) const { return taps[static_cast<std::size_t>(half + t)]; }
};

Daughter daughter(const MorletParams& params, double a);

// f0 / a in cycles per sample (cycles/bp at one sample per bp).
double scale_to_frequency(double a, const MorletParams& params);

enum class ScaleSpacing { kLog, kLinear };

struct ScaleGrid {
  std::vector<double> scales;  // strictly increasing, all > 0

  static ScaleGrid make(double min, double max, std::size_t count,
                        ScaleSpacing spacing = ScaleSpacing::kLog);
  void validate() const;
};

struct Scalogram {
  std::vector<double> scales;
  std::vector<double> frequencies;  // f0 / a, decreasing
  // Samples at each edge of a row whose coefficients feel the zero padding:
  // ceil(sqrt(2) a), the e-folding time of the Morlet envelope.
  std::vector<std::uint64_t> coi;
  std::size_t width = 0;
  std::int64_t start_coordinate = 1;
  std::vector<Complex> coefficients;  // row-major [scale][position]
  std::vector<double> modulus;

  std::size_t scale_count() const noexcept { return scales.size(); }
  Complex coefficient(std::size_t s, std::size_t b) const { return coefficients[s * width + b]; }
  double modulus_at(std::size_t s, std::size_t b) const { return modulus[s * width + b]; }
  std::span<const double> modulus_row(std::size_t s) const {
    return {modulus.data() + s * width, width};
  }
  bool in_cone(std::size_t s, std::size_t b) const {
    return b < coi[s] || b + coi[s] >= width;
  }
};

struct CwtOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

// T[a][b] = sum_t f(t) conj(d_a(t - b)) with zero extension. FFT based.
Scalogram cwt(std::span<const double> signal, const ScaleGrid& grid, const MorletParams& params,
              const CwtOptions& opts = {});
Scalogram cwt(const FcgsSignal& signal, const ScaleGrid& grid, const MorletParams& params,
              const CwtOptions& opts = {});

// Same contract by explicit summation; the reference for cwt().
Scalogram cwt_direct(std::span<const double> signal, const ScaleGrid& grid,
                     const MorletParams& params);

// Modulus CSV: header "scale,frequency,<coordinate>..." then one row per scale.
std::string scalogram_modulus_csv(const Scalogram& s);

// Binary layout (little-endian):
//   0  char[8]  magic "FCGSSCL1"
//   8  uint32   scale count M
//   12 uint32   reserved, 0
//   16 int64    start coordinate
//   24 uint64   width W
//   32 float64[M] scales, float64[M] frequencies, uint64[M] cone widths,
//      then M*W complex coefficients as (re, im) float64 pairs, row-major.
std::string scalogram_to_binary(const Scalogram& s);
Scalogram scalogram_from_binary(std::string_view bytes);

}  // namespace fcgs
