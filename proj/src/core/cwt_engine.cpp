#include "cwt_engine.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "binary_io.hpp"
#include "error.hpp"

namespace fcgs {

namespace {

constexpr std::string_view kScalogramMagic = "FCGSSCL1";

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer fftw_buffer(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer(p);
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(p);
  }
};
using FftwPlan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// Smallest 7-smooth integer >= n.
std::size_t good_fft_size(std::size_t n) {
  for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
    std::size_t r = m;
    for (std::size_t p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

Scalogram prepare(std::size_t width, const ScaleGrid& grid, const MorletParams& params) {
  Scalogram out;
  out.width = width;
  out.scales = grid.scales;
  for (double a : grid.scales) {
    out.frequencies.push_back(scale_to_frequency(a, params));
    out.coi.push_back(static_cast<std::uint64_t>(std::ceil(std::numbers::sqrt2 * a)));
  }
  out.coefficients.assign(grid.scales.size() * width, Complex{});
  return out;
}

void fill_modulus(Scalogram& s) {
  s.modulus.resize(s.coefficients.size());
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) s.modulus[i] = std::abs(s.coefficients[i]);
}

void check_inputs(std::span<const double> signal, const ScaleGrid& grid,
                  const MorletParams& params) {
  if (signal.empty()) throw Error(ErrorCode::kEmptySignal, "cannot transform an empty signal");
  grid.validate();
  params.validate();
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, t));
}

}  // namespace

double MorletParams::f0() const { return omega0 / (2.0 * std::numbers::pi); }

MorletParams MorletParams::canonical() const {
  MorletParams p = *this;
  if (p.support_len % 2 == 0) ++p.support_len;
  return p;
}

void MorletParams::validate() const {
  if (!(omega0 > 5.0) || !std::isfinite(omega0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "omega0 must exceed 5 for an admissible Morlet wavelet");
  }
  if (support_len < 3) throw Error(ErrorCode::kInvalidParameter, "support_len must be >= 3");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorCode::kInvalidParameter, "half_width must be positive");
  }
}

Complex morlet(double t, const MorletParams& params) {
  const double w0 = params.omega0;
  const double norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  const double kappa = std::exp(-0.5 * w0 * w0);
  const double envelope = std::exp(-0.5 * t * t);
  const Complex carrier(std::cos(w0 * t), std::sin(w0 * t));
  return norm * (carrier - kappa) * envelope;
}

std::vector<Complex> mother_tabulation(const MorletParams& params) {
  const MorletParams p = params.canonical();
  p.validate();
  std::vector<Complex> out(p.support_len);
  const auto half = static_cast<std::ptrdiff_t>(p.support_len / 2);
  const double step = p.half_width / static_cast<double>(half);
  for (std::ptrdiff_t j = -half; j <= half; ++j) {
    out[static_cast<std::size_t>(j + half)] = morlet(static_cast<double>(j) * step, p);
  }
  return out;
}

Daughter daughter(const MorletParams& params, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidScale, "scale must be positive");
  }
  params.validate();
  Daughter d;
  d.scale = a;
  d.half = static_cast<std::size_t>(std::ceil(a * params.half_width));
  d.taps.resize(2 * d.half + 1);
  const double gain = 1.0 / std::sqrt(a);
  const auto h = static_cast<std::ptrdiff_t>(d.half);
  for (std::ptrdiff_t t = -h; t <= h; ++t) {
    d.taps[static_cast<std::size_t>(t + h)] = gain * morlet(static_cast<double>(t) / a, params);
  }
  return d;
}

double scale_to_frequency(double a, const MorletParams& params) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidScale, "scale must be positive");
  }
  return params.f0() / a;
}

ScaleGrid ScaleGrid::make(double min, double max, std::size_t count, ScaleSpacing spacing) {
  if (!(min > 0.0) || !(max >= min) || count == 0 || (count > 1 && !(max > min))) {
    throw Error(ErrorCode::kInvalidScale, "scale range must satisfy 0 < min < max");
  }
  ScaleGrid g;
  g.scales.resize(count);
  if (count == 1) {
    g.scales[0] = min;
    return g;
  }
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / denom;
    g.scales[i] = spacing == ScaleSpacing::kLog ? min * std::pow(max / min, u)
                                                : min + (max - min) * u;
  }
  g.scales.back() = max;
  g.validate();
  return g;
}

void ScaleGrid::validate() const {
  if (scales.empty()) throw Error(ErrorCode::kInvalidScale, "scale grid is empty");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0) || !std::isfinite(scales[i])) {
      throw Error(ErrorCode::kInvalidScale, "scales must be positive");
    }
    if (i > 0 && !(scales[i] > scales[i - 1])) {
      throw Error(ErrorCode::kInvalidScale, "scales must be strictly increasing");
    }
  }
}

Scalogram cwt(std::span<const double> signal, const ScaleGrid& grid, const MorletParams& params,
              const CwtOptions& opts) {
  check_inputs(signal, grid, params);
  const std::size_t len = signal.size();
  Scalogram out = prepare(len, grid, params);

  std::vector<Daughter> daughters;
  daughters.reserve(grid.scales.size());
  std::size_t max_half = 0;
  for (double a : grid.scales) {
    daughters.push_back(daughter(params, a));
    max_half = std::max(max_half, daughters.back().half);
  }

  // Linear correlation through one circular buffer: N >= len + half keeps the
  // wrapped taps inside the zero padding for every scale.
  const std::size_t n = good_fft_size(len + max_half);
  auto spectrum = fftw_buffer(n);
  FftwPlan forward;
  FftwPlan backward;
  {
    auto a = fftw_buffer(n);
    auto b = fftw_buffer(n);
    std::lock_guard lock(fftw_planner_mutex());
    const int ni = static_cast<int>(n);
    forward.reset(fftw_plan_dft_1d(ni, a.get(), b.get(), FFTW_FORWARD, FFTW_ESTIMATE));
    backward.reset(fftw_plan_dft_1d(ni, a.get(), b.get(), FFTW_BACKWARD, FFTW_ESTIMATE));
  }
  if (!forward || !backward) throw Error(ErrorCode::kInvalidParameter, "FFTW planning failed");

  {
    auto in = fftw_buffer(n);
    for (std::size_t i = 0; i < n; ++i) {
      in[i][0] = i < len ? signal[i] : 0.0;
      in[i][1] = 0.0;
    }
    fftw_execute_dft(forward.get(), in.get(), spectrum.get());
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  auto run_scale = [&](std::size_t s, fftw_complex* kernel, fftw_complex* work) {
    const Daughter& d = daughters[s];
    std::fill_n(&kernel[0][0], 2 * n, 0.0);
    // g(v) = conj(d(-v)) so that T = f * g.
    const auto h = static_cast<std::ptrdiff_t>(d.half);
    for (std::ptrdiff_t u = -h; u <= h; ++u) {
      const Complex c = std::conj(d.at(u));
      const std::size_t idx = static_cast<std::size_t>((-u % static_cast<std::ptrdiff_t>(n) +
                                                        static_cast<std::ptrdiff_t>(n)) %
                                                       static_cast<std::ptrdiff_t>(n));
      kernel[idx][0] = c.real();
      kernel[idx][1] = c.imag();
    }
    fftw_execute_dft(forward.get(), kernel, work);
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = spectrum[i][0], ai = spectrum[i][1];
      const double br = work[i][0], bi = work[i][1];
      work[i][0] = ar * br - ai * bi;
      work[i][1] = ar * bi + ai * br;
    }
    fftw_execute_dft(backward.get(), work, kernel);
    Complex* row = out.coefficients.data() + s * len;
    for (std::size_t b = 0; b < len; ++b) row[b] = Complex(kernel[b][0] * inv_n, kernel[b][1] * inv_n);
  };

  const unsigned threads = resolve_threads(opts.threads, daughters.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    auto kernel = fftw_buffer(n);
    auto work = fftw_buffer(n);
    for (std::size_t s = next++; s < daughters.size(); s = next++) {
      run_scale(s, kernel.get(), work.get());
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  fill_modulus(out);
  return out;
}

Scalogram cwt(const FcgsSignal& signal, const ScaleGrid& grid, const MorletParams& params,
              const CwtOptions& opts) {
  Scalogram s = cwt(std::span<const double>(signal.values), grid, params, opts);
  s.start_coordinate = signal.start_coordinate;
  return s;
}

Scalogram cwt_direct(std::span<const double> signal, const ScaleGrid& grid,
                     const MorletParams& params) {
  check_inputs(signal, grid, params);
  const std::size_t len = signal.size();
  Scalogram out = prepare(len, grid, params);
  const auto n = static_cast<std::ptrdiff_t>(len);
  for (std::size_t s = 0; s < grid.scales.size(); ++s) {
    const Daughter d = daughter(params, grid.scales[s]);
    const auto h = static_cast<std::ptrdiff_t>(d.half);
    for (std::ptrdiff_t b = 0; b < n; ++b) {
      Complex acc{};
      for (std::ptrdiff_t t = std::max<std::ptrdiff_t>(0, b - h); t <= std::min(n - 1, b + h); ++t) {
        acc += signal[static_cast<std::size_t>(t)] * std::conj(d.at(t - b));
      }
      out.coefficients[s * len + static_cast<std::size_t>(b)] = acc;
    }
  }
  fill_modulus(out);
  return out;
}

std::string scalogram_modulus_csv(const Scalogram& s) {
  std::string out = "scale,frequency";
  for (std::size_t b = 0; b < s.width; ++b) {
    out += ',';
    out += std::to_string(s.start_coordinate + static_cast<std::int64_t>(b));
  }
  out += '\n';
  char buf[64];
  auto put = [&](double v) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
  };
  for (std::size_t i = 0; i < s.scale_count(); ++i) {
    put(s.scales[i]);
    out += ',';
    put(s.frequencies[i]);
    for (double v : s.modulus_row(i)) {
      out += ',';
      put(v);
    }
    out += '\n';
  }
  return out;
}

std::string scalogram_to_binary(const Scalogram& s) {
  std::string out;
  const std::size_t m = s.scale_count();
  out.reserve(32 + 24 * m + 16 * m * s.width);
  out.append(kScalogramMagic);
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(m));
  detail::put<std::uint32_t>(out, 0);
  detail::put<std::int64_t>(out, s.start_coordinate);
  detail::put<std::uint64_t>(out, s.width);
  for (double a : s.scales) detail::put<double>(out, a);
  for (double f : s.frequencies) detail::put<double>(out, f);
  for (std::uint64_t c : s.coi) detail::put<std::uint64_t>(out, c);
  for (const Complex& z : s.coefficients) {
    detail::put<double>(out, z.real());
    detail::put<double>(out, z.imag());
  }
  return out;
}

Scalogram scalogram_from_binary(std::string_view bytes) {
  detail::Reader in(bytes);
  if (in.take(8) != kScalogramMagic) throw Error(ErrorCode::kParse, "not a scalogram file");
  Scalogram s;
  const auto m = in.get<std::uint32_t>();
  in.get<std::uint32_t>();
  s.start_coordinate = in.get<std::int64_t>();
  s.width = in.get<std::uint64_t>();
  if (in.remaining() != 24ull * m + 16ull * m * s.width) {
    throw Error(ErrorCode::kParse, "scalogram file length does not match its header");
  }
  s.scales.resize(m);
  s.frequencies.resize(m);
  s.coi.resize(m);
  for (auto& a : s.scales) a = in.get<double>();
  for (auto& f : s.frequencies) f = in.get<double>();
  for (auto& c : s.coi) c = in.get<std::uint64_t>();
  s.coefficients.resize(static_cast<std::size_t>(m) * s.width);
  for (auto& z : s.coefficients) {
    const double re = in.get<double>();
    const double im = in.get<double>();
    z = Complex(re, im);
  }
  fill_modulus(s);
  return s;
}

}  // namespace fcgs
