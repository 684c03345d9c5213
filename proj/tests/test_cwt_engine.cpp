#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwt_engine.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace fcgs;

namespace {

// max_b |x - y| / max_b |y| for each scale; returns the worst scale.
double max_row_relative_difference(const Scalogram& x, const Scalogram& y) {
  double worst = 0.0;
  for (std::size_t s = 0; s < y.scale_count(); ++s) {
    double num = 0.0, den = 0.0;
    for (std::size_t b = 0; b < y.width; ++b) {
      num = std::max(num, std::abs(x.coefficient(s, b) - y.coefficient(s, b)));
      den = std::max(den, std::abs(y.coefficient(s, b)));
    }
    if (den > 0.0) worst = std::max(worst, num / den);
  }
  return worst;
}

ScaleGrid default_grid() { return ScaleGrid::make(1.0, 64.0, 64); }

}  // namespace

TEST_CASE("morlet closed form") {
  const MorletParams p;
  const auto z = morlet(0.0, p);
  CHECK(z.real() == doctest::Approx(0.75113).epsilon(1e-5));
  CHECK(std::abs(z.imag()) < 1e-15);
  for (double t : {-3.3, -0.7, 0.0, 0.25, 1.0, 4.5}) {
    CHECK(std::abs(morlet(t, p) - testing::morlet_closed_form(t, 5.4285)) < 1e-15);
  }
  CHECK(std::abs(morlet(40.0, p)) < 1e-300);
}

TEST_CASE("mother tabulation is zero mean") {
  const MorletParams p;
  const auto tab = mother_tabulation(p);
  REQUIRE(tab.size() == 601);
  std::complex<double> sum = 0.0;
  for (const auto& v : tab) sum += v;
  CHECK(std::abs(sum) < 1e-6);
  CHECK(std::abs(sum) / 601.0 < 1e-6);
  CHECK(std::abs(tab[300] - morlet(0.0, p)) < 1e-15);
  CHECK(std::abs(tab.front() - morlet(-8.0, p)) < 1e-15);
}

TEST_CASE("morlet params validation") {
  MorletParams p;
  p.omega0 = 5.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.omega0 = 6.0;
  p.support_len = 2;
  CHECK_THROWS_AS(p.validate(), Error);
  MorletParams even;
  even.support_len = 600;
  CHECK(even.canonical().support_len == 601);
}

TEST_CASE("daughter wavelets") {
  const MorletParams p;
  const auto d1 = daughter(p, 1.0);
  for (std::ptrdiff_t t = -static_cast<std::ptrdiff_t>(d1.half); t <= static_cast<std::ptrdiff_t>(d1.half); ++t) {
    CHECK(std::abs(d1.at(t) - testing::morlet_closed_form(static_cast<double>(t), 5.4285)) < 1e-15);
  }
  auto norm = [](const Daughter& d) {
    double s = 0.0;
    for (const auto& v : d.taps) s += std::norm(v);
    return std::sqrt(s);
  };
  CHECK(norm(daughter(p, 2.0)) == doctest::Approx(norm(d1)).epsilon(0.01));
  for (double a : {1.0, 2.0, 5.5, 17.0, 64.0}) {
    const auto d = daughter(p, a);
    CHECK(d.half == static_cast<std::size_t>(std::ceil(8.0 * a)));
    double peak = 0.0;
    std::ptrdiff_t where = 99;
    for (std::ptrdiff_t t = -static_cast<std::ptrdiff_t>(d.half); t <= static_cast<std::ptrdiff_t>(d.half); ++t) {
      if (std::abs(d.at(t)) > peak) {
        peak = std::abs(d.at(t));
        where = t;
      }
    }
    CHECK(where == 0);
  }
  CHECK_THROWS_AS(daughter(p, 0.0), Error);
  CHECK_THROWS_AS(daughter(p, -1.0), Error);
}

TEST_CASE("scale to frequency") {
  const MorletParams p;
  CHECK(scale_to_frequency(1.0, p) == doctest::Approx(0.86397).epsilon(1e-5));
  CHECK(p.f0() / 0.15 == doctest::Approx(5.76).epsilon(1e-3));
  for (double a : {0.5, 1.0, 3.7, 64.0}) {
    CHECK(scale_to_frequency(2 * a, p) == doctest::Approx(scale_to_frequency(a, p) / 2));
  }
  CHECK_THROWS_AS(scale_to_frequency(0.0, p), Error);
}

TEST_CASE("scale grid") {
  const auto g = default_grid();
  REQUIRE(g.scales.size() == 64);
  CHECK(g.scales.front() == 1.0);
  CHECK(g.scales.back() == 64.0);
  CHECK(g.scales[32] == doctest::Approx(std::pow(64.0, 32.0 / 63.0)));
  CHECK(std::is_sorted(g.scales.begin(), g.scales.end()));
  const auto lin = ScaleGrid::make(1.0, 64.0, 64, ScaleSpacing::kLinear);
  for (std::size_t i = 0; i < 64; ++i) CHECK(lin.scales[i] == doctest::Approx(1.0 + i));
  CHECK_THROWS_AS(ScaleGrid::make(0.0, 4.0, 4), Error);
  CHECK_THROWS_AS(ScaleGrid::make(8.0, 4.0, 4), Error);
  CHECK_THROWS_AS(ScaleGrid::make(1.0, 4.0, 0), Error);
  CHECK(ScaleGrid::make(3.0, 3.0, 1).scales == std::vector<double>{3.0});
}

TEST_CASE("cwt structure") {
  const auto f = testing::random_signal(300, 1);
  const auto s = cwt(f, default_grid(), MorletParams{});
  CHECK(s.scale_count() == 64);
  CHECK(s.width == 300);
  for (std::size_t i = 1; i < s.scale_count(); ++i) CHECK(s.frequencies[i] < s.frequencies[i - 1]);
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
    CHECK(std::abs(s.modulus[i] - std::abs(s.coefficients[i])) < 1e-12);
  }
  for (std::size_t i = 0; i < s.scale_count(); ++i) {
    CHECK(s.coi[i] == static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0) * s.scales[i])));
  }
}

TEST_CASE("cwt of zero and empty signals") {
  const std::vector<double> zero(128, 0.0);
  const auto s = cwt(zero, default_grid(), MorletParams{});
  for (const auto& c : s.coefficients) CHECK(c == std::complex<double>(0.0, 0.0));
  const auto d = cwt_direct(zero, ScaleGrid::make(1, 8, 4), MorletParams{});
  for (const auto& c : d.coefficients) CHECK(c == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(cwt(std::vector<double>{}, default_grid(), MorletParams{}), Error);
}

TEST_CASE("cwt_direct matches term-by-term summation") {
  const auto f = testing::random_signal(200, 17);
  const auto grid = ScaleGrid::make(1.0, 16.0, 5);
  const auto d = cwt_direct(f, grid, MorletParams{});
  for (std::size_t s = 0; s < grid.scales.size(); ++s) {
    for (std::size_t b : {0u, 1u, 57u, 100u, 199u}) {
      const auto ref = testing::cwt_term_sum(f, grid.scales[s], b, 5.4285);
      CHECK(std::abs(d.coefficient(s, b) - ref) < 1e-12 * (1.0 + std::abs(ref)));
    }
  }
}

TEST_CASE("fast path equals direct summation") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto f = testing::random_signal(512, seed);
    const auto grid = ScaleGrid::make(1.0, 8.0, 8);
    CHECK(max_row_relative_difference(cwt(f, grid, MorletParams{}), cwt_direct(f, grid, MorletParams{})) <
          1e-8);
  }
  const auto f = testing::random_signal(700, 9);
  CHECK(max_row_relative_difference(cwt(f, default_grid(), MorletParams{}),
                                    cwt_direct(f, default_grid(), MorletParams{})) < 1e-8);
  // Signal shorter than the widest daughter.
  const auto tiny = testing::random_signal(5, 4);
  CHECK(max_row_relative_difference(cwt(tiny, default_grid(), MorletParams{}),
                                    cwt_direct(tiny, default_grid(), MorletParams{})) < 1e-8);
}

TEST_CASE("fast path is independent of the thread count") {
  const auto f = testing::random_signal(3000, 5);
  const auto a = cwt(f, default_grid(), MorletParams{}, {1});
  const auto b = cwt(f, default_grid(), MorletParams{}, {4});
  CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("impulse response is the reversed conjugate daughter") {
  const std::size_t n = 400, p = 200;
  std::vector<double> f(n, 0.0);
  f[p] = 1.0;
  const auto grid = ScaleGrid::make(2.0, 20.0, 3);
  const auto s = cwt(f, grid, MorletParams{});
  for (std::size_t i = 0; i < grid.scales.size(); ++i) {
    const auto d = daughter(MorletParams{}, grid.scales[i]);
    const auto h = static_cast<std::ptrdiff_t>(d.half);
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(n); ++b) {
      const std::ptrdiff_t u = static_cast<std::ptrdiff_t>(p) - b;
      const auto expected = (u >= -h && u <= h) ? std::conj(d.at(u)) : std::complex<double>(0.0);
      CHECK(std::abs(s.coefficient(i, static_cast<std::size_t>(b)) - expected) < 1e-12);
    }
  }
}

TEST_CASE("linearity") {
  const auto f = testing::random_signal(1024, 31);
  const auto g = testing::random_signal(1024, 32);
  std::vector<double> sum(f.size()), scaled(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    sum[i] = f[i] + g[i];
    scaled[i] = -3.25 * f[i];
  }
  const auto grid = default_grid();
  const auto wf = cwt(f, grid, MorletParams{});
  const auto wg = cwt(g, grid, MorletParams{});
  auto expected = wf;
  for (std::size_t i = 0; i < expected.coefficients.size(); ++i) {
    expected.coefficients[i] = wf.coefficients[i] + wg.coefficients[i];
  }
  CHECK(max_row_relative_difference(cwt(sum, grid, MorletParams{}), expected) < 1e-12);
  for (std::size_t i = 0; i < expected.coefficients.size(); ++i) expected.coefficients[i] = -3.25 * wf.coefficients[i];
  CHECK(max_row_relative_difference(cwt(scaled, grid, MorletParams{}), expected) < 1e-12);
}

TEST_CASE("shift covariance") {
  const std::size_t n = 2048, shift = 137;
  const auto f = testing::random_signal(n, 44);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[(i + shift) % n] = f[i];
  const auto grid = ScaleGrid::make(1.0, 32.0, 12);
  const auto wf = cwt(f, grid, MorletParams{});
  const auto wg = cwt(g, grid, MorletParams{});
  for (std::size_t s = 0; s < grid.scales.size(); ++s) {
    const std::size_t h = daughter(MorletParams{}, grid.scales[s]).half;
    for (std::size_t b = shift + h; b + h < n; ++b) {
      CHECK(wg.modulus_at(s, b) == doctest::Approx(wf.modulus_at(s, b - shift)).epsilon(1e-9));
    }
  }
}

TEST_CASE("ridge of a 6.5 bp sinusoid") {
  std::vector<double> f(4096);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::cos(2 * std::numbers::pi * i / 6.5);
  const auto s = cwt(f, default_grid(), MorletParams{});
  std::size_t best = 0;
  double best_mean = -1.0;
  for (std::size_t r = 0; r < s.scale_count(); ++r) {
    double mean = 0.0;
    for (double v : s.modulus_row(r)) mean += v;
    mean /= static_cast<double>(s.width);
    if (mean > best_mean) {
      best_mean = mean;
      best = r;
    }
  }
  CHECK(std::abs(s.frequencies[best] - 1 / 6.5) / (1 / 6.5) < 0.05);
}

TEST_CASE("scalogram binary and csv") {
  const auto f = testing::random_signal(50, 3);
  auto s = cwt(f, ScaleGrid::make(1.0, 4.0, 3), MorletParams{});
  s.start_coordinate = 1000;
  const auto back = scalogram_from_binary(scalogram_to_binary(s));
  CHECK(back.scales == s.scales);
  CHECK(back.frequencies == s.frequencies);
  CHECK(back.coi == s.coi);
  CHECK(back.coefficients == s.coefficients);
  CHECK(back.modulus == s.modulus);
  CHECK(back.start_coordinate == 1000);
  CHECK_THROWS_AS(scalogram_from_binary("FCGSSCL1"), Error);

  const std::string csv = scalogram_modulus_csv(s);
  CHECK(csv.rfind("scale,frequency,1000,1001,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
