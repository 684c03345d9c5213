#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cwt_engine.hpp"
#include "error.hpp"
#include "intron_scan.hpp"
#include "support.hpp"
#include "viz_export.hpp"

using namespace fcgs;

namespace {

Scalogram blank(std::size_t rows, std::size_t width) {
  Scalogram s;
  const MorletParams p;
  const auto grid = ScaleGrid::make(1.0, 64.0, rows);
  s.scales = grid.scales;
  for (double a : s.scales) {
    s.frequencies.push_back(scale_to_frequency(a, p));
    s.coi.push_back(0);
  }
  s.width = width;
  s.coefficients.assign(rows * width, 0.0);
  s.modulus.assign(rows * width, 0.0);
  return s;
}

RenderSpec plain(std::size_t w, std::size_t h) {
  RenderSpec spec;
  spec.width = w;
  spec.height = h;
  spec.axes = false;
  return spec;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fcgs::Error");
  return ErrorCode::kConfig;
}

}  // namespace

TEST_CASE("colormap endpoints") {
  CHECK(colormap_rgb(Colormap::kGray, 0.0) == Rgb{0, 0, 0});
  CHECK(colormap_rgb(Colormap::kGray, 1.0) == Rgb{255, 255, 255});
  const Rgb low = colormap_rgb(Colormap::kJet, 0.0);
  const Rgb high = colormap_rgb(Colormap::kJet, 1.0);
  CHECK(low[2] > 100);  // dark blue
  CHECK(low[0] == 0);
  CHECK(high[0] > 100);  // dark red
  CHECK(high[2] == 0);
  CHECK(parse_colormap("jet") == Colormap::kJet);
  CHECK(parse_colormap("gray") == Colormap::kGray);
  CHECK_THROWS_AS(parse_colormap("viridis"), Error);
}

TEST_CASE("all-zero scalogram renders uniformly in the lowest color") {
  const auto img = render_raster(blank(8, 100), plain(64, 32));
  CHECK(img.width == 64);
  CHECK(img.height == 32);
  const Rgb low = colormap_rgb(Colormap::kJet, 0.0);
  for (std::size_t y = 0; y < img.height; ++y) {
    for (std::size_t x = 0; x < img.width; ++x) CHECK(img.at(x, y) == low);
  }
}

TEST_CASE("a single hot row becomes one horizontal band") {
  auto s = blank(8, 100);
  for (std::size_t b = 0; b < s.width; ++b) s.modulus[3 * s.width + b] = 2.0;
  const auto img = decode_png(render_scalogram(s, plain(50, 32)));
  const Rgb hot = colormap_rgb(Colormap::kJet, 1.0);
  const Rgb low = colormap_rgb(Colormap::kJet, 0.0);
  for (std::size_t y = 0; y < img.height; ++y) {
    const bool in_band = y * 8 / 32 == 3;
    for (std::size_t x = 0; x < img.width; ++x) CHECK(img.at(x, y) == (in_band ? hot : low));
  }
}

TEST_CASE("6.5 bp sinusoid lights the row labelled near 0.15") {
  std::vector<double> f(2048);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::cos(2 * std::numbers::pi * i / 6.5);
  const auto s = cwt(f, ScaleGrid::make(1, 64, 64), MorletParams{});
  RenderSpec gray = plain(200, 128);
  gray.colormap = Colormap::kGray;
  const auto g = render_raster(s, gray);
  std::size_t best = 0;
  double best_sum = -1;
  for (std::size_t y = 0; y < g.height; ++y) {
    double sum = 0;
    for (std::size_t x = 0; x < g.width; ++x) sum += g.at(x, y)[0];
    if (sum > best_sum) {
      best_sum = sum;
      best = y;
    }
  }
  const double f_row = s.frequencies[best * s.scale_count() / g.height];
  CHECK(std::abs(f_row - 0.15) < 0.015);
}

TEST_CASE("rendering is deterministic and invariant to modulus scaling") {
  const auto s = cwt(testing::random_signal(500, 1), ScaleGrid::make(1, 64, 32), MorletParams{});
  RenderSpec spec;
  spec.window_start = 50;
  spec.window_end = 449;
  const auto a = render_scalogram(s, spec);
  CHECK(render_scalogram(s, spec) == a);
  for (double alpha : {0.5, 8.0, 1e6}) {
    auto t = s;
    for (auto& v : t.modulus) v *= alpha;
    CHECK(render_scalogram(t, spec) == a);
  }
}

TEST_CASE("axes add margins around the plot") {
  RenderSpec spec;
  spec.width = 100;
  spec.height = 40;
  const auto layout = render_layout(spec);
  const auto img = render_raster(blank(4, 300), spec);
  CHECK(img.width == layout.image_width);
  CHECK(img.height == layout.image_height);
  CHECK(layout.image_width > spec.width);
  CHECK(img.at(layout.left + 5, layout.top + 5) == colormap_rgb(Colormap::kJet, 0.0));
  CHECK(img.at(0, layout.image_height - 1) == Rgb{255, 255, 255});
}

TEST_CASE("overlay draws boundary columns") {
  auto s = blank(4, 100);
  s.start_coordinate = 1001;
  RenderSpec spec = plain(100, 16);
  spec.overlay = AnnotationTrack::from_entries({{"x", 1011, 1050, RegionLabel::kIntron}});
  const auto img = render_raster(s, spec);
  CHECK(img.at(10, 5) == Rgb{255, 255, 255});
  CHECK(img.at(49, 5) == Rgb{255, 255, 255});
  CHECK(img.at(30, 5) == colormap_rgb(Colormap::kJet, 0.0));
}

TEST_CASE("render errors") {
  auto s = blank(4, 100);
  s.start_coordinate = 1001;
  RenderSpec spec;
  spec.window_start = 1050;
  spec.window_end = 1040;
  CHECK(code_of([&] { render_scalogram(s, spec); }) == ErrorCode::kEmptyWindow);
  spec.window_start = 900;
  spec.window_end = 1040;
  CHECK(code_of([&] { render_scalogram(s, spec); }) == ErrorCode::kRange);
  CHECK(code_of([&] { render_scalogram(s, plain(15, 40)); }) == ErrorCode::kInvalidParameter);
  CHECK(code_of([&] { render_scalogram(blank(4, 0), plain(16, 16)); }) == ErrorCode::kEmptyWindow);
}

TEST_CASE("png round trip") {
  RgbImage img;
  img.width = 17;
  img.height = 5;
  for (std::size_t i = 0; i < 3 * 17 * 5; ++i) img.pixels.push_back(static_cast<std::uint8_t>(i * 7));
  const auto back = decode_png(encode_png(img));
  CHECK(back.width == 17);
  CHECK(back.pixels == img.pixels);
  CHECK_THROWS_AS(decode_png("not a png"), Error);
  const auto bytes = encode_png(img);
  CHECK_THROWS_AS(decode_png(bytes.substr(0, bytes.size() / 2)), Error);
}

TEST_CASE("profile csv") {
  BandEnergyProfile p;
  p.start_coordinate = 10;
  p.values = {0.1, 1.0 / 3.0, 2.5e-300};
  const std::string csv = profile_to_csv(p);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.rfind("coordinate,energy\n10,", 0) == 0);
  const auto back = profile_from_csv(csv);
  CHECK(back.start_coordinate == 10);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(back.values[i] - p.values[i]) <= 1e-15 * std::abs(p.values[i]));
  CHECK(profile_to_csv(BandEnergyProfile{}) == "coordinate,energy\n");

  testing::TempDir dir("profile");
  export_profile_csv(p, dir.file("p.csv"));
  CHECK(read_text_file(dir.file("p.csv")) == csv);
  CHECK(code_of([&] { export_profile_csv(p, dir.file("missing/dir/p.csv")); }) == ErrorCode::kIo);
}
