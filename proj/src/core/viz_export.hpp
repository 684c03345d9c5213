#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwt_engine.hpp"
#include "intron_scan.hpp"
#include "sequence_io.hpp"

namespace fcgs {

enum class Colormap { kJet, kGray };

Colormap parse_colormap(std::string_view name);  // "jet" | "gray"

using Rgb = std::array<std::uint8_t, 3>;

// v in [0,1]; jet runs from dark blue (0) through cyan and yellow to dark red (1).
Rgb colormap_rgb(Colormap map, double v);

struct RenderSpec {
  // Genomic window, inclusive. Both zero selects the whole scalogram.
  std::int64_t window_start = 0;
  std::int64_t window_end = 0;
  Colormap colormap = Colormap::kJet;
  std::size_t width = 800;   // plot area, px
  std::size_t height = 256;  // plot area, px
  std::optional<AnnotationTrack> overlay;  // boundary lines at entry edges
  bool axes = true;                        // margins with tick labels
};

// Where the plot area sits inside the image.
struct PlotLayout {
  std::size_t left = 0;
  std::size_t top = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t image_width = 0;
  std::size_t image_height = 0;
};

PlotLayout render_layout(const RenderSpec& spec);

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB

  Rgb at(std::size_t x, std::size_t y) const {
    const std::size_t i = 3 * (y * width + x);
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
};

// Rows are scales with the highest frequency on top; columns are positions
// in the window. Colors use modulus / window maximum.
RgbImage render_raster(const Scalogram& s, const RenderSpec& spec);
std::string render_scalogram(const Scalogram& s, const RenderSpec& spec);  // PNG bytes

std::string encode_png(const RgbImage& image);
RgbImage decode_png(std::string_view bytes);

// "coordinate,energy" header and one row per position, %.17g values.
std::string profile_to_csv(const BandEnergyProfile& p);
BandEnergyProfile profile_from_csv(std::string_view text);
void export_profile_csv(const BandEnergyProfile& p, const std::filesystem::path& path);

}  // namespace fcgs
