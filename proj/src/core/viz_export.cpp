#include "viz_export.hpp"

#include <png.h>

#include <algorithm>
#include <charconv>
#include <csetjmp>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "error.hpp"

namespace fcgs {

namespace {

// 5x7 glyphs, one byte per row, bit 4 = leftmost column.
struct Glyph {
  char c;
  std::array<std::uint8_t, 7> rows;
};

constexpr Glyph kFont[] = {
    {'0', {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}},
    {'1', {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},
    {'2', {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}},
    {'3', {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}},
    {'4', {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}},
    {'5', {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},
    {'6', {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}},
    {'7', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
    {'8', {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}},
    {'9', {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},
    {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}},
    {'/', {0x00, 0x01, 0x02, 0x04, 0x08, 0x10, 0x00}},
    {'-', {0x00, 0x00, 0x00, 0x1F, 0x00, 0x00, 0x00}},
    {'b', {0x10, 0x10, 0x16, 0x19, 0x11, 0x11, 0x1E}},
    {'p', {0x00, 0x00, 0x1E, 0x11, 0x1E, 0x10, 0x10}},
    {'c', {0x00, 0x00, 0x0E, 0x10, 0x10, 0x11, 0x0E}},
    {'y', {0x00, 0x00, 0x11, 0x11, 0x0F, 0x01, 0x0E}},
    {'l', {0x0C, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E}},
    {'e', {0x00, 0x00, 0x0E, 0x11, 0x1F, 0x10, 0x0E}},
    {'s', {0x00, 0x00, 0x0E, 0x10, 0x0E, 0x01, 0x1E}},
};

constexpr std::size_t kGlyphAdvance = 6;
constexpr std::size_t kMarginLeft = 48;
constexpr std::size_t kMarginTop = 14;
constexpr std::size_t kMarginRight = 10;
constexpr std::size_t kMarginBottom = 22;
constexpr Rgb kInk{0, 0, 0};
constexpr Rgb kOverlay{255, 255, 255};

const Glyph* find_glyph(char c) {
  for (const auto& g : kFont) {
    if (g.c == c) return &g;
  }
  return nullptr;
}

void set_pixel(RgbImage& img, std::size_t x, std::size_t y, Rgb c) {
  if (x >= img.width || y >= img.height) return;
  std::memcpy(&img.pixels[3 * (y * img.width + x)], c.data(), 3);
}

void draw_text(RgbImage& img, std::size_t x, std::size_t y, std::string_view text) {
  for (char ch : text) {
    if (const Glyph* g = find_glyph(ch)) {
      for (std::size_t r = 0; r < 7; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
          if (g->rows[r] & (0x10 >> c)) set_pixel(img, x + c, y + r, kInk);
        }
      }
    }
    x += kGlyphAdvance;
  }
}

std::string format_frequency(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", f);
  return buf;
}

struct Window {
  std::size_t first = 0;  // column index into the scalogram
  std::size_t count = 0;
};

Window resolve_window(const Scalogram& s, const RenderSpec& spec) {
  if (spec.width < 16 || spec.height < 16) {
    throw Error(ErrorCode::kInvalidParameter, "render size must be at least 16x16");
  }
  if (s.width == 0 || s.scale_count() == 0) {
    throw Error(ErrorCode::kEmptyWindow, "scalogram is empty");
  }
  if (spec.window_start == 0 && spec.window_end == 0) return {0, s.width};
  if (spec.window_start > spec.window_end) {
    throw Error(ErrorCode::kEmptyWindow, "render window start exceeds its end");
  }
  const std::int64_t lo = s.start_coordinate;
  const std::int64_t hi = s.start_coordinate + static_cast<std::int64_t>(s.width) - 1;
  if (spec.window_start < lo || spec.window_end > hi) {
    throw Error(ErrorCode::kRange, "render window " + std::to_string(spec.window_start) + "-" +
                                       std::to_string(spec.window_end) +
                                       " outside scalogram range " + std::to_string(lo) + "-" +
                                       std::to_string(hi));
  }
  return {static_cast<std::size_t>(spec.window_start - lo),
          static_cast<std::size_t>(spec.window_end - spec.window_start + 1)};
}

void png_append(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), len);
}

void png_warning_ignore(png_structp, png_const_charp) {}

// libpng's default handler prints to stderr before jumping; ours only jumps.
[[noreturn]] void png_error_quiet(png_structp png, png_const_charp) { png_longjmp(png, 1); }

struct PngSource {
  std::string_view bytes;
  std::size_t pos = 0;
};

void png_consume(png_structp png, png_bytep data, png_size_t len) {
  auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
  if (src->bytes.size() - src->pos < len) png_error(png, "truncated PNG");
  std::memcpy(data, src->bytes.data() + src->pos, len);
  src->pos += len;
}

}  // namespace

Colormap parse_colormap(std::string_view name) {
  if (name == "jet") return Colormap::kJet;
  if (name == "gray" || name == "grey") return Colormap::kGray;
  throw Error(ErrorCode::kInvalidParameter, "unknown colormap '" + std::string(name) + "'");
}

Rgb colormap_rgb(Colormap map, double v) {
  v = std::clamp(std::isfinite(v) ? v : 0.0, 0.0, 1.0);
  auto q = [](double c) {
    return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(c, 0.0, 1.0)));
  };
  if (map == Colormap::kGray) return {q(v), q(v), q(v)};
  return {q(1.5 - std::abs(4.0 * v - 3.0)), q(1.5 - std::abs(4.0 * v - 2.0)),
          q(1.5 - std::abs(4.0 * v - 1.0))};
}

PlotLayout render_layout(const RenderSpec& spec) {
  PlotLayout l;
  l.width = spec.width;
  l.height = spec.height;
  if (spec.axes) {
    l.left = kMarginLeft;
    l.top = kMarginTop;
    l.image_width = kMarginLeft + spec.width + kMarginRight;
    l.image_height = kMarginTop + spec.height + kMarginBottom;
  } else {
    l.image_width = spec.width;
    l.image_height = spec.height;
  }
  return l;
}

RgbImage render_raster(const Scalogram& s, const RenderSpec& spec) {
  const Window win = resolve_window(s, spec);
  const PlotLayout layout = render_layout(spec);
  const std::size_t rows = s.scale_count();

  RgbImage img;
  img.width = layout.image_width;
  img.height = layout.image_height;
  img.pixels.assign(3 * img.width * img.height, 255);

  double peak = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t b = win.first; b < win.first + win.count; ++b) {
      peak = std::max(peak, s.modulus_at(r, b));
    }
  }

  for (std::size_t y = 0; y < layout.height; ++y) {
    const std::size_t r = y * rows / layout.height;
    for (std::size_t x = 0; x < layout.width; ++x) {
      const std::size_t b = win.first + x * win.count / layout.width;
      const double v = peak > 0.0 ? s.modulus_at(r, b) / peak : 0.0;
      set_pixel(img, layout.left + x, layout.top + y, colormap_rgb(spec.colormap, v));
    }
  }

  const std::int64_t coord0 = s.start_coordinate + static_cast<std::int64_t>(win.first);
  if (spec.overlay) {
    const auto count = static_cast<std::int64_t>(win.count);
    auto draw_boundary = [&](std::int64_t coord) {
      const std::int64_t off = coord - coord0;
      if (off < 0 || off >= count) return;
      const auto x = static_cast<std::size_t>(off) * layout.width / win.count;
      for (std::size_t y = 0; y < layout.height; ++y) set_pixel(img, layout.left + x, layout.top + y, kOverlay);
    };
    for (const auto& iv : spec.overlay->entries) {
      draw_boundary(iv.start);
      draw_boundary(iv.end);
    }
  }

  if (spec.axes) {
    const std::size_t left = layout.left, top = layout.top;
    for (std::size_t x = left - 1; x <= left + layout.width; ++x) {
      set_pixel(img, x, top - 1, kInk);
      set_pixel(img, x, top + layout.height, kInk);
    }
    for (std::size_t y = top - 1; y <= top + layout.height; ++y) {
      set_pixel(img, left - 1, y, kInk);
      set_pixel(img, left + layout.width, y, kInk);
    }
    draw_text(img, 2, 3, "cycles/bp");

    constexpr std::size_t kTicks = 5;
    for (std::size_t t = 0; t < kTicks; ++t) {
      const std::size_t y = t * (layout.height - 1) / (kTicks - 1);
      const std::size_t r = y * rows / layout.height;
      for (std::size_t k = 2; k <= 4; ++k) set_pixel(img, left - k, top + y, kInk);
      const std::string label = format_frequency(s.frequencies[r]);
      const std::size_t text_w = label.size() * kGlyphAdvance;
      const std::size_t ty = std::min(top + y >= 3 ? top + y - 3 : 0, img.height - 8);
      draw_text(img, left >= text_w + 6 ? left - text_w - 6 : 0, ty, label);
    }
    for (std::size_t t = 0; t < kTicks; ++t) {
      const std::size_t x = t * (layout.width - 1) / (kTicks - 1);
      const std::int64_t coord =
          coord0 + static_cast<std::int64_t>(x * win.count / layout.width);
      for (std::size_t k = 1; k <= 3; ++k) set_pixel(img, left + x, top + layout.height + k, kInk);
      const std::string label = std::to_string(coord);
      const std::size_t text_w = label.size() * kGlyphAdvance;
      std::size_t tx = left + x >= text_w / 2 ? left + x - text_w / 2 : 0;
      tx = std::min(tx, img.width - text_w);
      draw_text(img, tx, top + layout.height + 5, label);
    }
    draw_text(img, left + layout.width - 2 * kGlyphAdvance, top + layout.height + 14, "bp");
  }
  return img;
}

std::string render_scalogram(const Scalogram& s, const RenderSpec& spec) {
  return encode_png(render_raster(s, spec));
}

std::string encode_png(const RgbImage& image) {
  std::string out;
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_quiet, png_warning_ignore);
  if (!png) throw Error(ErrorCode::kIo, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  // libpng reports failures by longjmp; nothing with a destructor lives
  // between here and the matching setjmp.
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kIo, "PNG encoding failed");
  }
  png_set_write_fn(png, &out, png_append, nullptr);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 6);
  png_write_info(png, info);
  for (std::size_t y = 0; y < image.height; ++y) {
    png_write_row(png, image.pixels.data() + 3 * y * image.width);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

RgbImage decode_png(std::string_view bytes) {
  if (bytes.size() < 8 || png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8)) {
    throw Error(ErrorCode::kParse, "not a PNG stream");
  }
  RgbImage img;
  PngSource src{bytes, 0};
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_quiet, png_warning_ignore);
  if (!png) throw Error(ErrorCode::kIo, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorCode::kParse, "PNG decoding failed");
  }
  png_set_read_fn(png, &src, png_consume);
  png_read_info(png, info);
  png_set_strip_16(png);
  png_set_palette_to_rgb(png);
  png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);
  img.width = png_get_image_width(png, info);
  img.height = png_get_image_height(png, info);
  img.pixels.resize(3 * img.width * img.height);
  for (std::size_t y = 0; y < img.height; ++y) {
    png_read_row(png, img.pixels.data() + 3 * y * img.width, nullptr);
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

std::string profile_to_csv(const BandEnergyProfile& p) {
  std::string out = "coordinate,energy\n";
  char buf[64];
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int n = std::snprintf(buf, sizeof buf, "%lld,%.17g\n",
                                static_cast<long long>(p.coordinate(i)), p.values[i]);
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

BandEnergyProfile profile_from_csv(std::string_view text) {
  BandEnergyProfile p;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty() || (line_no == 1 && line.starts_with("coordinate"))) continue;
    const std::size_t comma = line.find(',');
    std::int64_t coord = 0;
    double v = 0.0;
    const auto a = line.substr(0, comma);
    const auto b = comma == line.npos ? std::string_view{} : line.substr(comma + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), coord);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), v);
    if (comma == line.npos || r1.ec != std::errc{} || r2.ec != std::errc{}) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad profile row",
                  static_cast<long long>(line_no));
    }
    if (p.values.empty()) p.start_coordinate = coord;
    p.values.push_back(v);
  }
  return p;
}

void export_profile_csv(const BandEnergyProfile& p, const std::filesystem::path& path) {
  write_text_file(path, profile_to_csv(p));
}

}  // namespace fcgs
