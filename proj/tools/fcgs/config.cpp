#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "handles.hpp"

namespace fcgs_cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_value(std::string_view what, std::string_view text, std::string_view why) {
  throw Failure(kExitUsage, std::string(what) + ": '" + std::string(text) + "' " + std::string(why));
}

bool parse_bool(std::string_view text, std::string_view what) {
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  bad_value(what, text, "is not a boolean");
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"fasta", "", "input FASTA (required unless synth = true)"},
      {"record", "", "record id to analyze; empty: first record"},
      {"matrix_fasta", "", "FASTA whose record defines the FCGR; empty: the analyzed record"},
      {"matrix_csv", "", "precomputed FCGR CSV; overrides matrix_fasta"},
      {"region", "", "start-end window cut after the FCGR is built; empty: whole record"},
      {"truth", "", "annotation file to score calls against; empty: no metrics"},
      {"label", "intron", "annotation label that calls represent"},
      {"out_dir", "fcgs_out", "directory receiving every artifact"},
      {"k_order", "2", "word length n of the FCGR and the signal"},
      {"omega0", "5.4285", "Morlet carrier frequency, rad/sample"},
      {"support_len", "601", "mother wavelet tabulation points"},
      {"half_width", "8", "mother wavelet tabulation half-width"},
      {"scale_min", "1", "smallest scale"},
      {"scale_max", "64", "largest scale"},
      {"scale_count", "64", "number of scales"},
      {"scale_spacing", "log", "log or linear"},
      {"threads", "0", "CWT worker threads; 0: hardware concurrency"},
      {"band_lo", "1/7.5", "lower band frequency, cycles/bp"},
      {"band_hi", "1/5.5", "upper band frequency, cycles/bp"},
      {"threshold", "auto", "call threshold on the smoothed profile, or auto"},
      {"min_len", "40", "shortest call kept, bp"},
      {"smoothing", "25", "moving-average width, bp"},
      {"colormap", "jet", "jet or gray"},
      {"render_width", "800", "plot width, px"},
      {"render_height", "256", "plot height, px"},
      {"render_window", "", "start-end window of the PNG; empty: whole signal"},
      {"synth", "false", "generate the input genome instead of reading fasta"},
      {"seed", "1", "synthetic genome seed"},
      {"synth_layout", "3000,53,2500,200,3500,500,3000,900,3347,1500,1500",
       "synthetic segment lengths, background first"},
      {"synth_mutation_rate", "0.05", "synthetic motif point-mutation rate"},
      {"synth_unit", "GAATTC", "synthetic motif unit"},
  };
  return keys;
}

ConfigText::ConfigText() {
  for (const auto& k : config_keys()) values_[std::string(k.name)] = std::string(k.default_value);
}

void ConfigText::merge_text(std::string_view text, const std::string& origin) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Failure(kExitUsage, origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!values_.count(key)) {
      throw Failure(kExitUsage, origin + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    values_[key] = std::string(trim(line.substr(eq + 1)));
  }
}

void ConfigText::merge_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitIo, "cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str(), path);
}

void ConfigText::set(const std::string& key, const std::string& value) {
  if (!values_.count(key)) throw Failure(kExitUsage, "unknown config key '" + key + "'");
  values_[key] = value;
}

const std::string& ConfigText::get(const std::string& key) const { return values_.at(key); }

std::string ConfigText::render() const {
  std::string out;
  for (const auto& k : config_keys()) {
    out += std::string(k.name) + " = " + values_.at(std::string(k.name)) + "\n";
  }
  return out;
}

double parse_real(std::string_view text, std::string_view what) {
  text = trim(text);
  const auto slash = text.find('/');
  auto one = [&](std::string_view part) {
    part = trim(part);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      bad_value(what, text, "is not a number");
    }
    return v;
  };
  if (slash == std::string_view::npos) return one(text);
  const double den = one(text.substr(slash + 1));
  if (den == 0.0) bad_value(what, text, "divides by zero");
  return one(text.substr(0, slash)) / den;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    bad_value(what, text, "is not an integer");
  }
  return v;
}

Window parse_window(std::string_view text, std::string_view what) {
  text = trim(text);
  const auto dash = text.find('-', 1);
  if (dash == std::string_view::npos) bad_value(what, text, "is not start-end");
  Window w{parse_integer(text.substr(0, dash), what), parse_integer(text.substr(dash + 1), what)};
  if (w.start < 1 || w.end < w.start) bad_value(what, text, "is not a 1-based start <= end window");
  return w;
}

PipelineConfig resolve(const ConfigText& text) {
  PipelineConfig c;
  auto str = [&](const char* key) { return text.get(key); };
  c.fasta = str("fasta");
  c.record = str("record");
  c.matrix_fasta = str("matrix_fasta");
  c.matrix_csv = str("matrix_csv");
  if (!str("region").empty()) c.region = parse_window(str("region"), "region");
  c.truth = str("truth");
  if (fcgs_label_parse(str("label").c_str(), &c.label) != FCGS_OK) {
    bad_value("label", str("label"), "is not exon, intron, intergenic or other");
  }
  c.out_dir = str("out_dir");
  if (c.out_dir.empty()) bad_value("out_dir", "", "must not be empty");

  const auto k = parse_integer(str("k_order"), "k_order");
  if (k < 1 || k > 12) bad_value("k_order", str("k_order"), "must lie in 1..12");
  c.k_order = static_cast<int>(k);

  c.morlet.omega0 = parse_real(str("omega0"), "omega0");
  if (!(c.morlet.omega0 > 5.0)) bad_value("omega0", str("omega0"), "must exceed 5");
  const auto support = parse_integer(str("support_len"), "support_len");
  if (support < 3) bad_value("support_len", str("support_len"), "must be at least 3");
  c.morlet.support_len = static_cast<std::size_t>(support);
  c.morlet.half_width = parse_real(str("half_width"), "half_width");
  if (!(c.morlet.half_width > 0.0)) bad_value("half_width", str("half_width"), "must be positive");

  c.grid.scale_min = parse_real(str("scale_min"), "scale_min");
  c.grid.scale_max = parse_real(str("scale_max"), "scale_max");
  if (!(c.grid.scale_min > 0.0)) bad_value("scale_min", str("scale_min"), "must be positive");
  if (!(c.grid.scale_max >= c.grid.scale_min)) {
    bad_value("scale_max", str("scale_max"), "is below scale_min");
  }
  const auto count = parse_integer(str("scale_count"), "scale_count");
  if (count < 1) bad_value("scale_count", str("scale_count"), "must be at least 1");
  c.grid.count = static_cast<std::size_t>(count);
  if (str("scale_spacing") == "log") {
    c.grid.spacing = FCGS_SPACING_LOG;
  } else if (str("scale_spacing") == "linear") {
    c.grid.spacing = FCGS_SPACING_LINEAR;
  } else {
    bad_value("scale_spacing", str("scale_spacing"), "is not log or linear");
  }
  const auto threads = parse_integer(str("threads"), "threads");
  if (threads < 0) bad_value("threads", str("threads"), "must not be negative");
  c.threads = static_cast<unsigned>(threads);

  c.band_lo = parse_real(str("band_lo"), "band_lo");
  c.band_hi = parse_real(str("band_hi"), "band_hi");
  if (!(c.band_lo > 0.0 && c.band_lo < c.band_hi)) {
    bad_value("band_hi", str("band_hi"), "must exceed a positive band_lo");
  }
  c.calls = fcgs_call_options_default();
  if (str("threshold") != "auto") {
    c.calls.auto_threshold = 0;
    c.calls.threshold = parse_real(str("threshold"), "threshold");
  }
  c.calls.min_len = parse_integer(str("min_len"), "min_len");
  if (c.calls.min_len < 1) bad_value("min_len", str("min_len"), "must be at least 1");
  c.calls.smoothing = parse_integer(str("smoothing"), "smoothing");
  if (c.calls.smoothing < 1) bad_value("smoothing", str("smoothing"), "must be at least 1");

  c.render = fcgs_render_spec_default();
  if (str("colormap") == "jet") {
    c.render.colormap = FCGS_COLORMAP_JET;
  } else if (str("colormap") == "gray" || str("colormap") == "grey") {
    c.render.colormap = FCGS_COLORMAP_GRAY;
  } else {
    bad_value("colormap", str("colormap"), "is not jet or gray");
  }
  const auto w = parse_integer(str("render_width"), "render_width");
  const auto h = parse_integer(str("render_height"), "render_height");
  if (w < 16) bad_value("render_width", str("render_width"), "must be at least 16");
  if (h < 16) bad_value("render_height", str("render_height"), "must be at least 16");
  c.render.width = static_cast<std::size_t>(w);
  c.render.height = static_cast<std::size_t>(h);
  if (!str("render_window").empty()) {
    const Window rw = parse_window(str("render_window"), "render_window");
    c.render.window_start = rw.start;
    c.render.window_end = rw.end;
  }

  const auto seed = parse_integer(str("seed"), "seed");
  if (seed < 0) bad_value("seed", str("seed"), "must not be negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.synth = parse_bool(str("synth"), "synth");
  c.synth_layout = str("synth_layout");
  c.synth_mutation_rate = parse_real(str("synth_mutation_rate"), "synth_mutation_rate");
  if (!(c.synth_mutation_rate >= 0.0 && c.synth_mutation_rate <= 1.0)) {
    bad_value("synth_mutation_rate", str("synth_mutation_rate"), "must lie in [0,1]");
  }
  c.synth_unit = str("synth_unit");
  if (!c.synth && c.fasta.empty()) {
    throw Failure(kExitUsage, "fasta: required unless synth = true");
  }
  return c;
}

}  // namespace fcgs_cli
