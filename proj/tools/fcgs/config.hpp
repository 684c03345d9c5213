#pragma once

#include <fcgs/fcgs.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fcgs_cli {

struct ConfigKey {
  std::string_view name;
  std::string_view default_value;
  std::string_view help;
};

// Every key the pipeline understands, in manifest order.
const std::vector<ConfigKey>& config_keys();

// Raw key -> value text. Starts from the defaults of config_keys().
class ConfigText {
 public:
  ConfigText();

  // Flat "key = value" lines; '#' starts a comment. Unknown keys are errors.
  void merge_text(std::string_view text, const std::string& origin);
  void merge_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;

  // Effective configuration as "key = value" lines.
  std::string render() const;

 private:
  std::map<std::string, std::string> values_;
};

struct Window {
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct PipelineConfig {
  std::string fasta;
  std::string record;
  std::string matrix_fasta;
  std::string matrix_csv;
  std::optional<Window> region;
  std::string truth;
  fcgs_label label = FCGS_LABEL_INTRON;
  std::string out_dir = "fcgs_out";

  int k_order = 2;
  fcgs_morlet_params morlet{};
  fcgs_scale_grid grid{};
  unsigned threads = 0;

  double band_lo = 0.0;
  double band_hi = 0.0;
  fcgs_call_options calls{};

  fcgs_render_spec render{};
  bool synth = false;
  std::uint64_t seed = 1;
  std::string synth_layout;
  double synth_mutation_rate = 0.05;
  std::string synth_unit;
};

// Parses and validates; throws Failure (usage) on the first bad value.
PipelineConfig resolve(const ConfigText& text);

// Number parsing shared with the flag handlers. Accepts "a/b" fractions.
double parse_real(std::string_view text, std::string_view what);
std::int64_t parse_integer(std::string_view text, std::string_view what);
Window parse_window(std::string_view text, std::string_view what);

}  // namespace fcgs_cli
