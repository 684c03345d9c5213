#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "config.hpp"
#include "handles.hpp"

namespace fcgs_cli {

namespace {

namespace fs = std::filesystem;

Sequence load_record(const std::string& path, const std::string& record) {
  auto list = make<SequenceList>("read " + path,
                                 [&](fcgs_sequence_list** o) { return fcgs_fasta_read(path.c_str(), o); });
  if (record.empty()) {
    return make<Sequence>("read " + path,
                          [&](fcgs_sequence** o) { return fcgs_sequence_list_get(list.get(), 0, o); });
  }
  return make<Sequence>("read " + path, [&](fcgs_sequence** o) {
    return fcgs_sequence_list_find(list.get(), record.c_str(), o);
  });
}

Sequence cut(Sequence seq, const std::optional<Window>& region) {
  if (!region) return seq;
  return make<Sequence>("region", [&](fcgs_sequence** o) {
    return fcgs_sequence_subsequence(seq.get(), region->start, region->end, o);
  });
}

Fcgr compute_fcgr(const fcgs_sequence* seq, int k, const std::string& stage) {
  return make<Fcgr>(stage, [&](fcgs_fcgr** o) { return fcgs_fcgr_compute(seq, k, nullptr, o); });
}

bool has_magic(const std::string& path, const char* magic) {
  std::ifstream in(path, std::ios::binary);
  char buf[8] = {};
  in.read(buf, sizeof buf);
  return in.gcount() == 8 && std::string_view(buf, 8) == magic;
}

Signal load_signal(const std::string& path) {
  return make<Signal>("read " + path, [&](fcgs_signal** o) {
    return has_magic(path, "FCGSSIG1") ? fcgs_signal_read_binary(path.c_str(), o)
                                       : fcgs_signal_read_csv(path.c_str(), o);
  });
}

Scalogram load_scalogram(const std::string& path) {
  return make<Scalogram>("read " + path, [&](fcgs_scalogram** o) {
    return fcgs_scalogram_read_binary(path.c_str(), o);
  });
}

Annotations load_annotations(const std::string& path) {
  return make<Annotations>("read " + path, [&](fcgs_annotations** o) {
    return fcgs_annotations_read(path.c_str(), o);
  });
}

fcgs_label label_of(const std::string& text) {
  fcgs_label label{};
  check(fcgs_label_parse(text.c_str(), &label), "label");
  return label;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure(kExitIo, "cannot create directory " + dir.string() + ": " + ec.message());
}

std::string sha256(const std::string& path) {
  char hex[65] = {};
  check(fcgs_sha256_file(path.c_str(), hex), "digest " + path);
  return hex;
}

void print_metrics(std::ostream& out, const fcgs_metrics& m) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "precision=%.6f recall=%.6f f1=%.6f mean_boundary_offset=%.3f\n",
                m.precision, m.recall, m.f1, m.mean_boundary_offset);
  out << buf;
}

// Flag values for the stage commands; defaults mirror the pipeline config.
struct StageFlags {
  std::string fasta, record, matrix, out, signal, scalogram, csv, profile, truth, overlay;
  std::string label = "intron", region, window, seq_id, threshold = "auto", colormap = "jet";
  std::string band_lo = "1/7.5", band_hi = "1/5.5", method = "fft", spacing = "log";
  std::string url, cache_dir = ".fcgs-cache";
  int k = 2;
  double omega0 = 5.4285, half_width = 8.0, scale_min = 1.0, scale_max = 64.0;
  std::size_t support_len = 601, scale_count = 64, width = 800, height = 256;
  unsigned threads = 0;
  std::int64_t min_len = 40, smoothing = 25;
  bool no_axes = false;
  bool k_given = false;
  std::uint64_t seed = 1;
  std::string layout = "3000,53,2500,200,3500,500,3000,900,3347,1500,1500";
  std::string unit = "GAATTC";
  double mutation_rate = 0.05;
  std::string bed;
};

int cmd_fcgr(const StageFlags& f, std::ostream& out) {
  const Sequence seq = load_record(f.fasta, f.record);
  const Fcgr m = compute_fcgr(seq.get(), f.k, "fcgr");
  check(fcgs_fcgr_write_csv(m.get(), f.out.c_str()), "write " + f.out);
  char buf[160];
  std::snprintf(buf, sizeof buf, "counted_words=%llu\nentropy_bits=%.6f\n",
                static_cast<unsigned long long>(fcgs_fcgr_counted_words(m.get())),
                fcgs_fcgr_entropy_bits(m.get()));
  out << buf;
  return kExitOk;
}

int cmd_encode(const StageFlags& f, std::ostream& out) {
  Sequence whole = load_record(f.fasta, f.record);
  const Fcgr m = f.matrix.empty()
                     ? compute_fcgr(whole.get(), f.k, "fcgr")
                     : make<Fcgr>("read " + f.matrix, [&](fcgs_fcgr** o) {
                         return fcgs_fcgr_read_csv(f.matrix.c_str(), o);
                       });
  if (f.k_given && fcgs_fcgr_order(m.get()) != f.k) {
    throw Failure(kExitData, f.matrix + " has order " + std::to_string(fcgs_fcgr_order(m.get())) +
                                 ", -k is " + std::to_string(f.k));
  }
  std::optional<Window> region;
  if (!f.region.empty()) region = parse_window(f.region, "--region");
  const Sequence seq = cut(std::move(whole), region);
  const Signal sig =
      make<Signal>("encode", [&](fcgs_signal** o) { return fcgs_encode(seq.get(), m.get(), o); });
  const bool binary = fs::path(f.out).extension() == ".bin";
  check(binary ? fcgs_signal_write_binary(sig.get(), f.out.c_str())
               : fcgs_signal_write_csv(sig.get(), f.out.c_str()),
        "write " + f.out);
  out << "samples=" << fcgs_signal_length(sig.get()) << "\nmasked=" << fcgs_signal_masked_count(sig.get())
      << "\n";
  return kExitOk;
}

fcgs_scale_grid grid_of(const StageFlags& f) {
  if (!(f.scale_min > 0.0) || f.scale_max < f.scale_min) {
    throw Failure(kExitUsage, "--scale-max must be >= --scale-min > 0");
  }
  return {f.scale_min, f.scale_max, f.scale_count,
          f.spacing == "linear" ? FCGS_SPACING_LINEAR : FCGS_SPACING_LOG};
}

int cmd_cwt(const StageFlags& f, std::ostream& out) {
  const Signal sig = load_signal(f.signal);
  const fcgs_scale_grid grid = grid_of(f);
  const fcgs_morlet_params params{f.omega0, f.support_len, f.half_width};
  const Scalogram s = make<Scalogram>("cwt", [&](fcgs_scalogram** o) {
    return fcgs_cwt(sig.get(), &grid, &params, f.method == "direct" ? FCGS_CWT_DIRECT : FCGS_CWT_FFT,
                    f.threads, o);
  });
  check(fcgs_scalogram_write_binary(s.get(), f.out.c_str()), "write " + f.out);
  if (!f.csv.empty()) check(fcgs_scalogram_write_csv(s.get(), f.csv.c_str()), "write " + f.csv);
  out << "scales=" << fcgs_scalogram_scale_count(s.get()) << "\nwidth=" << fcgs_scalogram_width(s.get())
      << "\n";
  return kExitOk;
}

fcgs_call_options call_options_of(const std::string& threshold, std::int64_t min_len,
                                  std::int64_t smoothing) {
  fcgs_call_options o = fcgs_call_options_default();
  if (threshold != "auto") {
    o.auto_threshold = 0;
    o.threshold = parse_real(threshold, "--threshold");
  }
  o.min_len = min_len;
  o.smoothing = smoothing;
  return o;
}

int cmd_scan(const StageFlags& f, std::ostream& out) {
  const Scalogram s = load_scalogram(f.scalogram);
  const double lo = parse_real(f.band_lo, "--band-lo");
  const double hi = parse_real(f.band_hi, "--band-hi");
  const Profile p = make<Profile>("band", [&](fcgs_profile** o) {
    return fcgs_band_energy(s.get(), lo, hi, o);
  });
  if (!f.profile.empty()) check(fcgs_profile_write_csv(p.get(), f.profile.c_str()), "write " + f.profile);
  const fcgs_call_options opts = call_options_of(f.threshold, f.min_len, f.smoothing);
  const Regions r = make<Regions>("call", [&](fcgs_regions** o) {
    return fcgs_call_regions(p.get(), &opts, o);
  });
  const fcgs_label label = label_of(f.label);
  const std::string seq_id = f.seq_id.empty() ? "seq" : f.seq_id;
  const Annotations calls = make<Annotations>("call", [&](fcgs_annotations** o) {
    return fcgs_regions_to_annotations(r.get(), seq_id.c_str(), label, o);
  });
  check(fcgs_annotations_write(calls.get(), f.out.c_str()), "write " + f.out);
  out << "regions=" << fcgs_regions_count(r.get()) << "\nthreshold=" << fcgs_regions_threshold(r.get())
      << "\n";
  if (!f.truth.empty()) {
    const Annotations truth = load_annotations(f.truth);
    fcgs_metrics m{};
    check(fcgs_evaluate(r.get(), truth.get(), label, f.seq_id.empty() ? nullptr : f.seq_id.c_str(), &m),
          "evaluate");
    print_metrics(out, m);
    if (!f.csv.empty()) check(fcgs_metrics_write(&m, f.csv.c_str()), "write " + f.csv);
  }
  return kExitOk;
}

fcgs_colormap colormap_of(const std::string& name) {
  if (name == "jet") return FCGS_COLORMAP_JET;
  if (name == "gray" || name == "grey") return FCGS_COLORMAP_GRAY;
  throw Failure(kExitUsage, "--colormap: '" + name + "' is not jet or gray");
}

int cmd_render(const StageFlags& f, std::ostream& out) {
  const Scalogram s = load_scalogram(f.scalogram);
  fcgs_render_spec spec = fcgs_render_spec_default();
  if (!f.window.empty()) {
    const Window w = parse_window(f.window, "--window");
    spec.window_start = w.start;
    spec.window_end = w.end;
  }
  spec.colormap = colormap_of(f.colormap);
  spec.width = f.width;
  spec.height = f.height;
  spec.axes = f.no_axes ? 0 : 1;
  std::optional<Annotations> overlay;
  if (!f.overlay.empty()) overlay = load_annotations(f.overlay);
  const Buffer png = make<Buffer>("render", [&](fcgs_buffer** o) {
    return fcgs_render_png(s.get(), &spec, overlay ? overlay->get() : nullptr, o);
  });
  check(fcgs_buffer_write(png.get(), f.out.c_str()), "write " + f.out);
  out << "bytes=" << fcgs_buffer_size(png.get()) << "\n";
  return kExitOk;
}

void synthesize(std::uint64_t seed, const std::string& layout, double rate, const std::string& unit,
                const std::string& seq_id, const std::string& fasta, const std::string& bed) {
  fcgs_synth_spec spec = fcgs_synth_spec_default();
  spec.seed = seed;
  spec.layout = layout.c_str();
  spec.mutation_rate = rate;
  spec.unit = unit.c_str();
  spec.seq_id = seq_id.c_str();
  fcgs_sequence* seq_raw = nullptr;
  fcgs_annotations* truth_raw = nullptr;
  check(fcgs_synth(&spec, &seq_raw, &truth_raw), "synth");
  const Sequence seq(seq_raw);
  const Annotations truth(truth_raw);
  check(fcgs_sequence_write_fasta(seq.get(), fasta.c_str()), "write " + fasta);
  check(fcgs_annotations_write(truth.get(), bed.c_str()), "write " + bed);
}

int cmd_synth(const StageFlags& f, std::ostream& out) {
  const std::string seq_id = f.seq_id.empty() ? "synth" : f.seq_id;
  synthesize(f.seed, f.layout, f.mutation_rate, f.unit, seq_id, f.out, f.bed);
  out << "fasta=" << f.out << "\ntruth=" << f.bed << "\n";
  return kExitOk;
}

int cmd_fetch(const StageFlags& f, std::ostream& out) {
  const auto list = make<SequenceList>("fetch", [&](fcgs_sequence_list** o) {
    return fcgs_fasta_fetch(f.url.c_str(), f.cache_dir.c_str(), o);
  });
  check(fcgs_sequence_list_write_fasta(list.get(), f.out.c_str()), "write " + f.out);
  out << "records=" << fcgs_sequence_list_size(list.get()) << "\n";
  return kExitOk;
}

// Stage name is attached to every failure of the composite command.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const Failure& e) {
    throw Failure(e.exit_code(), std::string("stage ") + name + ": " + e.what());
  }
}

int cmd_pipeline(const ConfigText& text, std::ostream& out) {
  const PipelineConfig c = resolve(text);
  const fs::path dir(c.out_dir);
  ensure_dir(dir);
  auto at = [&](const char* name) { return (dir / name).string(); };

  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> artifacts;

  std::string fasta = c.fasta;
  std::string truth_path = c.truth;
  if (c.synth) {
    stage("synth", [&] {
      synthesize(c.seed, c.synth_layout, c.synth_mutation_rate, c.synth_unit, "synth",
                 at("synth.fa"), at("truth.bed"));
    });
    fasta = at("synth.fa");
    truth_path = at("truth.bed");
    artifacts.push_back("synth.fa");
    artifacts.push_back("truth.bed");
  } else {
    inputs.emplace_back("fasta", fasta);
    if (!truth_path.empty()) inputs.emplace_back("truth", truth_path);
  }

  Sequence whole = stage("read", [&] { return load_record(fasta, c.record); });
  const std::string seq_id = fcgs_sequence_id(whole.get());

  Fcgr matrix = stage("fcgr", [&] {
    if (!c.matrix_csv.empty()) {
      inputs.emplace_back("matrix_csv", c.matrix_csv);
      Fcgr m = make<Fcgr>("read " + c.matrix_csv, [&](fcgs_fcgr** o) {
        return fcgs_fcgr_read_csv(c.matrix_csv.c_str(), o);
      });
      if (fcgs_fcgr_order(m.get()) != c.k_order) {
        throw Failure(kExitData, "matrix_csv has order " + std::to_string(fcgs_fcgr_order(m.get())) +
                                     ", k_order is " + std::to_string(c.k_order));
      }
      return m;
    }
    if (!c.matrix_fasta.empty()) {
      inputs.emplace_back("matrix_fasta", c.matrix_fasta);
      const Sequence src = load_record(c.matrix_fasta, "");
      return compute_fcgr(src.get(), c.k_order, "fcgr");
    }
    return compute_fcgr(whole.get(), c.k_order, "fcgr");
  });
  check(fcgs_fcgr_write_csv(matrix.get(), at("fcgr.csv").c_str()), "write fcgr.csv");
  artifacts.push_back("fcgr.csv");

  const Sequence seq = stage("region", [&] { return cut(std::move(whole), c.region); });
  const Signal sig = stage("encode", [&] {
    return make<Signal>("encode", [&](fcgs_signal** o) { return fcgs_encode(seq.get(), matrix.get(), o); });
  });
  check(fcgs_signal_write_csv(sig.get(), at("signal.csv").c_str()), "write signal.csv");
  artifacts.push_back("signal.csv");

  const Scalogram s = stage("cwt", [&] {
    return make<Scalogram>("cwt", [&](fcgs_scalogram** o) {
      return fcgs_cwt(sig.get(), &c.grid, &c.morlet, FCGS_CWT_FFT, c.threads, o);
    });
  });
  check(fcgs_scalogram_write_csv(s.get(), at("scalogram.csv").c_str()), "write scalogram.csv");
  artifacts.push_back("scalogram.csv");

  const Profile p = stage("scan", [&] {
    return make<Profile>("band", [&](fcgs_profile** o) {
      return fcgs_band_energy(s.get(), c.band_lo, c.band_hi, o);
    });
  });
  check(fcgs_profile_write_csv(p.get(), at("profile.csv").c_str()), "write profile.csv");
  artifacts.push_back("profile.csv");

  const Regions r = stage("scan", [&] {
    return make<Regions>("call", [&](fcgs_regions** o) { return fcgs_call_regions(p.get(), &c.calls, o); });
  });
  const Annotations calls = make<Annotations>("call", [&](fcgs_annotations** o) {
    return fcgs_regions_to_annotations(r.get(), seq_id.c_str(), c.label, o);
  });
  check(fcgs_annotations_write(calls.get(), at("calls.bed").c_str()), "write calls.bed");
  artifacts.push_back("calls.bed");
  out << "regions=" << fcgs_regions_count(r.get()) << "\n";

  std::optional<Annotations> truth;
  if (!truth_path.empty()) {
    truth = stage("evaluate", [&] { return load_annotations(truth_path); });
    fcgs_metrics m{};
    stage("evaluate", [&] {
      check(fcgs_evaluate(r.get(), truth->get(), c.label, seq_id.c_str(), &m), "evaluate");
    });
    check(fcgs_metrics_write(&m, at("metrics.txt").c_str()), "write metrics.txt");
    artifacts.push_back("metrics.txt");
    print_metrics(out, m);
  }

  const Buffer png = stage("render", [&] {
    return make<Buffer>("render", [&](fcgs_buffer** o) {
      return fcgs_render_png(s.get(), &c.render, truth ? truth->get() : nullptr, o);
    });
  });
  check(fcgs_buffer_write(png.get(), at("scalogram.png").c_str()), "write scalogram.png");
  artifacts.push_back("scalogram.png");

  std::string manifest = "# fcgs pipeline manifest\nversion = ";
  manifest += fcgs_version();
  manifest += "\n\n[config]\n" + text.render() + "\n[inputs]\n";
  for (const auto& [key, path] : inputs) manifest += key + " = " + path + " sha256:" + sha256(path) + "\n";
  manifest += "\n[artifacts]\n";
  for (const auto& name : artifacts) manifest += name + " sha256:" + sha256(at(name.c_str())) + "\n";
  std::ofstream mf(at("manifest.txt"), std::ios::binary);
  mf << manifest;
  if (!mf) throw Failure(kExitIo, "cannot write " + at("manifest.txt"));
  out << "manifest=" << at("manifest.txt") << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DNA frequency chaos game signals and Morlet scalograms", "fcgs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fcgs_version()));
  StageFlags f;

  auto input = [&](CLI::App* sub) {
    sub->add_option("-i,--fasta", f.fasta, "input FASTA")->required();
    sub->add_option("--record", f.record, "record id; default: first record");
  };
  std::vector<CLI::Option*> order_options;
  auto order = [&](CLI::App* sub) {
    order_options.push_back(
        sub->add_option("-k,--order", f.k, "word length")->capture_default_str()->check(CLI::Range(1, 12)));
  };

  auto* fcgr = app.add_subcommand("fcgr", "frequency matrix of a FASTA record as CSV");
  input(fcgr);
  order(fcgr);
  fcgr->add_option("-o,--out", f.out, "output CSV")->required();

  auto* encode = app.add_subcommand("encode", "FCGS signal of a FASTA record");
  input(encode);
  order(encode);
  encode->add_option("-m,--matrix", f.matrix, "FCGR CSV; default: computed from the whole record")
      ;
  encode->add_option("--region", f.region, "start-end window cut after the FCGR is built");
  encode->add_option("-o,--out", f.out, "output signal (.csv, or .bin for binary)")->required();

  auto* cwt = app.add_subcommand("cwt", "complex Morlet scalogram of a signal");
  cwt->add_option("-s,--signal", f.signal, "signal CSV or binary")->required();
  cwt->add_option("--omega0", f.omega0, "carrier frequency, rad/sample")->capture_default_str();
  cwt->add_option("--support-len", f.support_len, "mother tabulation points")->capture_default_str();
  cwt->add_option("--half-width", f.half_width, "mother tabulation half-width")->capture_default_str();
  cwt->add_option("--scale-min", f.scale_min, "smallest scale")->capture_default_str();
  cwt->add_option("--scale-max", f.scale_max, "largest scale")->capture_default_str();
  cwt->add_option("--scale-count", f.scale_count, "number of scales")->capture_default_str();
  cwt->add_option("--spacing", f.spacing, "log or linear")
      ->capture_default_str()
      ->check(CLI::IsMember({"log", "linear"}));
  cwt->add_option("--method", f.method, "fft or direct")
      ->capture_default_str()
      ->check(CLI::IsMember({"fft", "direct"}));
  cwt->add_option("--threads", f.threads, "worker threads; 0: hardware concurrency")->capture_default_str();
  cwt->add_option("-o,--out", f.out, "output scalogram (binary)")->required();
  cwt->add_option("--csv", f.csv, "also write the modulus as CSV");

  auto* scan = app.add_subcommand("scan", "band energy and region calls from a scalogram");
  scan->add_option("-s,--scalogram", f.scalogram, "scalogram binary")->required();
  scan->add_option("--band-lo", f.band_lo, "lower band frequency")->capture_default_str();
  scan->add_option("--band-hi", f.band_hi, "upper band frequency")->capture_default_str();
  scan->add_option("--threshold", f.threshold, "threshold or auto")->capture_default_str();
  scan->add_option("--min-len", f.min_len, "shortest call, bp")->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--smoothing", f.smoothing, "moving-average width, bp")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan->add_option("--seq-id", f.seq_id, "sequence id written into the calls");
  scan->add_option("--label", f.label, "label of the calls")->capture_default_str();
  scan->add_option("--profile", f.profile, "write the band energy profile CSV");
  scan->add_option("--truth", f.truth, "annotations to score against");
  scan->add_option("--metrics", f.csv, "write metrics when --truth is given");
  scan->add_option("-o,--out", f.out, "output calls (annotation format)")->required();

  auto* render = app.add_subcommand("render", "scalogram PNG");
  render->add_option("-s,--scalogram", f.scalogram, "scalogram binary")->required();
  render->add_option("--window", f.window, "start-end coordinates; default: everything");
  render->add_option("--colormap", f.colormap, "jet or gray")->capture_default_str();
  render->add_option("--width", f.width, "plot width, px")->capture_default_str()->check(CLI::Range(16, 100000));
  render->add_option("--height", f.height, "plot height, px")->capture_default_str()->check(CLI::Range(16, 100000));
  render->add_flag("--no-axes", f.no_axes, "omit margins, ticks and labels");
  render->add_option("--overlay", f.overlay, "annotations drawn as boundary lines");
  render->add_option("-o,--out", f.out, "output PNG")->required();

  auto* synth = app.add_subcommand("synth", "synthetic genome with planted periodic segments");
  synth->add_option("--seed", f.seed, "random seed")->capture_default_str();
  synth->add_option("--layout", f.layout, "segment lengths, background first")->capture_default_str();
  synth->add_option("--mutation-rate", f.mutation_rate, "motif point-mutation rate")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--unit", f.unit, "motif unit")->capture_default_str();
  synth->add_option("--seq-id", f.seq_id, "record id; default: synth");
  synth->add_option("-o,--out", f.out, "output FASTA")->required();
  synth->add_option("--bed", f.bed, "output truth annotations")->required();

  auto* pipeline = app.add_subcommand("pipeline", "run every stage from a config file");
  std::string config_path;
  bool print_config = false;
  pipeline->add_option("-c,--config", config_path, "flat key = value config");
  pipeline->add_flag("--print-config", print_config, "print the effective config and exit");
  std::vector<std::string> flag_values(config_keys().size());
  std::vector<CLI::Option*> key_options;
  for (std::size_t i = 0; i < config_keys().size(); ++i) {
    const auto& key = config_keys()[i];
    std::string flag = "--" + std::string(key.name);
    for (char& ch : flag) {
      if (ch == '_') ch = '-';
    }
    std::string help(key.help);
    if (!key.default_value.empty()) help += " [" + std::string(key.default_value) + "]";
    key_options.push_back(pipeline->add_option(flag, flag_values[i], help));
  }

  auto* fetch = app.add_subcommand("fetch", "download a FASTA into a local cache");
  fetch->add_option("-u,--url", f.url, "http(s) or file URL")->required();
  fetch->add_option("--cache-dir", f.cache_dir, "cache directory")->capture_default_str();
  fetch->add_option("-o,--out", f.out, "output FASTA")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  for (const auto* o : order_options) f.k_given = f.k_given || o->count() > 0;
  try {
    if (fcgr->parsed()) return cmd_fcgr(f, out);
    if (encode->parsed()) return cmd_encode(f, out);
    if (cwt->parsed()) return cmd_cwt(f, out);
    if (scan->parsed()) return cmd_scan(f, out);
    if (render->parsed()) return cmd_render(f, out);
    if (synth->parsed()) return cmd_synth(f, out);
    if (fetch->parsed()) return cmd_fetch(f, out);
    if (pipeline->parsed()) {
      ConfigText text;
      if (!config_path.empty()) text.merge_file(config_path);
      for (std::size_t i = 0; i < key_options.size(); ++i) {
        if (key_options[i]->count() > 0) text.set(std::string(config_keys()[i].name), flag_values[i]);
      }
      if (print_config) {
        out << text.render();
        resolve(text);
        return kExitOk;
      }
      return cmd_pipeline(text, out);
    }
  } catch (const Failure& e) {
    err << "fcgs: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "fcgs: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace fcgs_cli
