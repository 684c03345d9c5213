#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "handles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fcgs");
  std::ostringstream out, err;
  const int code = fcgs_cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("fcgr on the worked example") {
  testing::TempDir dir("cli_fcgr");
  spit(dir.file("s.fa"), ">s\n" + testing::kS + "\n");
  const auto r = cli({"fcgr", "-i", dir.file("s.fa"), "-k", "1", "-o", dir.file("m.csv")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("counted_words=20") != std::string::npos);
  CHECK(slurp(dir.file("m.csv")) == "# fcgr order=1 counted_words=20 source_id=s\n0.3,0.15\n0.3,0.25\n");
}

TEST_CASE("exit codes") {
  testing::TempDir dir("cli_codes");
  spit(dir.file("s.fa"), ">s\n" + testing::kS + "\n");
  CHECK(cli({"fcgr", "-i", dir.file("s.fa"), "-k", "0", "-o", dir.file("m.csv")}).code == 2);
  CHECK(cli({"fcgr", "-i", dir.file("missing.fa"), "-k", "1", "-o", dir.file("m.csv")}).code == 3);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--version"}).code == 0);

  spit(dir.file("bad.fa"), ">s\nACXT\n");
  const auto bad = cli({"fcgr", "-i", dir.file("bad.fa"), "-o", dir.file("m.csv")});
  CHECK(bad.code == 4);
  CHECK(bad.err.find("InvalidCharacter") != std::string::npos);

  // Band outside the grid: numeric failure, reported with its stage.
  spit(dir.file("p.cfg"), "synth = true\nsynth_layout = 300,200,300\nband_lo = 0.9\nband_hi = 0.95\nout_dir = " +
                              dir.file("o") + "\n");
  const auto band = cli({"pipeline", "-c", dir.file("p.cfg")});
  CHECK(band.code == 5);
  CHECK(band.err.find("stage scan") != std::string::npos);
}

TEST_CASE("config parsing") {
  using fcgs_cli::ConfigText;
  ConfigText t;
  t.set("synth", "true");
  t.merge_text("# comment\n  k_order = 3  # trailing\n\nband_lo = 1/8\n", "inline");
  CHECK(t.get("k_order") == "3");
  const auto c = fcgs_cli::resolve(t);
  CHECK(c.k_order == 3);
  CHECK(c.band_lo == 0.125);

  CHECK_THROWS_AS(t.merge_text("no_such_key = 1\n", "inline"), fcgs_cli::Failure);
  CHECK_THROWS_AS(t.merge_text("k_order 3\n", "inline"), fcgs_cli::Failure);

  ConfigText bad;
  bad.set("scale_min", "32");
  bad.set("scale_max", "8");
  bad.set("synth", "true");
  try {
    fcgs_cli::resolve(bad);
    FAIL("expected a usage failure");
  } catch (const fcgs_cli::Failure& e) {
    CHECK(e.exit_code() == 2);
  }
  CHECK(fcgs_cli::parse_window("100-250", "w").end == 250);
  CHECK_THROWS_AS(fcgs_cli::parse_window("250-100", "w"), fcgs_cli::Failure);
}

TEST_CASE("scale_max below scale_min fails before any output is written") {
  testing::TempDir dir("cli_scale");
  const std::string out = dir.file("o");
  const auto r = cli({"pipeline", "--synth", "true", "--scale-min", "32", "--scale-max", "8", "--out-dir", out});
  CHECK(r.code == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("config defaults") {
  fcgs_cli::ConfigText t;
  t.set("synth", "true");
  const auto c = fcgs_cli::resolve(t);
  CHECK(c.k_order == 2);
  CHECK(c.morlet.omega0 == 5.4285);
  CHECK(c.morlet.support_len == 601);
  CHECK(c.grid.scale_min == 1.0);
  CHECK(c.grid.scale_max == 64.0);
  CHECK(c.grid.count == 64);
  CHECK(c.grid.spacing == FCGS_SPACING_LOG);
  CHECK(c.band_lo == doctest::Approx(1 / 7.5));
  CHECK(c.band_hi == doctest::Approx(1 / 5.5));
  CHECK(c.calls.min_len == 40);
  CHECK(c.calls.smoothing == 25);
  CHECK(c.calls.auto_threshold != 0);

  const auto printed = cli({"pipeline", "--print-config", "--synth", "true", "--k-order", "3"});
  CHECK(printed.code == 0);
  CHECK(printed.out.find("k_order = 3\n") != std::string::npos);
  CHECK(printed.out.find("omega0 = 5.4285\n") != std::string::npos);
}

TEST_CASE("pipeline is deterministic and writes a manifest") {
  testing::TempDir dir("cli_pipe");
  const std::vector<std::string> names = {"synth.fa",    "truth.bed", "fcgr.csv",      "signal.csv",
                                          "scalogram.csv", "profile.csv", "calls.bed", "metrics.txt",
                                          "scalogram.png", "manifest.txt"};
  std::vector<std::string> first;
  for (const char* sub : {"a", "b"}) {
    const auto r = cli({"pipeline", "--synth", "true", "--synth-layout", "1500,400,1500", "--threads", "1",
                        "--out-dir", dir.file(sub)});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    CHECK(r.out.find("recall=") != std::string::npos);
    std::vector<std::string> bodies;
    for (const auto& n : names) {
      REQUIRE(fs::exists(dir.path() / sub / n));
      bodies.push_back(slurp((dir.path() / sub / n).string()));
    }
    if (first.empty()) {
      first = bodies;
    } else {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == "manifest.txt") continue;  // records out_dir
        CHECK_MESSAGE(bodies[i] == first[i], names[i]);
      }
    }
  }
  const std::string manifest = first.back();
  CHECK(manifest.find("[config]") != std::string::npos);
  CHECK(manifest.find("[artifacts]") != std::string::npos);
  CHECK(manifest.find("scalogram.png sha256:") != std::string::npos);
}

TEST_CASE("stage commands chain") {
  testing::TempDir dir("cli_chain");
  auto f = [&](const char* n) { return dir.file(n); };
  REQUIRE(cli({"synth", "--seed", "4", "--layout", "1500,400,1500", "-o", f("g.fa"), "--bed", f("t.bed")}).code == 0);
  REQUIRE(cli({"fcgr", "-i", f("g.fa"), "-k", "2", "-o", f("m.csv")}).code == 0);
  REQUIRE(cli({"encode", "-i", f("g.fa"), "-k", "2", "-m", f("m.csv"), "-o", f("sig.bin")}).code == 0);
  REQUIRE(cli({"cwt", "-s", f("sig.bin"), "--threads", "1", "-o", f("sc.bin")}).code == 0);
  const auto scan = cli({"scan", "-s", f("sc.bin"), "--seq-id", "synth", "--truth", f("t.bed"), "--metrics",
                         f("met.txt"), "--profile", f("p.csv"), "-o", f("calls.bed")});
  REQUIRE_MESSAGE(scan.code == 0, scan.err);
  CHECK(slurp(f("met.txt")).find("recall=") != std::string::npos);
  CHECK(fs::file_size(f("calls.bed")) > 0);
  REQUIRE(cli({"render", "-s", f("sc.bin"), "--overlay", f("t.bed"), "-o", f("sc.png")}).code == 0);
  CHECK(slurp(f("sc.png")).substr(1, 3) == "PNG");
  CHECK(cli({"encode", "-i", f("g.fa"), "-k", "3", "-m", f("m.csv"), "-o", f("x.bin")}).code == 4);
}

TEST_CASE("fetch through a file url") {
  testing::TempDir dir("cli_fetch");
  spit(dir.file("src.fa"), ">r\nACGTACGT\n");
  const auto r = cli({"fetch", "-u", "file://" + dir.file("src.fa"), "--cache-dir", dir.file("cache"), "-o",
                      dir.file("out.fa")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(slurp(dir.file("out.fa")).find("ACGTACGT") != std::string::npos);
  CHECK(cli({"fetch", "-u", "file://" + dir.file("none.fa"), "--cache-dir", dir.file("cache2"), "-o",
             dir.file("o2.fa")})
            .code == 3);
}
