#include <doctest.h>

#include <array>

#include "error.hpp"
#include "synth.hpp"

using namespace fcgs;

TEST_CASE("parse_layout") {
  CHECK(parse_layout("3000,53,2500") == std::vector<std::int64_t>{3000, 53, 2500});
  CHECK(parse_layout(" 10 , 20 ") == std::vector<std::int64_t>{10, 20});
  for (const char* bad : {"", "10,,20", "10,x", "10,-5", "0", "10,"}) {
    try {
      parse_layout(bad);
      FAIL("expected ConfigError for '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kConfig);
    }
  }
}

TEST_CASE("default layout: 20 kbp with five motif segments of 53 to 1500 bp") {
  SynthSpec spec;
  spec.layout = parse_layout(kDefaultSynthLayout);
  const auto r = synthesize(spec);
  CHECK(r.sequence.length() == 20000);
  std::size_t motifs = 0;
  for (const auto& iv : r.truth.entries) {
    if (iv.label != RegionLabel::kIntron) continue;
    ++motifs;
    CHECK(iv.length() >= 53);
    CHECK(iv.length() <= 1500);
  }
  CHECK(motifs == 5);
}

TEST_CASE("seeded determinism") {
  SynthSpec spec;
  spec.layout = parse_layout(kDefaultSynthLayout);
  spec.seed = 42;
  const auto a = synthesize(spec);
  const auto b = synthesize(spec);
  CHECK(serialize_fasta({a.sequence}) == serialize_fasta({b.sequence}));
  CHECK(serialize_annotations(a.truth) == serialize_annotations(b.truth));
  spec.seed = 43;
  CHECK(synthesize(spec).sequence.residues != a.sequence.residues);
}

TEST_CASE("zero mutation rate gives exact tandem repeats") {
  SynthSpec spec;
  spec.layout = {100, 130, 100};
  spec.mutation_rate = 0.0;
  const auto r = synthesize(spec);
  const std::string motif = r.sequence.residues.substr(100, 130);
  std::string expected;
  for (int i = 0; expected.size() < 130; ++i) expected += (i % 2 == 0) ? "GAATTC" : "GAATTCC";
  CHECK(motif == expected.substr(0, 130));
  // 13 bp per unit pair: mean period 6.5.
  CHECK(motif.substr(0, 13) == "GAATTCGAATTCC");
  CHECK(motif.substr(13, 13) == "GAATTCGAATTCC");
}

TEST_CASE("mutation rate is honored") {
  SynthSpec spec;
  spec.layout = {1, 200000};
  spec.mutation_rate = 0.05;
  const auto r = synthesize(spec);
  std::string clean;
  for (int i = 0; clean.size() < 200000; ++i) clean += (i % 2 == 0) ? "GAATTC" : "GAATTCC";
  std::size_t diff = 0;
  for (std::size_t i = 0; i < 200000; ++i) diff += r.sequence.residues[1 + i] != clean[i];
  CHECK(static_cast<double>(diff) / 200000 == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("background composition over 1e6 bp") {
  SynthSpec spec;
  spec.layout = {1000000};
  const auto r = synthesize(spec);
  std::array<double, 4> counts{};
  for (char c : r.sequence.residues) counts[std::string_view("ACGT").find(c)] += 1;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(counts[i] / 1e6 - kElegansComposition[i]) < 0.01);
  }
}

TEST_CASE("synth labels and errors") {
  SynthSpec spec;
  spec.layout = {10, 20, 30};
  spec.seq_id = "toy";
  const auto r = synthesize(spec);
  REQUIRE(r.truth.entries.size() == 3);
  CHECK(r.truth.entries[0].label == RegionLabel::kOther);
  CHECK(r.truth.entries[1].label == RegionLabel::kIntron);
  CHECK(r.truth.entries[1].start == 11);
  CHECK(r.truth.entries[1].end == 30);
  CHECK(r.truth.entries[2].seq_id == "toy");

  spec.unit = "GANTC";
  CHECK_THROWS_AS(synthesize(spec), Error);
  spec.unit = "GAATTC";
  spec.mutation_rate = 1.5;
  CHECK_THROWS_AS(synthesize(spec), Error);
  spec.mutation_rate = 0.0;
  spec.layout.clear();
  CHECK_THROWS_AS(synthesize(spec), Error);
}
