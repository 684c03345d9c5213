#include <doctest.h>

#include <cstring>

#include <cmath>
#include <numeric>

#include "chaos_game.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace fcgs;

namespace {

NucleotideSequence seq_of(const std::string& s) { return NucleotideSequence::from_letters("t", s); }

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

TEST_CASE("cgr_step examples") {
  const auto a = cgr_step(kCgrOrigin, 'A');
  CHECK(a.x == 0.25);
  CHECK(a.y == 0.25);
  const auto c = cgr_step({0.25, 0.25}, 'C');
  CHECK(c.x == 0.125);
  CHECK(c.y == 0.625);
  const auto g = cgr_step({1.0, 1.0}, 'G');
  CHECK(g.x == 1.0);
  CHECK(g.y == 1.0);
  CHECK(code_of([] { cgr_step(kCgrOrigin, 'N'); }) == ErrorCode::kAmbiguousBase);
}

TEST_CASE("cgr_map") {
  const auto pts = cgr_map("ACGGT");
  REQUIRE(pts.size() == 5);
  CHECK(pts[0].x == 0.25);
  CHECK(pts[0].y == 0.25);
  CHECK(pts[1].x == 0.125);
  CHECK(pts[1].y == 0.625);

  const auto as = cgr_map(std::string(30, 'A'));
  for (std::size_t i = 1; i < as.size(); ++i) {
    CHECK(as[i].x < as[i - 1].x);
    CHECK(as[i].y < as[i - 1].y);
  }

  const std::string r = testing::random_dna(2000, 9);
  for (const auto& p : cgr_map(r)) {
    CHECK(p.x > 0.0);
    CHECK(p.x < 1.0);
    CHECK(p.y > 0.0);
    CHECK(p.y < 1.0);
  }

  CHECK(cgr_map("ANC").size() == 2);
  CHECK(code_of([] { cgr_map("NNN"); }) == ErrorCode::kEmptyTrajectory);
}

TEST_CASE("cgr_map is deterministic") {
  const std::string r = testing::random_dna(5000, 1);
  const auto a = cgr_map(r);
  const auto b = cgr_map(r);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(CgrPoint)) == 0);
}

TEST_CASE("cell_index examples") {
  CHECK(cell_index("A") == CellIndex{1, 0});
  CHECK(cell_index("C") == CellIndex{0, 0});
  CHECK(cell_index("G") == CellIndex{0, 1});
  CHECK(cell_index("T") == CellIndex{1, 1});
  CHECK(cell_index("GA") == CellIndex{2, 1});
}

TEST_CASE("cell_index equals CGR quantization for every word up to length 6") {
  std::size_t checked = 0;
  for (int k = 1; k <= 6; ++k) {
    for (const auto& w : testing::all_words(k)) {
      const auto [row, col] = testing::quantize(w);
      const auto got = cell_index(w);
      REQUIRE(got.row == row);
      REQUIRE(got.col == col);
      ++checked;
    }
  }
  CHECK(checked == 5460);
}

TEST_CASE("cell_index agrees with cgr_map of the word") {
  for (const auto& w : testing::all_words(4)) {
    const auto p = cgr_map(w).back();
    CHECK(cell_index(w).col == static_cast<std::size_t>(std::floor(16 * p.x)));
    CHECK(cell_index(w).row == 15 - static_cast<std::size_t>(std::floor(16 * p.y)));
  }
}

TEST_CASE("nested quadrants") {
  // A word of order k+1 falls inside the order-k cell of its last k letters.
  for (int k = 1; k <= 5; ++k) {
    for (const auto& w : testing::all_words(k)) {
      const auto outer = cell_index(w);
      for (char l : std::string("ACGT")) {
        const auto inner = cell_index(std::string(1, l) + w);
        CHECK(inner.row / 2 == outer.row);
        CHECK(inner.col / 2 == outer.col);
      }
    }
  }
}

TEST_CASE("compute_fcgr on the worked example") {
  const auto s = seq_of(testing::kS);
  const auto m1 = compute_fcgr(s, 1);
  CHECK(m1.counted_words() == 20);
  CHECK(std::abs(m1.at(cell_index("A")) - 0.30) < 1e-12);
  CHECK(std::abs(m1.at(cell_index("C")) - 0.30) < 1e-12);
  CHECK(std::abs(m1.at(cell_index("G")) - 0.15) < 1e-12);
  CHECK(std::abs(m1.at(cell_index("T")) - 0.25) < 1e-12);

  const auto m2 = compute_fcgr(s, 2);
  CHECK(m2.counted_words() == 19);
  std::map<std::string, int> tally;
  for (const auto& d : testing::kDimers) ++tally[d];
  for (const auto& w : testing::all_words(2)) {
    const double expected = tally.count(w) ? tally[w] / 19.0 : 0.0;
    CHECK(std::abs(m2.at(cell_index(w)) - expected) < 1e-12);
  }
  CHECK(tally["AA"] == 3);
  CHECK(tally["GA"] == 1);
}

TEST_CASE("compute_fcgr matches the map tally oracle") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::string r = testing::random_dna(3000, seed);
    r[100] = 'N';
    r[1500] = 'N';
    for (int k = 1; k <= 5; ++k) {
      const auto m = compute_fcgr(seq_of(r), k);
      const auto expected = testing::tally_fcgr(r, k);
      REQUIRE(m.cells().size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) CHECK(m.cells()[i] == doctest::Approx(expected[i]).epsilon(1e-12));
      CHECK(std::abs(m.sum() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("compute_fcgr threads do not change the result") {
  const auto s = seq_of(testing::random_dna(3'000'000, 4));
  const auto one = compute_fcgr(s, 6, {kDefaultMaxOrder, 1});
  const auto many = compute_fcgr(s, 6, {kDefaultMaxOrder, 4});
  CHECK(one.cells() == many.cells());
  CHECK(one.counted_words() == many.counted_words());
}

TEST_CASE("compute_fcgr of a sequence and its self-concatenation") {
  const std::string r = testing::random_dna(4000, 8);
  for (int k = 1; k <= 4; ++k) {
    const auto a = compute_fcgr(seq_of(r), k);
    const auto b = compute_fcgr(seq_of(r + r), k);
    // Counts differ only through the k-1 windows straddling the junction.
    const double na = static_cast<double>(a.counted_words());
    const double nb = static_cast<double>(b.counted_words());
    CHECK(nb == 2 * na + (k - 1));
    for (std::size_t i = 0; i < a.cells().size(); ++i) {
      const double diff = std::abs(b.cells()[i] * nb - 2 * a.cells()[i] * na);
      CHECK(diff <= (k - 1) + 1e-6);
    }
  }
}

TEST_CASE("compute_fcgr invariants and errors") {
  const auto m = compute_fcgr(seq_of(testing::random_dna(1000, 12)), 3);
  CHECK(m.side() == 8);
  for (double v : m.cells()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(code_of([] { compute_fcgr(seq_of("ACGT"), 0); }) == ErrorCode::kInvalidParameter);
  CHECK(code_of([] { compute_fcgr(seq_of("ACGT"), 13); }) == ErrorCode::kOrderTooLarge);
  CHECK(code_of([] { compute_fcgr(seq_of("ACGT"), 5, {4, 1}); }) == ErrorCode::kOrderTooLarge);
  CHECK(code_of([] { compute_fcgr(seq_of("ACG"), 4); }) == ErrorCode::kNoValidWords);
  CHECK(code_of([] { compute_fcgr(seq_of("ACNGTNAC"), 3); }) == ErrorCode::kNoValidWords);
}

TEST_CASE("fcgr_lookup") {
  const FcgrMatrix p1(1, testing::kChrVFcgr1, 0, "chrV");
  CHECK(fcgr_lookup(p1, "A") == 0.3226);
  const FcgrMatrix p2(2, testing::kChrVFcgr2, 0, "chrV");
  CHECK(fcgr_lookup(p2, "GA") == 0.0506);
  for (int k = 1; k <= 3; ++k) {
    const double u = std::ldexp(1.0, -2 * k);
    const FcgrMatrix uniform(k, std::vector<double>(std::size_t{1} << (2 * k), u), 0, "u");
    for (const auto& w : testing::all_words(k)) CHECK(fcgr_lookup(uniform, w) == u);
  }
  CHECK(code_of([&] { fcgr_lookup(p2, "GAT"); }) == ErrorCode::kOrderMismatch);
}

TEST_CASE("reference chrV FCGR2 sums to one within its rounding") {
  const FcgrMatrix p2(2, testing::kChrVFcgr2, 0, "chrV");
  CHECK(std::abs(p2.sum() - 0.9999) < 5e-4);
}

TEST_CASE("fcgr csv round trip is bit exact") {
  const auto m = compute_fcgr(seq_of(testing::random_dna(777, 5)), 3);
  const auto back = fcgr_from_csv(fcgr_to_csv(m));
  CHECK(back.order() == 3);
  CHECK(back.counted_words() == m.counted_words());
  CHECK(back.source_id() == m.source_id());
  CHECK(back.cells() == m.cells());

  const auto ref = fcgr_from_csv(testing::chrv_fcgr2_csv());
  CHECK(ref.order() == 2);
  CHECK(ref.cells() == testing::kChrVFcgr2);
  CHECK(fcgr_from_csv(fcgr_to_csv(ref)).cells() == testing::kChrVFcgr2);

  // Header is optional; the order follows from the row count.
  CHECK(fcgr_from_csv("0.1774,0.1769\n0.3226,0.3231\n").order() == 1);
  CHECK(code_of([] { fcgr_from_csv("0.1,0.2\n0.3\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { fcgr_from_csv("0.1,0.2,0.3\n0.1,0.2,0.3\n0.1,0.2,0.3\n"); }) ==
        ErrorCode::kParse);
}

TEST_CASE("fcgr entropy") {
  const FcgrMatrix uniform(2, std::vector<double>(16, 1.0 / 16), 0, "u");
  CHECK(fcgr_entropy_bits(uniform) == doctest::Approx(4.0));
  std::vector<double> point(16, 0.0);
  point[3] = 1.0;
  CHECK(fcgr_entropy_bits(FcgrMatrix(2, point, 1, "p")) == doctest::Approx(0.0));
}
