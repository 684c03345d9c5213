#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sequence_io.hpp"

namespace fcgs {

struct CgrPoint {
  double x = 0.5;
  double y = 0.5;
};

inline constexpr CgrPoint kCgrOrigin{0.5, 0.5};

// Corner of the unit square assigned to a base: A(0,0) C(0,1) G(1,1) T(1,0).
// Throws AmbiguousBase for anything other than A/C/G/T.
CgrPoint cgr_vertex(char base);

// Halfway between `previous` and the vertex of `base`.
CgrPoint cgr_step(CgrPoint previous, char base);

// One point per A/C/G/T residue; N residues are skipped and do not move the
// walk. Throws EmptyTrajectory when no residue is usable.
std::vector<CgrPoint> cgr_map(std::string_view residues);
inline std::vector<CgrPoint> cgr_map(const NucleotideSequence& seq) {
  return cgr_map(seq.residues);
}

struct CellIndex {
  std::size_t row = 0;  // row 0 is the top of the grid (y near 1)
  std::size_t col = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Cell of a k-word in the 2^k x 2^k grid. Equal to quantizing the final CGR
// point of the word: col = floor(2^k x), row = 2^k - 1 - floor(2^k y). The last
// letter of the word picks the quadrant, the first letter the finest
// subdivision.
CellIndex cell_index(std::string_view word);

inline constexpr int kDefaultMaxOrder = 12;

class FcgrMatrix {
 public:
  FcgrMatrix() = default;
  // `cells` is row-major with side 2^order.
  FcgrMatrix(int order, std::vector<double> cells, std::uint64_t counted_words,
             std::string source_id);

  int order() const noexcept { return order_; }
  std::size_t side() const noexcept { return std::size_t{1} << order_; }
  std::uint64_t counted_words() const noexcept { return counted_words_; }
  const std::string& source_id() const noexcept { return source_id_; }
  const std::vector<double>& cells() const noexcept { return cells_; }

  double at(std::size_t row, std::size_t col) const { return cells_[row * side() + col]; }
  double at(CellIndex c) const { return at(c.row, c.col); }
  double sum() const;
  double max_value() const;

 private:
  int order_ = 0;
  std::vector<double> cells_;
  std::uint64_t counted_words_ = 0;
  std::string source_id_;
};

struct FcgrOptions {
  int max_order = kDefaultMaxOrder;
  // 0 picks hardware concurrency; inputs below ~1 Mbp are counted on one thread.
  unsigned threads = 0;
};

// Word frequencies over every N-free window of width k; denominators are the
// number of counted windows so the cells sum to one.
FcgrMatrix compute_fcgr(const NucleotideSequence& seq, int k, const FcgrOptions& opts = {});

double fcgr_lookup(const FcgrMatrix& m, std::string_view word);

// Shannon entropy of the cell distribution in bits.
double fcgr_entropy_bits(const FcgrMatrix& m);

// CSV with a "# fcgr order=<k> counted_words=<n> source_id=<id>" header line
// followed by 2^k comma-separated rows. Values use the shortest decimal form
// that round-trips exactly.
std::string fcgr_to_csv(const FcgrMatrix& m);
FcgrMatrix fcgr_from_csv(std::string_view text);

}  // namespace fcgs
