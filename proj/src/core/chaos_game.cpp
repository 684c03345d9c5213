#include "chaos_game.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace fcgs {

namespace {

// Bit 0: x coordinate of the vertex, bit 1: y coordinate. -1 for non-ACGT.
constexpr int vertex_bits(char base) {
  switch (base) {
    case 'A': return 0b00;
    case 'C': return 0b10;
    case 'G': return 0b11;
    case 'T': return 0b01;
    default: return -1;
  }
}

[[noreturn]] void throw_ambiguous(char base) {
  throw Error(ErrorCode::kAmbiguousBase,
              std::string("ambiguous or unknown base '") + base + "' in CGR word");
}

void check_order(int k, int max_order) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "word order must be >= 1");
  if (k > max_order) {
    throw Error(ErrorCode::kOrderTooLarge, "order " + std::to_string(k) +
                                               " exceeds the configured cap of " +
                                               std::to_string(max_order));
  }
}

struct ChunkCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t words = 0;
};

// Counts windows whose first base lies in [begin, end).
ChunkCounts count_windows(std::string_view residues, int k, std::size_t begin,
                          std::size_t end) {
  const std::size_t side = std::size_t{1} << k;
  ChunkCounts out;
  out.counts.assign(side * side, 0);
  if (begin >= end) return out;

  const std::size_t stop = end + static_cast<std::size_t>(k) - 1;  // last base + 1
  std::size_t xbits = 0;
  std::size_t ybits = 0;
  int valid = 0;
  const int top = k - 1;
  for (std::size_t i = begin; i < stop; ++i) {
    const int v = vertex_bits(residues[i]);
    if (v < 0) {
      valid = 0;
      xbits = ybits = 0;
      continue;
    }
    // Newest letter becomes the most significant bit.
    xbits = (xbits >> 1) | (static_cast<std::size_t>(v & 1) << top);
    ybits = (ybits >> 1) | (static_cast<std::size_t>(v >> 1) << top);
    if (valid < k) ++valid;
    if (valid == k) {
      const std::size_t row = side - 1 - ybits;
      ++out.counts[row * side + xbits];
      ++out.words;
    }
  }
  return out;
}

}  // namespace

CgrPoint cgr_vertex(char base) {
  const int v = vertex_bits(base);
  if (v < 0) throw_ambiguous(base);
  return {static_cast<double>(v & 1), static_cast<double>(v >> 1)};
}

CgrPoint cgr_step(CgrPoint previous, char base) {
  const CgrPoint corner = cgr_vertex(base);
  return {0.5 * (previous.x + corner.x), 0.5 * (previous.y + corner.y)};
}

std::vector<CgrPoint> cgr_map(std::string_view residues) {
  std::vector<CgrPoint> points;
  points.reserve(residues.size());
  CgrPoint p = kCgrOrigin;
  for (char c : residues) {
    if (c == 'N') continue;
    p = cgr_step(p, c);
    points.push_back(p);
  }
  if (points.empty()) throw Error(ErrorCode::kEmptyTrajectory, "no A/C/G/T residue to map");
  return points;
}

CellIndex cell_index(std::string_view word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidParameter, "empty word");
  if (word.size() > 31) throw Error(ErrorCode::kOrderTooLarge, "word longer than 31 bp");
  const std::size_t k = word.size();
  std::size_t xbits = 0;
  std::size_t ybits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int v = vertex_bits(word[i]);
    if (v < 0) throw_ambiguous(word[i]);
    xbits |= static_cast<std::size_t>(v & 1) << i;
    ybits |= static_cast<std::size_t>(v >> 1) << i;
  }
  const std::size_t side = std::size_t{1} << k;
  return {side - 1 - ybits, xbits};
}

FcgrMatrix::FcgrMatrix(int order, std::vector<double> cells, std::uint64_t counted_words,
                       std::string source_id)
    : order_(order),
      cells_(std::move(cells)),
      counted_words_(counted_words),
      source_id_(std::move(source_id)) {
  if (order_ < 1 || order_ > 31) throw Error(ErrorCode::kInvalidParameter, "bad FCGR order");
  if (cells_.size() != side() * side()) {
    throw Error(ErrorCode::kInvalidParameter, "FCGR cell count does not match 4^order");
  }
  for (double v : cells_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidParameter, "FCGR cell outside [0,1]");
    }
  }
}

double FcgrMatrix::sum() const { return std::accumulate(cells_.begin(), cells_.end(), 0.0); }

double FcgrMatrix::max_value() const {
  return cells_.empty() ? 0.0 : *std::max_element(cells_.begin(), cells_.end());
}

FcgrMatrix compute_fcgr(const NucleotideSequence& seq, int k, const FcgrOptions& opts) {
  check_order(k, opts.max_order);
  const std::string_view residues = seq.residues;
  const auto kk = static_cast<std::size_t>(k);
  if (residues.size() < kk) {
    throw Error(ErrorCode::kNoValidWords, "sequence shorter than the word order");
  }
  const std::size_t windows = residues.size() - kk + 1;

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::size_t kMinWindowsPerThread = std::size_t{1} << 20;
  threads = static_cast<unsigned>(
      std::clamp<std::size_t>(windows / kMinWindowsPerThread, 1, threads));

  std::vector<ChunkCounts> parts(threads);
  if (threads == 1) {
    parts[0] = count_windows(residues, k, 0, windows);
  } else {
    std::vector<std::thread> pool;
    const std::size_t step = (windows + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = std::min(windows, t * step);
      const std::size_t e = std::min(windows, b + step);
      pool.emplace_back([&, t, b, e] { parts[t] = count_windows(residues, k, b, e); });
    }
    for (auto& th : pool) th.join();
  }

  ChunkCounts total = std::move(parts[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (std::size_t i = 0; i < total.counts.size(); ++i) total.counts[i] += parts[t].counts[i];
    total.words += parts[t].words;
  }
  if (total.words == 0) {
    throw Error(ErrorCode::kNoValidWords, "no N-free window of length " + std::to_string(k));
  }

  std::vector<double> cells(total.counts.size());
  const double denom = static_cast<double>(total.words);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i] = static_cast<double>(total.counts[i]) / denom;
  }
  return FcgrMatrix(k, std::move(cells), total.words, seq.id);
}

double fcgr_lookup(const FcgrMatrix& m, std::string_view word) {
  if (word.size() != static_cast<std::size_t>(m.order())) {
    throw Error(ErrorCode::kOrderMismatch, "word of length " + std::to_string(word.size()) +
                                               " looked up in an order-" +
                                               std::to_string(m.order()) + " matrix");
  }
  return m.at(cell_index(word));
}

double fcgr_entropy_bits(const FcgrMatrix& m) {
  double h = 0.0;
  for (double p : m.cells()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

std::string fcgr_to_csv(const FcgrMatrix& m) {
  std::string out = "# fcgr order=" + std::to_string(m.order()) +
                    " counted_words=" + std::to_string(m.counted_words()) +
                    " source_id=" + m.source_id() + "\n";
  char buf[64];
  const std::size_t side = m.side();
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (c) out += ',';
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m.at(r, c));
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

FcgrMatrix fcgr_from_csv(std::string_view text) {
  int order = -1;
  std::uint64_t counted = 0;
  std::string source_id;
  std::vector<std::vector<double>> rows;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::size_t p = 1;
      while (p < line.size()) {
        const std::size_t sp = std::min(line.find(' ', p), line.size());
        const std::string_view tok = line.substr(p, sp - p);
        p = sp + 1;
        const std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos) continue;
        const auto key = tok.substr(0, eq);
        const auto val = tok.substr(eq + 1);
        if (key == "order") {
          std::from_chars(val.data(), val.data() + val.size(), order);
        } else if (key == "counted_words") {
          std::from_chars(val.data(), val.data() + val.size(), counted);
        } else if (key == "source_id") {
          source_id = std::string(val);
        }
      }
      continue;
    }
    std::vector<double> row;
    std::size_t f = 0;
    while (true) {
      std::size_t comma = line.find(',', f);
      if (comma == std::string_view::npos) comma = line.size();
      std::string_view field = line.substr(f, comma - f);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() ||
          !(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": bad FCGR value '" +
                        std::string(field) + "'",
                    static_cast<long long>(line_no));
      }
      row.push_back(v);
      if (comma == line.size()) break;
      f = comma + 1;
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw Error(ErrorCode::kParse, "FCGR CSV has no rows");
  const std::size_t side = rows.size();
  if (order < 0) {
    order = 0;
    while ((std::size_t{1} << order) < side) ++order;
  }
  if (order < 1 || order > 31 || (std::size_t{1} << order) != side) {
    throw Error(ErrorCode::kParse, "FCGR CSV row count " + std::to_string(side) +
                                       " does not match order " + std::to_string(order));
  }
  std::vector<double> cells;
  cells.reserve(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    if (rows[r].size() != side) {
      throw Error(ErrorCode::kParse, "FCGR CSV row " + std::to_string(r + 1) + " has " +
                                         std::to_string(rows[r].size()) + " values, expected " +
                                         std::to_string(side));
    }
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return FcgrMatrix(order, std::move(cells), counted, std::move(source_id));
}

}  // namespace fcgs
