#include "fcgs_encoder.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "binary_io.hpp"
#include "error.hpp"

namespace fcgs {

namespace {

constexpr std::string_view kSignalMagic = "FCGSSIG1";

void check_length(const NucleotideSequence& seq, int n) {
  if (n < 1) throw Error(ErrorCode::kOrderMismatch, "word length must be >= 1");
  if (static_cast<std::size_t>(n) > seq.length()) {
    throw Error(ErrorCode::kSequenceTooShort, "sequence of " + std::to_string(seq.length()) +
                                                  " bp is shorter than word length " +
                                                  std::to_string(n));
  }
}

}  // namespace

std::size_t FcgsSignal::masked_count() const {
  return static_cast<std::size_t>(std::count(masked.begin(), masked.end(), std::uint8_t{1}));
}

std::vector<std::string> word_stream(const NucleotideSequence& seq, int n) {
  check_length(seq, n);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::string> words;
  words.reserve(seq.length() - nn + 1);
  for (std::size_t i = 0; i + nn <= seq.length(); ++i) words.push_back(seq.residues.substr(i, nn));
  return words;
}

FcgsSignal encode(const NucleotideSequence& seq, const FcgrMatrix& matrix) {
  const int n = matrix.order();
  check_length(seq, n);
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t count = seq.length() - nn + 1;

  FcgsSignal out;
  out.order = n;
  out.source_id = seq.id;
  out.start_coordinate = seq.origin;
  out.matrix_id = matrix.source_id();
  out.values.assign(count, 0.0);
  out.masked.assign(count, 0);

  // Distance to the next N at or after each window start decides masking, so
  // every clean window goes through the same table lookup.
  std::size_t next_n = seq.length();
  std::vector<std::size_t> next_n_at(seq.length() + 1, seq.length());
  for (std::size_t i = seq.length(); i-- > 0;) {
    if (seq.residues[i] == 'N') next_n = i;
    next_n_at[i] = next_n;
  }
  const std::string_view residues = seq.residues;
  for (std::size_t i = 0; i < count; ++i) {
    if (next_n_at[i] < i + nn) {
      out.masked[i] = 1;
      continue;
    }
    out.values[i] = fcgr_lookup(matrix, residues.substr(i, nn));
  }
  return out;
}

std::string signal_to_csv(const FcgsSignal& signal) {
  std::string out = "coordinate,value\n";
  char buf[64];
  for (std::size_t i = 0; i < signal.size(); ++i) {
    out += std::to_string(signal.start_coordinate + static_cast<std::int64_t>(i));
    out += ',';
    const int len = std::snprintf(buf, sizeof buf, "%.17g", signal.values[i]);
    out.append(buf, static_cast<std::size_t>(len));
    out += '\n';
  }
  return out;
}

FcgsSignal signal_from_csv(std::string_view text) {
  FcgsSignal out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool first_row = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line.starts_with("coordinate")) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 2 columns",
                  static_cast<long long>(line_no));
    }
    std::int64_t coord = 0;
    double v = 0.0;
    const auto a = line.substr(0, comma);
    const auto b = line.substr(comma + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), coord);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), v);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r2.ptr != b.data() + b.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad signal row",
                  static_cast<long long>(line_no));
    }
    if (first_row) {
      out.start_coordinate = coord;
      first_row = false;
    } else if (coord != out.start_coordinate + static_cast<std::int64_t>(out.values.size())) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": coordinates must be consecutive",
                  static_cast<long long>(line_no));
    }
    out.values.push_back(v);
  }
  out.masked.assign(out.values.size(), 0);
  return out;
}

std::string signal_to_binary(const FcgsSignal& signal) {
  std::string out;
  out.reserve(32 + 8 * signal.size());
  out.append(kSignalMagic);
  detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(signal.order));
  detail::put<std::uint32_t>(out, 0);
  detail::put<std::int64_t>(out, signal.start_coordinate);
  detail::put<std::uint64_t>(out, signal.size());
  for (double v : signal.values) detail::put<double>(out, v);
  return out;
}

FcgsSignal signal_from_binary(std::string_view bytes) {
  detail::Reader in(bytes);
  if (in.take(8) != kSignalMagic) throw Error(ErrorCode::kParse, "not an FCGS signal file");
  FcgsSignal out;
  out.order = static_cast<int>(in.get<std::uint32_t>());
  in.get<std::uint32_t>();
  out.start_coordinate = in.get<std::int64_t>();
  const auto count = in.get<std::uint64_t>();
  if (in.remaining() != count * 8) {
    throw Error(ErrorCode::kParse, "signal file length does not match its header");
  }
  out.values.resize(count);
  for (auto& v : out.values) v = in.get<double>();
  out.masked.assign(count, 0);
  return out;
}

}  // namespace fcgs
