#include "sequence_io.hpp"

#include <curl/curl.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <system_error>

#include "digest.hpp"
#include "error.hpp"

namespace fcgs {

namespace {

// 0 = not a nucleotide letter; otherwise the canonical residue.
constexpr std::array<char, 256> make_residue_table() {
  std::array<char, 256> t{};
  for (char c : std::string_view("ACGT")) {
    t[static_cast<unsigned char>(c)] = c;
    t[static_cast<unsigned char>(c - 'A' + 'a')] = c;
  }
  for (char c : std::string_view("NURYSWKMBDHV")) {
    t[static_cast<unsigned char>(c)] = 'N';
    t[static_cast<unsigned char>(c - 'A' + 'a')] = 'N';
  }
  return t;
}

constexpr auto kResidueTable = make_residue_table();

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string invalid_char_message(char c, std::size_t offset) {
  std::ostringstream os;
  os << "invalid sequence character ";
  if (c >= 0x20 && c < 0x7F) {
    os << "'" << c << "'";
  } else {
    os << "0x" << std::hex << (static_cast<unsigned>(static_cast<unsigned char>(c)));
  }
  os << std::dec << " at byte " << offset;
  return os.str();
}

std::int64_t parse_coordinate(std::string_view field, std::size_t line) {
  field = trim(field);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line) + ": bad coordinate '" + std::string(field) + "'",
                static_cast<long long>(line));
  }
  return v;
}

AnnotationTrack sort_and_check(std::vector<Interval> entries, std::vector<std::size_t> lines) {
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = entries[a];
    const auto& y = entries[b];
    if (x.seq_id != y.seq_id) return x.seq_id < y.seq_id;
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    return lines[a] < lines[b];
  });

  AnnotationTrack track;
  track.entries.reserve(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& cur = entries[order[i]];
    if (i > 0) {
      const auto& prev = track.entries.back();
      if (prev.seq_id == cur.seq_id && cur.start <= prev.end) {
        const std::size_t line = std::max(lines[order[i]], lines[order[i - 1]]);
        throw Error(ErrorCode::kOverlap,
                    "line " + std::to_string(line) + ": interval " + cur.seq_id + ":" +
                        std::to_string(cur.start) + "-" + std::to_string(cur.end) +
                        " overlaps " + std::to_string(prev.start) + "-" +
                        std::to_string(prev.end),
                    static_cast<long long>(line));
      }
    }
    track.entries.push_back(std::move(entries[order[i]]));
  }
  return track;
}

void check_interval(const Interval& iv, std::size_t line) {
  if (iv.start < 1 || iv.start > iv.end) {
    throw Error(ErrorCode::kInvalidInterval,
                "line " + std::to_string(line) + ": invalid interval " +
                    std::to_string(iv.start) + "-" + std::to_string(iv.end),
                static_cast<long long>(line));
  }
}

}  // namespace

NucleotideSequence NucleotideSequence::from_letters(std::string id, std::string_view letters,
                                                    std::int64_t origin) {
  NucleotideSequence seq;
  seq.id = std::move(id);
  seq.origin = origin;
  seq.residues.resize(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char r = kResidueTable[static_cast<unsigned char>(letters[i])];
    if (r == 0) {
      throw Error(ErrorCode::kInvalidCharacter, invalid_char_message(letters[i], i),
                  static_cast<long long>(i));
    }
    seq.residues[i] = r;
  }
  return seq;
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kExon: return "exon";
    case RegionLabel::kIntron: return "intron";
    case RegionLabel::kIntergenic: return "intergenic";
    case RegionLabel::kOther: return "other";
  }
  return "other";
}

RegionLabel parse_label(std::string_view text) {
  text = trim(text);
  if (text == "exon") return RegionLabel::kExon;
  if (text == "intron") return RegionLabel::kIntron;
  if (text == "intergenic") return RegionLabel::kIntergenic;
  if (text == "other") return RegionLabel::kOther;
  throw Error(ErrorCode::kParse, "unknown region label '" + std::string(text) + "'");
}

AnnotationTrack AnnotationTrack::from_entries(std::vector<Interval> entries) {
  std::vector<std::size_t> lines(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    lines[i] = i + 1;
    check_interval(entries[i], i + 1);
  }
  return sort_and_check(std::move(entries), std::move(lines));
}

std::vector<NucleotideSequence> parse_fasta(std::string_view raw) {
  std::vector<NucleotideSequence> records;
  bool in_record = false;
  bool saw_content = false;

  auto close_record = [&]() {
    if (in_record && records.back().residues.empty()) {
      throw Error(ErrorCode::kEmptyRecord, "record '" + records.back().id + "' has no sequence");
    }
  };

  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t eol = raw.find('\n', pos);
    if (eol == std::string_view::npos) eol = raw.size();
    const std::string_view line = raw.substr(pos, eol - pos);

    if (!line.empty() && line.front() == '>') {
      close_record();
      std::string_view header = trim(line.substr(1));
      const auto ws = std::find_if(header.begin(), header.end(), is_space);
      records.push_back({std::string(header.begin(), ws), {}, 1});
      in_record = true;
      saw_content = true;
    } else if (!line.empty() && line.front() == ';') {
      // legacy comment line
    } else {
      for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (is_space(c)) continue;
        const char r = kResidueTable[static_cast<unsigned char>(c)];
        if (r == 0 || !in_record) {
          throw Error(ErrorCode::kInvalidCharacter, invalid_char_message(c, pos + i),
                      static_cast<long long>(pos + i));
        }
        records.back().residues.push_back(r);
      }
    }
    pos = eol + 1;
  }

  if (!saw_content) throw Error(ErrorCode::kEmptyInput, "FASTA input is empty");
  close_record();
  return records;
}

std::vector<NucleotideSequence> read_fasta_file(const std::filesystem::path& path) {
  return parse_fasta(read_text_file(path));
}

std::string serialize_fasta(const std::vector<NucleotideSequence>& records,
                            std::size_t line_width) {
  if (line_width == 0) line_width = 60;
  std::string out;
  for (const auto& rec : records) {
    out += '>';
    out += rec.id;
    out += '\n';
    for (std::size_t i = 0; i < rec.residues.size(); i += line_width) {
      out.append(rec.residues, i, line_width);
      out += '\n';
    }
  }
  return out;
}

void write_fasta_file(const std::filesystem::path& path,
                      const std::vector<NucleotideSequence>& records) {
  write_text_file(path, serialize_fasta(records));
}

AnnotationTrack parse_annotations(std::string_view raw) {
  std::vector<Interval> entries;
  std::vector<std::size_t> lines;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < raw.size()) {
    std::size_t eol = raw.find('\n', pos);
    if (eol == std::string_view::npos) eol = raw.size();
    std::string_view line = raw.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const std::size_t tab = line.find('\t', f);
      fields.push_back(line.substr(f, tab == std::string_view::npos ? line.npos : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 4) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 4 tab-separated fields, got " +
                      std::to_string(fields.size()),
                  static_cast<long long>(line_no));
    }
    Interval iv;
    iv.seq_id = std::string(trim(fields[0]));
    iv.start = parse_coordinate(fields[1], line_no);
    iv.end = parse_coordinate(fields[2], line_no);
    try {
      iv.label = parse_label(fields[3]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + e.what(),
                  static_cast<long long>(line_no));
    }
    check_interval(iv, line_no);
    entries.push_back(std::move(iv));
    lines.push_back(line_no);
  }
  return sort_and_check(std::move(entries), std::move(lines));
}

AnnotationTrack read_annotations_file(const std::filesystem::path& path) {
  return parse_annotations(read_text_file(path));
}

std::string serialize_annotations(const AnnotationTrack& track) {
  std::string out;
  for (const auto& iv : track.entries) {
    out += iv.seq_id;
    out += '\t';
    out += std::to_string(iv.start);
    out += '\t';
    out += std::to_string(iv.end);
    out += '\t';
    out += to_string(iv.label);
    out += '\n';
  }
  return out;
}

void write_annotations_file(const std::filesystem::path& path, const AnnotationTrack& track) {
  write_text_file(path, serialize_annotations(track));
}

NucleotideSequence subsequence(const NucleotideSequence& seq, std::int64_t start,
                               std::int64_t end) {
  const auto len = static_cast<std::int64_t>(seq.length());
  if (start < 1 || end < start || end > len) {
    throw Error(ErrorCode::kRange, "window " + std::to_string(start) + "-" +
                                       std::to_string(end) + " outside 1-" +
                                       std::to_string(len));
  }
  NucleotideSequence out;
  const std::int64_t abs_start = seq.origin + start - 1;
  const std::int64_t abs_end = seq.origin + end - 1;
  out.id = seq.id + ":" + std::to_string(abs_start) + "-" + std::to_string(abs_end);
  out.residues = seq.residues.substr(static_cast<std::size_t>(start - 1),
                                     static_cast<std::size_t>(end - start + 1));
  out.origin = abs_start;
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed for '" + path.string() + "'");
  return std::move(os).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

std::filesystem::path fetch_cache_path(const std::string& url,
                                       const std::filesystem::path& cache_dir) {
  return cache_dir / (sha256_hex(url) + ".fa");
}

namespace {

std::size_t curl_append(char* data, std::size_t size, std::size_t nmemb, void* user) {
  static_cast<std::string*>(user)->append(data, size * nmemb);
  return size * nmemb;
}

std::string curl_download(const std::string& url) {
  static const bool initialized = curl_global_init(CURL_GLOBAL_DEFAULT) == CURLE_OK;
  if (!initialized) throw Error(ErrorCode::kFetch, "libcurl initialization failed");

  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> handle(curl_easy_init(),
                                                             &curl_easy_cleanup);
  if (!handle) throw Error(ErrorCode::kFetch, "libcurl handle allocation failed");
  std::string body;
  curl_easy_setopt(handle.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(handle.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(handle.get(), CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(handle.get(), CURLOPT_WRITEFUNCTION, &curl_append);
  curl_easy_setopt(handle.get(), CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(handle.get());
  if (rc != CURLE_OK) {
    throw Error(ErrorCode::kFetch, "fetch of '" + url + "' failed: " + curl_easy_strerror(rc));
  }
  return body;
}

}  // namespace

std::vector<NucleotideSequence> fetch_remote_fasta(const std::string& url,
                                                   const std::filesystem::path& cache_dir) {
  const auto cached = fetch_cache_path(url, cache_dir);
  std::error_code ec;
  if (std::filesystem::is_regular_file(cached, ec)) {
    return parse_fasta(read_text_file(cached));
  }

  const std::string body = curl_download(url);
  auto records = parse_fasta(body);
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create cache directory '" + cache_dir.string() + "': " + ec.message());
  }
  auto tmp = cached;
  tmp += ".part";
  write_text_file(tmp, body);
  std::filesystem::rename(tmp, cached, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot finalize cache entry: " + ec.message());
  return records;
}

}  // namespace fcgs
