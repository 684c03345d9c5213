#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fcgs {

// Validated DNA record. Residues are uppercase over {A,C,G,T,N}. `origin` is
// the 1-based coordinate of the first residue in the parent sequence, so a
// window cut from a chromosome keeps chromosome coordinates.
struct NucleotideSequence {
  std::string id;
  std::string residues;
  std::int64_t origin = 1;

  std::size_t length() const noexcept { return residues.size(); }

  // Builds a sequence from raw letters, canonicalizing case and collapsing
  // non-ACGT IUPAC codes to N. Throws InvalidCharacter on anything else.
  static NucleotideSequence from_letters(std::string id, std::string_view letters,
                                         std::int64_t origin = 1);
};

enum class RegionLabel { kExon, kIntron, kIntergenic, kOther };

std::string_view to_string(RegionLabel label);
RegionLabel parse_label(std::string_view text);  // throws Parse

struct Interval {
  std::string seq_id;
  std::int64_t start = 0;  // 1-based inclusive
  std::int64_t end = 0;    // 1-based inclusive
  RegionLabel label = RegionLabel::kOther;

  std::int64_t length() const noexcept { return end - start + 1; }
};

// Sorted by (seq_id, start); same-id entries never overlap.
struct AnnotationTrack {
  std::vector<Interval> entries;

  // Sorts and validates; throws InvalidInterval / Overlap.
  static AnnotationTrack from_entries(std::vector<Interval> entries);
};

std::vector<NucleotideSequence> parse_fasta(std::string_view raw);
std::vector<NucleotideSequence> read_fasta_file(const std::filesystem::path& path);
std::string serialize_fasta(const std::vector<NucleotideSequence>& records,
                            std::size_t line_width = 60);
void write_fasta_file(const std::filesystem::path& path,
                      const std::vector<NucleotideSequence>& records);

AnnotationTrack parse_annotations(std::string_view raw);
AnnotationTrack read_annotations_file(const std::filesystem::path& path);
std::string serialize_annotations(const AnnotationTrack& track);
void write_annotations_file(const std::filesystem::path& path, const AnnotationTrack& track);

// Inclusive 1-based window [start, end] relative to the sequence itself.
NucleotideSequence subsequence(const NucleotideSequence& seq, std::int64_t start,
                               std::int64_t end);

// Cache-first download: the body is stored under cache_dir keyed by the SHA-256
// of the url and parsed with parse_fasta. Any libcurl-supported scheme works,
// including file://.
std::vector<NucleotideSequence> fetch_remote_fasta(const std::string& url,
                                                   const std::filesystem::path& cache_dir);

// Path a url is cached under.
std::filesystem::path fetch_cache_path(const std::string& url,
                                       const std::filesystem::path& cache_dir);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fcgs
