#include "fcgs/fcgs.h"

#include <cstring>
#include <new>
#include <string>

#include "../core/chaos_game.hpp"
#include "../core/cwt_engine.hpp"
#include "../core/digest.hpp"
#include "../core/error.hpp"
#include "../core/fcgs_encoder.hpp"
#include "../core/intron_scan.hpp"
#include "../core/sequence_io.hpp"
#include "../core/synth.hpp"
#include "../core/viz_export.hpp"

struct fcgs_sequence {
  fcgs::NucleotideSequence value;
};
struct fcgs_sequence_list {
  std::vector<fcgs::NucleotideSequence> value;
};
struct fcgs_annotations {
  fcgs::AnnotationTrack value;
};
struct fcgs_fcgr {
  fcgs::FcgrMatrix value;
};
struct fcgs_signal {
  fcgs::FcgsSignal value;
};
struct fcgs_scalogram {
  fcgs::Scalogram value;
};
struct fcgs_profile {
  fcgs::BandEnergyProfile value;
};
struct fcgs_regions {
  fcgs::RegionCall value;
};
struct fcgs_buffer {
  std::string value;
};

namespace {

thread_local std::string g_last_message;
thread_local long long g_last_detail = -1;

fcgs_status fail(fcgs_status status, std::string message, long long detail = -1) {
  g_last_message = std::move(message);
  g_last_detail = detail;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
fcgs_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_message.clear();
    g_last_detail = -1;
    return FCGS_OK;
  } catch (const fcgs::Error& e) {
    return fail(static_cast<fcgs_status>(e.code()), e.what(), e.detail());
  } catch (const std::bad_alloc&) {
    return fail(FCGS_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(FCGS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FCGS_ERR_INTERNAL, "unknown failure");
  }
}

fcgs_status null_argument(const char* what) {
  return fail(FCGS_ERR_INVALID_ARGUMENT, std::string("NULL argument: ") + what);
}

#define FCGS_REQUIRE(ptr)                       \
  do {                                          \
    if ((ptr) == nullptr) return null_argument(#ptr); \
  } while (0)

fcgs::RegionLabel to_label(fcgs_label label) {
  switch (label) {
    case FCGS_LABEL_EXON: return fcgs::RegionLabel::kExon;
    case FCGS_LABEL_INTRON: return fcgs::RegionLabel::kIntron;
    case FCGS_LABEL_INTERGENIC: return fcgs::RegionLabel::kIntergenic;
    case FCGS_LABEL_OTHER: return fcgs::RegionLabel::kOther;
  }
  throw fcgs::Error(fcgs::ErrorCode::kInvalidParameter, "unknown label value");
}

fcgs_label from_label(fcgs::RegionLabel label) {
  switch (label) {
    case fcgs::RegionLabel::kExon: return FCGS_LABEL_EXON;
    case fcgs::RegionLabel::kIntron: return FCGS_LABEL_INTRON;
    case fcgs::RegionLabel::kIntergenic: return FCGS_LABEL_INTERGENIC;
    case fcgs::RegionLabel::kOther: return FCGS_LABEL_OTHER;
  }
  return FCGS_LABEL_OTHER;
}

fcgs::MorletParams to_params(const fcgs_morlet_params* p) {
  fcgs::MorletParams out;
  if (p) {
    out.omega0 = p->omega0;
    out.support_len = p->support_len;
    out.half_width = p->half_width;
  }
  return out.canonical();
}

fcgs::ScaleGrid to_grid(const fcgs_scale_grid* g) {
  const fcgs_scale_grid d = g ? *g : fcgs_scale_grid_default();
  return fcgs::ScaleGrid::make(d.scale_min, d.scale_max, d.count,
                               d.spacing == FCGS_SPACING_LINEAR ? fcgs::ScaleSpacing::kLinear
                                                                : fcgs::ScaleSpacing::kLog);
}

template <typename Handle, typename Value>
void emit(Handle** out, Value&& v) {
  *out = new Handle{std::forward<Value>(v)};
}

}  // namespace

extern "C" {

const char* fcgs_version(void) { return "1.0.0"; }

const char* fcgs_status_name(fcgs_status status) {
  switch (status) {
    case FCGS_OK: return "ok";
    case FCGS_ERR_EMPTY_INPUT: return "EmptyInput";
    case FCGS_ERR_INVALID_CHARACTER: return "InvalidCharacter";
    case FCGS_ERR_EMPTY_RECORD: return "EmptyRecord";
    case FCGS_ERR_INVALID_INTERVAL: return "InvalidInterval";
    case FCGS_ERR_OVERLAP: return "OverlapError";
    case FCGS_ERR_PARSE: return "ParseError";
    case FCGS_ERR_RANGE: return "RangeError";
    case FCGS_ERR_FETCH: return "FetchError";
    case FCGS_ERR_IO: return "IoError";
    case FCGS_ERR_AMBIGUOUS_BASE: return "AmbiguousBase";
    case FCGS_ERR_EMPTY_TRAJECTORY: return "EmptyTrajectory";
    case FCGS_ERR_NO_VALID_WORDS: return "NoValidWords";
    case FCGS_ERR_ORDER_TOO_LARGE: return "OrderTooLarge";
    case FCGS_ERR_ORDER_MISMATCH: return "OrderMismatch";
    case FCGS_ERR_SEQUENCE_TOO_SHORT: return "SequenceTooShort";
    case FCGS_ERR_INVALID_SCALE: return "InvalidScale";
    case FCGS_ERR_EMPTY_SIGNAL: return "EmptySignal";
    case FCGS_ERR_INVALID_PARAMETER: return "InvalidParameter";
    case FCGS_ERR_EMPTY_BAND: return "EmptyBand";
    case FCGS_ERR_LABEL_NOT_FOUND: return "LabelNotFound";
    case FCGS_ERR_EMPTY_WINDOW: return "EmptyWindow";
    case FCGS_ERR_CONFIG: return "ConfigError";
    case FCGS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FCGS_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case FCGS_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* fcgs_last_error_message(void) { return g_last_message.c_str(); }
long long fcgs_last_error_detail(void) { return g_last_detail; }

// ---- buffers

const uint8_t* fcgs_buffer_data(const fcgs_buffer* buf) {
  return buf ? reinterpret_cast<const uint8_t*>(buf->value.data()) : nullptr;
}
size_t fcgs_buffer_size(const fcgs_buffer* buf) { return buf ? buf->value.size() : 0; }
fcgs_status fcgs_buffer_write(const fcgs_buffer* buf, const char* path) {
  FCGS_REQUIRE(buf);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, buf->value); });
}
void fcgs_buffer_free(fcgs_buffer* buf) { delete buf; }

// ---- sequences

fcgs_status fcgs_fasta_parse(const char* data, size_t len, fcgs_sequence_list** out) {
  FCGS_REQUIRE(out);
  if (!data && len) return null_argument("data");
  return guarded([&] {
    emit(out, fcgs::parse_fasta(std::string_view(data ? data : "", len)));
  });
}

fcgs_status fcgs_fasta_read(const char* path, fcgs_sequence_list** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::read_fasta_file(path)); });
}

fcgs_status fcgs_fasta_fetch(const char* url, const char* cache_dir, fcgs_sequence_list** out) {
  FCGS_REQUIRE(url);
  FCGS_REQUIRE(cache_dir);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::fetch_remote_fasta(url, cache_dir)); });
}

size_t fcgs_sequence_list_size(const fcgs_sequence_list* list) {
  return list ? list->value.size() : 0;
}

fcgs_status fcgs_sequence_list_get(const fcgs_sequence_list* list, size_t index,
                                   fcgs_sequence** out) {
  FCGS_REQUIRE(list);
  FCGS_REQUIRE(out);
  if (index >= list->value.size()) {
    return fail(FCGS_ERR_RANGE, "record index " + std::to_string(index) + " out of range");
  }
  return guarded([&] { emit(out, list->value[index]); });
}

fcgs_status fcgs_sequence_list_find(const fcgs_sequence_list* list, const char* id,
                                    fcgs_sequence** out) {
  FCGS_REQUIRE(list);
  FCGS_REQUIRE(id);
  FCGS_REQUIRE(out);
  for (const auto& rec : list->value) {
    if (rec.id == id) return guarded([&] { emit(out, rec); });
  }
  return fail(FCGS_ERR_RANGE, std::string("no record with id '") + id + "'");
}

fcgs_status fcgs_sequence_list_write_fasta(const fcgs_sequence_list* list, const char* path) {
  FCGS_REQUIRE(list);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_fasta_file(path, list->value); });
}

void fcgs_sequence_list_free(fcgs_sequence_list* list) { delete list; }

fcgs_status fcgs_sequence_create(const char* id, const char* letters, size_t len,
                                 fcgs_sequence** out) {
  FCGS_REQUIRE(out);
  if (!letters && len) return null_argument("letters");
  return guarded([&] {
    emit(out, fcgs::NucleotideSequence::from_letters(id ? id : "",
                                                     std::string_view(letters ? letters : "", len)));
  });
}

const char* fcgs_sequence_id(const fcgs_sequence* seq) { return seq ? seq->value.id.c_str() : ""; }
const char* fcgs_sequence_residues(const fcgs_sequence* seq) {
  return seq ? seq->value.residues.c_str() : "";
}
size_t fcgs_sequence_length(const fcgs_sequence* seq) { return seq ? seq->value.length() : 0; }
int64_t fcgs_sequence_origin(const fcgs_sequence* seq) { return seq ? seq->value.origin : 0; }

fcgs_status fcgs_sequence_subsequence(const fcgs_sequence* seq, int64_t start, int64_t end,
                                      fcgs_sequence** out) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::subsequence(seq->value, start, end)); });
}

fcgs_status fcgs_sequence_write_fasta(const fcgs_sequence* seq, const char* path) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_fasta_file(path, {seq->value}); });
}

void fcgs_sequence_free(fcgs_sequence* seq) { delete seq; }

// ---- annotations

fcgs_status fcgs_label_parse(const char* text, fcgs_label* out) {
  FCGS_REQUIRE(text);
  FCGS_REQUIRE(out);
  return guarded([&] { *out = from_label(fcgs::parse_label(text)); });
}

const char* fcgs_label_name(fcgs_label label) {
  switch (label) {
    case FCGS_LABEL_EXON: return "exon";
    case FCGS_LABEL_INTRON: return "intron";
    case FCGS_LABEL_INTERGENIC: return "intergenic";
    case FCGS_LABEL_OTHER: return "other";
  }
  return "other";
}

fcgs_status fcgs_annotations_parse(const char* data, size_t len, fcgs_annotations** out) {
  FCGS_REQUIRE(out);
  if (!data && len) return null_argument("data");
  return guarded([&] {
    emit(out, fcgs::parse_annotations(std::string_view(data ? data : "", len)));
  });
}

fcgs_status fcgs_annotations_read(const char* path, fcgs_annotations** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::read_annotations_file(path)); });
}

fcgs_status fcgs_annotations_write(const fcgs_annotations* track, const char* path) {
  FCGS_REQUIRE(track);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_annotations_file(path, track->value); });
}

size_t fcgs_annotations_size(const fcgs_annotations* track) {
  return track ? track->value.entries.size() : 0;
}

fcgs_status fcgs_annotations_entry(const fcgs_annotations* track, size_t index,
                                   const char** seq_id, int64_t* start, int64_t* end,
                                   fcgs_label* label) {
  FCGS_REQUIRE(track);
  if (index >= track->value.entries.size()) {
    return fail(FCGS_ERR_RANGE, "annotation index out of range");
  }
  const auto& e = track->value.entries[index];
  if (seq_id) *seq_id = e.seq_id.c_str();
  if (start) *start = e.start;
  if (end) *end = e.end;
  if (label) *label = from_label(e.label);
  return FCGS_OK;
}

void fcgs_annotations_free(fcgs_annotations* track) { delete track; }

// ---- chaos game

fcgs_status fcgs_cgr_step(double x, double y, char base, double* out_x, double* out_y) {
  FCGS_REQUIRE(out_x);
  FCGS_REQUIRE(out_y);
  return guarded([&] {
    const auto p = fcgs::cgr_step({x, y}, base);
    *out_x = p.x;
    *out_y = p.y;
  });
}

fcgs_status fcgs_cgr_map(const fcgs_sequence* seq, double* xs, double* ys, size_t capacity,
                         size_t* count) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(count);
  return guarded([&] {
    const auto pts = fcgs::cgr_map(seq->value);
    *count = pts.size();
    if (xs && ys) {
      for (size_t i = 0; i < pts.size() && i < capacity; ++i) {
        xs[i] = pts[i].x;
        ys[i] = pts[i].y;
      }
    }
  });
}

fcgs_status fcgs_cell_index(const char* word, size_t len, size_t* row, size_t* col) {
  FCGS_REQUIRE(word);
  FCGS_REQUIRE(row);
  FCGS_REQUIRE(col);
  return guarded([&] {
    const auto c = fcgs::cell_index(std::string_view(word, len));
    *row = c.row;
    *col = c.col;
  });
}

fcgs_fcgr_options fcgs_fcgr_options_default(void) {
  return {fcgs::kDefaultMaxOrder, 0};
}

fcgs_status fcgs_fcgr_compute(const fcgs_sequence* seq, int k, const fcgs_fcgr_options* opts,
                              fcgs_fcgr** out) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(out);
  const fcgs_fcgr_options o = opts ? *opts : fcgs_fcgr_options_default();
  return guarded([&] {
    emit(out, fcgs::compute_fcgr(seq->value, k, {o.max_order, o.threads}));
  });
}

fcgs_status fcgs_fcgr_from_cells(int k, const double* cells, size_t count, uint64_t counted_words,
                                 const char* source_id, fcgs_fcgr** out) {
  FCGS_REQUIRE(cells);
  FCGS_REQUIRE(out);
  return guarded([&] {
    emit(out, fcgs::FcgrMatrix(k, std::vector<double>(cells, cells + count), counted_words,
                               source_id ? source_id : ""));
  });
}

fcgs_status fcgs_fcgr_parse_csv(const char* data, size_t len, fcgs_fcgr** out) {
  FCGS_REQUIRE(data);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::fcgr_from_csv(std::string_view(data, len))); });
}

fcgs_status fcgs_fcgr_read_csv(const char* path, fcgs_fcgr** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::fcgr_from_csv(fcgs::read_text_file(path))); });
}

fcgs_status fcgs_fcgr_write_csv(const fcgs_fcgr* m, const char* path) {
  FCGS_REQUIRE(m);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, fcgs::fcgr_to_csv(m->value)); });
}

int fcgs_fcgr_order(const fcgs_fcgr* m) { return m ? m->value.order() : 0; }
size_t fcgs_fcgr_side(const fcgs_fcgr* m) { return m ? m->value.side() : 0; }
uint64_t fcgs_fcgr_counted_words(const fcgs_fcgr* m) { return m ? m->value.counted_words() : 0; }
const char* fcgs_fcgr_source_id(const fcgs_fcgr* m) {
  return m ? m->value.source_id().c_str() : "";
}
const double* fcgs_fcgr_cells(const fcgs_fcgr* m) { return m ? m->value.cells().data() : nullptr; }
double fcgs_fcgr_entropy_bits(const fcgs_fcgr* m) {
  return m ? fcgs::fcgr_entropy_bits(m->value) : 0.0;
}

fcgs_status fcgs_fcgr_lookup(const fcgs_fcgr* m, const char* word, size_t len, double* out) {
  FCGS_REQUIRE(m);
  FCGS_REQUIRE(word);
  FCGS_REQUIRE(out);
  return guarded([&] { *out = fcgs::fcgr_lookup(m->value, std::string_view(word, len)); });
}

void fcgs_fcgr_free(fcgs_fcgr* m) { delete m; }

// ---- signals

fcgs_status fcgs_encode(const fcgs_sequence* seq, const fcgs_fcgr* matrix, fcgs_signal** out) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(matrix);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::encode(seq->value, matrix->value)); });
}

fcgs_status fcgs_word_stream(const fcgs_sequence* seq, int n, fcgs_buffer** out) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(out);
  return guarded([&] {
    std::string joined;
    for (const auto& w : fcgs::word_stream(seq->value, n)) {
      if (!joined.empty()) joined += '\n';
      joined += w;
    }
    emit(out, std::move(joined));
  });
}

fcgs_status fcgs_signal_from_values(const double* values, size_t len, int order,
                                    int64_t start_coordinate, fcgs_signal** out) {
  FCGS_REQUIRE(out);
  if (!values && len) return null_argument("values");
  return guarded([&] {
    fcgs::FcgsSignal s;
    s.values.assign(values, values + len);
    s.masked.assign(len, 0);
    s.order = order;
    s.start_coordinate = start_coordinate;
    emit(out, std::move(s));
  });
}

size_t fcgs_signal_length(const fcgs_signal* sig) { return sig ? sig->value.size() : 0; }
const double* fcgs_signal_values(const fcgs_signal* sig) {
  return sig ? sig->value.values.data() : nullptr;
}
const uint8_t* fcgs_signal_mask(const fcgs_signal* sig) {
  return sig ? sig->value.masked.data() : nullptr;
}
size_t fcgs_signal_masked_count(const fcgs_signal* sig) {
  return sig ? sig->value.masked_count() : 0;
}
int fcgs_signal_order(const fcgs_signal* sig) { return sig ? sig->value.order : 0; }
int64_t fcgs_signal_start(const fcgs_signal* sig) { return sig ? sig->value.start_coordinate : 0; }

fcgs_status fcgs_signal_write_csv(const fcgs_signal* sig, const char* path) {
  FCGS_REQUIRE(sig);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, fcgs::signal_to_csv(sig->value)); });
}

fcgs_status fcgs_signal_write_binary(const fcgs_signal* sig, const char* path) {
  FCGS_REQUIRE(sig);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, fcgs::signal_to_binary(sig->value)); });
}

fcgs_status fcgs_signal_read_csv(const char* path, fcgs_signal** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::signal_from_csv(fcgs::read_text_file(path))); });
}

fcgs_status fcgs_signal_read_binary(const char* path, fcgs_signal** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::signal_from_binary(fcgs::read_text_file(path))); });
}

void fcgs_signal_free(fcgs_signal* sig) { delete sig; }

// ---- CWT

fcgs_morlet_params fcgs_morlet_params_default(void) {
  const fcgs::MorletParams p;
  return {p.omega0, p.support_len, p.half_width};
}

fcgs_scale_grid fcgs_scale_grid_default(void) { return {1.0, 64.0, 64, FCGS_SPACING_LOG}; }

fcgs_status fcgs_morlet(double t, const fcgs_morlet_params* params, double* re, double* im) {
  FCGS_REQUIRE(re);
  FCGS_REQUIRE(im);
  return guarded([&] {
    const auto p = to_params(params);
    p.validate();
    const auto z = fcgs::morlet(t, p);
    *re = z.real();
    *im = z.imag();
  });
}

fcgs_status fcgs_morlet_tabulation(const fcgs_morlet_params* params, double* re, double* im,
                                   size_t capacity, size_t* count) {
  FCGS_REQUIRE(count);
  return guarded([&] {
    const auto p = to_params(params);
    p.validate();
    const auto tab = fcgs::mother_tabulation(p);
    *count = tab.size();
    if (re == nullptr || im == nullptr) return;
    for (std::size_t i = 0; i < tab.size() && i < capacity; ++i) {
      re[i] = tab[i].real();
      im[i] = tab[i].imag();
    }
  });
}

fcgs_status fcgs_scale_to_frequency(double scale, const fcgs_morlet_params* params, double* out) {
  FCGS_REQUIRE(out);
  return guarded([&] { *out = fcgs::scale_to_frequency(scale, to_params(params)); });
}

fcgs_status fcgs_cwt(const fcgs_signal* sig, const fcgs_scale_grid* grid,
                     const fcgs_morlet_params* params, fcgs_cwt_method method, unsigned threads,
                     fcgs_scalogram** out) {
  FCGS_REQUIRE(sig);
  FCGS_REQUIRE(out);
  return guarded([&] {
    const auto p = to_params(params);
    const auto g = to_grid(grid);
    if (method == FCGS_CWT_DIRECT) {
      auto s = fcgs::cwt_direct(sig->value.values, g, p);
      s.start_coordinate = sig->value.start_coordinate;
      emit(out, std::move(s));
    } else {
      emit(out, fcgs::cwt(sig->value, g, p, {threads}));
    }
  });
}

size_t fcgs_scalogram_scale_count(const fcgs_scalogram* s) { return s ? s->value.scale_count() : 0; }
size_t fcgs_scalogram_width(const fcgs_scalogram* s) { return s ? s->value.width : 0; }
int64_t fcgs_scalogram_start(const fcgs_scalogram* s) { return s ? s->value.start_coordinate : 0; }
double fcgs_scalogram_scale(const fcgs_scalogram* s, size_t i) {
  return s && i < s->value.scale_count() ? s->value.scales[i] : 0.0;
}
double fcgs_scalogram_frequency(const fcgs_scalogram* s, size_t i) {
  return s && i < s->value.scale_count() ? s->value.frequencies[i] : 0.0;
}
uint64_t fcgs_scalogram_cone(const fcgs_scalogram* s, size_t i) {
  return s && i < s->value.scale_count() ? s->value.coi[i] : 0;
}
const double* fcgs_scalogram_modulus_row(const fcgs_scalogram* s, size_t i) {
  return s && i < s->value.scale_count() ? s->value.modulus_row(i).data() : nullptr;
}

fcgs_status fcgs_scalogram_coefficient(const fcgs_scalogram* s, size_t index, size_t position,
                                       double* re, double* im) {
  FCGS_REQUIRE(s);
  FCGS_REQUIRE(re);
  FCGS_REQUIRE(im);
  if (index >= s->value.scale_count() || position >= s->value.width) {
    return fail(FCGS_ERR_RANGE, "scalogram cell out of range");
  }
  const auto z = s->value.coefficient(index, position);
  *re = z.real();
  *im = z.imag();
  return FCGS_OK;
}

fcgs_status fcgs_scalogram_write_binary(const fcgs_scalogram* s, const char* path) {
  FCGS_REQUIRE(s);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, fcgs::scalogram_to_binary(s->value)); });
}

fcgs_status fcgs_scalogram_read_binary(const char* path, fcgs_scalogram** out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::scalogram_from_binary(fcgs::read_text_file(path))); });
}

fcgs_status fcgs_scalogram_write_csv(const fcgs_scalogram* s, const char* path) {
  FCGS_REQUIRE(s);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::write_text_file(path, fcgs::scalogram_modulus_csv(s->value)); });
}

void fcgs_scalogram_free(fcgs_scalogram* s) { delete s; }

// ---- scan

fcgs_status fcgs_band_energy(const fcgs_scalogram* s, double f_lo, double f_hi,
                             fcgs_profile** out) {
  FCGS_REQUIRE(s);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::band_energy(s->value, f_lo, f_hi)); });
}

size_t fcgs_profile_length(const fcgs_profile* p) { return p ? p->value.size() : 0; }
const double* fcgs_profile_values(const fcgs_profile* p) {
  return p ? p->value.values.data() : nullptr;
}
int64_t fcgs_profile_start(const fcgs_profile* p) { return p ? p->value.start_coordinate : 0; }

fcgs_status fcgs_profile_write_csv(const fcgs_profile* p, const char* path) {
  FCGS_REQUIRE(p);
  FCGS_REQUIRE(path);
  return guarded([&] { fcgs::export_profile_csv(p->value, path); });
}

void fcgs_profile_free(fcgs_profile* p) { delete p; }

fcgs_call_options fcgs_call_options_default(void) {
  return {1, 0.0, fcgs::kDefaultMinLength, fcgs::kDefaultSmoothing};
}

fcgs_status fcgs_call_regions(const fcgs_profile* p, const fcgs_call_options* opts,
                              fcgs_regions** out) {
  FCGS_REQUIRE(p);
  FCGS_REQUIRE(out);
  const fcgs_call_options o = opts ? *opts : fcgs_call_options_default();
  return guarded([&] {
    fcgs::CallOptions co;
    if (!o.auto_threshold) co.threshold = o.threshold;
    co.min_len = o.min_len;
    co.smoothing = o.smoothing;
    emit(out, fcgs::call_regions(p->value, co));
  });
}

size_t fcgs_regions_count(const fcgs_regions* r) { return r ? r->value.intervals.size() : 0; }
double fcgs_regions_threshold(const fcgs_regions* r) { return r ? r->value.threshold_used : 0.0; }

fcgs_status fcgs_regions_get(const fcgs_regions* r, size_t index, int64_t* start, int64_t* end,
                             double* mean_energy) {
  FCGS_REQUIRE(r);
  if (index >= r->value.intervals.size()) return fail(FCGS_ERR_RANGE, "region index out of range");
  const auto& iv = r->value.intervals[index];
  if (start) *start = iv.start;
  if (end) *end = iv.end;
  if (mean_energy) *mean_energy = iv.mean_energy;
  return FCGS_OK;
}

fcgs_status fcgs_regions_to_annotations(const fcgs_regions* r, const char* seq_id,
                                        fcgs_label label, fcgs_annotations** out) {
  FCGS_REQUIRE(r);
  FCGS_REQUIRE(seq_id);
  FCGS_REQUIRE(out);
  return guarded([&] { emit(out, fcgs::calls_to_track(r->value, seq_id, to_label(label))); });
}

void fcgs_regions_free(fcgs_regions* r) { delete r; }

fcgs_status fcgs_evaluate(const fcgs_regions* r, const fcgs_annotations* truth, fcgs_label label,
                          const char* seq_id, fcgs_metrics* out) {
  FCGS_REQUIRE(r);
  FCGS_REQUIRE(truth);
  FCGS_REQUIRE(out);
  return guarded([&] {
    const auto m = fcgs::evaluate(r->value, truth->value, to_label(label), seq_id ? seq_id : "");
    *out = {m.precision,       m.recall,    m.f1,       m.mean_boundary_offset,
            m.true_positive_bp, m.called_bp, m.truth_bp, m.matched_intervals,
            m.precision_undefined ? 1 : 0, m.offset_undefined ? 1 : 0};
  });
}

fcgs_status fcgs_metrics_write(const fcgs_metrics* m, const char* path) {
  FCGS_REQUIRE(m);
  FCGS_REQUIRE(path);
  return guarded([&] {
    fcgs::EvaluationMetrics em;
    em.precision = m->precision;
    em.recall = m->recall;
    em.f1 = m->f1;
    em.mean_boundary_offset = m->mean_boundary_offset;
    em.true_positive_bp = m->true_positive_bp;
    em.called_bp = m->called_bp;
    em.truth_bp = m->truth_bp;
    em.matched_intervals = m->matched_intervals;
    em.precision_undefined = m->precision_undefined != 0;
    em.offset_undefined = m->offset_undefined != 0;
    fcgs::write_text_file(path, fcgs::metrics_to_text(em));
  });
}

// ---- rendering

fcgs_render_spec fcgs_render_spec_default(void) {
  const fcgs::RenderSpec d;
  return {0, 0, FCGS_COLORMAP_JET, d.width, d.height, 1};
}

fcgs_status fcgs_render_png(const fcgs_scalogram* s, const fcgs_render_spec* spec,
                            const fcgs_annotations* overlay, fcgs_buffer** out) {
  FCGS_REQUIRE(s);
  FCGS_REQUIRE(out);
  const fcgs_render_spec r = spec ? *spec : fcgs_render_spec_default();
  return guarded([&] {
    fcgs::RenderSpec rs;
    rs.window_start = r.window_start;
    rs.window_end = r.window_end;
    rs.colormap = r.colormap == FCGS_COLORMAP_GRAY ? fcgs::Colormap::kGray : fcgs::Colormap::kJet;
    rs.width = r.width;
    rs.height = r.height;
    rs.axes = r.axes != 0;
    if (overlay) rs.overlay = overlay->value;
    emit(out, fcgs::render_scalogram(s->value, rs));
  });
}

// ---- synth

fcgs_synth_spec fcgs_synth_spec_default(void) { return {1, nullptr, 0.05, nullptr, nullptr}; }

fcgs_status fcgs_synth(const fcgs_synth_spec* spec, fcgs_sequence** seq,
                       fcgs_annotations** truth) {
  FCGS_REQUIRE(seq);
  FCGS_REQUIRE(truth);
  const fcgs_synth_spec in = spec ? *spec : fcgs_synth_spec_default();
  return guarded([&] {
    fcgs::SynthSpec s;
    s.seed = in.seed;
    s.layout = fcgs::parse_layout(in.layout ? in.layout : fcgs::kDefaultSynthLayout);
    s.mutation_rate = in.mutation_rate;
    if (in.unit) s.unit = in.unit;
    if (in.seq_id) s.seq_id = in.seq_id;
    auto result = fcgs::synthesize(s);
    auto* seq_handle = new fcgs_sequence{std::move(result.sequence)};
    try {
      *truth = new fcgs_annotations{std::move(result.truth)};
    } catch (...) {
      delete seq_handle;
      throw;
    }
    *seq = seq_handle;
  });
}

// ---- misc

fcgs_status fcgs_sha256_file(const char* path, char* out) {
  FCGS_REQUIRE(path);
  FCGS_REQUIRE(out);
  return guarded([&] {
    const std::string hex = fcgs::sha256_file_hex(path);
    std::memcpy(out, hex.c_str(), hex.size() + 1);
  });
}

}  // extern "C"
