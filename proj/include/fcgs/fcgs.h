/*
 * libfcgs: Frequency Chaos Game Signals and complex Morlet scalograms of DNA.
 *
 * Plain C interface over the library. Every object is an opaque handle owned by
 * the caller and released with its *_free function; free functions accept
 * NULL. Functions that can fail return fcgs_status; on failure a description
 * is available from fcgs_last_error_message() on the same thread.
 *
 * Coordinates are 1-based and inclusive everywhere.
 */
#ifndef FCGS_FCGS_H
#define FCGS_FCGS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FCGS_BUILDING_LIBRARY)
#define FCGS_API __declspec(dllexport)
#else
#define FCGS_API __declspec(dllimport)
#endif
#else
#define FCGS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcgs_status {
  FCGS_OK = 0,
  FCGS_ERR_EMPTY_INPUT = 1,
  FCGS_ERR_INVALID_CHARACTER = 2, /* detail: byte offset */
  FCGS_ERR_EMPTY_RECORD = 3,
  FCGS_ERR_INVALID_INTERVAL = 4, /* detail: line */
  FCGS_ERR_OVERLAP = 5,          /* detail: line */
  FCGS_ERR_PARSE = 6,            /* detail: line when known */
  FCGS_ERR_RANGE = 7,
  FCGS_ERR_FETCH = 8,
  FCGS_ERR_IO = 9,
  FCGS_ERR_AMBIGUOUS_BASE = 10,
  FCGS_ERR_EMPTY_TRAJECTORY = 11,
  FCGS_ERR_NO_VALID_WORDS = 12,
  FCGS_ERR_ORDER_TOO_LARGE = 13,
  FCGS_ERR_ORDER_MISMATCH = 14,
  FCGS_ERR_SEQUENCE_TOO_SHORT = 15,
  FCGS_ERR_INVALID_SCALE = 16,
  FCGS_ERR_EMPTY_SIGNAL = 17,
  FCGS_ERR_INVALID_PARAMETER = 18,
  FCGS_ERR_EMPTY_BAND = 19,
  FCGS_ERR_LABEL_NOT_FOUND = 20,
  FCGS_ERR_EMPTY_WINDOW = 21,
  FCGS_ERR_CONFIG = 22,
  FCGS_ERR_INVALID_ARGUMENT = 100, /* NULL handle or output pointer */
  FCGS_ERR_OUT_OF_MEMORY = 101,
  FCGS_ERR_INTERNAL = 102
} fcgs_status;

FCGS_API const char* fcgs_version(void);
FCGS_API const char* fcgs_status_name(fcgs_status status);
/* Message of the last failure on this thread; "" when none. */
FCGS_API const char* fcgs_last_error_message(void);
/* Position, line or coordinate attached to the last failure; -1 when none. */
FCGS_API long long fcgs_last_error_detail(void);

typedef struct fcgs_sequence fcgs_sequence;
typedef struct fcgs_sequence_list fcgs_sequence_list;
typedef struct fcgs_annotations fcgs_annotations;
typedef struct fcgs_fcgr fcgs_fcgr;
typedef struct fcgs_signal fcgs_signal;
typedef struct fcgs_scalogram fcgs_scalogram;
typedef struct fcgs_profile fcgs_profile;
typedef struct fcgs_regions fcgs_regions;
typedef struct fcgs_buffer fcgs_buffer;

/* ---- byte buffers ---------------------------------------------------- */

FCGS_API const uint8_t* fcgs_buffer_data(const fcgs_buffer* buf);
FCGS_API size_t fcgs_buffer_size(const fcgs_buffer* buf);
FCGS_API fcgs_status fcgs_buffer_write(const fcgs_buffer* buf, const char* path);
FCGS_API void fcgs_buffer_free(fcgs_buffer* buf);

/* ---- sequences --------------------------------------------------------- */

FCGS_API fcgs_status fcgs_fasta_parse(const char* data, size_t len, fcgs_sequence_list** out);
FCGS_API fcgs_status fcgs_fasta_read(const char* path, fcgs_sequence_list** out);
/* Cache-first: cache_dir/<sha256(url)>.fa is used when present. */
FCGS_API fcgs_status fcgs_fasta_fetch(const char* url, const char* cache_dir,
                                      fcgs_sequence_list** out);

FCGS_API size_t fcgs_sequence_list_size(const fcgs_sequence_list* list);
/* Copies record i. */
FCGS_API fcgs_status fcgs_sequence_list_get(const fcgs_sequence_list* list, size_t index,
                                            fcgs_sequence** out);
FCGS_API fcgs_status fcgs_sequence_list_find(const fcgs_sequence_list* list, const char* id,
                                             fcgs_sequence** out);
FCGS_API fcgs_status fcgs_sequence_list_write_fasta(const fcgs_sequence_list* list,
                                                    const char* path);
FCGS_API void fcgs_sequence_list_free(fcgs_sequence_list* list);

FCGS_API fcgs_status fcgs_sequence_create(const char* id, const char* letters, size_t len,
                                          fcgs_sequence** out);
FCGS_API const char* fcgs_sequence_id(const fcgs_sequence* seq);
/* NUL-terminated, uppercase over A/C/G/T/N; valid while the handle lives. */
FCGS_API const char* fcgs_sequence_residues(const fcgs_sequence* seq);
FCGS_API size_t fcgs_sequence_length(const fcgs_sequence* seq);
/* Coordinate of the first residue in its parent sequence (1 for whole records). */
FCGS_API int64_t fcgs_sequence_origin(const fcgs_sequence* seq);
FCGS_API fcgs_status fcgs_sequence_subsequence(const fcgs_sequence* seq, int64_t start,
                                               int64_t end, fcgs_sequence** out);
FCGS_API fcgs_status fcgs_sequence_write_fasta(const fcgs_sequence* seq, const char* path);
FCGS_API void fcgs_sequence_free(fcgs_sequence* seq);

/* ---- annotations (tab-separated seq_id, start, end, label) ------------- */

typedef enum fcgs_label {
  FCGS_LABEL_EXON = 0,
  FCGS_LABEL_INTRON = 1,
  FCGS_LABEL_INTERGENIC = 2,
  FCGS_LABEL_OTHER = 3
} fcgs_label;

FCGS_API fcgs_status fcgs_label_parse(const char* text, fcgs_label* out);
FCGS_API const char* fcgs_label_name(fcgs_label label);

FCGS_API fcgs_status fcgs_annotations_parse(const char* data, size_t len,
                                            fcgs_annotations** out);
FCGS_API fcgs_status fcgs_annotations_read(const char* path, fcgs_annotations** out);
FCGS_API fcgs_status fcgs_annotations_write(const fcgs_annotations* track, const char* path);
FCGS_API size_t fcgs_annotations_size(const fcgs_annotations* track);
/* seq_id stays valid while the handle lives. Any output pointer may be NULL. */
FCGS_API fcgs_status fcgs_annotations_entry(const fcgs_annotations* track, size_t index,
                                            const char** seq_id, int64_t* start, int64_t* end,
                                            fcgs_label* label);
FCGS_API void fcgs_annotations_free(fcgs_annotations* track);

/* ---- chaos game representation --------------------------------------- */

FCGS_API fcgs_status fcgs_cgr_step(double x, double y, char base, double* out_x, double* out_y);
/* Writes up to `capacity` points; *count receives the trajectory length.
 * xs/ys may be NULL to query the length only. */
FCGS_API fcgs_status fcgs_cgr_map(const fcgs_sequence* seq, double* xs, double* ys,
                                  size_t capacity, size_t* count);
/* Row 0 is the top of the grid. */
FCGS_API fcgs_status fcgs_cell_index(const char* word, size_t len, size_t* row, size_t* col);

typedef struct fcgs_fcgr_options {
  int max_order;    /* memory cap on k; default 12 */
  unsigned threads; /* 0: hardware concurrency */
} fcgs_fcgr_options;

FCGS_API fcgs_fcgr_options fcgs_fcgr_options_default(void);
/* opts may be NULL for defaults. */
FCGS_API fcgs_status fcgs_fcgr_compute(const fcgs_sequence* seq, int k,
                                       const fcgs_fcgr_options* opts, fcgs_fcgr** out);
/* cells: row-major, count = 4^k. */
FCGS_API fcgs_status fcgs_fcgr_from_cells(int k, const double* cells, size_t count,
                                          uint64_t counted_words, const char* source_id,
                                          fcgs_fcgr** out);
FCGS_API fcgs_status fcgs_fcgr_parse_csv(const char* data, size_t len, fcgs_fcgr** out);
FCGS_API fcgs_status fcgs_fcgr_read_csv(const char* path, fcgs_fcgr** out);
FCGS_API fcgs_status fcgs_fcgr_write_csv(const fcgs_fcgr* m, const char* path);
FCGS_API int fcgs_fcgr_order(const fcgs_fcgr* m);
FCGS_API size_t fcgs_fcgr_side(const fcgs_fcgr* m);
FCGS_API uint64_t fcgs_fcgr_counted_words(const fcgs_fcgr* m);
FCGS_API const char* fcgs_fcgr_source_id(const fcgs_fcgr* m);
/* Row-major side*side values. */
FCGS_API const double* fcgs_fcgr_cells(const fcgs_fcgr* m);
FCGS_API double fcgs_fcgr_entropy_bits(const fcgs_fcgr* m);
FCGS_API fcgs_status fcgs_fcgr_lookup(const fcgs_fcgr* m, const char* word, size_t len,
                                      double* out);
FCGS_API void fcgs_fcgr_free(fcgs_fcgr* m);

/* ---- frequency chaos game signal ------------------------------------- */

FCGS_API fcgs_status fcgs_encode(const fcgs_sequence* seq, const fcgs_fcgr* matrix,
                                 fcgs_signal** out);
/* Overlapping words of length n joined by '\n'. */
FCGS_API fcgs_status fcgs_word_stream(const fcgs_sequence* seq, int n, fcgs_buffer** out);
FCGS_API fcgs_status fcgs_signal_from_values(const double* values, size_t len, int order,
                                             int64_t start_coordinate, fcgs_signal** out);
FCGS_API size_t fcgs_signal_length(const fcgs_signal* sig);
FCGS_API const double* fcgs_signal_values(const fcgs_signal* sig);
/* One byte per sample, 1 where the word contained N. */
FCGS_API const uint8_t* fcgs_signal_mask(const fcgs_signal* sig);
FCGS_API size_t fcgs_signal_masked_count(const fcgs_signal* sig);
FCGS_API int fcgs_signal_order(const fcgs_signal* sig);
FCGS_API int64_t fcgs_signal_start(const fcgs_signal* sig);
FCGS_API fcgs_status fcgs_signal_write_csv(const fcgs_signal* sig, const char* path);
FCGS_API fcgs_status fcgs_signal_write_binary(const fcgs_signal* sig, const char* path);
FCGS_API fcgs_status fcgs_signal_read_csv(const char* path, fcgs_signal** out);
FCGS_API fcgs_status fcgs_signal_read_binary(const char* path, fcgs_signal** out);
FCGS_API void fcgs_signal_free(fcgs_signal* sig);

/* ---- complex Morlet CWT ---------------------------------------------- */

typedef struct fcgs_morlet_params {
  double omega0;      /* > 5; default 5.4285 */
  size_t support_len; /* mother tabulation points; default 601 */
  double half_width;  /* mother tabulated on [-half_width, half_width]; default 8 */
} fcgs_morlet_params;

typedef enum fcgs_scale_spacing { FCGS_SPACING_LOG = 0, FCGS_SPACING_LINEAR = 1 } fcgs_scale_spacing;

typedef struct fcgs_scale_grid {
  double scale_min; /* default 1 */
  double scale_max; /* default 64 */
  size_t count;     /* default 64 */
  fcgs_scale_spacing spacing;
} fcgs_scale_grid;

typedef enum fcgs_cwt_method { FCGS_CWT_FFT = 0, FCGS_CWT_DIRECT = 1 } fcgs_cwt_method;

FCGS_API fcgs_morlet_params fcgs_morlet_params_default(void);
FCGS_API fcgs_scale_grid fcgs_scale_grid_default(void);
FCGS_API fcgs_status fcgs_morlet(double t, const fcgs_morlet_params* params, double* re,
                                 double* im);
/* Mother wavelet at support_len points on [-half_width, half_width]. Same
 * capacity/count protocol as fcgs_cgr_map. */
FCGS_API fcgs_status fcgs_morlet_tabulation(const fcgs_morlet_params* params, double* re,
                                           double* im, size_t capacity, size_t* count);
FCGS_API fcgs_status fcgs_scale_to_frequency(double scale, const fcgs_morlet_params* params,
                                             double* out);
FCGS_API fcgs_status fcgs_cwt(const fcgs_signal* sig, const fcgs_scale_grid* grid,
                              const fcgs_morlet_params* params, fcgs_cwt_method method,
                              unsigned threads, fcgs_scalogram** out);
FCGS_API size_t fcgs_scalogram_scale_count(const fcgs_scalogram* s);
FCGS_API size_t fcgs_scalogram_width(const fcgs_scalogram* s);
FCGS_API int64_t fcgs_scalogram_start(const fcgs_scalogram* s);
FCGS_API double fcgs_scalogram_scale(const fcgs_scalogram* s, size_t index);
FCGS_API double fcgs_scalogram_frequency(const fcgs_scalogram* s, size_t index);
/* Edge samples of row `index` inside the cone of influence. */
FCGS_API uint64_t fcgs_scalogram_cone(const fcgs_scalogram* s, size_t index);
FCGS_API const double* fcgs_scalogram_modulus_row(const fcgs_scalogram* s, size_t index);
FCGS_API fcgs_status fcgs_scalogram_coefficient(const fcgs_scalogram* s, size_t index,
                                                size_t position, double* re, double* im);
FCGS_API fcgs_status fcgs_scalogram_write_binary(const fcgs_scalogram* s, const char* path);
FCGS_API fcgs_status fcgs_scalogram_read_binary(const char* path, fcgs_scalogram** out);
FCGS_API fcgs_status fcgs_scalogram_write_csv(const fcgs_scalogram* s, const char* path);
FCGS_API void fcgs_scalogram_free(fcgs_scalogram* s);

/* ---- periodicity band scan ------------------------------------------- */

FCGS_API fcgs_status fcgs_band_energy(const fcgs_scalogram* s, double f_lo, double f_hi,
                                      fcgs_profile** out);
FCGS_API size_t fcgs_profile_length(const fcgs_profile* p);
FCGS_API const double* fcgs_profile_values(const fcgs_profile* p);
FCGS_API int64_t fcgs_profile_start(const fcgs_profile* p);
FCGS_API fcgs_status fcgs_profile_write_csv(const fcgs_profile* p, const char* path);
FCGS_API void fcgs_profile_free(fcgs_profile* p);

typedef struct fcgs_call_options {
  int auto_threshold; /* nonzero: two-class split; default 1 */
  double threshold;   /* used when auto_threshold == 0 */
  int64_t min_len;    /* bp; default 40 */
  int64_t smoothing;  /* bp moving-average width; default 25 */
} fcgs_call_options;

FCGS_API fcgs_call_options fcgs_call_options_default(void);
FCGS_API fcgs_status fcgs_call_regions(const fcgs_profile* p, const fcgs_call_options* opts,
                                       fcgs_regions** out);
FCGS_API size_t fcgs_regions_count(const fcgs_regions* r);
FCGS_API double fcgs_regions_threshold(const fcgs_regions* r);
FCGS_API fcgs_status fcgs_regions_get(const fcgs_regions* r, size_t index, int64_t* start,
                                      int64_t* end, double* mean_energy);
FCGS_API fcgs_status fcgs_regions_to_annotations(const fcgs_regions* r, const char* seq_id,
                                                 fcgs_label label, fcgs_annotations** out);
FCGS_API void fcgs_regions_free(fcgs_regions* r);

typedef struct fcgs_metrics {
  double precision;
  double recall;
  double f1;
  double mean_boundary_offset;
  int64_t true_positive_bp;
  int64_t called_bp;
  int64_t truth_bp;
  size_t matched_intervals;
  int precision_undefined;
  int offset_undefined;
} fcgs_metrics;

/* seq_id may be NULL when every entry carrying `label` is on one sequence. */
FCGS_API fcgs_status fcgs_evaluate(const fcgs_regions* r, const fcgs_annotations* truth,
                                   fcgs_label label, const char* seq_id, fcgs_metrics* out);
FCGS_API fcgs_status fcgs_metrics_write(const fcgs_metrics* m, const char* path);

/* ---- rendering ------------------------------------------------------- */

typedef enum fcgs_colormap { FCGS_COLORMAP_JET = 0, FCGS_COLORMAP_GRAY = 1 } fcgs_colormap;

typedef struct fcgs_render_spec {
  int64_t window_start; /* both 0: whole scalogram */
  int64_t window_end;
  fcgs_colormap colormap;
  size_t width;  /* plot area px, >= 16 */
  size_t height; /* plot area px, >= 16 */
  int axes;      /* nonzero: draw margins, ticks and labels */
} fcgs_render_spec;

FCGS_API fcgs_render_spec fcgs_render_spec_default(void);
/* overlay may be NULL. */
FCGS_API fcgs_status fcgs_render_png(const fcgs_scalogram* s, const fcgs_render_spec* spec,
                                     const fcgs_annotations* overlay, fcgs_buffer** out);

/* ---- synthetic genomes ----------------------------------------------- */

typedef struct fcgs_synth_spec {
  uint64_t seed;
  const char* layout; /* "bg,motif,bg,..." lengths in bp; NULL: built-in 20 kbp layout */
  double mutation_rate;
  const char* unit;   /* motif repeat unit; NULL: "GAATTC" */
  const char* seq_id; /* NULL: "synth" */
} fcgs_synth_spec;

FCGS_API fcgs_synth_spec fcgs_synth_spec_default(void);
FCGS_API fcgs_status fcgs_synth(const fcgs_synth_spec* spec, fcgs_sequence** seq,
                                fcgs_annotations** truth);

/* ---- misc ------------------------------------------------------------ */

/* out must hold 65 bytes (64 hex digits and NUL). */
FCGS_API fcgs_status fcgs_sha256_file(const char* path, char* out);

#ifdef __cplusplus
}
#endif

#endif /* FCGS_FCGS_H */
