#ifndef GF4RELAX_H
#define GF4RELAX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GF4R_API __declspec(dllexport)
#else
#define GF4R_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf4r_status {
  GF4R_OK = 0,
  GF4R_NOT_REPRESENTABLE = 1,
  GF4R_DOMAIN_ERROR = 2,
  GF4R_PARSE_ERROR = 3,
  GF4R_SCALE_ERROR = 4,
  GF4R_INVALID_ARGUMENT = 5,
  GF4R_INTERNAL_ERROR = 6
} gf4r_status;

typedef struct gf4r_matrix gf4r_matrix;
typedef struct gf4r_matroid gf4r_matroid;
typedef struct gf4r_catalog gf4r_catalog;

GF4R_API const char* gf4r_version(void);
GF4R_API const char* gf4r_status_name(gf4r_status s);
/* Message of the last failed call on this thread; empty if none. */
GF4R_API const char* gf4r_last_error(void);
/* Frees any string returned through a char** out parameter. */
GF4R_API void gf4r_string_free(char* s);

/* Matrices over GF(4), tokens 0 1 w v, one row per line. */
GF4R_API gf4r_status gf4r_matrix_parse(const char* text, gf4r_matrix** out);
GF4R_API gf4r_status gf4r_matrix_format(const gf4r_matrix* m, char** out);
GF4R_API size_t gf4r_matrix_rows(const gf4r_matrix* m);
GF4R_API size_t gf4r_matrix_cols(const gf4r_matrix* m);
GF4R_API void gf4r_matrix_free(gf4r_matrix* m);

/* Matroid text: "n r", then one basis per line as 0-based indices. */
GF4R_API gf4r_status gf4r_matroid_parse(const char* text, gf4r_matroid** out);
GF4R_API gf4r_status gf4r_matroid_named(const char* name, gf4r_matroid** out);
GF4R_API gf4r_status gf4r_matroid_from_path_sequence(const char* text, gf4r_matroid** out);
/* Matroid of the bordered matrix with interior a; elements x1..xp, e, f, y1..yq. */
GF4R_API gf4r_status gf4r_matroid_from_interior(const gf4r_matrix* a, gf4r_matroid** out);
GF4R_API gf4r_status gf4r_matroid_dual(const gf4r_matroid* m, gf4r_matroid** out);
GF4R_API gf4r_status gf4r_matroid_format(const gf4r_matroid* m, char** out);
/* Labels separated by single spaces. */
GF4R_API gf4r_status gf4r_matroid_labels(const gf4r_matroid* m, char** out);
GF4R_API int gf4r_matroid_size(const gf4r_matroid* m);
GF4R_API int gf4r_matroid_rank(const gf4r_matroid* m);
GF4R_API gf4r_status gf4r_matroid_isomorphic(const gf4r_matroid* a, const gf4r_matroid* b, int* out);
GF4R_API void gf4r_matroid_free(gf4r_matroid* m);
GF4R_API const char* gf4r_named_list(void);

/* Forbidden-submatrix scan of a and its transpose. *found is 1 on a match
   and *match (may be NULL) receives "P04 A rows=.. cols=.. x=.. ..". */
GF4R_API gf4r_status gf4r_scan(const gf4r_matrix* a, int* found, char** match);

typedef struct gf4r_relax_result {
  int scan_representable;
  int omega_representable;
  int generic_representable;
  int m_connected;
  int relaxed_3_connected;
} gf4r_relax_result;

/* Builds M from the interior, relaxes its circuit-hyperplane X and decides
   representability three ways. *report (may be NULL) gets a text summary. */
GF4R_API gf4r_status gf4r_relax(const gf4r_matrix* a, gf4r_relax_result* out, char** report);

/* GF(4) representation [I | D] as "rows: .." / "cols: .." plus D, or
   GF4R_NOT_REPRESENTABLE. */
GF4R_API gf4r_status gf4r_represent(const gf4r_matroid* m, char** out);

/* targets: "u24" or "u25,u35". *table lists each element as deletable (d),
   contractible (c), both or neither. */
GF4R_API gf4r_status gf4r_fragility(const gf4r_matroid* m, const char* targets, int* has_minor, int* fragile,
                                    char** table);

GF4R_API gf4r_status gf4r_catalog_generate(int max_elements, gf4r_catalog** out);
GF4R_API size_t gf4r_catalog_size(const gf4r_catalog* c);
GF4R_API gf4r_status gf4r_catalog_format(const gf4r_catalog* c, char** out);
/* Entry i as a matroid. */
GF4R_API gf4r_status gf4r_catalog_entry(const gf4r_catalog* c, size_t i, gf4r_matroid** out);
/* One line per entry of the given size: id and splitter verdicts for the
   whole class and for the members without an {X8, Y8, Y8*}-minor. */
GF4R_API gf4r_status gf4r_catalog_splitters(const gf4r_catalog* c, int size, char** out);
GF4R_API void gf4r_catalog_free(gf4r_catalog* c);

typedef struct gf4r_sweep_options {
  int rows;
  int cols;
  uint64_t sample; /* 0: every interior */
  uint64_t seed;
  int structure_max; /* 0: skip the structure matcher */
} gf4r_sweep_options;

typedef struct gf4r_sweep_summary {
  uint64_t total, agree;
  uint64_t scan_ok_oracles_no, scan_no_oracles_ok, omega_generic_differ;
  uint64_t pw3_checked, pw3_fail;
  uint64_t pairs, fragile_fail, basis_fail;
  uint64_t nonbinary_checked, nonbinary_fail;
  uint64_t structure_checked, unmatched;
  uint64_t outcome_first[6];
  uint64_t classes;
} gf4r_sweep_summary;

/* Receives each record line, whether its verdicts agree and the structure
   outcome letters (empty when not checked or unmatched). */
typedef void (*gf4r_record_fn)(const char* line, int agree, const char* outcome, void* user);

GF4R_API gf4r_status gf4r_sweep(const gf4r_sweep_options* opts, gf4r_record_fn on_record, void* user,
                                gf4r_sweep_summary* out);

#ifdef __cplusplus
}
#endif

#endif
