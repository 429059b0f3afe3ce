/* C API for the q-series identity verification engine.
 *
 * All functions return qrr_status; QRR_OK means success.  On failure,
 * qrr_last_error() returns a message describing the problem (the string
 * is owned by the library and valid until the next failing call on the
 * same thread).  Objects returned through out-parameters are owned by
 * the caller and released with the matching _free function. */

#ifndef QRR_H
#define QRR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QRR_OK = 0,
  QRR_ERR_USAGE = 1,     /* bad arguments, unknown names, malformed files */
  QRR_ERR_INTERNAL = 2,  /* unexpected failure */
} qrr_status;

typedef enum {
  QRR_CLAIM_THEOREM = 0,
  QRR_CLAIM_CONJECTURE = 1,
} qrr_claim;

/* Opaque verification report (one catalog entry or one structured check). */
typedef struct qrr_report qrr_report;

const char* qrr_last_error(void);

/* ---- catalog ---- */

/* Newline-separated list of catalog entry names, in report order. */
qrr_status qrr_catalog_names(char** out);

qrr_status qrr_entry_claim(const char* name, qrr_claim* out);

/* Reference string ("Eq. (1.1), first identity", ...). */
qrr_status qrr_entry_reference(const char* name, char** out);

/* ---- verification ---- */

qrr_status qrr_verify(const char* name, int order, qrr_report** out);

/* Runs the catalog under a filter ("all", "theorems", "conjectures", a
 * glob, or a comma-separated list of globs) on `parallelism` workers.
 * Any of text_out / json_out / the counters may be NULL; text_out gets
 * one line per entry, json_out the JSON report document, the counters
 * the mismatch totals needed for exit-code decisions. */
qrr_status qrr_verify_all(int order, const char* filter, int parallelism,
                          char** text_out, char** json_out,
                          int* theorem_mismatches, int* conjecture_mismatches);

/* Finite summation lemmas (parts 1..3). */
qrr_status qrr_check_lemma(int part, int m_max, int order, qrr_report** out);

/* Telescoping certificate check. */
qrr_status qrr_check_wz(int m_max, int order, qrr_report** out);

/* Constrained-partition generating function: three constructions plus
 * the q-difference equation, a in {1,2}. */
qrr_status qrr_check_qdiff(int a, int x_degree, int order, qrr_report** out);

/* User spec file (JSON sum/single + product documents). */
qrr_status qrr_check_spec_file(const char* path, int order, qrr_report** out);

/* ---- report accessors ---- */

int qrr_report_verified(const qrr_report* r);          /* 1 or 0 */
qrr_claim qrr_report_claim(const qrr_report* r);
long qrr_report_elapsed_ms(const qrr_report* r);
long qrr_report_term_count(const qrr_report* r);
/* -1 when verified. */
int qrr_report_mismatch_exponent(const qrr_report* r);
/* Human-readable one-line summary. */
qrr_status qrr_report_text(const qrr_report* r, char** out);
void qrr_report_free(qrr_report* r);

/* ---- series and partitions ---- */

/* Space-separated decimal coefficients of a catalog entry's sum side. */
qrr_status qrr_series(const char* name, int order, char** out);

/* Partition count under a predicate in the CLI syntax
 * ("ag-c 2 2", "cap-c 1", "residues 2 1 --distinct"). */
qrr_status qrr_partition_count(const char* predicate, int n, long long* out);

void qrr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QRR_H */
