/* arrowsmith -- exact Smith-ideal calculus over Q and F_p.
 *
 * C interface to the arrowsmith shared library.  Objects are opaque
 * handles; every function that can fail returns a status code and leaves
 * a human-readable message in arrowsmith_last_error() (thread-local).
 * Handles are created by the library and must be released with the
 * matching *_free function.  NULL document/report arguments are invalid
 * unless stated otherwise.
 *
 * String lifetimes: pointers returned by arrowsmith_report_* stay valid
 * until the report is freed; arrowsmith_doc_kind and
 * arrowsmith_last_error return thread-local storage overwritten by the
 * next call on the same thread.
 */
#ifndef ARROWSMITH_H
#define ARROWSMITH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrowsmith_status {
    ARROWSMITH_OK = 0,
    ARROWSMITH_ERROR_PARSE = 1,    /* malformed input text or file */
    ARROWSMITH_ERROR_USAGE = 2,    /* wrong document kind / bad arguments */
    ARROWSMITH_ERROR_IO = 3,       /* filesystem failure */
    ARROWSMITH_ERROR_INTERNAL = 4  /* invariant violation inside the library */
} arrowsmith_status;

typedef struct arrowsmith_doc arrowsmith_doc;
typedef struct arrowsmith_report arrowsmith_report;

const char* arrowsmith_version(void);

/* Message describing the most recent failure on this thread. */
const char* arrowsmith_last_error(void);

/* ---- documents (algebra / arrow / complex / chain-map / dg files) ---- */

arrowsmith_status arrowsmith_doc_read(const char* path, arrowsmith_doc** out);
arrowsmith_status arrowsmith_doc_parse(const char* text, arrowsmith_doc** out);
arrowsmith_status arrowsmith_doc_write(const arrowsmith_doc* doc, const char* path);

/* Serialized canonical form; release with arrowsmith_free_text. */
arrowsmith_status arrowsmith_doc_emit(const arrowsmith_doc* doc, char** out_text);

/* One of: "nonunital-algebra", "unital-algebra", "augmented-algebra",
 * "arrow", "chain-complex", "chain-map", "dg-algebra". */
const char* arrowsmith_doc_kind(const arrowsmith_doc* doc);

void arrowsmith_doc_free(arrowsmith_doc* doc);
void arrowsmith_free_text(char* text);

/* ---- transforms ---- */

arrowsmith_status arrowsmith_unitalize(const arrowsmith_doc* doc, arrowsmith_doc** out);
arrowsmith_status arrowsmith_augmentation_kernel(const arrowsmith_doc* doc,
                                                 arrowsmith_doc** out);

/* Families: truncated_polynomial, upper_triangular, cyclic_group_algebra,
 * square_zero (parameter n); random_arrow (seed, max_dim); random_complex
 * (seed, lo, hi, max_dim).  field is "Q" or "FP:<p>". */
arrowsmith_status arrowsmith_corpus_dump(const char* family, const char* field, long n,
                                         uint64_t seed, long lo, long hi, long max_dim,
                                         arrowsmith_doc** out);

/* ---- checks; each produces a report ---- */

arrowsmith_status arrowsmith_check_validate(const arrowsmith_doc* doc, arrowsmith_report** out);

/* Both unitalization/kernel roundtrip isomorphism suites. */
arrowsmith_status arrowsmith_check_roundtrip(const arrowsmith_doc* doc, arrowsmith_report** out);

/* Smith ideal built from an augmented algebra: monoid axioms, unit
 * cokernel, and agreement of the two non-unital descriptions. */
arrowsmith_status arrowsmith_check_smith(const arrowsmith_doc* doc, arrowsmith_report** out);

/* Randomized arrow-category suite: strong/lax comparisons, adjunction
 * triangle identities, unit/symmetry of the pushout product, image
 * localization.  Instance i uses seed + i. */
arrowsmith_status arrowsmith_check_monoidal(const char* field, uint64_t seed, long count,
                                            arrowsmith_report** out);

/* Randomized stability suite over bounded complexes. */
arrowsmith_status arrowsmith_check_stable(const char* field, uint64_t seed, long count,
                                          arrowsmith_report** out);

arrowsmith_status arrowsmith_check_dg_roundtrip(const arrowsmith_doc* doc,
                                                arrowsmith_report** out);
arrowsmith_status arrowsmith_check_main_theorem(const arrowsmith_doc* doc,
                                                arrowsmith_report** out);

/* Verify the monoidal-comparison suite on one explicit pair of arrows. */
arrowsmith_status arrowsmith_check_monoidal_pair(const arrowsmith_doc* f,
                                                 const arrowsmith_doc* g,
                                                 arrowsmith_report** out);

/* ---- homology ---- */

/* Fills parallel arrays (degree, dimension); release both with
 * arrowsmith_free_longs.  Works on chain-complex, chain-map and
 * dg-algebra documents (using the underlying complex). */
arrowsmith_status arrowsmith_homology(const arrowsmith_doc* doc, long** degrees, long** dims,
                                      long* count);
void arrowsmith_free_longs(long* data);

/* ---- reports ---- */

long arrowsmith_report_size(const arrowsmith_report* report);
int arrowsmith_report_ok(const arrowsmith_report* report);
const char* arrowsmith_report_subject(const arrowsmith_report* report);
const char* arrowsmith_report_name(const arrowsmith_report* report, long i);
int arrowsmith_report_pass(const arrowsmith_report* report, long i);
/* Empty string when the check passed. */
const char* arrowsmith_report_witness(const arrowsmith_report* report, long i);
void arrowsmith_report_free(arrowsmith_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ARROWSMITH_H */
