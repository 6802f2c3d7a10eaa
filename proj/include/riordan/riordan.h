/* riordan: exact enumeration and bijections for Riordan paths, short bushes
 * and (321, 3bar142)-avoiding permutations.
 *
 * C interface of the shared library. All functions return rp_status; outputs
 * are heap strings released with rp_string_free, or opaque handles with their
 * own destructors. On failure rp_last_error() carries a detail message for
 * the calling thread.
 *
 * Canonical text forms used across this interface:
 *   lattice path     string over U, D, H, W            e.g. "UHHD"
 *   plane tree       preorder parentheses              e.g. "(()())"
 *   permutation      space-separated one-line values   e.g. "3 1 5 2 6 4"
 *   starred path     '*' after the starred step        e.g. "U*UDD"
 *   labelled path    label letter after the step       e.g. "UH1D", "UaD"
 *   unlabelled copy  "copy<1-3>:<path>"                e.g. "copy2:UD"
 */

#ifndef RIORDAN_RIORDAN_H
#define RIORDAN_RIORDAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status {
    RP_OK = 0,
    RP_ERROR_INVALID_ARGUMENT = 1, /* unknown name or malformed request */
    RP_ERROR_PARSE = 2,            /* input text could not be parsed */
    RP_ERROR_PRECONDITION = 3,     /* input violates an operation precondition */
    RP_ERROR_RANGE = 4,            /* numeric parameter out of range */
    RP_ERROR_INTERNAL = 5,         /* internal consistency check failed */
    RP_ERROR_END = 6               /* enumerator exhausted */
} rp_status;

const char* rp_status_name(rp_status status);

/* Detail message for the last failing call on this thread; never NULL. */
const char* rp_last_error(void);

void rp_string_free(char* s);

const char* rp_version(void);

/* ------------------------------------------------------------------ counts
 *
 * sequence: "riordan" | "catalan" | "motzkin"
 * method:   "closed" | "recurrence" | "from-catalan" | "from-riordan" |
 *           "enumerate" | NULL for the sequence's default route
 * The value is written as a decimal string (counts are arbitrary precision).
 */
rp_status rp_count(const char* sequence, int n, const char* method, char** out_decimal);

/* Auxiliary counting formulas. */
rp_status rp_labelled_forest_count(int n, int k, char** out_decimal);
rp_status rp_bush_count_by_internal(int n, int k, char** out_decimal);

/* ------------------------------------------------------------- enumeration
 *
 * family: "dyck" | "motzkin" | "2motzkin" | "2motzkin-nostraight" |
 *         "riordan" | "bush" | "avoider" | "avoiding-derangement"
 * Items come out in the family's canonical deterministic order, one per call,
 * as canonical text forms. rp_enumerator_next returns RP_ERROR_END when done.
 */
typedef struct rp_enumerator rp_enumerator;

rp_status rp_enumerator_new(const char* family, int n, rp_enumerator** out);
rp_status rp_enumerator_next(rp_enumerator* e, char** out_item);
uint64_t rp_enumerator_yielded(const rp_enumerator* e);
void rp_enumerator_free(rp_enumerator* e);

/* ----------------------------------------------------------- lattice paths */
typedef struct rp_path rp_path;

rp_status rp_path_parse(const char* text, rp_path** out);
rp_status rp_path_format(const rp_path* p, char** out_text);
/* 1 if the path belongs to the class, 0 if not, -1 on unknown class name.
 * path_class: "dyck" | "motzkin" | "2motzkin" | "2motzkin-nostraight" | "riordan" */
int rp_path_is_valid(const rp_path* p, const char* path_class);
/* Statistics record (length, area, up-step height sum, axis level labels,
 * strip parameters, phi image, fixed points, inversions, identity check) as
 * a JSON object. Requires a Motzkin path. */
rp_status rp_path_stats_json(const rp_path* p, char** out_json);
void rp_path_free(rp_path* p);

/* -------------------------------------------------------------- bijections
 *
 * bijection: "phi" | "phi-inv" | "psi" | "psi-inv" | "bush2path" |
 *            "path2bush" | "dyck-encode" | "dyck-decode"
 * Input is the canonical text form or the JSON form of the argument object;
 * JSON is detected by a leading '{' or '['. For "psi"/"psi-inv", n is the
 * recurrence parameter and may be -1 to infer it from the input. Other
 * bijections ignore n.
 */
rp_status rp_map(const char* bijection, const char* input, int n, char** out_text);
rp_status rp_map_json(const char* bijection, const char* input, int n, char** out_json);
/* Applies the bijection, then its inverse, and checks the round trip. */
rp_status rp_map_check(const char* bijection, const char* input, int n);

/* ------------------------------------------------------------ verification
 *
 * suite: "counts" | "trees" | "dyck" | "patterns" | "phi" | "psi" | "all"
 * The report JSON is deterministic (no timing); the wall-clock duration is
 * available separately.
 */
typedef struct rp_report rp_report;

rp_status rp_verify(const char* suite, int max_n, rp_report** out);
int rp_report_passed(const rp_report* r);
rp_status rp_report_json(const rp_report* r, char** out_json);
double rp_report_duration_ms(const rp_report* r);
size_t rp_report_property_count(const rp_report* r);
/* One human-readable line per property: "PASS <name> [<range>]". */
rp_status rp_report_property_line(const rp_report* r, size_t index, char** out_line);
void rp_report_free(rp_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIORDAN_RIORDAN_H */
