/* C interface to the partial-representation toolkit.  All functionality is
 * reachable through opaque handles and status codes; strings returned through
 * out-parameters are heap-allocated and must be released with
 * fr_string_free.  Status values double as the CLI exit-code contract. */

#ifndef FELLREP_H
#define FELLREP_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fr_status {
  FR_OK = 0,
  FR_FAIL = 1,           /* check failed, or the request itself was invalid  */
  FR_PARSE_ERROR = 2,    /* malformed JSON, word syntax, or schema violation */
  FR_RESOURCE_ERROR = 3, /* dimension cap or allocation failure              */
  FR_INVALID_ARGUMENT = 4, /* null pointer / out-of-contract C call          */
  FR_INTERNAL_ERROR = 5
} fr_status;

typedef struct fr_rep fr_rep;

const char* fr_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* fr_last_error(void);

void fr_string_free(char* s);

/* The dimension cap honored by loaders and fixture builders defaults to 4096
 * and can be overridden with the FELL_DIM_CAP environment variable. */

fr_status fr_rep_load_file(const char* path, fr_rep** out);
fr_status fr_rep_load_json(const char* json_text, fr_rep** out);
void fr_rep_free(fr_rep* rep);

int fr_rep_dim(const fr_rep* rep);
int fr_rep_generator_count(const fr_rep* rep);

/* Full verification suite.  JSON report through *out_json; *out_all_passed
 * is 1 when every check passed.  Pass atol/rtol < 0 to use the tolerance
 * stored in the representation file (or the library default). */
fr_status fr_verify_json(const fr_rep* rep, int depth, double atol, double rtol,
                         char** out_json, int* out_all_passed);

/* Averaging-scheme error table, CSV "n,error" for n = 1..nmax. */
fr_status fr_converge_csv(const fr_rep* rep, const char* word, int nmax,
                          char** out_csv);

/* Envelope JSON for a fixture.  kind: "tree", "ck", "parity", "delta",
 * "random".  admissible: row-major gens*gens 0/1 entries, ck only (NULL
 * otherwise).  dim is used by "random" only. */
fr_status fr_fixture_json(const char* kind, int gens, int depth,
                          const int* admissible, unsigned long long seed,
                          int dim, char** out_json);

/* Fiber report { word, rank, stabilized, residual_max }.  r_depth < 0 picks
 * the default 2*|word| + 2. */
fr_status fr_fiber_json(const fr_rep* rep, const char* word, int r_depth,
                        char** out_json);

/* Image of a word as a flat row-major array of re,im pairs; out_reim must
 * hold 2*dim*dim doubles. */
fr_status fr_evaluate(const fr_rep* rep, const char* word, double* out_reim);

#ifdef __cplusplus
}
#endif

#endif /* FELLREP_H */
