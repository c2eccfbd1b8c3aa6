/* primanal: block-cipher round-function group analysis.
 *
 * C interface to the analysis library. Handles are opaque; every function
 * returns a pa_status, writes results through out-parameters, and leaves a
 * message retrievable via pa_last_error() on failure. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with pa_string_free().
 */
#ifndef PRIMANAL_H
#define PRIMANAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
    PA_OK = 0,
    PA_ERR_USAGE = 1,        /* bad arguments / preconditions */
    PA_ERR_PARSE = 2,        /* malformed spec document or preset */
    PA_ERR_SINGULAR = 3,     /* mixing layer not invertible */
    PA_ERR_TOO_LARGE = 4,    /* enumeration budget exceeded */
    PA_ERR_INCONSISTENT = 5, /* oracle pairs admit no key */
    PA_ERR_INTERNAL = 6
} pa_status;

typedef enum pa_verdict {
    PA_CERTIFIED_PRIMITIVE = 0,
    PA_INCONCLUSIVE = 1
} pa_verdict;

typedef enum pa_format {
    PA_FORMAT_TEXT = 0,
    PA_FORMAT_JSON = 1
} pa_format;

typedef struct pa_cipher pa_cipher;

const char* pa_version(void);

/* Message for the most recent failure on this thread. */
const char* pa_last_error(void);

void pa_string_free(char* s);

/* Presets: "aes" or "toy:<n_t>x<m>:<sbox>:<lambda>" with sbox in
 * {inversion, random, identity} and lambda in {identity, rotate, random,
 * mix}. The seed feeds the random components. */
pa_status pa_cipher_from_preset(const char* preset, uint64_t seed, pa_cipher** out);

/* Parse a cipher-spec JSON document (see the README for the schema). */
pa_status pa_cipher_from_spec_json(const char* json_text, pa_cipher** out);

pa_status pa_cipher_to_spec_json(const pa_cipher* cipher, char** out_json);

void pa_cipher_free(pa_cipher* cipher);

int pa_cipher_block_bits(const pa_cipher* cipher);   /* n_b */
int pa_cipher_block_count(const pa_cipher* cipher);  /* n_t */

/* Primitivity certificate for the group generated by the round functions.
 * out_verdict receives a pa_verdict. */
pa_status pa_analyze(const pa_cipher* cipher, int s, uint64_t budget, pa_format format,
                     char** out_report, int* out_verdict);

/* Constructive block-system search (difference closures; additionally the
 * materialized group action when the state is at most 14 bits wide). Wide
 * states require sampled=1 and run heuristically. out_found is 1 iff a
 * nontrivial block system was found. */
pa_status pa_find_block_systems(const pa_cipher* cipher, uint64_t seed, int sampled,
                                pa_format format, char** out_report, int* out_found);

/* Build a cipher with a planted invariant subspace of dimension dim, run
 * the truncated-differential distinguisher against a control cipher, and
 * recover a withheld round key with at most 2^(n_bits-dim) + 2^dim trials.
 * out_spec_json (optional, may be NULL) receives the cipher-spec document
 * including the planted subspace. */
pa_status pa_trapdoor_demo(int n_bits, int dim, uint64_t seed, int pair_count, pa_format format,
                           char** out_report, char** out_spec_json);

/* Catalog the inversion-closed subspaces of GF(2^m) (all of which must be
 * subfields) and sweep the Hua identity. out_all_subfields is 1 iff every
 * inversion-closed subspace passed the subfield test. */
pa_status pa_field_appendix(int m, pa_format format, char** out_report, int* out_all_subfields);

/* Number of k-dimensional subspaces of an n-dimensional GF(2) space,
 * rendered in decimal (n <= 20). */
pa_status pa_count_subspaces(int n, int k, char** out_decimal);

#ifdef __cplusplus
}
#endif

#endif /* PRIMANAL_H */
