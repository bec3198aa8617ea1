/* C interface to the discrete Morse toolkit.
 *
 * Complexes are opaque handles released with dmt_complex_free. Functions
 * return a dmt_status; on failure dmt_last_error() describes the problem for
 * the calling thread. Strings handed out through char** parameters are
 * allocated by the library and released with dmt_string_free. Vertex ids are
 * positive 64-bit integers. */
#ifndef DMT_H
#define DMT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DMT_API __declspec(dllexport)
#else
#define DMT_API __attribute__((visibility("default")))
#endif

typedef struct dmt_complex dmt_complex;

typedef enum dmt_status {
  DMT_OK = 0,
  DMT_ERR_INVALID_ARGUMENT = 1,
  DMT_ERR_PARSE = 2,
  DMT_ERR_MALFORMED_FACE = 3,
  DMT_ERR_FACE_NOT_FOUND = 4,
  DMT_ERR_QUOTIENT_UNSAFE = 5,
  DMT_ERR_LINK_CONDITION = 6,
  DMT_ERR_SIZE_LIMIT = 7,
  DMT_ERR_CONSISTENCY = 8,
  DMT_ERR_IO = 9,
  DMT_ERR_INTERNAL = 10
} dmt_status;

DMT_API const char* dmt_version(void);
DMT_API const char* dmt_last_error(void);
DMT_API const char* dmt_status_name(dmt_status status);
DMT_API void dmt_string_free(char* s);
DMT_API void dmt_complex_free(dmt_complex* k);

/* Input and output in the facet file format. */
DMT_API dmt_status dmt_complex_from_text(const char* facet_text, dmt_complex** out);
DMT_API dmt_status dmt_complex_read(const char* path, dmt_complex** out);
DMT_API dmt_status dmt_complex_write(const dmt_complex* k, const char* path);
DMT_API dmt_status dmt_complex_to_text(const dmt_complex* k, char** out);

/* Basic queries. `counts` receives f_0..f_d when capacity allows; `length`
 * always receives d+1. */
DMT_API int dmt_complex_dimension(const dmt_complex* k);
DMT_API dmt_status dmt_complex_f_vector(const dmt_complex* k, uint64_t* counts, size_t capacity,
                                        size_t* length);
DMT_API dmt_status dmt_complex_equal(const dmt_complex* a, const dmt_complex* b, int* equal);

/* Named constructions: simplex, simplex_boundary, cross_polytope, sigma, E,
 * two_optima, sigma2_sigma3prime, dunce_hat, poincare. `dim` is ignored by
 * the fixed complexes. */
DMT_API dmt_status dmt_build(const char* name, int dim, dmt_complex** out);

/* Five-manifold pipeline from a homology sphere (NULL: the built-in one).
 * Produces a JSON stage report, the final collar and its boundary; any of
 * the outputs may be NULL. */
DMT_API dmt_status dmt_pipeline_5manifold(const dmt_complex* sphere, char** report_json,
                                          dmt_complex** collar, dmt_complex** boundary);

/* Transformations. A vertex or apex argument of 0 selects max vertex + 1. */
DMT_API dmt_status dmt_barycentric_subdivision(const dmt_complex* k, int iterations,
                                               dmt_complex** out);
DMT_API dmt_status dmt_cone(const dmt_complex* k, int64_t apex, dmt_complex** out);
DMT_API dmt_status dmt_suspension(const dmt_complex* k, dmt_complex** out);
DMT_API dmt_status dmt_one_point_suspension(const dmt_complex* k, int64_t v, dmt_complex** out);
DMT_API dmt_status dmt_product_with_interval(const dmt_complex* k, dmt_complex** out);
DMT_API dmt_status dmt_stellar_subdivision(const dmt_complex* k, const int64_t* face, size_t n,
                                           int64_t fresh, dmt_complex** out);
DMT_API dmt_status dmt_stack_facet(const dmt_complex* k, const int64_t* facet, size_t n,
                                   int64_t fresh, dmt_complex** out);
DMT_API dmt_status dmt_link(const dmt_complex* k, const int64_t* face, size_t n,
                            dmt_complex** out);
DMT_API dmt_status dmt_closed_star(const dmt_complex* k, const int64_t* face, size_t n,
                                   dmt_complex** out);
DMT_API dmt_status dmt_delete_vertex(const dmt_complex* k, int64_t v, dmt_complex** out);
DMT_API dmt_status dmt_boundary(const dmt_complex* k, dmt_complex** out);
DMT_API dmt_status dmt_apply_map(const dmt_complex* k, const int64_t* from, const int64_t* to,
                                 size_t n, dmt_complex** out);
DMT_API dmt_status dmt_contract_edge(const dmt_complex* k, int64_t keep, int64_t remove,
                                     dmt_complex** out);
DMT_API dmt_status dmt_simplicial_neighborhood(const dmt_complex* k, const dmt_complex* sub,
                                               dmt_complex** out);

/* Morse engine. Strategies: "random", "random-lex-first", "random-lex-last".
 * Formats: "json", "csv", "text". workers = 0 uses all hardware threads. */
DMT_API dmt_status dmt_run_strategy(const dmt_complex* k, const char* strategy, uint64_t seed,
                                    uint64_t* vector, size_t capacity, size_t* length,
                                    int* trace_ok);
DMT_API dmt_status dmt_spectrum(const dmt_complex* k, const char* strategy, uint64_t runs,
                                uint64_t master_seed, unsigned workers, int check_traces,
                                const char* format, char** report);
DMT_API dmt_status dmt_sd_growth(const dmt_complex* k, int max_level, const char* strategy,
                                 uint64_t runs, uint64_t master_seed, uint64_t size_limit,
                                 unsigned workers, char** report_json);

/* Verification. Homology with prime = 0 works over the integers and is
 * subject to size_limit (0: default); otherwise ranks over GF(prime). */
DMT_API dmt_status dmt_free_faces(const dmt_complex* k, size_t* count, char** pairs_text);
DMT_API dmt_status dmt_homology(const dmt_complex* k, uint64_t prime, uint64_t size_limit,
                                int reduce, char** json);
DMT_API dmt_status dmt_morse_check(const dmt_complex* k, const uint64_t* vector, size_t n,
                                   int* ok, char** json);
/* kind: "collapsible" or "nonevasive"; result receives "yes", "no" or "unknown". */
DMT_API dmt_status dmt_oracle(const dmt_complex* k, const char* kind, uint64_t node_budget,
                              char** result);

#ifdef __cplusplus
}
#endif

#endif /* DMT_H */
