/*
 * C interface to the sosq library: construction and verification of
 * sum-of-squares composition formulas [r, s, n].
 *
 * Systems are opaque handles owned by the caller and released with
 * sosq_system_free. Strings returned through char** out-parameters are
 * heap-allocated and released with sosq_string_free. Every function returns
 * a status code; on any status other than SOSQ_OK and SOSQ_VERIFY_FAILED a
 * message is available from sosq_last_error() on the calling thread.
 *
 * Matrix indices at this boundary are zero-based.
 */
#ifndef SOSQ_SOSQ_H
#define SOSQ_SOSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOSQ_BUILDING_LIBRARY)
#    define SOSQ_API __declspec(dllexport)
#  else
#    define SOSQ_API __declspec(dllimport)
#  endif
#else
#  define SOSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sosq_status {
  SOSQ_OK = 0,
  SOSQ_VERIFY_FAILED = 1,      /* well-formed input, equations do not hold */
  SOSQ_ERR_INVALID_ARGUMENT = 2, /* null handle or out-pointer */
  SOSQ_ERR_DOMAIN = 3,
  SOSQ_ERR_DIMENSION = 4,
  SOSQ_ERR_ARITHMETIC = 5,     /* checked integer overflow */
  SOSQ_ERR_STRUCTURAL = 6,
  SOSQ_ERR_RESOURCE = 7,       /* size cap, pool cap or search budget */
  SOSQ_ERR_SCHEMA = 8,         /* malformed document */
  SOSQ_ERR_INTERNAL = 9
} sosq_status;

typedef enum sosq_format {
  SOSQ_FORMAT_TEXT = 0,
  SOSQ_FORMAT_LATEX = 1
} sosq_format;

/* A Hurwitz system together with its construction trace. */
typedef struct sosq_system_s *sosq_system;

typedef struct sosq_search_result {
  size_t r_max;      /* best r found; exact when exhaustive != 0 */
  int exhaustive;    /* 0 when the node budget ran out */
  uint64_t nodes;    /* branch-and-bound nodes visited */
  size_t graph_vertices;
} sosq_search_result;

SOSQ_API const char *sosq_status_name(sosq_status status);
SOSQ_API const char *sosq_last_error(void);
SOSQ_API const char *sosq_schema_version(void);
SOSQ_API size_t sosq_default_max_rows(void);

SOSQ_API void sosq_string_free(char *str);
SOSQ_API void sosq_system_free(sosq_system sys);

SOSQ_API sosq_status sosq_rho(uint64_t n, uint64_t *out);

/* entries: r matrices of n x s, each row-major, concatenated. */
SOSQ_API sosq_status sosq_system_create(size_t r, size_t s, size_t n,
                                        const int64_t *entries,
                                        sosq_system *out);
SOSQ_API sosq_status sosq_system_size(sosq_system sys, size_t *r, size_t *s,
                                      size_t *n);
/* Copies all r*n*s entries in the layout of sosq_system_create. */
SOSQ_API sosq_status sosq_system_entries(sosq_system sys, int64_t *buffer,
                                         size_t length);

/* max_rows = 0 selects sosq_default_max_rows(). */
SOSQ_API sosq_status sosq_gen_classical(unsigned dim, sosq_system *out);
SOSQ_API sosq_status sosq_gen_hr_family(unsigned m, size_t max_rows,
                                        sosq_system *out);
SOSQ_API sosq_status sosq_double(sosq_system sys, size_t special,
                                 size_t max_rows, sosq_system *out);
SOSQ_API sosq_status sosq_combine(sosq_system a, sosq_system b,
                                  size_t max_rows, sosq_system *out);
SOSQ_API sosq_status sosq_extend(sosq_system sys, unsigned k, size_t max_rows,
                                 sosq_system *out);

/* Returns SOSQ_OK or SOSQ_VERIFY_FAILED; report (may be NULL) receives a
 * one-line summary per check run. with_oracle also expands the polynomial
 * identity. */
SOSQ_API sosq_status sosq_verify(sosq_system sys, int with_oracle,
                                 char **report);
/* second may be NULL for an empty second system. */
SOSQ_API sosq_status sosq_verify_amicable(sosq_system first,
                                          sosq_system second, char **report);

SOSQ_API sosq_status sosq_render(sosq_system sys, sosq_format format,
                                 char **out);

SOSQ_API sosq_status sosq_document_write(sosq_system sys, char **out);
SOSQ_API sosq_status sosq_document_read(const char *text, size_t length,
                                        sosq_system *out);

/* On SOSQ_ERR_RESOURCE from an exhausted budget, result and witness still
 * hold the best clique found with exhaustive = 0. witness is set to NULL
 * when no system exists (s > n). node_budget = 0 selects the default. */
SOSQ_API sosq_status sosq_search(size_t s, size_t n, uint64_t node_budget,
                                 sosq_search_result *result,
                                 sosq_system *witness);

#ifdef __cplusplus
}
#endif

#endif /* SOSQ_SOSQ_H */
