#ifndef GRASSCURV_H
#define GRASSCURV_H

/* C interface to the grasscurv library.
 *
 * Maps are opaque handles. Every call returns a gc_status; on failure the
 * message is available from gc_last_error() on the same thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with gc_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(GRASSCURV_BUILDING)
#define GC_API __attribute__((visibility("default")))
#else
#define GC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_INPUT = 1,       /* bad arguments or schema violation */
  GC_ERR_PARSE = 2,       /* malformed JSON */
  GC_ERR_NUMERIC = 3,     /* pole, zero polynomial, degree overflow */
  GC_ERR_DEGENERATE = 4,  /* frame or metric degenerates at a point */
  GC_ERR_UNSUPPORTED = 5, /* operation not available for this shape */
  GC_ERR_INTERNAL = 6
} gc_status;

typedef struct gc_map gc_map;

GC_API const char* gc_version(void);
/* Message of the last failed call on this thread; empty after success. */
GC_API const char* gc_last_error(void);
GC_API void gc_string_free(char* s);

GC_API gc_status gc_map_parse(const char* json, gc_map** out);
/* Veronese map into G(m,n); macfarlane != 0 selects the closed-form K. */
GC_API gc_status gc_map_veronese(int n, int m, int macfarlane, gc_map** out);
GC_API void gc_map_free(gc_map* map);

GC_API gc_status gc_map_shape(const gc_map* map, int* n, int* m);
GC_API gc_status gc_map_to_json(const gc_map* map, char** json);
GC_API gc_status gc_map_duality(const gc_map* map, gc_map** out);
GC_API gc_status gc_map_embed(const gc_map* map, gc_map** out);

/* Constant-curvature check. *is_constant receives 0 or 1; *report receives
 * the JSON report. */
GC_API gc_status gc_map_check(const gc_map* map, double tol, uint64_t seed, int* is_constant, char** report);
/* CSV x_re,x_im,L,K over the steps x steps grid on [a,b]^2. */
GC_API gc_status gc_map_curvature_csv(const gc_map* map, double a, double b, int steps, char** csv);
/* Euler-Lagrange residual at x = re + i im with stencil step h. */
GC_API gc_status gc_map_el_residual(const gc_map* map, double re, double im, double h, double* residual);

/* Ansatz search in G(2,n) for one r. *solved receives 0 or 1. */
GC_API gc_status gc_solve(int n, int r, uint64_t seed, int restarts, int* solved, char** report);
/* Classification table for r = 1..rmax in G(2,n). */
GC_API gc_status gc_classify(int n, int rmax, uint64_t seed, int restarts, char** report);

#ifdef __cplusplus
}
#endif

#endif
