#ifndef PRELORENTZ_H
#define PRELORENTZ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlStatus {
  PL_STATUS_OK = 0,
  PL_STATUS_NULL_POINTER = 1,
  PL_STATUS_INVALID_UTF8 = 2,
  PL_STATUS_PARSE = 3,
  PL_STATUS_INVALID_ARGUMENT = 4,
  PL_STATUS_GUARD_EXCEEDED = 5,
  PL_STATUS_PANIC = 6,
} PlStatus;

/*
 Coloured graph, optionally with a bound colour.
 */
typedef struct PlGraph PlGraph;

typedef struct PlPoly PlPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or NULL. The pointer is
 owned by the library and valid until the next failing call.
 */
const char *pl_last_error(void);

/*
 # Safety
 `s` must come from this library and not have been freed.
 */
void pl_string_free(char *s);

/*
 Parses graph JSON. Missing colours make every vertex its own colour.

 # Safety
 `json` must be a NUL-terminated string; `out` a writable pointer.
 */
enum PlStatus pl_graph_from_json(const char *json, struct PlGraph **out);

/*
 # Safety
 `g` must be a live handle; `out` a writable pointer. Free the result
 with [`pl_string_free`].
 */
enum PlStatus pl_graph_to_json(const struct PlGraph *g, char **out);

/*
 # Safety
 `g` must be NULL or a handle from this library not yet freed.
 */
void pl_graph_free(struct PlGraph *g);

/*
 Vertex count, 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t pl_graph_num_vertices(const struct PlGraph *g);

/*
 Edge count, 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t pl_graph_num_edges(const struct PlGraph *g);

/*
 # Safety
 `out` must be a writable pointer.
 */
enum PlStatus pl_leafy_star(size_t n, struct PlGraph **out);

/*
 Edge replacement; colours are dropped.

 # Safety
 `g` must be a live handle; `out` a writable pointer.
 */
enum PlStatus pl_replace_w4(const struct PlGraph *g, struct PlGraph **out);

/*
 Glues `g1` and `g2` along colour `c1` of `g1` and `c2` of `g2`. With
 `partitioned`, both must carry a bound colour and `c1`, `c2` must be free.

 # Safety
 Handles must be live, strings NUL-terminated, `out` writable.
 */
enum PlStatus pl_glue(const struct PlGraph *g1,
                      const struct PlGraph *g2,
                      const char *c1,
                      const char *c2,
                      bool partitioned,
                      struct PlGraph **out);

/*
 Independence sequence as a JSON array.

 # Safety
 `g` must be a live handle; `out` writable.
 */
enum PlStatus pl_indep_sequence_json(const struct PlGraph *g, char **out);

/*
 # Safety
 `g` must be a live handle; `out` writable.
 */
enum PlStatus pl_coloured_poly(const struct PlGraph *g, struct PlPoly **out);

/*
 # Safety
 `json` must be NUL-terminated; `out` writable.
 */
enum PlStatus pl_poly_from_json(const char *json, struct PlPoly **out);

/*
 # Safety
 `p` must be a live handle; `out` writable.
 */
enum PlStatus pl_poly_to_json(const struct PlPoly *p, char **out);

/*
 # Safety
 `p` must be NULL or a handle from this library not yet freed.
 */
void pl_poly_free(struct PlPoly *p);

/*
 Lorentzian certificate as JSON. `*certified` is set when the verdict is
 certified. `max_hessians` of 0 means the default cap.

 # Safety
 `p` must be a live handle; `out` and `certified` writable.
 */
enum PlStatus pl_certify_lorentzian(const struct PlPoly *p,
                                    uint64_t max_hessians,
                                    bool *certified,
                                    char **out);

/*
 Pre-Lorentzian search for `k = 0..=k_max`; the graph needs a bound colour.

 # Safety
 `g` must be a live handle; `out` and `certified` writable.
 */
enum PlStatus pl_certify_pre_lorentzian(const struct PlGraph *g,
                                        uint32_t k_max,
                                        uint64_t max_hessians,
                                        bool *certified,
                                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRELORENTZ_H */
