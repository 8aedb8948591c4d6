#ifndef GSPLINE_H
#define GSPLINE_H

/* C interface to the gspline library. Every function returns a gs_status;
 * on failure gs_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with gs_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GS_API __declspec(dllexport)
#else
#define GS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gs_instance gs_instance;

typedef enum gs_status {
  GS_OK = 0,
  GS_CHECK_FAILED = 1,      /* a report was produced and a check failed */
  GS_ERR_PARSE = 2,         /* malformed instance or polynomial */
  GS_ERR_UNSUPPORTED = 3,   /* graded analysis requested on inhomogeneous data */
  GS_ERR_INVALID = 4,       /* bad argument or invalid graph */
  GS_ERR_INTERNAL = 5
} gs_status;

enum {
  GS_REPORT_NO_COSPLINES = 1u << 0,
  GS_REPORT_TIMING = 1u << 1
};

typedef struct gs_random_params {
  size_t vertices;         /* 1..8 */
  double edge_probability; /* [0, 1] */
  unsigned max_degree;     /* 1..3 */
  int principal;
  uint64_t seed;
} gs_random_params;

typedef struct gs_batch_params {
  size_t count;
  size_t max_vertices; /* 2..8 */
  double edge_probability;
  unsigned max_degree;
  int principal;
  uint64_t seed;
} gs_batch_params;

typedef struct gs_freeness {
  int supported; /* 0 for inhomogeneous labels */
  int free;
  int pd;
  int rank;
} gs_freeness;

GS_API const char *gs_version(void);
GS_API const char *gs_last_error(void);
GS_API const char *gs_status_name(gs_status status);
GS_API void gs_string_free(char *s);

GS_API gs_status gs_instance_load(const char *path, gs_instance **out);
GS_API gs_status gs_instance_parse(const char *json_text, gs_instance **out);
GS_API void gs_instance_free(gs_instance *inst);
GS_API int gs_instance_is_integer(const gs_instance *inst);
GS_API size_t gs_instance_vertex_count(const gs_instance *inst);
GS_API size_t gs_instance_edge_count(const gs_instance *inst);
GS_API gs_status gs_instance_flip_edge(gs_instance *inst, size_t edge);
GS_API gs_status gs_instance_to_json(const gs_instance *inst, char **json);

/* Reports. json and text may be NULL when not wanted. */
GS_API gs_status gs_compute(const gs_instance *inst, uint64_t seed,
                            unsigned flags, char **json, char **text);
GS_API gs_status gs_verify(const gs_instance *inst, uint64_t seed,
                           unsigned flags, char **json, char **text);
GS_API gs_status gs_zsplines(const gs_instance *inst, unsigned flags,
                             char **json, char **text);
GS_API gs_status gs_batch(const gs_batch_params *params, unsigned flags,
                          char **json, char **text);

GS_API gs_status gs_random_instance(const gs_random_params *params,
                                    gs_instance **out);
GS_API gs_status gs_freeness_verdict(const gs_instance *inst,
                                     gs_freeness *out);

#ifdef __cplusplus
}
#endif

#endif
