/*
 * samuel: exact computation of asymptotic Samuel orders, finite-transversal
 * frames and Samuel slopes of presented local rings.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this header; every function reports a samuel_status.
 * Unless stated otherwise, *out parameters are set on success and left
 * untouched on failure. Strings returned as const char* are owned by the
 * handle they come from; strings returned as char* must be released with
 * samuel_string_free().
 */
#ifndef SAMUEL_H
#define SAMUEL_H

#include <stddef.h>

#if defined(_WIN32)
#define SAMUEL_API __declspec(dllexport)
#else
#define SAMUEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum samuel_status {
  SAMUEL_OK = 0,
  SAMUEL_ERR_PARSE = 1,
  SAMUEL_ERR_BAD_ARGUMENT = 2,
  SAMUEL_ERR_NOT_ON_VARIETY = 3,
  SAMUEL_ERR_NOT_SQUAREFREE = 4,
  SAMUEL_ERR_SEARCH_EXHAUSTED = 5,
  SAMUEL_ERR_NOT_TRANSVERSAL = 6,
  SAMUEL_ERR_CAP_EXCEEDED = 7,
  SAMUEL_ERR_UNSUPPORTED = 8,
  SAMUEL_ERR_CORPUS_MISMATCH = 9,
  SAMUEL_ERR_INTERNAL = 10,
  SAMUEL_ERR_NOMEM = 11
} samuel_status;

/* A parsed local-ring presentation k[vars]/I at the origin. */
typedef struct samuel_ring samuel_ring;
/* The result of one computation: value, certification, route, trace. */
typedef struct samuel_report samuel_report;

SAMUEL_API const char* samuel_version(void);
SAMUEL_API const char* samuel_status_name(samuel_status status);

/*
 * Parses ring-file text ("field Q", "vars x y", "ideal x^2 - y^3", ...).
 * On failure returns the status and, when out_error is non-NULL, a message
 * that must be freed with samuel_string_free().
 */
SAMUEL_API samuel_status samuel_ring_parse(const char* text,
                                           samuel_ring** out_ring,
                                           char** out_error);
SAMUEL_API void samuel_ring_free(samuel_ring* ring);
SAMUEL_API void samuel_string_free(char* s);

/*
 * Options shared by the computations. NULL string fields and zero integer
 * fields select the defaults. Initialize with samuel_options_init.
 */
typedef struct samuel_options {
  const char* elem;     /* polynomial expression, e.g. "x*y - z^3" */
  const char* prime;    /* monomial prime "v1,v2"; NULL = maximal at origin */
  const char* at;       /* recenter "v1=c1,v2=c2"; probe: points joined by ';' */
  const char* base;     /* explicit frame: base variables "u,v" */
  const char* fiber;    /* explicit frame: fiber variable(s) */
  const char* strategy; /* "auto" | "hickel" | "oracle" */
  int search;           /* nonzero: search for a transversal frame */
  int nonlocalized;     /* order without localizing (needs prime) */
  int trace;            /* request verbose traces */
  int nmax;             /* oracle depth, default 8 */
  int order_cap;        /* order iteration cap, default 64 */
} samuel_options;

SAMUEL_API void samuel_options_init(samuel_options* opts);

/*
 * The computations. Each sets *out_report on every return except
 * SAMUEL_ERR_NOMEM; on errors the report carries the message in its
 * diagnostics. Reports must be freed with samuel_report_free().
 */
SAMUEL_API samuel_status samuel_compute_order(const samuel_ring* ring,
                                              const samuel_options* opts,
                                              samuel_report** out_report);
SAMUEL_API samuel_status samuel_compute_oracle(const samuel_ring* ring,
                                               const samuel_options* opts,
                                               samuel_report** out_report);
SAMUEL_API samuel_status samuel_compute_multiplicity(const samuel_ring* ring,
                                                     const samuel_options* opts,
                                                     samuel_report** out_report);
SAMUEL_API samuel_status samuel_compute_frame(const samuel_ring* ring,
                                              const samuel_options* opts,
                                              samuel_report** out_report);
SAMUEL_API samuel_status samuel_compute_slope(const samuel_ring* ring,
                                              const samuel_options* opts,
                                              samuel_report** out_report);
SAMUEL_API samuel_status samuel_compute_probe(const samuel_ring* ring,
                                              const samuel_options* opts,
                                              samuel_report** out_report);

/* Runs the built-in example suite; mismatches give SAMUEL_ERR_CORPUS_MISMATCH. */
SAMUEL_API samuel_status samuel_run_corpus(samuel_report** out_report);

/* Report accessors. Values are exact: "a/b", an integer string, or "inf". */
SAMUEL_API const char* samuel_report_value(const samuel_report* report);
SAMUEL_API int samuel_report_certified(const samuel_report* report);
SAMUEL_API const char* samuel_report_route(const samuel_report* report);
SAMUEL_API size_t samuel_report_trace_count(const samuel_report* report);
SAMUEL_API const char* samuel_report_trace_line(const samuel_report* report,
                                                size_t index);
SAMUEL_API size_t samuel_report_diagnostic_count(const samuel_report* report);
SAMUEL_API const char* samuel_report_diagnostic(const samuel_report* report,
                                                size_t index);
/* One JSON object: {"value","certified","route","trace","diagnostics"}. */
SAMUEL_API char* samuel_report_to_json(const samuel_report* report);
SAMUEL_API void samuel_report_free(samuel_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SAMUEL_H */
