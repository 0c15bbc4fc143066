/*
 * liblace: lace-maps, the lace expansion and saturated-lace sieves.
 *
 * Conventions
 *   - Every call taking a lace_context reports failure through its return
 *     value; the context then holds a JSON error object
 *     {"error": {"code": ..., "message": ..., "detail": ...}} readable with
 *     lace_context_last_error() until the next call on that context.
 *   - Strings returned through char** are heap allocated; release them with
 *     lace_string_free().
 *   - Subsets cross the boundary as 64-bit masks (bit p = property p) or as
 *     ascending JSON index arrays. Universes hold at most 64 properties.
 *   - A context is not thread safe; maps and instances are immutable and may
 *     be shared by contexts on different threads.
 */
#ifndef LACE_LACE_H
#define LACE_LACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LACE_BUILDING)
#    define LACE_API __declspec(dllexport)
#  else
#    define LACE_API __declspec(dllimport)
#  endif
#else
#  define LACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lace_status {
  LACE_OK = 0,
  LACE_ERR_INVALID_ARGUMENT = 1,
  LACE_ERR_PARSE = 2,
  LACE_ERR_OUT_OF_RANGE = 3,
  LACE_ERR_LIMIT_EXCEEDED = 4,
  LACE_ERR_BUDGET_EXCEEDED = 5,
  LACE_ERR_AXIOM_VIOLATION = 6,
  LACE_ERR_NOT_A_LACE = 7,
  LACE_ERR_MIXED_PARITY = 8,
  LACE_ERR_NEGATIVE_WEIGHT = 9,
  LACE_ERR_DIRECTION_MISMATCH = 10,
  LACE_ERR_INTERNAL = 11
} lace_status;

typedef enum lace_limit {
  LACE_LIMIT_EXHAUSTIVE = 0, /* axiom/fiber checks, generic enumeration (default 12) */
  LACE_LIMIT_POLYNOMIAL = 1, /* polynomial identity check (default 14) */
  LACE_LIMIT_TABLE = 2,      /* explicit table maps (default 16) */
  LACE_LIMIT_MAX_LACES = 3,  /* laces per enumeration (default 2^22) */
  LACE_LIMIT_BUDGET = 4      /* elements per application instance (default 65536) */
} lace_limit;

typedef struct lace_context lace_context;
typedef struct lace_map lace_map;
typedef struct lace_instance lace_instance;

LACE_API const char* lace_version(void);
/* "ok", "parse_error", "axiom_violation", ... */
LACE_API const char* lace_status_name(lace_status status);
LACE_API void lace_string_free(char* s);

/* Limits start from the defaults, overridden by LACE_EXHAUSTIVE_LIMIT and
 * LACE_BUDGET. Fails (out stays NULL) if those variables are malformed. */
LACE_API lace_status lace_context_new(lace_context** out);
LACE_API void lace_context_free(lace_context* ctx);
LACE_API lace_status lace_context_set_limit(lace_context* ctx, lace_limit which, size_t value);
LACE_API size_t lace_context_get_limit(const lace_context* ctx, lace_limit which);
/* JSON error object of the last failed call, or "" after a success. */
LACE_API const char* lace_context_last_error(const lace_context* ctx);

/* Lace-maps. JSON schema:
 * {"kind": "identity"|"bonferroni"|"brun"|"brydges_spencer"|"table", "n": int,
 *  "k": int?, "thresholds": [int]?, "dots": int?, "table": [{"s":[int],"l":[int]}]?} */
LACE_API lace_status lace_map_from_json(lace_context* ctx, const char* json, lace_map** out);
LACE_API void lace_map_free(lace_map* map);
LACE_API int lace_map_size(const lace_map* map);
LACE_API lace_status lace_map_to_json(lace_context* ctx, const lace_map* map, char** out);
LACE_API lace_status lace_map_apply(lace_context* ctx, const lace_map* map, uint64_t subset,
                                    uint64_t* out);
LACE_API lace_status lace_map_is_lace(lace_context* ctx, const lace_map* map, uint64_t subset,
                                      int* out);
LACE_API lace_status lace_map_compatible(lace_context* ctx, const lace_map* map, uint64_t lace,
                                         uint64_t* out);

/* {"pass": bool, "violated": "i"|"ii"|"iii"?, "witness": {...}?}; *pass is 0/1. */
LACE_API lace_status lace_verify_axioms(lace_context* ctx, const lace_map* map, int* pass,
                                        char** report);
/* {"map": ..., "count": n, "saturated_count": n, "laces": [{"lace", "compatible",
 *  "saturated", "lace_labels"?, "compatible_labels"?}]} in canonical order. */
LACE_API lace_status lace_enumerate_laces(lace_context* ctx, const lace_map* map, char** out);
LACE_API lace_status lace_fiber_check(lace_context* ctx, const lace_map* map, int* holds);
LACE_API lace_status lace_identity_check(lace_context* ctx, const lace_map* map, int* holds);
LACE_API lace_status lace_analyze_parity(lace_context* ctx, const lace_map* map, char** out);
/* {"dots": n, "arcs": [[i,j],...]}; fails with LACE_ERR_NOT_A_LACE off the BS fixed points. */
LACE_API lace_status lace_interlace_check(lace_context* ctx, const char* arcset_json,
                                          int* holds);

/* Instances: {"n": int, "labels": [string]?, "elements": [{"w": "int-or-rational", "props": [int]}]} */
LACE_API lace_status lace_instance_from_json(lace_context* ctx, const char* json,
                                             lace_instance** out);
LACE_API void lace_instance_free(lace_instance* inst);
/* Decimal or "p/q" string. */
LACE_API lace_status lace_n_zero_bruteforce(lace_context* ctx, const lace_instance* inst,
                                            char** value);
/* {"n0": "...", "terms": [{"lace", "compatible", "saturated", "N", "signed", ...}]} */
LACE_API lace_status lace_expand(lace_context* ctx, const lace_map* map,
                                 const lace_instance* inst, char** out);
/* {"value": "...", "direction": "upper"|"lower"|"exact", "terms": [...]} */
LACE_API lace_status lace_sieve_bound(lace_context* ctx, const lace_map* map,
                                      const lace_instance* inst, char** out);
/* {"lower": {...SieveBound}, "upper": {...SieveBound}} */
LACE_API lace_status lace_sieve_bracket(lace_context* ctx, const lace_map* first,
                                        const lace_map* second, const lace_instance* inst,
                                        char** out);

/* Applications: "derangements" {"n"}, "brun-primes" {"bound", "primes",
 * "pair_thresholds"?, "shifted_thresholds"?}, "saw" {"dimension", "steps"},
 * "ramsey" {"vertices", "clique", "max_k"?}. */
LACE_API lace_status lace_demo(lace_context* ctx, const char* application,
                               const char* params_json, char** out);
LACE_API lace_status lace_oracle_count(lace_context* ctx, const char* application,
                                       const char* params_json, char** value);
/* Serialized application instance (same schema as lace_instance_from_json). */
LACE_API lace_status lace_application_instance(lace_context* ctx, const char* application,
                                               const char* params_json, char** out);
/* CSV of the "terms" array of any report. */
LACE_API lace_status lace_terms_csv(lace_context* ctx, const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LACE_LACE_H */
