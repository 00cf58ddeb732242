#ifndef EXALG_H
#define EXALG_H

/*
 * C interface of the exalg library: exact-arithmetic construction and
 * verification of the split exceptional structures (split octonions, the
 * Albert algebra, its similitude Lie algebras, the 56-dimensional triple
 * system with E7 symmetry, Weyl orbit combinatorics).
 *
 * All entry points are reentrant per context; a context must not be shared
 * between threads without external locking. Functions return an exalg_status
 * code; on any failure exalg_last_error(ctx) carries a message. Strings
 * returned through an out parameter are heap-allocated and must be released
 * with exalg_string_free.
 */

#include <stdint.h>

#if defined(_WIN32)
#define EXALG_API __declspec(dllexport)
#else
#define EXALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct exalg_ctx exalg_ctx;

typedef enum exalg_status {
    EXALG_OK = 0,
    /* a verification suite ran but at least one check failed */
    EXALG_CHECK_FAILED = 1,
    /* unknown suite, structure, target, or invalid argument */
    EXALG_USAGE = 2,
    /* calibration file missing or failing its hash check */
    EXALG_CALIBRATION_MISSING = 3,
    /* a calibration search failed to produce a unique result */
    EXALG_CALIBRATION_FAILED = 4,
    EXALG_INTERNAL = 5
} exalg_status;

EXALG_API exalg_ctx* exalg_ctx_new(void);
EXALG_API void exalg_ctx_free(exalg_ctx* ctx);

/* Options; all have defaults (seed 0, primes 4, threads 2, timings off). */
EXALG_API exalg_status exalg_set_seed(exalg_ctx* ctx, uint64_t seed);
EXALG_API exalg_status exalg_set_prime_budget(exalg_ctx* ctx, int primes);
EXALG_API exalg_status exalg_set_threads(exalg_ctx* ctx, int threads);
EXALG_API exalg_status exalg_set_timings(exalg_ctx* ctx, int enabled);
/* Path of the frozen calibration file consumed by brown runs. */
EXALG_API exalg_status exalg_set_calibration_path(exalg_ctx* ctx, const char* path);

EXALG_API const char* exalg_last_error(const exalg_ctx* ctx);

/*
 * Runs a verification suite: octonion, albert, similitudes, brown, weyl,
 * demos, or all. *report_json receives the full report. Returns EXALG_OK
 * when every check passed, EXALG_CHECK_FAILED when the suite ran but some
 * check failed (the report is still produced).
 */
EXALG_API exalg_status exalg_run_suite(exalg_ctx* ctx, const char* suite, char** report_json);

/*
 * Runs a calibration target (brown-fts, octonion-signs, moufang-slots) and
 * returns the calibration payload; for brown-fts the payload is also written
 * to the configured calibration path.
 */
EXALG_API exalg_status exalg_calibrate(exalg_ctx* ctx, const char* target, char** payload_json);

/* Serializes a structure (octonion-table, albert-tensor, brown-t-tensor,
 * lie-basis:<name>) in the given format ("json" or "csv"). */
EXALG_API exalg_status exalg_dump(exalg_ctx* ctx, const char* structure, const char* format, char** out);

/* Weight orbit and parabolic double-coset data, e.g. type "E7", node 7. */
EXALG_API exalg_status exalg_weyl_pairs(exalg_ctx* ctx, const char* type, int node, char** json);

/* Fixed lines of a regular diagonal torus in P^{p-1}. */
EXALG_API exalg_status exalg_demos_torus(exalg_ctx* ctx, int p, char** json);

/* Random nondegenerate isotropic binary forms: isotropic line count and
 * hyperbolic-basis uniqueness over `count` seeded samples. */
EXALG_API exalg_status exalg_demos_quadric(exalg_ctx* ctx, int count, uint64_t seed, char** json);

EXALG_API void exalg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EXALG_H */
