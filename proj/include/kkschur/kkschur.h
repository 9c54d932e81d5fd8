#ifndef KKSCHUR_KKSCHUR_H
#define KKSCHUR_KKSCHUR_H

/*
 * C interface to the K-k-Schur engine.
 *
 * A context fixes the level k and owns the expansion memo.  A context must not
 * be used from two threads at once; distinct contexts are independent.
 * Strings returned through char** are owned by the caller and released with
 * kks_string_free.  Partitions are written "3,3,1", with "-" for the empty one.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KKS_API __declspec(dllexport)
#else
#define KKS_API __attribute__((visibility("default")))
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum kks_status {
  KKS_OK = 0,
  KKS_IDENTITY_FAILED = 1,
  KKS_INPUT_ERROR = 2,
  KKS_BUDGET_EXCEEDED = 3,
  KKS_INTERNAL_ERROR = 4
} kks_status;

typedef enum kks_format { KKS_FORMAT_TEXT = 0, KKS_FORMAT_JSON = 1 } kks_format;

typedef struct kks_context kks_context;

KKS_API const char* kks_version(void);

KKS_API kks_status kks_context_create(int k, kks_context** out);
KKS_API void kks_context_destroy(kks_context* ctx);
KKS_API int kks_context_level(const kks_context* ctx);
/* Message for the last failing call on ctx; "" after a success.  Valid until
 * the next call on ctx. */
KKS_API const char* kks_last_error(const kks_context* ctx);

KKS_API void kks_string_free(char* s);

/* Bijections between k-bounded partitions and (k+1)-cores. */
KKS_API kks_status kks_core(kks_context* ctx, const char* partition, char** out);
KKS_API kks_status kks_bdd(kks_context* ctx, const char* core, char** out);
KKS_API kks_status kks_kconj(kks_context* ctx, const char* partition, char** out);

/* g_lambda as a polynomial in h_1..h_k. */
KKS_API kks_status kks_expand(kks_context* ctx, const char* partition, kks_format format, char** out);

/* Seeds the memo from a cache file; a missing file loads nothing.  When
 * warnings_json is not NULL it receives a JSON array of skipped entries. */
KKS_API kks_status kks_cache_load(kks_context* ctx, const char* path, char** warnings_json);
KKS_API kks_status kks_cache_save(kks_context* ctx, const char* path);

/*
 * Runs one identity check or sweep.  identity is one of binom-fold, step-a,
 * samek, rta, split, divisibility, regime-scan; params_json is a JSON object
 * (see the README).  report_json receives the full report even when checks
 * fail.  Returns KKS_IDENTITY_FAILED when any instance fails, except for
 * regime-scan which only observes.
 */
KKS_API kks_status kks_verify(kks_context* ctx, const char* identity, const char* params_json,
                              unsigned long long seed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
