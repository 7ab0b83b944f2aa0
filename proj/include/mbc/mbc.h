#ifndef MBC_MBC_H
#define MBC_MBC_H

/* C interface of the minimal balanced collections library.
 *
 * Every function returns an mbc_status. Strings handed out through `char**`
 * are NUL-terminated JSON owned by the caller and released with mbc_string_free.
 * After a failure, mbc_last_error(ctx) describes it until the next call on ctx.
 * A context may be used by one thread at a time. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MBC_API __declspec(dllexport)
#else
#define MBC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbc_status {
    MBC_OK = 0,
    MBC_INVALID_ARGUMENT = 1,
    MBC_SIZE_LIMIT = 2,
    MBC_PARSE_ERROR = 3,
    MBC_RESOURCE_LIMIT = 4,
    MBC_INTERNAL = 5
} mbc_status;

typedef enum mbc_mode { MBC_MODE_SEARCH = 0, MBC_MODE_LAMBDA_ROUTE = 1 } mbc_mode;

typedef struct mbc_context mbc_context;
typedef struct mbc_enumeration mbc_enumeration;
typedef struct mbc_game mbc_game;

/* Receives one JSON line per collection; a nonzero return stops the run. */
typedef int (*mbc_line_callback)(void* user, const char* line);

MBC_API const char* mbc_version(void);
MBC_API const char* mbc_status_name(mbc_status status);

/* jobs = 0 uses all hardware threads; cache_dir may be NULL (memory cache only). */
MBC_API mbc_status mbc_context_new(unsigned jobs, const char* cache_dir, mbc_context** out);
MBC_API void mbc_context_free(mbc_context* ctx);
MBC_API const char* mbc_last_error(const mbc_context* ctx);
MBC_API void mbc_string_free(char* s);

/* method: "formula", "enumeration" or "closed-form". m = 0 returns the whole table for n. */
MBC_API mbc_status mbc_count(mbc_context* ctx, int n, int m, const char* method, char** json_out);
MBC_API mbc_status mbc_bounds(mbc_context* ctx, int n, char** json_out);
MBC_API mbc_status mbc_lambda(mbc_context* ctx, int m, int with_stats, char** json_out);
MBC_API mbc_status mbc_certificate(mbc_context* ctx, const char* collection_json, char** json_out);
MBC_API mbc_status mbc_orbit(mbc_context* ctx, const char* matrix_json, int full, char** json_out);
MBC_API mbc_status mbc_two_element(mbc_context* ctx, int n, char** json_out);

/* In-memory enumeration, n <= 6; max_collections = 0 means no limit. */
MBC_API mbc_status mbc_enumerate(mbc_context* ctx, int n, mbc_mode mode, uint64_t max_collections,
                                 mbc_enumeration** out);
/* Streaming enumeration, n <= 7; lines arrive in deterministic order. A NULL callback only counts. */
MBC_API mbc_status mbc_enumerate_stream(mbc_context* ctx, int n, mbc_mode mode, mbc_line_callback callback,
                                        void* user, char** summary_json_out);
/* Reads a JSON-lines file written by the enumerator. */
MBC_API mbc_status mbc_enumeration_load(mbc_context* ctx, const char* path, int n, mbc_enumeration** out);
MBC_API void mbc_enumeration_free(mbc_enumeration* e);
MBC_API size_t mbc_enumeration_size(const mbc_enumeration* e);
/* {"n", "total", "per_m", "checksum", "digest", "complete", "progress", "two_element"} */
MBC_API mbc_status mbc_enumeration_summary(mbc_context* ctx, const mbc_enumeration* e, char** json_out);
MBC_API mbc_status mbc_enumeration_line(mbc_context* ctx, const mbc_enumeration* e, size_t index, char** json_out);

MBC_API mbc_status mbc_game_from_json(mbc_context* ctx, const char* game_json, mbc_game** out);
MBC_API void mbc_game_free(mbc_game* g);
/* mbcs may be NULL, in which case the collections for the game's n are enumerated. */
MBC_API mbc_status mbc_core(mbc_context* ctx, const mbc_game* g, const mbc_enumeration* mbcs, char** json_out);
MBC_API mbc_status mbc_core_lp(mbc_context* ctx, const mbc_game* g, char** json_out);

/* max_n = 0 and samples = 0 select suite defaults; *passed is set to 1 or 0. */
MBC_API mbc_status mbc_verify(mbc_context* ctx, const char* suite, int max_n, uint64_t samples, char** json_out,
                              int* passed);
/* Comma-separated suite names in run order. */
MBC_API const char* mbc_suite_names(void);

/* Wall time of one count or enumeration run; route: "formula", "search" or "lambda-route". */
MBC_API mbc_status mbc_bench(mbc_context* ctx, int n, const char* route, char** json_out);

/* Re-indents a JSON document; indent = 0 returns it unchanged. */
MBC_API mbc_status mbc_reformat(mbc_context* ctx, const char* json, int indent, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
