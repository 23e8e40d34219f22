#ifndef MODGOLDIE_H
#define MODGOLDIE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call.
typedef enum MgStatus {
  MG_STATUS_OK = 0,
  MG_STATUS_NULL_POINTER = 1,
  MG_STATUS_INVALID_UTF8 = 2,
  MG_STATUS_IO = 3,
  MG_STATUS_PARSE = 4,
  MG_STATUS_VALIDATION = 5,
  MG_STATUS_CAP_EXCEEDED = 6,
  MG_STATUS_NOT_FOUND = 7,
  MG_STATUS_PANIC = 8,
} MgStatus;

// Truth value of a predicate. `Unknown` means the budget ran out.
typedef enum MgAnswer {
  MG_ANSWER_FALSE = 0,
  MG_ANSWER_TRUE = 1,
  MG_ANSWER_UNKNOWN = 2,
} MgAnswer;

// A loaded fixture file: one ring and its modules.
typedef struct MgFixture MgFixture;

// One module of a fixture, with its named submodules.
typedef struct MgModule MgModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *mg_version(void);

// Message for the last non-OK status on this thread, or an empty string.
// Valid until the next call on the same thread; do not free.
const char *mg_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void mg_string_free(char *s);

// Loads and validates a fixture file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum MgStatus mg_fixture_load(const char *path, struct MgFixture **out);

// Parses and validates fixture JSON held in memory.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum MgStatus mg_fixture_parse(const char *json, struct MgFixture **out);

// Releases a fixture. Null is ignored. Modules taken from it stay valid.
//
// # Safety
// `fixture` must be null or a live handle from this library.
void mg_fixture_free(struct MgFixture *fixture);

// Number of modules in the fixture.
//
// # Safety
// `fixture` must be a live handle; `out` must be writable.
enum MgStatus mg_fixture_module_count(const struct MgFixture *fixture, size_t *out);

// Name of the module at `index`, as a new string.
//
// # Safety
// `fixture` must be a live handle; `out` must be writable.
enum MgStatus mg_fixture_module_name(const struct MgFixture *fixture, size_t index, char **out);

// Looks a module up by name. The handle is independent of the fixture.
//
// # Safety
// `fixture` must be a live handle, `name` a NUL-terminated string and
// `out` writable.
enum MgStatus mg_module_get(const struct MgFixture *fixture,
                            const char *name,
                            struct MgModule **out);

// Releases a module. Null is ignored.
//
// # Safety
// `module` must be null or a live handle from this library.
void mg_module_free(struct MgModule *module);

// Dimension of the module over the prime field.
//
// # Safety
// `module` must be a live handle; `out` must be writable.
enum MgStatus mg_module_dim(const struct MgModule *module, size_t *out);

// Number of submodules. `lattice_cap` of 0 means the default cap; a larger
// lattice gives `CapExceeded`.
//
// # Safety
// `module` must be a live handle; `out` must be writable.
enum MgStatus mg_module_lattice_size(const struct MgModule *module,
                                     size_t lattice_cap,
                                     size_t *out);

// Evaluates one predicate by name, e.g. `"semiprime"` or `"duo"`. The names
// are the keys of the predicate report.
//
// # Safety
// `module` must be a live handle, `name` a NUL-terminated string and `out`
// writable.
enum MgStatus mg_module_predicate(const struct MgModule *module,
                                  const char *name,
                                  enum MgAnswer *out);

// Every predicate with witnesses, as JSON.
//
// # Safety
// `module` must be a live handle; `out` must be writable.
enum MgStatus mg_module_predicates_json(const struct MgModule *module, char **out);

// The product `K_M L`. Submodules are given as an alias, `0`, `M`, or rows
// such as `[[1,0,0]]`; the result is the canonical rows.
//
// # Safety
// `module` must be a live handle, `k` and `l` NUL-terminated strings and
// `out` writable.
enum MgStatus mg_module_product(const struct MgModule *module,
                                const char *k,
                                const char *l,
                                char **out);

// `Ann_M(N)` as canonical rows; `n` is parsed like the product arguments.
//
// # Safety
// `module` must be a live handle, `n` a NUL-terminated string and `out`
// writable.
enum MgStatus mg_module_annihilator(const struct MgModule *module, const char *n, char **out);

// Runs the theorem battery and returns the report as JSON. Zero for
// `lattice_cap` or `scan_limit` selects the default. `failed` receives the
// number of failed checks.
//
// # Safety
// `module` must be a live handle; `out` and `failed` must be writable.
enum MgStatus mg_module_battery_json(const struct MgModule *module,
                                     size_t lattice_cap,
                                     uint64_t scan_limit,
                                     char **out,
                                     size_t *failed);

// The worked example on a module isomorphic to `mod-es`, as JSON.
// Other modules give `Validation`.
//
// # Safety
// `module` must be a live handle; `out` must be writable.
enum MgStatus mg_module_demo_json(const struct MgModule *module, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MODGOLDIE_H */
