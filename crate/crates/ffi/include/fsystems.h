/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef FSYSTEMS_H
#define FSYSTEMS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FsysStatus {
  FSYS_STATUS_OK = 0,
  FSYS_STATUS_NULL_POINTER = 1,
  FSYS_STATUS_INVALID_UTF8 = 2,
  FSYS_STATUS_PARSE = 3,
  FSYS_STATUS_CEILING = 4,
  FSYS_STATUS_INVALID_ARGUMENT = 5,
  FSYS_STATUS_PANIC = 6,
} FsysStatus;

typedef enum FsysGroundedness {
  FSYS_GROUNDEDNESS_GROUNDED = 0,
  FSYS_GROUNDEDNESS_RELATIVELY_GROUNDED = 1,
  FSYS_GROUNDEDNESS_UNGROUNDED = 2,
} FsysGroundedness;

// Opaque handle to a parsed or generated system.
typedef struct FsysSystem FsysSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *fsys_last_error(void);

// Parses `.fsys` text into a new system.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum FsysStatus fsys_system_parse(const char *text, struct FsysSystem **out);

// Builds a named system. `n`, `p` and `seed` may be null when the generator
// does not take them.
//
// # Safety
// `name` must be a NUL-terminated string; non-null parameter pointers must
// be readable; `out` must be writable.
enum FsysStatus fsys_system_generate(const char *name,
                                     const size_t *n,
                                     const double *p,
                                     const uint64_t *seed,
                                     struct FsysSystem **out);

// Releases a system. Null is ignored.
//
// # Safety
// `sys` must come from this library and not have been freed already.
void fsys_system_free(struct FsysSystem *sys);

// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_system_sentence_count(const struct FsysSystem *sys, size_t *out);

// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_system_edge_count(const struct FsysSystem *sys, size_t *out);

// Whether the system has no classical labelling.
//
// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_is_paradoxical(const struct FsysSystem *sys, bool *out);

// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_count_conglomerates(const struct FsysSystem *sys, size_t *out);

// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_groundedness(const struct FsysSystem *sys, enum FsysGroundedness *out);

// The full JSON report, as printed by `fsys analyze`. `jobs` = 0 uses every
// core. Sections over a ceiling are written as skipped markers and the call
// still succeeds.
//
// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_analyze_json(const struct FsysSystem *sys, size_t jobs, char **out);

// Canonical `.fsys` text.
//
// # Safety
// `sys` must be a live handle; `out` must be writable.
enum FsysStatus fsys_serialize(const struct FsysSystem *sys, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void fsys_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FSYSTEMS_H */
