#ifndef NERVEKIT_H
#define NERVEKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NkStatus {
  NK_STATUS_OK = 0,
  // A check ran and its property failed.
  NK_STATUS_PROPERTY_FAILED = 1,
  // Malformed document, unknown fixture or violated precondition.
  NK_STATUS_MALFORMED = 2,
  NK_STATUS_NULL_POINTER = 3,
  NK_STATUS_BEYOND_CAP = 4,
  NK_STATUS_INVALID_MONOIDAL = 5,
  NK_STATUS_INTERNAL = 6,
} NkStatus;

typedef struct NkCertificate NkCertificate;

typedef struct NkDiagram NkDiagram;

typedef struct NkMonoidal NkMonoidal;

typedef struct NkSCat NkSCat;

typedef struct NkSSet NkSSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *nk_last_error(void);

// # Safety
// `s` must come from this library or be null.
void nk_string_free(char *s);

// # Safety
// `json` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_sset_from_json(const char *json, struct NkSSet **out);

// # Safety
// `x` must be a live handle; `out` a valid pointer.
enum NkStatus nk_sset_to_json(const struct NkSSet *x, char **out);

// # Safety
// `x` must be a live handle; `out` a valid pointer.
enum NkStatus nk_sset_cap(const struct NkSSet *x, uintptr_t *out);

// Number of `k`-cells, degenerate ones included.
//
// # Safety
// `x` must be a live handle; `out` a valid pointer.
enum NkStatus nk_sset_count(const struct NkSSet *x, uintptr_t k, uintptr_t *out);

// # Safety
// `x` must come from this library or be null.
void nk_sset_free(struct NkSSet *x);

// # Safety
// `name` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_scat_fixture(const char *name, uintptr_t cap, struct NkSCat **out);

// # Safety
// `json` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_scat_from_json(const char *json, struct NkSCat **out);

// # Safety
// `c` must be a live handle; `out` a valid pointer.
enum NkStatus nk_scat_to_json(const struct NkSCat *c, char **out);

// Homotopy-coherent nerve through dimension `cap`.
//
// # Safety
// `c` must be a live handle; `out` a valid pointer.
enum NkStatus nk_coherent_nerve(const struct NkSCat *c, uintptr_t cap, struct NkSSet **out);

// # Safety
// `c` must come from this library or be null.
void nk_scat_free(struct NkSCat *c);

// # Safety
// `name` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_diagram_fixture(const char *name, uintptr_t cap, struct NkDiagram **out);

// # Safety
// `json` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_diagram_from_json(const char *json, struct NkDiagram **out);

// # Safety
// `f` must come from this library or be null.
void nk_diagram_free(struct NkDiagram *f);

// # Safety
// `name` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_monoidal_fixture(const char *name, uintptr_t cap, struct NkMonoidal **out);

// # Safety
// `json` must be a nul-terminated string; `out` a valid pointer.
enum NkStatus nk_monoidal_from_json(const char *json, struct NkMonoidal **out);

// # Safety
// `m` must come from this library or be null.
void nk_monoidal_free(struct NkMonoidal *m);

// `N(Gr F) ≅ N_f(D)` through dimension `nmax`. A certificate is produced
// whether or not the check passes; the status carries the verdict.
//
// # Safety
// `f` must be a live handle; `out` a valid pointer.
enum NkStatus nk_check_gr_relnerve(const struct NkDiagram *f,
                                   uintptr_t nmax,
                                   struct NkCertificate **out);

// `C^⊗ ≅ Gr(C^•)` with Δ^op truncated at `delta_max`.
//
// # Safety
// `m` must be a live handle; `out` a valid pointer.
enum NkStatus nk_check_cotimes_gr(const struct NkMonoidal *m,
                                  uintptr_t delta_max,
                                  struct NkCertificate **out);

// Fiber of `N^⊗(C)` over `[level]` against `N(C)^level`.
//
// # Safety
// `m` must be a live handle; `out` a valid pointer.
enum NkStatus nk_check_fibers(const struct NkMonoidal *m,
                              uintptr_t delta_max,
                              uintptr_t cap,
                              uintptr_t level,
                              struct NkCertificate **out);

// The opposite comparisons, verified as strict isomorphisms.
//
// # Safety
// `m` must be a live handle; `out` a valid pointer.
enum NkStatus nk_check_opposites(const struct NkMonoidal *m,
                                 uintptr_t delta_max,
                                 uintptr_t cap,
                                 struct NkCertificate **out);

// 1 if every check passed, 0 otherwise (including a null handle).
//
// # Safety
// `cert` must be a live handle or null.
int nk_certificate_passed(const struct NkCertificate *cert);

// Renders as text, or as JSON when `structured` is nonzero.
//
// # Safety
// `cert` must be a live handle; `out` a valid pointer.
enum NkStatus nk_certificate_render(const struct NkCertificate *cert, int structured, char **out);

// # Safety
// `cert` must come from this library or be null.
void nk_certificate_free(struct NkCertificate *cert);

// Runs the command-line front end on `argv[0..argc]` (program name first)
// and returns its exit status.
//
// # Safety
// `argv` must point to `argc` nul-terminated strings.
int nk_cli_run(int argc, const char *const *argv);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NERVEKIT_H */
