#ifndef WONDERFUL_H
#define WONDERFUL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WfStatus {
  WF_STATUS_OK = 0,
  WF_STATUS_NULL_POINTER = 1,
  WF_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed or inconsistent input (bad JSON, unknown label, not a
   * building set, ...).
   */
  WF_STATUS_INVALID_INPUT = 3,
  /**
   * An internal consistency check failed.
   */
  WF_STATUS_CHECK_FAILED = 4,
  WF_STATUS_BUFFER_TOO_SMALL = 5,
  WF_STATUS_PANIC = 6,
} WfStatus;

typedef enum WfLatticeKind {
  WF_LATTICE_KIND_PARTITION = 0,
  WF_LATTICE_KIND_BOOLEAN = 1,
} WfLatticeKind;

/**
 * A building set together with the lattice it lives in.
 */
typedef struct WfBuildingSet WfBuildingSet;

/**
 * A finite meet-semilattice.
 */
typedef struct WfLattice WfLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into the library on the
 * same thread.
 */
const char *wf_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void wf_string_free(char *s);

/**
 * # Safety
 * `out` must be writable.
 */
enum WfStatus wf_lattice_standard(enum WfLatticeKind kind, size_t n, struct WfLattice **out);

/**
 * Parses the JSON lattice file format.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum WfStatus wf_lattice_from_json(const char *json, struct WfLattice **out);

/**
 * # Safety
 * `l` must be a live handle and `out` writable. Free the result with
 * [`wf_string_free`].
 */
enum WfStatus wf_lattice_to_json(const struct WfLattice *l, char **out);

/**
 * # Safety
 * `l` must come from this library and not have been freed; null is ignored.
 */
void wf_lattice_free(struct WfLattice *l);

/**
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum WfStatus wf_lattice_len(const struct WfLattice *l, size_t *out);

/**
 * Moebius value from bottom to top.
 *
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum WfStatus wf_lattice_mobius(const struct WfLattice *l, int64_t *out);

/**
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum WfStatus wf_building_minimal(const struct WfLattice *l, struct WfBuildingSet **out);

/**
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum WfStatus wf_building_maximal(const struct WfLattice *l, struct WfBuildingSet **out);

/**
 * Building set from comma-separated labels. Fails with `InvalidInput`
 * (and a witness in the error message) when the labels do not form one.
 *
 * # Safety
 * `l` must be a live handle, `labels` nul-terminated and `out` writable.
 */
enum WfStatus wf_building_from_labels(const struct WfLattice *l,
                                      const char *labels,
                                      struct WfBuildingSet **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed; null is ignored.
 */
void wf_building_free(struct WfBuildingSet *g);

/**
 * Comma-separated labels of the members.
 *
 * # Safety
 * `g` must be a live handle and `out` writable. Free the result with
 * [`wf_string_free`].
 */
enum WfStatus wf_building_labels(const struct WfBuildingSet *g, char **out);

/**
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum WfStatus wf_building_count(const struct WfLattice *l, size_t *out);

/**
 * Hilbert function of the algebra of the building set. Writes the length
 * to `len` and, when `cap` is large enough, the values to `buf`;
 * otherwise returns `BufferTooSmall`.
 *
 * # Safety
 * `g` must be a live handle, `len` writable and `buf` valid for `cap`
 * writes (it may be null when `cap` is 0).
 */
enum WfStatus wf_hilbert(const struct WfBuildingSet *g, size_t *buf, size_t cap, size_t *len);

/**
 * Number of faces of the nested set complex, the empty face included.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum WfStatus wf_nested_face_count(const struct WfBuildingSet *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum WfStatus wf_nested_reduced_euler(const struct WfBuildingSet *g, int64_t *out);

/**
 * The fan in its plain-text export format.
 *
 * # Safety
 * `g` must be a live handle and `out` writable. Free the result with
 * [`wf_string_free`].
 */
enum WfStatus wf_fan_export(const struct WfBuildingSet *g, char **out);

/**
 * Resolves the lattice by blowing up the building set in the default
 * order and compares the result with the face poset of the nested set
 * complex. `out` receives whether they are isomorphic.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum WfStatus wf_resolve_verify(const struct WfBuildingSet *g, bool *out);

/**
 * Samples `samples` model points per stratum for the permutation group
 * generated by `generators` (cycle notation, e.g. "(12),(123)") acting on
 * coordinates `1..=n`. `passed` receives whether every stabilizer was
 * elementary abelian of exponent 2; `points` the number of points checked.
 *
 * # Safety
 * `generators` must be nul-terminated; `passed` and `points` writable.
 */
enum WfStatus wf_abelianize(const char *generators,
                            size_t n,
                            size_t samples,
                            uint64_t seed,
                            bool *passed,
                            size_t *points);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WONDERFUL_H */
