/* C interface to latticework. Handles are opaque; functions return lw_status. */

#ifndef LATTICEWORK_H
#define LATTICEWORK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Reconstruction verdicts, mirroring the CLI exit codes.
 */
typedef enum LwReconstructVerdict {
  LW_RECONSTRUCT_VERDICT_HOLDS_WITH_ISO = 0,
  LW_RECONSTRUCT_VERDICT_HYPOTHESIS_FAILS = 2,
  LW_RECONSTRUCT_VERDICT_COUNTEREXAMPLE = 3,
} LwReconstructVerdict;

/**
 * Result codes. Anything other than `Ok` leaves out-parameters untouched;
 * the message is available from `lw_last_error_message`.
 */
typedef enum LwStatus {
  LW_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LW_STATUS_NULL_ARGUMENT,
  /**
   * A string argument was not valid UTF-8.
   */
  LW_STATUS_INVALID_UTF8,
  /**
   * The input could not be parsed or does not define a lattice.
   */
  LW_STATUS_INVALID_INPUT,
  /**
   * A structural hypothesis does not hold (not modular, not distributive,
   * not multiplicity free, quiver not acyclic, rep decomposable).
   */
  LW_STATUS_HYPOTHESIS_FAILED,
  /**
   * An enumeration cap or size limit was exceeded.
   */
  LW_STATUS_LIMIT_EXCEEDED,
  /**
   * A verified internal invariant failed.
   */
  LW_STATUS_INTERNAL,
} LwStatus;

/**
 * Opaque lattice handle.
 */
typedef struct LwLattice LwLattice;

/**
 * Opaque quiver handle.
 */
typedef struct LwQuiver LwQuiver;

/**
 * Opaque thin-representation handle.
 */
typedef struct LwRep LwRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *lw_last_error_message(void);

/**
 * Parse a lattice from its JSON file format.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LwStatus lw_lattice_parse_json(const char *json, struct LwLattice **out);

/**
 * Release a lattice handle. Null is ignored.
 *
 * # Safety
 * `lat` must be a pointer from `lw_lattice_parse_json` or
 * `lw_submodule_lattice`, not yet freed.
 */
void lw_lattice_free(struct LwLattice *lat);

/**
 * Number of elements.
 *
 * # Safety
 * `lat` must be a live lattice handle and `out` a valid pointer.
 */
enum LwStatus lw_lattice_element_count(const struct LwLattice *lat, uintptr_t *out);

/**
 * Whether the lattice is modular.
 *
 * # Safety
 * `lat` must be a live lattice handle and `out` a valid pointer.
 */
enum LwStatus lw_lattice_is_modular(const struct LwLattice *lat, bool *out);

/**
 * Whether the lattice is distributive.
 *
 * # Safety
 * `lat` must be a live lattice handle and `out` a valid pointer.
 */
enum LwStatus lw_lattice_is_distributive(const struct LwLattice *lat, bool *out);

/**
 * Whether the lattice is multiplicity free (requires modularity).
 *
 * # Safety
 * `lat` must be a live lattice handle and `out` a valid pointer.
 */
enum LwStatus lw_lattice_is_multiplicity_free(const struct LwLattice *lat, bool *out);

/**
 * Serialize a lattice back to its JSON file format.
 *
 * # Safety
 * `lat` must be a live lattice handle; `out` receives a string to release
 * with `lw_string_free`.
 */
enum LwStatus lw_lattice_to_json(const struct LwLattice *lat, char **out);

/**
 * Render the Hasse diagram as DOT.
 *
 * # Safety
 * As for `lw_lattice_to_json`.
 */
enum LwStatus lw_lattice_hasse_dot(const struct LwLattice *lat, char **out);

/**
 * Render the Ext graph as DOT (requires distributive multiplicity free).
 *
 * # Safety
 * As for `lw_lattice_to_json`.
 */
enum LwStatus lw_lattice_ext_dot(const struct LwLattice *lat, char **out);

/**
 * Compare the Ext graph with the join-irreducible cover digraph.
 *
 * # Safety
 * `lat` must be a live lattice handle and `out` a valid pointer.
 */
enum LwStatus lw_lattice_reconstruct(const struct LwLattice *lat, enum LwReconstructVerdict *out);

/**
 * Release a string returned through an out parameter. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not have been freed.
 */
void lw_string_free(char *s);

/**
 * The n-th Dedekind number, `n <= 6`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LwStatus lw_dedekind_count(uint32_t n, uint64_t *out);

/**
 * Parse a quiver from its line format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LwStatus lw_quiver_parse(const char *text, struct LwQuiver **out);

/**
 * Release a quiver handle. Null is ignored.
 *
 * # Safety
 * `q` must be a pointer from `lw_quiver_parse`, not yet freed.
 */
void lw_quiver_free(struct LwQuiver *q);

/**
 * Parse a thin representation against a quiver. Invariant repairs (nonzero
 * flags on arrows leaving the support) are applied silently.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `q` a live quiver handle; `out`
 * a valid pointer.
 */
enum LwStatus lw_rep_parse(const char *text, const struct LwQuiver *q, struct LwRep **out);

/**
 * Release a representation handle. Null is ignored.
 *
 * # Safety
 * `r` must be a pointer from `lw_rep_parse`, not yet freed.
 */
void lw_rep_free(struct LwRep *r);

/**
 * The submodule lattice of a thin representation, as a new lattice handle.
 *
 * # Safety
 * `q` and `r` must be live handles; `out` a valid pointer.
 */
enum LwStatus lw_submodule_lattice(const struct LwQuiver *q,
                                   const struct LwRep *r,
                                   struct LwLattice **out);

/**
 * Compare the submodule-lattice Ext graph with the induced quiver graph.
 * Writes whether the graphs are equal and whether the support restriction
 * of the quiver is a tree (the hypothesis under which equality is a
 * theorem).
 *
 * # Safety
 * `q` and `r` must be live handles; `out_equal` and `out_tree` valid
 * pointers.
 */
enum LwStatus lw_quiver_verify(const struct LwQuiver *q,
                               const struct LwRep *r,
                               bool *out_equal,
                               bool *out_tree);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LATTICEWORK_H */
