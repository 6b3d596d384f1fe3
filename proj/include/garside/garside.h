/*
 * C interface to the Garside group library.
 *
 * Every function returns a garside_status; results come back through out
 * parameters. On failure a description is available from garside_last_error()
 * (thread-local, valid until the next call on the same thread). Handles are
 * opaque and must be released with the matching *_free function; freeing
 * NULL is a no-op.
 *
 * Words are arrays of 1-based atom indices; a negative entry -k stands for
 * the inverse of atom k. Buffers are (pointer, capacity) pairs with the
 * required size reported through a length out parameter; if the capacity is
 * too small GARSIDE_ERR_BUFFER is returned and nothing but the length is
 * written.
 */
#ifndef GARSIDE_GARSIDE_H
#define GARSIDE_GARSIDE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GARSIDE_BUILDING_LIBRARY)
#define GARSIDE_API __declspec(dllexport)
#else
#define GARSIDE_API __declspec(dllimport)
#endif
#else
#define GARSIDE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum garside_status {
  GARSIDE_OK = 0,
  GARSIDE_ERR_INPUT = 1,    /* malformed input or bad argument */
  GARSIDE_ERR_MISMATCH = 2, /* operands over different structures */
  GARSIDE_ERR_BUDGET = 3,   /* search limits exhausted */
  GARSIDE_ERR_DOMAIN = 4,   /* mathematically invalid request */
  GARSIDE_ERR_BUFFER = 5,   /* output buffer too small */
  GARSIDE_ERR_INTERNAL = 6
} garside_status;

typedef enum garside_summit_kind {
  GARSIDE_SUPER = 0,
  GARSIDE_ULTRA = 1,
  GARSIDE_STABLE = 2
} garside_summit_kind;

typedef struct garside_limits {
  uint64_t max_steps;
  uint64_t max_set_size;
} garside_limits;

typedef struct garside_rational {
  int64_t num;
  int64_t den; /* > 0, reduced */
} garside_rational;

typedef struct garside_structure garside_structure;
typedef struct garside_element garside_element;
typedef struct garside_summit_set garside_summit_set;

GARSIDE_API const char* garside_last_error(void);
/* Byte offset of the last input error inside the parsed text, or -1. */
GARSIDE_API int64_t garside_last_error_offset(void);
GARSIDE_API garside_limits garside_default_limits(void);

/* Structures ------------------------------------------------------------- */

/* "braid:<n>" or "zn:<n>". */
GARSIDE_API garside_status garside_structure_new(const char* selector,
                                                 garside_structure** out);
GARSIDE_API void garside_structure_free(garside_structure* s);
GARSIDE_API int garside_structure_atom_count(const garside_structure* s);
GARSIDE_API int garside_structure_delta_length(const garside_structure* s);
/* Positive word check; *out is 1 when the word is a left divisor of Delta. */
GARSIDE_API garside_status garside_is_simple(const garside_structure* s,
                                             const int* word, size_t len,
                                             int* out);

/* Elements ---------------------------------------------------------------- */

GARSIDE_API garside_status garside_element_parse(const garside_structure* s,
                                                 const char* text,
                                                 garside_element** out);
GARSIDE_API garside_status garside_element_from_word(
    const garside_structure* s, const int* word, size_t len,
    garside_element** out);
GARSIDE_API garside_status garside_element_clone(const garside_element* x,
                                                 garside_element** out);
GARSIDE_API void garside_element_free(garside_element* x);

GARSIDE_API int64_t garside_element_delta_power(const garside_element* x);
GARSIDE_API size_t garside_element_factor_count(const garside_element* x);
/* Atom word of factor i. */
GARSIDE_API garside_status garside_element_factor(const garside_element* x,
                                                  size_t i, int* atoms,
                                                  size_t cap, size_t* len);
/* Canonical text form, NUL-terminated; *len excludes the terminator. */
GARSIDE_API garside_status garside_element_format(const garside_element* x,
                                                  char* buf, size_t cap,
                                                  size_t* len);
GARSIDE_API void garside_element_invariants(const garside_element* x,
                                            int64_t* inf, int64_t* sup,
                                            uint64_t* len);

GARSIDE_API garside_status garside_multiply(const garside_element* x,
                                            const garside_element* y,
                                            garside_element** out);
GARSIDE_API garside_status garside_inverse(const garside_element* x,
                                           garside_element** out);
GARSIDE_API garside_status garside_power(const garside_element* x, int64_t n,
                                         garside_element** out);
/* x^-1 g x */
GARSIDE_API garside_status garside_conjugate(const garside_element* g,
                                             const garside_element* x,
                                             garside_element** out);
GARSIDE_API garside_status garside_equals(const garside_element* x,
                                          const garside_element* y, int* out);
GARSIDE_API garside_status garside_commute(const garside_element* x,
                                           const garside_element* y,
                                           int* out);
GARSIDE_API garside_status garside_left_divides(const garside_element* x,
                                                const garside_element* y,
                                                int* out);
GARSIDE_API garside_status garside_left_meet(const garside_element* x,
                                             const garside_element* y,
                                             garside_element** out);
GARSIDE_API garside_status garside_left_join(const garside_element* x,
                                             const garside_element* y,
                                             garside_element** out);
GARSIDE_API garside_status garside_tau(const garside_element* x, int64_t power,
                                       garside_element** out);

/* Conjugacy --------------------------------------------------------------- */

GARSIDE_API garside_status garside_cycling(const garside_element* x,
                                           garside_element** out);
GARSIDE_API garside_status garside_decycling(const garside_element* x,
                                             garside_element** out);
/* *h = (*x)^-1 g (*x) with *h ultra summit. */
GARSIDE_API garside_status garside_summit_seek(const garside_element* g,
                                               const garside_limits* limits,
                                               garside_element** h,
                                               garside_element** x);
/* Minimal simple c with atom <= c keeping h in its summit set. */
GARSIDE_API garside_status garside_min_conjugator(
    const garside_element* h, int atom, garside_summit_kind kind,
    const garside_limits* limits, int* atoms, size_t cap, size_t* len);
/* *found is 1 and *conjugator = w with w^-1 x w = y when conjugate. */
GARSIDE_API garside_status garside_is_conjugate(const garside_element* x,
                                                const garside_element* y,
                                                const garside_limits* limits,
                                                int* found,
                                                garside_element** conjugator);

/* With minimal_graph set, only the edges of the minimal conjugacy graph are
 * kept. */
GARSIDE_API garside_status garside_summit_set_new(const garside_element* g,
                                              garside_summit_kind kind,
                                              int minimal_graph,
                                              const garside_limits* limits,
                                              garside_summit_set** out);
GARSIDE_API void garside_summit_set_free(garside_summit_set* set);
GARSIDE_API size_t garside_summit_set_size(const garside_summit_set* set);
GARSIDE_API void garside_summit_set_invariants(const garside_summit_set* set,
                                               int64_t* inf_s, int64_t* sup_s);
GARSIDE_API garside_status garside_summit_set_member(
    const garside_summit_set* set, size_t i, garside_element** out);
GARSIDE_API garside_status garside_summit_set_witness(
    const garside_summit_set* set, size_t i, garside_element** out);
GARSIDE_API size_t garside_summit_set_edge_count(const garside_summit_set* set);
GARSIDE_API garside_status garside_summit_set_edge(
    const garside_summit_set* set, size_t i, size_t* from, size_t* to,
    int* label, size_t cap, size_t* len);

/* Tuples of commuting elements ---------------------------------------------- */

/* out must hold n handles. */
GARSIDE_API garside_status garside_tuple_to_uss(
    const garside_element* const* tuple, size_t n,
    const garside_limits* limits, garside_element** out,
    garside_element** conjugator);
GARSIDE_API garside_status garside_is_simultaneously_conjugate(
    const garside_element* const* t1, size_t n1,
    const garside_element* const* t2, size_t n2, const garside_limits* limits,
    int* found, garside_element** conjugator);
GARSIDE_API garside_status garside_is_stable(const garside_element* h,
                                             const garside_limits* limits,
                                             int* out);
GARSIDE_API garside_status garside_stable_representative(
    const garside_element* g, const garside_limits* limits,
    garside_element** h, garside_element** x);

/* Translation numbers ---------------------------------------------------------- */

GARSIDE_API uint64_t garside_word_length(const garside_element* x);
GARSIDE_API garside_status garside_summit_slopes(const garside_element* g,
                                                 const garside_limits* limits,
                                                 garside_rational* t_inf,
                                                 garside_rational* t_sup);
GARSIDE_API garside_status garside_translation_number(
    const garside_element* g, const garside_limits* limits,
    garside_rational* out);

/* Abelian subgroups ----------------------------------------------------------- */
/* Exponent vectors are int64; values that do not fit give GARSIDE_ERR_BUDGET. */

GARSIDE_API garside_status garside_dirichlet_approx(
    const garside_rational* x, size_t n, int64_t M,
    const garside_limits* limits, int64_t* k, int64_t* a);
/* Decimal or p/q strings for D1 and D2. */
GARSIDE_API garside_status garside_norm_constants(size_t n, garside_rational K,
                                                  int L, char* d1, size_t cap1,
                                                  size_t* len1, char* d2,
                                                  size_t cap2, size_t* len2);
/* out: n*n row-major unimodular matrix with first row a. */
GARSIDE_API garside_status garside_hnf_complement(const int64_t* a, size_t n,
                                                  int64_t* out);
/* *found is 1 and relation (n entries) holds a nontrivial relation. */
GARSIDE_API garside_status garside_integer_relation(
    const garside_structure* s, const garside_element* const* gens, size_t n,
    const garside_limits* limits, int* found, int64_t* relation);
/* basis must hold n handles; expression gets count*n entries (row-major). */
GARSIDE_API garside_status garside_abelian_basis(
    const garside_structure* s, const garside_element* const* gens, size_t n,
    const garside_limits* limits, garside_element** basis, size_t* count,
    int64_t* expression);
GARSIDE_API garside_status garside_abelian_member(
    const garside_element* g, const garside_element* const* gens, size_t n,
    const garside_limits* limits, int* found, int64_t* exponents);
/* conjugator^-1 g conjugator = prod gens[i]^exponents[i]. */
GARSIDE_API garside_status garside_abelian_conj_member(
    const garside_element* g, const garside_element* const* gens, size_t n,
    const garside_limits* limits, int* found, int64_t* exponents,
    garside_element** conjugator);
GARSIDE_API garside_status garside_subgroups_equal(
    const garside_structure* s, const garside_element* const* gens1, size_t n1,
    const garside_element* const* gens2, size_t n2,
    const garside_limits* limits, int* out);
/* w^-1 H1 w = H2. */
GARSIDE_API garside_status garside_subgroups_conjugate(
    const garside_structure* s, const garside_element* const* gens1, size_t n1,
    const garside_element* const* gens2, size_t n2,
    const garside_limits* limits, int* found, garside_element** conjugator);

#ifdef __cplusplus
}
#endif

#endif /* GARSIDE_GARSIDE_H */
