/* C interface to the scarf engine.
 *
 * Every function returns a scarf_status. On failure, scarf_last_error()
 * returns a message for the calling thread. Strings handed out through
 * char** parameters are owned by the caller and released with
 * scarf_string_free().
 */
#ifndef SCARF_SCARF_H
#define SCARF_SCARF_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SCARF_BUILDING_LIBRARY)
#    define SCARF_API __declspec(dllexport)
#  else
#    define SCARF_API __declspec(dllimport)
#  endif
#else
#  define SCARF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scarf_status {
  SCARF_OK = 0,
  SCARF_E_INVALID_ARGUMENT = 1,
  SCARF_E_DOMAIN = 2,
  SCARF_E_DEGREE_MISMATCH = 3,
  SCARF_E_INEXACT_DIVISION = 4,
  SCARF_E_DIVISION_BY_ZERO = 5,
  SCARF_E_NON_NORMALIZABLE = 6,
  SCARF_E_CONVERGENCE = 7,
  SCARF_E_PARSE = 8,
  SCARF_E_INTERNAL = 9
} scarf_status;

typedef enum scarf_scheme {
  SCARF_SCHEME_PLAIN = 0,
  SCARF_SCHEME_FACTORED = 1
} scarf_scheme;

typedef struct scarf_table scarf_table;
typedef struct scarf_spectrum scarf_spectrum;

SCARF_API const char* scarf_version(void);
SCARF_API const char* scarf_status_name(scarf_status status);
SCARF_API const char* scarf_last_error(void);
SCARF_API void scarf_string_free(char* s);

/* ---- decomposition ---- */

SCARF_API scarf_status scarf_table_create(int N, int ell, scarf_table** out);
SCARF_API void scarf_table_destroy(scarf_table* table);
/* b_exact may be NULL; otherwise a rational literal ("p/q", integer or
 * exact decimal) at which every coefficient is also evaluated. */
SCARF_API scarf_status scarf_table_json(const scarf_table* table, const char* b_exact, char** out_json);
SCARF_API scarf_status scarf_table_csv(const scarf_table* table, const char* b_exact, char** out_csv);
SCARF_API scarf_status scarf_table_eval(const scarf_table* table, int K, double b, double* out);

SCARF_API scarf_status scarf_closed_forms_json(int N, char** out_json, int* all_match);

/* ---- spectrum ---- */

/* Two-grid Richardson spectrum (M and 2M+1). M >= 16. */
SCARF_API scarf_status scarf_spectrum_compute(int d, int channel, double b, int M, int count, scarf_scheme scheme,
                                              scarf_spectrum** out);
SCARF_API void scarf_spectrum_destroy(scarf_spectrum* spectrum);
SCARF_API size_t scarf_spectrum_count(const scarf_spectrum* spectrum);
SCARF_API scarf_status scarf_spectrum_value(const scarf_spectrum* spectrum, size_t index, double* raw,
                                            double* extrapolated);
SCARF_API scarf_status scarf_spectrum_csv(const scarf_spectrum* spectrum, char** out_csv);

SCARF_API scarf_status scarf_audit_json(int N, int d, double b, int M, double tol, char** out_json, int* passed);

/* ---- identities ---- */

/* which: "gradient", "commutator", "polynomial" or "ledger". b is a decimal
 * for gradient/commutator and a rational literal for polynomial/ledger
 * (ledger also accepts NULL). points is the grid size (<= 0: 200). */
SCARF_API scarf_status scarf_verify_json(const char* which, int N, int ell, const char* b, int points, char** out_json,
                                         int* passed);

/* ---- orthogonality ---- */

/* measure: 0 for d chi on U states, 1 for cos^d chi d chi on phi states. */
SCARF_API scarf_status scarf_gram_csv(const int* N_list, size_t count, int ell, double b, int d, int measure,
                                      char** out_csv, int* passed);

#ifdef __cplusplus
}
#endif

#endif
