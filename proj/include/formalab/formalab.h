#ifndef FORMALAB_FORMALAB_H
#define FORMALAB_FORMALAB_H

#include <stddef.h>

#if defined(_WIN32)
#define FORMALAB_API __declspec(dllexport)
#else
#define FORMALAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum formalab_status {
  FORMALAB_OK = 0,
  FORMALAB_INVALID_ARGUMENT,
  FORMALAB_LOAD_ERROR,
  FORMALAB_CAP_EXCEEDED,
  FORMALAB_NOT_NORMAL,
  FORMALAB_NO_SATELLITE,
  FORMALAB_PRECONDITION,
  FORMALAB_INTERNAL
} formalab_status;

/* Opaque group handle. */
typedef struct formalab_group formalab_group;

/* Strings returned through `char**` are owned by the caller and released
   with formalab_string_free. On failure the out pointer is left NULL and
   formalab_last_error describes the problem (per thread). */

FORMALAB_API const char* formalab_status_string(formalab_status s);
FORMALAB_API const char* formalab_last_error(void);
FORMALAB_API void formalab_string_free(char* s);

FORMALAB_API formalab_status formalab_group_from_catalog(const char* name, formalab_group** out);
/* Group-spec JSON text; names inside refer to the catalog. */
FORMALAB_API formalab_status formalab_group_from_json(const char* json, formalab_group** out);
FORMALAB_API void formalab_group_free(formalab_group* g);
FORMALAB_API size_t formalab_group_order(const formalab_group* g);
FORMALAB_API const char* formalab_group_name(const formalab_group* g);

/* formation: e.g. "sup", "pnilp:3". pi: comma list of primes or "all". */
FORMALAB_API formalab_status formalab_analyze(const formalab_group* g, const char* formation, const char* pi,
                                              char** json_out, char** text_out);
FORMALAB_API formalab_status formalab_lattice_dump(const formalab_group* g, char** json_out);

FORMALAB_API formalab_status formalab_catalog_list(char** json_out);
/* Comma separated suite names, in run order. */
FORMALAB_API formalab_status formalab_suite_names(char** out);
/* formation and pi may be NULL; max_order 0 means no bound. `passed` is set
   to 1 when every verdict passes. Timing is omitted when with_timing is 0. */
FORMALAB_API formalab_status formalab_verify(const char* suite, size_t max_order, int soluble_only,
                                             const char* formation, const char* pi, int with_timing,
                                             char** json_out, int* passed);
FORMALAB_API formalab_status formalab_hunt_critical(const char* formation, unsigned p, int soluble_only,
                                                    char** json_out);

#ifdef __cplusplus
}
#endif

#endif
