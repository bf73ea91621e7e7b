/* EOCAS analytical energy model, C API.
 *
 * All functions return an eocas_status. On failure, *out stays untouched and
 * eocas_last_error() returns a message for the calling thread. Strings
 * returned through char** are owned by the caller and must be released with
 * eocas_str_free().
 */
#ifndef EOCAS_H_
#define EOCAS_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eocas_status {
  EOCAS_OK = 0,
  EOCAS_ERR_CONFIG = 2,     /* malformed or invalid input */
  EOCAS_ERR_INFEASIBLE = 3, /* no mapping fits the memory capacities */
  EOCAS_ERR_MISMATCH = 4,   /* analytical model disagrees with simulation */
  EOCAS_ERR_RESOURCE = 5,   /* simulation exceeds the configured cap */
} eocas_status;

typedef struct eocas_model eocas_model;
typedef struct eocas_arch eocas_arch;

const char* eocas_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* eocas_last_error(void);

void eocas_str_free(char* s);

eocas_status eocas_model_from_json(const char* json, eocas_model** out);
eocas_status eocas_model_to_json(const eocas_model* m, char** out);
void eocas_model_free(eocas_model* m);

eocas_status eocas_arch_from_json(const char* json, eocas_arch** out);
eocas_status eocas_arch_to_json(const eocas_arch* a, char** out);
void eocas_arch_free(eocas_arch* a);

/* options_json may be NULL or "" for defaults. Result objects embed the
 * CSV renderings, e.g. {"report": {...}, "breakdown_csv": "..."}. */
eocas_status eocas_evaluate_json(const eocas_model* m, const eocas_arch* a,
                                 const char* options_json, char** out);

eocas_status eocas_explore_json(const eocas_model* m, const eocas_arch* a,
                                const char* options_json, char** out);

eocas_status eocas_compare_json(const eocas_model* m, const eocas_arch* a,
                                const char* options_json, char** out);

/* Returns EOCAS_ERR_MISMATCH when the diff table is non-empty; *out is
 * still filled in that case. */
eocas_status eocas_verify_json(const eocas_model* m, const eocas_arch* a,
                               const char* options_json, char** out);

/* Loop-nest dumps for the configured per-phase dataflows. */
eocas_status eocas_dump_dataflow_json(const eocas_model* m, const eocas_arch* a,
                                      const char* options_json, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EOCAS_H_ */
