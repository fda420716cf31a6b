#ifndef RANK2KM_H
#define RANK2KM_H

/* C interface to the rank 2 Kac-Moody root system library.
 *
 * All functions return an rk2_status. On failure a message is available from
 * rk2_last_error() (per thread, valid until the next call on that thread).
 * Strings handed back through char** out-parameters are owned by the caller
 * and must be released with rk2_string_free. Integers that may be large
 * (lattice coordinates) travel as decimal strings. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RK2_API __declspec(dllexport)
#else
#define RK2_API __attribute__((visibility("default")))
#endif

typedef enum rk2_status {
  RK2_OK = 0,
  RK2_INVALID_ARGUMENT = 1,
  RK2_UNSUPPORTED = 2,
  RK2_PARSE = 3,
  RK2_INVARIANT = 4, /* internal consistency failure: a bug */
  RK2_INTERNAL = 5
} rk2_status;

typedef enum rk2_format { RK2_FORMAT_JSON = 0, RK2_FORMAT_CSV = 1 } rk2_format;

typedef struct rk2_system rk2_system; /* the Cartan matrix H(a,b) */
typedef struct rk2_signs rk2_signs;   /* a sign assignment for one system */

RK2_API const char* rk2_version(void);
RK2_API const char* rk2_last_error(void);
RK2_API const char* rk2_status_name(rk2_status s);
RK2_API void rk2_string_free(char* s);

/* Requires a, b >= 1 and ab >= 4. */
RK2_API rk2_status rk2_system_new(long a, long b, rk2_system** out);
RK2_API void rk2_system_free(rk2_system* sys);

/* All-+1 defaults for the system's sign variant. */
RK2_API rk2_status rk2_signs_default(const rk2_system* sys, rk2_signs** out);
/* {"type": "Ha1"|"H41"|"Trivial", "overrides": [{"key":..., "sign": -1}, ...]};
 * the type must match the system. */
RK2_API rk2_status rk2_signs_from_json(const rk2_system* sys, const char* json,
                                       rk2_signs** out);
RK2_API rk2_status rk2_signs_to_json(const rk2_signs* signs, char** out);
RK2_API void rk2_signs_free(rk2_signs* signs);

/* Real roots with |j| <= max_index. family may be NULL (all four) or one of
 * "LL", "LU", "SU", "SL". JSON output is one object per line. */
RK2_API rk2_status rk2_roots(const rk2_system* sys, int64_t max_index, const char* family,
                             rk2_format format, char** out);

/* x, y: decimal integers of any size. */
RK2_API rk2_status rk2_classify_json(const rk2_system* sys, const char* x, const char* y,
                                     char** out);

/* alpha, beta: root specs like "SU:-3". signs may be NULL for the defaults. */
RK2_API rk2_status rk2_commutator_json(const rk2_system* sys, const rk2_signs* signs,
                                       const char* alpha, const char* beta, char** out);

/* generators: comma separated root specs; mode: "phi" or "delta". */
RK2_API rk2_status rk2_subsystem_json(const rk2_system* sys, const char* generators,
                                      const char* mode, char** out);

/* suite: "core", "sums", "subsystems", "signs", "oracle" or "all". signs may
 * be NULL. *passed is set to 1 when every check passed, else 0. */
RK2_API rk2_status rk2_verify_json(const rk2_system* sys, const char* suite, int64_t window,
                                   const rk2_signs* signs, int* passed, char** out);

/* CSV with columns x,y,kind. */
RK2_API rk2_status rk2_plot_data_csv(const rk2_system* sys, int64_t max_index,
                                     int64_t curve_samples, char** out);

#ifdef __cplusplus
}
#endif

#endif
