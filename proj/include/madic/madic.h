#ifndef MADIC_H
#define MADIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MADIC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define MADIC_API __attribute__((visibility("default")))
#else
#define MADIC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum madic_status {
  MADIC_OK = 0,
  MADIC_NON_PRIME_MODULUS,
  MADIC_DIVISION_BY_ZERO,
  MADIC_FIELD_TOO_LARGE,
  MADIC_NON_UNIT_LEADING_COEFFICIENT,
  MADIC_BOTH_ZERO,
  MADIC_NOT_A_DIVISOR,
  MADIC_NOT_COPRIME,
  MADIC_INVALID_M,
  MADIC_NOT_PRIMITIVE_ROOT,
  MADIC_MULTIPLIER_NOT_CYCLIC,
  MADIC_Q_NOT_RESIDUE,
  MADIC_INCOMPATIBLE_S,
  MADIC_BAD_SLOT_INDEX,
  MADIC_TOO_LARGE,
  MADIC_PARSE_ERROR,
  MADIC_INVALID_ARGUMENT,
  MADIC_INTERNAL
} madic_status;

/* Name of a status code, e.g. "QNotResidue". */
MADIC_API const char* madic_status_name(madic_status status);
/* Message of the last failed call on this thread; "" after a success. */
MADIC_API const char* madic_last_error(void);

/* Job parameters. Unset values take the canonical defaults. */
typedef struct madic_params madic_params;

MADIC_API madic_params* madic_params_new(void);
MADIC_API void madic_params_free(madic_params* params);
/* Integer keys: q p m s b a index root_power cap n k d. */
MADIC_API madic_status madic_params_set_int(madic_params* params, const char* key, uint64_t value);
/* String keys: family, slots ("0,1,2"), generator, document. */
MADIC_API madic_status madic_params_set_string(madic_params* params, const char* key, const char* value);

/* Output of one command. */
typedef struct madic_result madic_result;

/* verb: classes field-code ring-code distance griesmer export verify-paper. */
MADIC_API madic_status madic_run(const char* verb, const madic_params* params, madic_result** out);
MADIC_API const char* madic_result_json(const madic_result* result);
MADIC_API const char* madic_result_text(const madic_result* result);
/* 0 when verify-paper reported a failing check, 1 otherwise. */
MADIC_API int madic_result_success(const madic_result* result);
MADIC_API void madic_result_free(madic_result* result);

/* m-adic residue classes modulo p. b == 0 and a == 0 select the defaults. */
typedef struct madic_residue_system madic_residue_system;

MADIC_API madic_status madic_residue_system_new(uint32_t p, uint32_t m, uint32_t b, uint32_t a,
                                                madic_residue_system** out);
MADIC_API void madic_residue_system_free(madic_residue_system* sys);
MADIC_API uint32_t madic_residue_system_b(const madic_residue_system* sys);
MADIC_API uint32_t madic_residue_system_a(const madic_residue_system* sys);
MADIC_API size_t madic_residue_system_class_size(const madic_residue_system* sys);
/* Copies the sorted class Q_index into out[0..class_size). */
MADIC_API madic_status madic_residue_system_class(const madic_residue_system* sys, uint32_t index, uint32_t* out,
                                                  size_t capacity);
/* Writes i with x in Q_i; MADIC_NOT_COPRIME when p | x. */
MADIC_API madic_status madic_residue_system_class_of(const madic_residue_system* sys, uint64_t x, uint32_t* out);

MADIC_API madic_status madic_griesmer(uint64_t n, uint64_t k, uint64_t d, uint64_t q, uint64_t* bound_n,
                                      int* attained);

#ifdef __cplusplus
}
#endif

#endif
