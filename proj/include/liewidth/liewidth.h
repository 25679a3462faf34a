/*
   Copyright 2026 The liewidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIEWIDTH_H
#define LIEWIDTH_H

#include <stdint.h>

#if defined(_WIN32)
#define LW_API __declspec(dllexport)
#else
#define LW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values mirror liewidth::Errc. */
typedef enum lw_status {
  LW_OK = 0,
  LW_ERR_MIXED_SPACES = 1,
  LW_ERR_UNKNOWN_VARIABLE = 2,
  LW_ERR_NON_INTEGRABLE = 3,
  LW_ERR_NON_INVERTIBLE_SUBSTITUTION = 4,
  LW_ERR_NOT_UNIVARIATE = 5,
  LW_ERR_SYNTAX = 6,
  LW_ERR_NEGATIVE_EXPONENT_ON_AFFINE_VAR = 7,
  LW_ERR_NOT_SQUAREFREE = 8,
  LW_ERR_INVALID_RING = 9,
  LW_ERR_MIXED_RINGS = 10,
  LW_ERR_NOT_IN_IMAGE = 11,
  LW_ERR_UNDECLARED_POLE = 12,
  LW_ERR_NOT_DIVERGENCE_FREE = 13,
  LW_ERR_NEED_TWO_VARIABLES = 14,
  LW_ERR_WRONG_DEGREE = 15,
  LW_ERR_NOT_IN_E_OMEGA = 16,
  LW_ERR_NONZERO_CONSTANT_TERM = 17,
  LW_ERR_ZERO_INPUT = 18,
  LW_ERR_INCOMPLETE_REDUCTION = 19,
  LW_ERR_NOT_TANGENT = 20,
  LW_ERR_INVALID_ARGUMENT = 21,
  LW_ERR_INTERNAL = 100
} lw_status;

typedef struct lw_space lw_space;
typedef struct lw_poly lw_poly;

LW_API const char* lw_version(void);
LW_API const char* lw_status_name(lw_status status);
/* Message of the last failed call on this thread; "" if none. */
LW_API const char* lw_last_error(void);
/* Frees any string returned through a char** out-parameter. */
LW_API void lw_string_free(char* s);

/* Variable spaces: "a:2" is x1,x2 affine; "t:1" is one torus variable t;
   explicit lists such as "x:a,y:a,t:t" are also accepted. */
LW_API lw_status lw_space_parse(const char* signature, lw_space** out);
LW_API void lw_space_free(lw_space* space);
LW_API lw_status lw_space_signature(const lw_space* space, char** out);

LW_API lw_status lw_poly_parse(const lw_space* space, const char* text, lw_poly** out);
LW_API void lw_poly_free(lw_poly* p);
LW_API lw_status lw_poly_to_string(const lw_poly* p, char** out);
LW_API lw_status lw_poly_add(const lw_poly* a, const lw_poly* b, lw_poly** out);
LW_API lw_status lw_poly_sub(const lw_poly* a, const lw_poly* b, lw_poly** out);
LW_API lw_status lw_poly_mul(const lw_poly* a, const lw_poly* b, lw_poly** out);
LW_API lw_status lw_poly_pow(const lw_poly* a, int64_t e, lw_poly** out);
LW_API lw_status lw_poly_derivative(const lw_poly* a, const char* var, lw_poly** out);
LW_API lw_status lw_poly_antiderivative(const lw_poly* a, const char* var, lw_poly** out);
LW_API lw_status lw_poly_equal(const lw_poly* a, const lw_poly* b, int* out);
LW_API lw_status lw_poly_is_squarefree(const lw_poly* a, int* out);

/* Brackets on text inputs; results are normal-form strings. */
LW_API lw_status lw_vf_bracket(const char* signature, const char* a, const char* b, char** out);
LW_API lw_status lw_pb_torus(const char* f, const char* g, char** out);
LW_API lw_status lw_pb_dan(const char* p, const char* f, const char* g, char** out);
LW_API lw_status lw_curve_field_bracket(const char* h, const char* f, const char* g, char** out);

/* Runs a verification suite. config_json is null or an object with optional
   keys seed, samples, degree_bound and string-or-array keys p, h, poles, space.
   text_report and json_report may each be null. */
LW_API lw_status lw_verify(const char* suite, const char* config_json, char** text_report, char** json_report,
                           int* all_passed);

/* context is "torus", "dan", "eomega" or "ratcurve"; p and poles may be null. */
LW_API lw_status lw_demo_decompose(const char* context, const char* element, const char* p, const char* poles,
                                   char** out, int* replay_ok);

#ifdef __cplusplus
}
#endif

#endif /* LIEWIDTH_H */
