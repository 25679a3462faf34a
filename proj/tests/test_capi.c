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

#include <stdio.h>
#include <string.h>

#include "liewidth/liewidth.h"

static int failures = 0;

#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void expect_string(lw_status s, char** out, const char* want) {
  char* got = *out;
  *out = NULL;
  CHECK(s == LW_OK);
  if (s == LW_OK) {
    if (strcmp(got, want) != 0) fprintf(stderr, "got '%s', want '%s'\n", got, want);
    CHECK(strcmp(got, want) == 0);
  }
  lw_string_free(got);
}

int main(void) {
  lw_space* space = NULL;
  lw_poly *a = NULL, *b = NULL, *c = NULL, *d = NULL;
  char* text = NULL;
  int flag = -1;

  CHECK(strcmp(lw_version(), "0.1.0") == 0);
  CHECK(lw_space_parse("x:a,y:a", &space) == LW_OK);
  CHECK(lw_poly_parse(space, "x + y", &a) == LW_OK);
  CHECK(lw_poly_parse(space, "x - y", &b) == LW_OK);
  CHECK(lw_poly_mul(a, b, &c) == LW_OK);
  expect_string(lw_poly_to_string(c, &text), &text, "x^2 - y^2");
  CHECK(lw_poly_derivative(c, "x", &d) == LW_OK);
  expect_string(lw_poly_to_string(d, &text), &text, "2*x");
  CHECK(lw_poly_equal(a, b, &flag) == LW_OK && flag == 0);

  /* Errors surface as codes plus a thread-local message. */
  lw_poly* bad = NULL;
  CHECK(lw_poly_parse(space, "x^-1", &bad) == LW_ERR_NEGATIVE_EXPONENT_ON_AFFINE_VAR);
  CHECK(bad == NULL);
  CHECK(strlen(lw_last_error()) > 0);
  CHECK(strcmp(lw_status_name(LW_ERR_NOT_SQUAREFREE), "NotSquarefree") == 0);
  CHECK(lw_poly_parse(space, "x +", &bad) == LW_ERR_SYNTAX);
  CHECK(lw_poly_parse(NULL, "x", &bad) == LW_ERR_INVALID_ARGUMENT);

  char* out = NULL;
  expect_string(lw_pb_torus("x", "y", &out), &out, "x*y");
  expect_string(lw_pb_dan("z^2 - 1", "x", "y", &out), &out, "(2*z)");
  CHECK(lw_pb_dan("z^2", "x", "y", &out) == LW_ERR_NOT_SQUAREFREE);
  CHECK(lw_curve_field_bracket("x^4 - 1", "x", "y", &out) == LW_ERR_INVALID_RING);

  int all = 0;
  char* report = NULL;
  CHECK(lw_verify("torus-poisson", "{\"seed\": 3, \"samples\": 5}", NULL, &report, &all) == LW_OK);
  CHECK(all == 1);
  CHECK(report != NULL && strstr(report, "\"seed\": 3") != NULL);
  lw_string_free(report);
  CHECK(lw_verify("nope", NULL, NULL, NULL, &all) == LW_ERR_INVALID_ARGUMENT);
  CHECK(lw_verify("all", "{\"bogus\": 1}", NULL, NULL, &all) == LW_ERR_INVALID_ARGUMENT);
  CHECK(lw_verify("curve", "{\"h\": \"x^2\"}", NULL, NULL, &all) == LW_ERR_INVALID_RING);

  int ok = 0;
  CHECK(lw_demo_decompose("torus", "x + y", NULL, NULL, &out, &ok) == LW_OK);
  CHECK(ok == 1 && strstr(out, "= input: OK") != NULL);
  lw_string_free(out);
  CHECK(lw_demo_decompose("eomega", "1", "z^2 - 1", NULL, &out, &ok) == LW_ERR_NOT_IN_E_OMEGA);

  lw_poly_free(a);
  lw_poly_free(b);
  lw_poly_free(c);
  lw_poly_free(d);
  lw_space_free(space);

  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  else printf("C API smoke test passed\n");
  return failures ? 1 : 0;
}
