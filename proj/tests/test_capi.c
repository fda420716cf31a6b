/* Exercises the C interface from C, linking only the shared library. */
#include "rank2km/rank2km.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static int contains(const char* hay, const char* needle) {
  return hay && strstr(hay, needle) != NULL;
}

int main(void) {
  rk2_system* sys = NULL;
  rk2_system* h41 = NULL;
  rk2_signs* signs = NULL;
  char* out = NULL;
  int passed = -1;

  EXPECT(rk2_system_new(1, 1, &sys) == RK2_INVALID_ARGUMENT);
  EXPECT(sys == NULL);
  EXPECT(strlen(rk2_last_error()) > 0);
  EXPECT(rk2_system_new(5, 1, NULL) == RK2_INVALID_ARGUMENT);

  EXPECT(rk2_system_new(5, 1, &sys) == RK2_OK);
  EXPECT(rk2_system_new(4, 1, &h41) == RK2_OK);
  EXPECT(strcmp(rk2_last_error(), "") == 0);

  EXPECT(rk2_roots(sys, 1, "LL", RK2_FORMAT_JSON, &out) == RK2_OK);
  EXPECT(contains(out, "\"x\":\"4\",\"y\":\"5\""));
  rk2_string_free(out);
  EXPECT(rk2_roots(sys, 0, NULL, RK2_FORMAT_CSV, &out) == RK2_OK);
  EXPECT(contains(out, "5,1,SU,0,0,1,short,1\n"));
  rk2_string_free(out);
  EXPECT(rk2_roots(sys, 1, "XX", RK2_FORMAT_JSON, &out) == RK2_PARSE);
  EXPECT(rk2_roots(sys, -1, NULL, RK2_FORMAT_JSON, &out) == RK2_INVALID_ARGUMENT);

  EXPECT(rk2_classify_json(sys, "1", "1", &out) == RK2_OK);
  EXPECT(contains(out, "\"class\":\"real\""));
  EXPECT(contains(out, "\"root\":\"SL:0\""));
  rk2_string_free(out);
  EXPECT(rk2_classify_json(sys, "123456789012345678901234567890", "1", &out) == RK2_OK);
  EXPECT(contains(out, "\"class\":\"not_a_root\""));
  rk2_string_free(out);
  EXPECT(rk2_classify_json(sys, "1.5", "1", &out) == RK2_PARSE);
  EXPECT(rk2_classify_json(sys, NULL, "1", &out) == RK2_INVALID_ARGUMENT);

  EXPECT(rk2_commutator_json(sys, NULL, "SU:0", "SU:1", &out) == RK2_OK);
  EXPECT(contains(out, "\"n\":5"));
  rk2_string_free(out);

  /* Flipping the one input behind (SU:0, SU:1) flips its sign. */
  EXPECT(rk2_signs_from_json(sys, "{\"type\":\"Ha1\",\"overrides\":[{\"key\":\"U:0\",\"sign\":-1}]}",
                             &signs) == RK2_OK);
  EXPECT(rk2_commutator_json(sys, signs, "SU:0", "SU:1", &out) == RK2_OK);
  EXPECT(contains(out, "\"n\":-5"));
  rk2_string_free(out);
  EXPECT(rk2_signs_to_json(signs, &out) == RK2_OK);
  EXPECT(contains(out, "\"U:0\""));
  rk2_string_free(out);
  /* Signs for H(5,1) do not fit H(4,1). */
  EXPECT(rk2_commutator_json(h41, signs, "SU:0", "SU:1", &out) == RK2_INVALID_ARGUMENT);
  rk2_signs_free(signs);
  signs = NULL;
  EXPECT(rk2_signs_from_json(h41, "{\"type\":\"Ha1\"}", &signs) == RK2_INVALID_ARGUMENT);
  EXPECT(signs == NULL);
  EXPECT(rk2_signs_from_json(h41, "{not json", &signs) == RK2_PARSE);
  EXPECT(rk2_signs_from_json(h41, "{\"type\":\"H41\",\"overrides\":[{\"key\":\"SU:1\",\"sign\":-1}]}",
                             &signs) != RK2_OK);
  EXPECT(rk2_signs_default(h41, &signs) == RK2_OK);

  EXPECT(rk2_subsystem_json(sys, "SU:0,SL:0", "phi", &out) == RK2_OK);
  EXPECT(contains(out, "\"cartan\":[[2,-3],[-3,2]]"));
  rk2_string_free(out);
  EXPECT(rk2_subsystem_json(sys, "", "phi", &out) == RK2_PARSE ||
         rk2_subsystem_json(sys, "", "phi", &out) == RK2_INVALID_ARGUMENT);
  EXPECT(rk2_subsystem_json(sys, "SU:0", "other", &out) == RK2_INVALID_ARGUMENT);

  EXPECT(rk2_verify_json(h41, "oracle", 4, signs, &passed, &out) == RK2_OK);
  EXPECT(passed == 1);
  EXPECT(contains(out, "\"passed\":true"));
  rk2_string_free(out);
  EXPECT(rk2_verify_json(sys, "oracle", 4, NULL, &passed, &out) == RK2_UNSUPPORTED);
  EXPECT(rk2_verify_json(sys, "bogus", 4, NULL, &passed, &out) == RK2_INVALID_ARGUMENT);

  EXPECT(rk2_plot_data_csv(sys, 2, 10, &out) == RK2_OK);
  EXPECT(contains(out, "\n4,5,long_root\n"));
  rk2_string_free(out);

  EXPECT(strcmp(rk2_status_name(RK2_PARSE), "parse") == 0);
  EXPECT(strlen(rk2_version()) > 0);

  rk2_signs_free(signs);
  rk2_system_free(sys);
  rk2_system_free(h41);
  rk2_system_free(NULL);
  rk2_string_free(NULL);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
