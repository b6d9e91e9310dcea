#include <stdio.h>
#include <string.h>
#include "isotypic.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  IsoHopf *h = NULL;
  CHECK(iso_example("sweedler4", NULL, NULL, false, &h) == ISO_STATUS_OK);
  CHECK(iso_dim(h) == 4);
  CHECK(iso_verify_axioms(h) == ISO_STATUS_OK);

  char *report = NULL;
  CHECK(iso_run_command(h, "idempotents", true, &report) == ISO_STATUS_OK);
  CHECK(strstr(report, "\"passed\": true") != NULL);
  iso_string_free(report);

  char *spec = NULL;
  CHECK(iso_emit_spec_json(h, &spec) == ISO_STATUS_OK);
  IsoHopf *back = NULL;
  CHECK(iso_load_spec_json(spec, &back) == ISO_STATUS_OK);
  CHECK(iso_dim(back) == 4);
  iso_string_free(spec);
  iso_free(back);
  iso_free(h);

  CHECK(iso_example("nope", NULL, NULL, false, &h) == ISO_STATUS_INPUT);
  CHECK(h == NULL);
  CHECK(strstr(iso_last_error_message(), "unknown example") != NULL);
  CHECK(iso_verify_axioms(NULL) == ISO_STATUS_NULL_POINTER);
  puts("ok");
  return 0;
}
