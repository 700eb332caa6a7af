/* The public header must compile as plain C. */
#include <stdio.h>

#include "scarf/scarf.h"

int main(void) {
  scarf_table* t = NULL;
  char* json = NULL;
  int rc = 0;
  if (scarf_table_create(2, 0, &t) != SCARF_OK) return 1;
  if (scarf_table_json(t, "1/2", &json) != SCARF_OK) rc = 1;
  if (json != NULL) puts(json);
  scarf_string_free(json);
  scarf_table_destroy(t);
  if (scarf_table_create(0, 0, &t) != SCARF_E_INVALID_ARGUMENT) rc = 1;
  return rc;
}
