/* Checks that the public header is valid C and the library links from C. */
#include <stdio.h>
#include <string.h>

#include "incid4/incid4.h"

int main(void) {
  i4_generator g = {"star", 10, 10, 0, 0, 0};
  i4_config* cfg = NULL;
  size_t incidences = 0;
  char* digest = NULL;
  if (i4_config_generate(&g, 3, &cfg) != I4_OK) {
    fprintf(stderr, "generate: %s\n", i4_last_error());
    return 1;
  }
  if (i4_count(cfg, &incidences, NULL) != I4_OK || incidences != 100) {
    fprintf(stderr, "count: %zu\n", incidences);
    return 1;
  }
  if (i4_config_digest(cfg, &digest) != I4_OK || strlen(digest) != 16) return 1;
  i4_string_free(digest);
  i4_config_free(cfg);
  if (i4_config_parse("[", &cfg) != I4_PARSE_ERROR || strlen(i4_last_error()) == 0) return 1;
  printf("ok %s\n", i4_version());
  return 0;
}
