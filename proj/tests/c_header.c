/* The public header must stay valid C. */
#include <stdio.h>
#include <string.h>

#include "cei/cei.h"

int main(void) {
  cei_graph* g = NULL;
  char* text = NULL;
  cei_search_options opts = {0, 1, NULL};
  cei_report* r = NULL;
  cei_verdict v = CEI_VERDICT_REFUTED;
  int ok;

  if (cei_graph_from_graph6("Ch", &g) != CEI_OK) {
    fprintf(stderr, "%s\n", cei_last_error());
    return 1;
  }
  cei_graph_cei(g, &text);
  ok = text && strcmp(text, "8/3") == 0;
  cei_string_free(text);
  cei_graph_free(g);

  ok = ok && cei_verify_theorem1(6, 1, 4, CEI_CONNECTIVITY_DEFAULT, &opts, &r) == CEI_OK;
  ok = ok && cei_report_verdict(r, &v) == CEI_OK && v == CEI_VERDICT_CONFIRMED;
  cei_report_free(r);

  puts(ok ? "ok" : "mismatch");
  return ok ? 0 : 1;
}
