#include <stdio.h>
#include <string.h>

#include "bipinfluence.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  CHECK(bip_abi_version() == BIP_ABI_VERSION);

  BipGraph *g = NULL;
  CHECK(bip_graph_southern_women(&g) == BIP_STATUS_OK);
  size_t events = 0;
  CHECK(bip_graph_node_count(g, BIP_MODE_B, &events) == BIP_STATUS_OK);
  CHECK(events == 14);

  BipScoreTable *t = NULL;
  CHECK(bip_score(g, BIP_MODE_A, BIP_MEASURE_HH, 3, &t) == BIP_STATUS_OK);
  CHECK(bip_score_table_len(t) == 14);
  double best = -1.0;
  const char *best_label = NULL;
  for (size_t i = 0; i < bip_score_table_len(t); i++) {
    const char *label = NULL;
    double raw = 0.0;
    CHECK(bip_score_table_get(t, i, &label, &raw, NULL) == BIP_STATUS_OK);
    if (raw > best) {
      best = raw;
      best_label = label;
    }
  }
  CHECK(strcmp(best_label, "E8") == 0);
  CHECK(bip_score_table_get(t, 14, NULL, NULL, NULL) == BIP_STATUS_OUT_OF_RANGE);
  CHECK(bip_last_error_message() != NULL);
  bip_score_table_free(t);

  BipAblationReport *r = NULL;
  CHECK(bip_ablate(g, BIP_MODE_A, BIP_MEASURE_HH, 0.10, BIP_DIRECTION_TOP, 3, &r) == BIP_STATUS_OK);
  CHECK(bip_ablation_removed_len(r) == 1);
  CHECK(strcmp(bip_ablation_removed(r, 0), "E8") == 0);
  bip_ablation_free(r);

  CHECK(bip_graph_load("/nonexistent/input.tsv", BIP_FORMAT_TSV, &g) == BIP_STATUS_IO);
  bip_graph_free(g);
  puts("ok");
  return 0;
}
