#include <stdio.h>
#include <string.h>
#include "pcolor.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, pc_last_error_message());
    return 1;
}

int main(void) {
    PcGraph *g = NULL;
    if (pc_graph_from_family("H9", &g) != PC_STATUS_OK) return fail("family");
    uint32_t chi = 0;
    uint32_t colors[8];
    if (pc_chi_rho(g, &chi, colors, 8) != PC_STATUS_OK) return fail("chi");
    bool vc = false, sc = false;
    if (pc_analyze(g, NULL, &vc, &sc) != PC_STATUS_OK) return fail("analyze");
    char *ids = NULL;
    if (pc_classify(g, PC_UNIVERSE_CRITICAL, &ids) != PC_STATUS_OK) return fail("classify");
    printf("chi=%u vc=%d sc=%d ids=%s\n", chi, vc, sc, ids);
    pc_string_free(ids);
    pc_graph_free(g);

    if (pc_graph_from_graph6("C", &g) != PC_STATUS_PARSE) return 1;
    printf("error=%s\n", strlen(pc_last_error_message()) > 0 ? "set" : "empty");
    return 0;
}
