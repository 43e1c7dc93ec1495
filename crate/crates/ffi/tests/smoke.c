#include <stdio.h>
#include <string.h>
#include "convdom.h"

static int check(int cond, const char *what) {
    if (!cond) fprintf(stderr, "failed: %s\n", what);
    return cond ? 0 : 1;
}

int main(void) {
    int bad = 0;
    ConvdomGraph *g = NULL;
    bad += check(convdom_graph_parse("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n", &g) == CONVDOM_OK, "parse");
    bad += check(convdom_graph_vertex_count(g) == 6, "vertex count");

    ConvdomResult *r = NULL;
    bad += check(convdom_gamma_con(g, false, 2, &r) == CONVDOM_OK, "gamma_con");
    bad += check(convdom_result_value(r) == 4, "value");
    size_t w[8];
    size_t k = convdom_result_witness(r, w, 8);
    bad += check(k == 4 && w[0] == 1 && w[3] == 4, "witness");
    char *json = convdom_result_to_json(r);
    bad += check(json && strstr(json, "\"seed\":[1,4]") != NULL, "json seed");
    convdom_string_free(json);
    convdom_result_free(r);

    size_t cycle[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 0, 6};
    ConvdomGraph *c7 = NULL;
    bad += check(convdom_graph_new(7, cycle, 7, &c7) == CONVDOM_OK, "graph_new");
    r = NULL;
    bad += check(convdom_gamma_con(c7, false, 1, &r) == CONVDOM_ERR_WRONG_CLASS, "wrong class");
    bad += check(r == NULL && strlen(convdom_last_error_message()) > 0, "error message");

    ConvdomGraph *broken = NULL;
    bad += check(convdom_graph_parse("3 1\n0 x\n", &broken) == CONVDOM_ERR_PARSE, "parse error");
    bad += check(broken == NULL, "no handle on error");

    convdom_graph_free(c7);
    convdom_graph_free(g);
    if (!bad) printf("ok\n");
    return bad;
}
