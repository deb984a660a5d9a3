#include <stdio.h>
#include <string.h>

#include "arindex.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond);        \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    uint64_t set[] = {3, 5, 6, 7};
    bool ok = false;
    CHECK(arx_is_dss(set, 4, &ok) == ARX_STATUS_OK && ok);

    ArxGraph *g = NULL;
    CHECK(arx_graph_from_family("bistar 3 3", &g) == ARX_STATUS_OK);
    size_t m = 0;
    CHECK(arx_graph_edge_count(g, &m) == ARX_STATUS_OK && m == 7);

    ArxAri ari;
    uint64_t labels[7];
    CHECK(arx_ari(g, 0, 1, &ari, labels, 7) == ARX_STATUS_OK);
    CHECK(ari.exact && ari.lower == 8 && ari.upper == 8);
    CHECK(arx_verify(g, labels, 7, &ok) == ARX_STATUS_OK && ok);
    arx_graph_free(g);

    CHECK(arx_graph_from_family("hexagon 3", &g) == ARX_STATUS_INVALID_INPUT);
    CHECK(arx_last_error() != NULL && strstr(arx_last_error(), "hexagon") != NULL);
    puts("ok");
    return 0;
}
