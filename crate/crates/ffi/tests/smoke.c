#include <stdio.h>
#include "qgordon.h"

int main(void) {
    QgPoly *e = NULL;
    char *text = NULL;
    if (qg_rr_fermionic(QG_RR_KIND_E, 4, &e) != QG_STATUS_OK) return 1;
    if (qg_poly_to_string(e, &text) != QG_STATUS_OK) return 1;
    printf("%s\n", text);
    qg_string_free(text);
    qg_poly_free(e);

    QgPoly *bad = NULL;
    QgStatus st = qg_q_binomial(-2, 1, &bad);
    printf("status %d\n", (int)st);
    return bad == NULL ? 0 : 1;
}
