/* Compile-and-run check that the shared library header is consumable from
 * plain C and that the basic call sequence works across the boundary. */
#include "circ4/circ4.h"

#include <math.h>
#include <stdio.h>
#include <stdlib.h>

static void require(int ok, const char* what) {
    if (!ok) {
        fprintf(stderr, "FAIL: %s (%s)\n", what, circ4_last_error());
        exit(1);
    }
}

int main(void) {
    circ4_metric g;
    require(circ4_metric_make(3.0, 1.0, 2.0, 0, &g) == CIRC4_OK, "metric_make");

    double det = 0.0;
    require(circ4_det_closed_form(&g, &det) == CIRC4_OK, "det_closed_form");
    require(det == 21.0, "det value");

    circ4_vec4 w = {1.0, 0.0, 0.0, 0.0};
    circ4_angles angles;
    require(circ4_angle_pair(&g, &w, &angles) == CIRC4_OK, "angle_pair");
    require(fabs(angles.cos_q - 1.0 / 3.0) < 1e-14, "cos_q value");

    circ4_params p = {2.0, 1.0};
    circ4_trace* trace = NULL;
    require(circ4_trace_direct(&g, &w, &p, 5, &trace) == CIRC4_OK, "trace_direct");
    require(circ4_trace_len(trace) == 6, "trace length");
    circ4_trace_free(trace);

    circ4_vec4 bad = {1.0, 1.0, 1.0, 1.0};
    require(circ4_angle_pair(&g, &bad, &angles) == CIRC4_ERR_EIGENVECTOR_INPUT,
            "eigenvector guard");

    circ4_fields* fields = NULL;
    require(circ4_fields_open("linear", &fields) == CIRC4_OK, "fields_open");
    const double at[4] = {0.3, 0.4, 0.2, 0.6};
    double res = -1.0;
    require(circ4_nabla_q_residual(fields, at, 0.0, &res) == CIRC4_OK, "nabla_q");
    require(res < 1e-6, "nabla_q residual");
    circ4_fields_free(fields);

    printf("c api smoke ok\n");
    return 0;
}
