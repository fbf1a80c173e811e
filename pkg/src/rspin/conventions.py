"""Recorded global conventions, surfaced in every JSON report.

quantum_dimension: supertrace of the identity under the Koszul braiding,
    even minus odd.  With this choice evaluate_torus(T(d,0)) equals
    quantum_dimension(C_d) exactly (sign +1) on every built-in example.
lg_circle_space_parity: circle spaces of the Landau-Ginzburg orbifolds
    carry the shift [n(1-a)], the grading in which C_0 is purely even of
    dimension r-1; their quantum dimensions are then fixed only up to one
    global sign, which is not observable once +1 and -1 are identified,
    so LG comparisons use absolute values.
"""

FLAGS = {
    "quantum_dimension": "even_minus_odd",
    "torus_vs_qdim_sign": "+1",
    "lg_reporting": "absolute_values_with_signed_internals",
    "nakayama_zigzag": "computes_inverse_of_gamma",
    "projector_order": "ebar . x . gamma^(1-a)(e)",
}
