"""
The smallest graph that is Q-cospectral to its partial transpose
================================================================

Four vertices, two clusters.  The star centred at v21 has one cross edge
(v12, v21) whose mirror (v11, v22) is missing, so the transpose moves it
and the star turns into a triangle plus an isolated vertex.
"""

from qspectral import (
    asymmetric_edge_set,
    are_isomorphic,
    coefficients_via_tu,
    partial_transpose,
    q_polynomial,
    q_spectrum,
)
from qspectral.fixtures import claw
from qspectral.io import format_edgelist

g = claw()
t = partial_transpose(g)
print(format_edgelist(g))
print("asymmetric cross edges:", sorted(asymmetric_edge_set(g)))
print(format_edgelist(t))

# same polynomial, computed two unrelated ways
print("det(xI - Q):", q_polynomial(g), "|", q_polynomial(t))
print("from TU subgraphs:", coefficients_via_tu(g), coefficients_via_tu(t))
print("spectrum:", [round(x, 6) for x in q_spectrum(g)])

# yet the graphs differ: degree sequences 3,1,1,1 against 2,2,2,0
print("isomorphic:", are_isomorphic(g, t))

# the transpose undoes itself
assert partial_transpose(t) == g
