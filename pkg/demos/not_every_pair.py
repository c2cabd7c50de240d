"""
Cospectral pairs that are not transposes
========================================

A partial transpose need not be cospectral, and a cospectral pair need
not be related by any transpose.
"""

from qspectral import are_isomorphic, are_q_cospectral, partial_transpose, pt_realizable, q_polynomial, q_spectrum
from qspectral.fixtures import broken_pair, rigid_pair, switching_pair

# a six-vertex graph whose transpose has a different spectrum
g = broken_pair()
t = partial_transpose(g)
print(q_polynomial(g))
print(q_polynomial(t))
print([round(x, 4) for x in q_spectrum(g)])
print([round(x, 4) for x in q_spectrum(t)])

# two cospectral graphs; no labelling of either makes its transpose a cospectral mate
a, b = rigid_pair()
print("cospectral:", are_q_cospectral(a, b), "isomorphic:", are_isomorphic(a, b))
print("transpose mates:", pt_realizable(a), pt_realizable(b))

# the transpose of this graph is not the graph drawn as its switching partner
g, gm = switching_pair()
print("transpose isomorphic to the drawn switch:", are_isomorphic(partial_transpose(g), gm))
