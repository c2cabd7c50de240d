"""
Families of transpose pairs, and where they stop working
========================================================

Two q-cycles joined by a couple of cross edges give a cospectral,
non-isomorphic transpose pair for every admissible choice of indices.
Adding symmetric pieces on top keeps that property only when the
additions respect the reflection of the index cycle that swaps the two
distinguished indices i and j.
"""

import itertools
import random

from qspectral import (
    corollary1_graph,
    corollary2_graph,
    procedure2_add_pairs,
    report,
    sample_procedure4,
    theorem1_graph,
)


def summary(r):
    return f"cospectral={r.cospectral} isomorphic={r.isomorphic}"


# every admissible chord on a 6-cycle
for i, j in itertools.combinations(range(1, 7), 2):
    if j - i in (1, 5):
        continue
    print(f"theorem1 q=6 i={i} j={j}:", summary(report(theorem1_graph(6, i, j))))

print("corollary1 q=5:", summary(report(corollary1_graph(5, 2))))
print("corollary1 q=5, edge kept:", summary(report(corollary1_graph(5, 2, keep_edge=True))))
print("corollary2 q=6, diagonals {2, 5}:", summary(report(corollary2_graph(6, {2, 5}))))

# %%
# With distinguished (1, 2) on a 6-cycle the reflection is k -> (1 + 2 - k) mod 6.
# It fixes the pair {3, 6} and swaps {3, 5} with {4, 6}.

base = corollary1_graph(6, 1)
for pairs in ([(3, 6)], [(3, 5)], [(3, 5), (4, 6)]):
    g = procedure2_add_pairs(base, pairs, (1, 2))
    print("add", pairs, "->", summary(report(g)))

# %%
# The seeded samplers only draw additions that are closed under the reflection.

rng = random.Random(11)
for _ in range(5):
    g = sample_procedure4(rng)
    print(f"procedure4 sample q={g.q} m={g.m}:", summary(report(g)))
