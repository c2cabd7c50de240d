"""Exhaustive small-order census of graphs that are Q-cospectral to a partial transpose.

The pipeline is enumerate -> group by exact Q-polynomial -> run the
labelling search only on members of non-trivial cospectral classes.

Odd orders have no 2 x q clustering.  The census reads an odd-order
graph as its union with one isolated vertex, so one slot of the
clustering is empty, and accepts a transpose only if it still has an
isolated vertex, so the mate is again a graph of the original order.
:func:`pt_realizable` only does this when asked.
"""

from __future__ import annotations

import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .graph import ClusteredGraph, Graph, GraphError, build_graph, partial_transpose
from .io import to_graph6
from .iso import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .spectral import QPolynomial, q_polynomial

MAX_ENUMERATION_ORDER = 8
DEFAULT_PERM_BUDGET = 10**6

# rows (n, m) -> (cospectral count, PT count) as published for this census
REFERENCE_ROWS: dict[tuple[int, int], tuple[int, int]] = {
    (4, 3): (2, 2),
    (5, 3): (2, 2), (5, 7): (2, 0),
    (6, 3): (2, 2), (6, 4): (2, 2), (6, 7): (4, 2),
    (7, 3): (2, 2), (7, 4): (2, 2), (7, 5): (2, 2), (7, 6): (2, 0), (7, 7): (6, 4),
    (7, 8): (12, 8), (7, 9): (14, 10), (7, 10): (14, 10), (7, 11): (14, 12),
    (7, 12): (12, 12), (7, 13): (12, 10), (7, 14): (6, 2), (7, 15): (2, 0),
    (7, 16): (2, 0), (7, 17): (2, 0),
    (8, 3): (2, 2), (8, 4): (2, 2), (8, 5): (4, 4), (8, 6): (12, 8), (8, 7): (20, 14),
    (8, 8): (38, 26), (8, 9): (58, 42),
}
# the published ratio column disagrees with the published counts on this row
REFERENCE_SUSPECT = {(8, 5): "published ratio 0 contradicts published counts 4 and 4"}
# the published census stops at m = 9 for n = 8
REFERENCE_MAX_M = {8: 9}


class PermutationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CospectralClass:
    key: QPolynomial
    members: tuple[CanonicalForm, ...]

    @property
    def m(self) -> int:
        return -self.key.coeffs[1] // 2 if self.key.n else 0


@dataclass(frozen=True)
class SurveyRow:
    n: int
    m: int
    cospectral_count: int
    pt_count: int
    truncated: bool = False

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.pt_count, self.cospectral_count)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "cospectral": self.cospectral_count,
            "pt": self.pt_count,
            "ratio": str(self.ratio),
            "truncated": self.truncated,
        }


# -- enumeration -------------------------------------------------------------

def _extend_one(parent: Graph) -> list[tuple[bytes, Graph]]:
    n = parent.n
    out = {}
    for mask in range(1 << n):
        adj = list(parent.adj)
        for v in range(n):
            if mask >> v & 1:
                adj[v] |= 1 << n
        adj.append(mask)
        child = Graph(n + 1, tuple(adj))
        key = canonical_form(child).encoding
        if key not in out:
            out[key] = child
    return list(out.items())


@lru_cache(maxsize=None)
def _classes(n: int, workers: int = 1) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    parents = _classes(n - 1, workers)
    found: dict[bytes, Graph] = {}
    if workers > 1 and len(parents) > 64:
        with ProcessPoolExecutor(workers) as pool:
            batches = pool.map(_extend_one, parents, chunksize=16)
            for batch in batches:
                for key, g in batch:
                    found.setdefault(key, g)
    else:
        for p in parents:
            for key, g in _extend_one(p):
                found.setdefault(key, g)
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def enumerate_graphs(n: int, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by adding a vertex, with every possible neighbourhood, to each
    class on ``n - 1`` vertices and keeping one graph per canonical form.
    Even orders come out as :class:`ClusteredGraph` under the identity
    clustering; order is deterministic (sorted by canonical encoding).
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if n > MAX_ENUMERATION_ORDER:
        raise GraphError(
            f"built-in enumeration stops at n = {MAX_ENUMERATION_ORDER}; "
            "feed a graph6 stream (e.g. from nauty's geng) instead"
        )
    for g in _classes(n, workers):
        yield ClusteredGraph(g.n, g.adj) if g.n % 2 == 0 else g


# -- cospectral grouping -----------------------------------------------------

def cospectral_classes(graphs: Iterable[Graph]) -> list[CospectralClass]:
    """Non-trivial classes of pairwise non-isomorphic Q-cospectral graphs.

    Isomorphic duplicates in the input are merged; classes are sorted by
    ``(n, m, coefficients)`` and their members by canonical encoding.
    """
    groups: dict[tuple[int, ...], dict[bytes, CanonicalForm]] = defaultdict(dict)
    for g in graphs:
        cf = canonical_form(g)
        groups[q_polynomial(g).coeffs].setdefault(cf.encoding, cf)
    out = []
    for coeffs, members in groups.items():
        if len(members) > 1:
            out.append(CospectralClass(QPolynomial(coeffs), tuple(members[k] for k in sorted(members))))
    out.sort(key=lambda c: (c.key.n, c.m, c.key.coeffs))
    return out


# -- partial-transpose search ------------------------------------------------

def labelling_count(n: int) -> int:
    """Labellings tried per graph: ``n! / (2 q!)`` for ``n = 2q``."""
    q = n // 2
    return math.factorial(n) // (2 * math.factorial(q))


def clusterings(n: int) -> Iterator[list[int]]:
    """Vertex orders, one per orbit of the slot symmetries that commute with the transpose.

    Swapping the clusters and permuting indices in both clusters at once
    commute with the partial transpose, so only ``n! / (2 q!)`` labellings
    need trying: vertex 0 goes to cluster 1, cluster 1 is filled in
    increasing order, and cluster 2 takes every arrangement of the rest.
    ``order[s]`` is the vertex placed at linear slot ``s``.
    """
    if n % 2:
        raise GraphError(f"a 2 x q clustering needs an even order, got n={n}")
    q = n // 2
    if q == 0:
        yield []
        return
    for rest in combinations(range(1, n), q - 1):
        c1 = [0, *rest]
        others = [v for v in range(1, n) if v not in rest]
        for c2 in permutations(others):
            yield c1 + list(c2)


def all_clusterings(n: int) -> Iterator[list[int]]:
    """Every one of the ``n!`` vertex-to-slot assignments; the unreduced search."""
    if n % 2:
        raise GraphError(f"a 2 x q clustering needs an even order, got n={n}")
    for p in permutations(range(n)):
        yield list(p)


def _place(g: Graph, order: list[int]) -> ClusteredGraph:
    pos = [0] * g.n
    for s, v in enumerate(order):
        pos[v] = s
    adj = [0] * g.n
    for u, a in enumerate(g.adj):
        row = 0
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        adj[pos[u]] = row
    return ClusteredGraph(g.n, tuple(adj))


@dataclass
class PTWitness:
    """A labelling whose transpose is a non-isomorphic cospectral mate."""

    labelled: ClusteredGraph
    transposed: ClusteredGraph
    order: list[int] = field(default_factory=list)


def pt_witness(
    g: Graph,
    exhaustive: bool = False,
    pad_odd: bool = False,
    budget: int = DEFAULT_PERM_BUDGET,
) -> PTWitness | None:
    """First labelling (in search order) realising ``g`` as cospectral to its transpose."""
    padded = g.n % 2 == 1
    if padded:
        if not pad_odd:
            raise GraphError(f"partial transpose needs an even order, got n={g.n}; pass pad_odd=True")
        g = Graph(g.n + 1, g.adj + (0,))
    n = g.n
    tries = math.factorial(n) if exhaustive else labelling_count(n)
    if tries > budget:
        raise PermutationBudgetExceeded(f"{tries} labellings for n={n} exceed the permutation budget {budget}")
    target = q_polynomial(g)
    seen: set[tuple[int, ...]] = set()
    for order in (all_clusterings(n) if exhaustive else clusterings(n)):
        lab = _place(g, order)
        t = partial_transpose(lab)
        if t.adj == lab.adj or t.adj in seen or (padded and 0 not in t.adj):
            continue
        seen.add(t.adj)
        if q_polynomial(t) == target and not are_isomorphic(t, lab):
            return PTWitness(lab, t, order)
    return None


def pt_realizable(g: Graph, exhaustive: bool = False, pad_odd: bool = False, budget: int = DEFAULT_PERM_BUDGET) -> bool:
    """Whether some clustering of ``g`` makes its transpose cospectral but not isomorphic.

    Odd orders are rejected unless ``pad_odd`` adds an isolated vertex.
    ``exhaustive`` tries all ``n!`` labellings instead of the reduced set.
    """
    return pt_witness(g, exhaustive, pad_odd, budget) is not None


# -- the census --------------------------------------------------------------

def _pt_job(args) -> bool:
    g, pad_odd, budget = args
    return pt_realizable(g, pad_odd=pad_odd, budget=budget)


def survey_classes(n: int, max_m: int | None = None, workers: int = 1) -> list[CospectralClass]:
    graphs = (g for g in enumerate_graphs(n, workers) if max_m is None or g.m <= max_m)
    return cospectral_classes(graphs)


def survey_table(
    n: int,
    max_m: int | None = None,
    workers: int = 1,
    budget: int = DEFAULT_PERM_BUDGET,
) -> list[SurveyRow]:
    """One row per edge count with at least one non-trivial cospectral class.

    Odd orders are searched with one isolated padding vertex.  When the
    labelling count exceeds ``budget`` the row keeps its cospectral count,
    reports ``pt_count = 0`` and is marked ``truncated``.
    """
    classes = survey_classes(n, max_m, workers)
    by_m: dict[int, list[Graph]] = defaultdict(list)
    for c in classes:
        for cf in c.members:
            by_m[c.m].append(_decode(cf))
    n_eff = n + n % 2
    over = labelling_count(n_eff) > budget
    rows = []
    for m in sorted(by_m):
        members = by_m[m]
        if over:
            rows.append(SurveyRow(n, m, len(members), 0, truncated=True))
            continue
        jobs = [(g, True, budget) for g in members]
        if workers > 1 and len(jobs) > 4:
            with ProcessPoolExecutor(workers) as pool:
                flags = list(pool.map(_pt_job, jobs))
        else:
            flags = [_pt_job(j) for j in jobs]
        rows.append(SurveyRow(n, m, len(members), sum(flags)))
    return rows


def _decode(cf: CanonicalForm) -> Graph:
    n = cf.encoding[0]
    nbits = n * (n - 1) // 2
    code = int.from_bytes(cf.encoding[1:], "big") >> (len(cf.encoding[1:]) * 8 - nbits) if nbits else 0
    edges = []
    k = nbits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return build_graph(n, edges)


def graph_from_canonical(cf: CanonicalForm) -> Graph:
    """The canonically ordered graph an encoding stands for."""
    return _decode(cf)


def aggregate_ratio(rows: Iterable[SurveyRow]) -> Fraction:
    rows = list(rows)
    total = sum(r.cospectral_count for r in rows)
    return Fraction(sum(r.pt_count for r in rows), total) if total else Fraction(0)


@dataclass(frozen=True)
class RowCheck:
    n: int
    m: int
    computed: tuple[int, int] | None
    expected: tuple[int, int] | None
    suspect: str | None = None

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def compare_with_reference(n: int, rows: Iterable[SurveyRow]) -> list[RowCheck]:
    """Row-by-row comparison against the published census for ``n``.

    Rows beyond the published edge range for ``n`` are not compared.
    """
    limit = REFERENCE_MAX_M.get(n)
    computed = {r.m: (r.cospectral_count, r.pt_count) for r in rows if limit is None or r.m <= limit}
    expected = {m: v for (k, m), v in REFERENCE_ROWS.items() if k == n}
    return [
        RowCheck(n, m, computed.get(m), expected.get(m), REFERENCE_SUSPECT.get((n, m)))
        for m in sorted(set(computed) | set(expected))
    ]


def table_tsv(rows: Iterable[SurveyRow]) -> str:
    lines = ["n\tm\tcospectral\tpt\tratio"]
    for r in rows:
        mark = "\ttruncated" if r.truncated else ""
        lines.append(f"{r.n}\t{r.m}\t{r.cospectral_count}\t{r.pt_count}\t{r.ratio}{mark}")
    return "\n".join(lines) + "\n"


def class_detail(c: CospectralClass) -> dict:
    """Members as graph6 plus canonical hex, keyed by the class polynomial."""
    return {
        "polynomial": c.key.to_json(),
        "m": c.m,
        "members": [{"graph6": to_graph6(_decode(cf)), "canonical": cf.hex} for cf in c.members],
    }


def default_workers() -> int:
    env = os.environ.get("QSPECTRAL_THREADS")
    if env and env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1
