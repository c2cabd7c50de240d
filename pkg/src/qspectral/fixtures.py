"""Hand-transcribed graphs with known cospectrality claims, and a suite that checks them.

Edges are written ``"11-21"`` for ``(v_{1,1}, v_{2,1})``; every fixture
has ``q <= 9`` so two digits always suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import (
    GeneratorReport,
    corollary1_graph,
    corollary2_graph,
    procedure2_add_pairs,
    procedure3_add_psym_cross,
    procedure4_extend,
    procedure5_extend,
    example10_base,
    report,
    theorem1_graph,
)
from .graph import ClusteredGraph, Graph, build_graph, build_slots, disjoint_union, empty, remove_edges


def slots(q: int, text: str) -> ClusteredGraph:
    pairs = []
    for tok in text.split():
        a, b = tok.split("-")
        pairs.append(((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))))
    return build_slots(q, pairs)


def _drop(g: ClusteredGraph, text: str) -> ClusteredGraph:
    return remove_edges(g, slots(g.q, text).edges)


# -- single graphs -------------------------------------------------------------

def claw() -> ClusteredGraph:
    """The star K_{1,3} centred at v21; its transpose is a triangle plus an isolated vertex."""
    return slots(2, "11-21 12-21 21-22")


def claw_transposed() -> ClusteredGraph:
    return slots(2, "11-21 11-22 21-22")


def broken_pair() -> ClusteredGraph:
    """Six vertices whose transpose is not Q-cospectral to it."""
    return slots(3, "11-21 11-22 12-22 13-23 13-22 21-22 23-22")


def broken_pair_transposed() -> ClusteredGraph:
    return slots(3, "11-21 12-21 12-22 12-23 13-23 21-22 23-22")


def rigid_pair() -> tuple[Graph, Graph]:
    """Two Q-cospectral graphs on six vertices that no clustering turns into a transpose pair.

    Vertices are 0-based versions of the drawing's labels 1..6; vertex 2
    is isolated in both.
    """
    a = build_graph(6, [(0, 3), (0, 1), (0, 4), (0, 5), (1, 4), (1, 5), (1, 3)])
    b = build_graph(6, [(0, 3), (0, 1), (0, 4), (0, 5), (1, 4), (1, 3), (3, 4)])
    return a, b


def relabelled_path() -> tuple[ClusteredGraph, ClusteredGraph]:
    """A five-vertex path plus an isolated vertex, under two clusterings.

    The first is symmetric under the transpose; the second is not.
    """
    g0 = slots(3, "12-11 11-21 21-22 22-23")
    g = slots(3, "13-12 12-21 21-22 22-23")
    return g0, g


def switching_pair() -> tuple[ClusteredGraph, ClusteredGraph]:
    """A graph and the graph drawn as its Godsil-McKay switch.

    The drawn switch is not cospectral to the graph in either the
    adjacency or the Q sense (its switching set does not induce a regular
    graph); all that is checked is that the partial transpose of the
    first graph is isomorphic to neither.
    """
    g = slots(4, "11-12 12-13 13-14 22-23 12-21 12-24")
    gm = slots(4, "11-12 12-13 13-14 22-23 22-12 12-23")
    return g, gm


# -- construction instances ----------------------------------------------------

def chord_pair_instance() -> ClusteredGraph:
    """corollary1(5, 3) with the reflection-fixed pair (2, 5) added in both clusters."""
    return procedure2_add_pairs(corollary1_graph(5, 3), [(2, 5)], (3, 4))


def cross_block_instance() -> ClusteredGraph:
    """corollary1(5, 1) plus the pair (3, 5), then a mirror-closed cross block on {3, 5}."""
    base = procedure2_add_pairs(corollary1_graph(5, 1), [(3, 5)], (1, 2))
    return procedure3_add_psym_cross(base, [(3, 3), (5, 5), (3, 5), (5, 3)], (1, 2))


def tree_extension_instance() -> ClusteredGraph:
    """corollary1(3, 1) with a tree grown on v13 and a triangle with a hair on v23."""
    return procedure4_extend(
        corollary1_graph(3, 1),
        3,
        intra_new=([(4, 5), (4, 6)], [(4, 5), (5, 6)]),
        attach=[(1, 3, 4), (2, 3, 4), (2, 3, 5)],
        cross_new=[(4, 4)],
        distinguished=(1, 2),
    )


def path_extension_instance() -> ClusteredGraph:
    """corollary2(3) extended through v12 and v22, which the reflection fixes."""
    return procedure4_extend(
        corollary2_graph(3),
        3,
        intra_new=([(4, 5), (4, 6)], [(4, 5), (5, 6)]),
        attach=[(1, 2, 4), (2, 2, 5)],
        distinguished=(1, 3),
    )


def swap_extension_instance() -> ClusteredGraph:
    """The cluster-swap-symmetric six-vertex base with one new vertex hung on v11."""
    return procedure5_extend(example10_base(), 1, attach_vertex=(1, 1), attach_edges=[4])


# -- the suite -------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureCheck:
    """A report and the claim it is checked against.

    ``expect_pair`` is True when the graph should be cospectral to its
    transpose and not isomorphic to it.
    """

    name: str
    report: GeneratorReport
    expect_pair: bool

    @property
    def is_pair(self) -> bool:
        return self.report.cospectral and not self.report.isomorphic

    @property
    def ok(self) -> bool:
        return self.is_pair == self.expect_pair

    def to_json(self) -> dict:
        return {"name": self.name, "expect_pair": self.expect_pair, "ok": self.ok, **self.report.to_json()}


_CUT4 = ("12-13", "13-14", "22-23", "23-24")


def fixture_suite() -> list[FixtureCheck]:
    """Three loose families of graphs found cospectral to their transpose.

    * the 12-vertex cycle-path graph, with ``(v13, v14)``, ``(v23, v24)``,
      or both removed: every variant is a pair;
    * the 10-vertex cycle-path graph: a pair as is and with all four of
      ``(v12, v13), (v13, v14), (v22, v23), (v23, v24)`` removed, but no
      proper non-empty subset of those four gives a pair;
    * an 8-vertex triangle-hub graph.
    """
    out = []
    # a q-cycle on cluster 1 and a path on cluster 2 whose ends both meet v11
    g6 = corollary2_graph(6)
    for cut in ("", "13-14", "23-24", "13-14 23-24"):
        name = "cycle-path-12" + (f" minus {cut}" if cut else "")
        out.append(FixtureCheck(name, report(_drop(g6, cut), "cycle-path", q=6, removed=cut.split()), True))
    g5 = corollary2_graph(5)
    for mask in range(16):
        cut = " ".join(e for k, e in enumerate(_CUT4) if mask >> k & 1)
        name = "cycle-path-10" + (f" minus {cut}" if cut else "")
        expect = mask in (0, 15)
        out.append(FixtureCheck(name, report(_drop(g5, cut), "cycle-path", q=5, removed=cut.split()), expect))
    hub = slots(4, "11-12 12-13 11-13 11-21 11-22 11-23 23-24 21-24 22-24")
    out.append(FixtureCheck("triangle-hub-8", report(hub, "triangle-hub", q=4), True))
    return out


def construction_suite() -> list[FixtureCheck]:
    """Worked instances of each construction, checked the same way."""
    k = claw()
    items = [
        ("claw", k, True),
        ("claw plus diagonal edge", disjoint_union(k, slots(1, "11-21")), True),
        ("claw plus empty pair", disjoint_union(k, empty(1)), True),
        ("theorem1 q=5 i=2 j=4", theorem1_graph(5, 2, 4), True),
        ("corollary1 q=3 i=1", corollary1_graph(3, 1), True),
        ("chord pair", chord_pair_instance(), True),
        ("cross block", cross_block_instance(), True),
        ("tree extension", tree_extension_instance(), True),
        ("path extension", path_extension_instance(), True),
        ("swap extension", swap_extension_instance(), True),
        ("broken pair", broken_pair(), False),
    ]
    return [FixtureCheck(name, report(g, name), expect) for name, g, expect in items]
