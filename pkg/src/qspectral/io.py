"""Text formats: edge lists, graph6, DOT.

Edge-list files look like::

    # K from the smallest cospectral pair
    q=2
    0 2
    1 2
    2 3

with linear indices ``(mu - 1) * q + (i - 1)`` for slot ``v_{mu,i}``.
graph6 carries no clustering; a decoded even-order graph is read under
the identity clustering (first half is cluster 1).
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import ClusteredGraph, Graph, GraphError, build, build_graph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edgelist(text: str) -> ClusteredGraph:
    q = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if q is None:
            key, _, val = line.partition("=")
            if key.strip() != "q" or not val.strip().isdigit():
                raise FormatError(f"expected 'q=<int>' header, got {raw!r}", lineno)
            q = int(val)
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected 'u v', got {raw!r}", lineno)
        edges.append((int(parts[0]), int(parts[1])))
    if q is None:
        raise FormatError("missing 'q=<int>' header")
    try:
        return build(q, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_edgelist(g: ClusteredGraph) -> str:
    lines = [f"q={g.q}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _n_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_n_bytes(n) + body).decode("ascii")


def from_graph6(line: str, lineno: int | None = None) -> Graph:
    """Decode one graph6 string; even orders come back as :class:`ClusteredGraph`."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise FormatError("empty graph6 string", lineno)
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise FormatError(f"illegal graph6 character {chr(bad[0])!r}", lineno)
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field", lineno)
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        pos = 8
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field", lineno)
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise FormatError(f"graph6 body has {len(vals) - pos} bytes, n={n} needs {need}", lineno)
    edges = []
    k = 0
    body = vals[pos:]
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if n % 2 == 0:
        return build(n // 2, edges)
    return build_graph(n, edges)


def ingest_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blanks; errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        if line.strip():
            yield from_graph6(line, lineno)


def read_graph6_file(fh: TextIO) -> list[Graph]:
    return list(ingest_graph6(fh))


def to_dot(g: ClusteredGraph, name: str = "G") -> str:
    """DOT source with each cluster drawn on its own rank."""
    q = g.q
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for mu in (1, 2):
        nodes = " ".join(f"v{mu}_{i};" for i in range(1, q + 1))
        out.append(f"  {{ rank=same; {nodes} }}")
    for mu in (1, 2):
        for i in range(1, q + 1):
            out.append(f'  v{mu}_{i} [label="{mu},{i}"];')
    for u, v in g.edges:
        (a, i), (b, j) = g.slot(u), g.slot(v)
        out.append(f"  v{a}_{i} -- v{b}_{j};")
    out.append("}")
    return "\n".join(out) + "\n"
