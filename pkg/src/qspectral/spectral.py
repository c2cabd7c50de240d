"""Exact signless-Laplacian characteristic polynomials.

Polynomials are stored monic, as ``det(x I - Q) = sum_j p_j x^(n-j)`` with
``p_0 = 1``.  Coefficients are Python integers throughout; floating point
appears only in :func:`q_spectrum`, which is for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class QPolynomial:
    """Coefficients ``(p_0, ..., p_n)`` of a monic degree-``n`` polynomial."""

    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        return poly_multiply(self, other)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        coeffs = tuple(int(c) for c in data["coeffs"])
        if len(coeffs) != data["n"] + 1:
            raise ValueError(f"degree {data['n']} needs {data['n'] + 1} coefficients, got {len(coeffs)}")
        return cls(coeffs)

    def __str__(self) -> str:
        n = self.n
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = n - j
            mag = abs(c)
            body = "" if mag == 1 and k else str(mag)
            if k:
                body += "x" if k == 1 else f"x^{k}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def signless_laplacian(g: Graph) -> np.ndarray:
    """``Q = D + A`` as an ``n x n`` integer array."""
    n = g.n
    Q = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        Q[u, v] = Q[v, u] = 1
    Q[np.diag_indices(n)] = g.degrees()
    return Q


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def interpolate_monic(values: Sequence[int]) -> tuple[int, ...]:
    """Integer coefficients of the polynomial taking ``values[k]`` at ``x = k``.

    Solves the Vandermonde system on nodes ``0..d`` through forward
    differences; the falling-factorial coefficients ``D^k f(0) / k!`` must
    come out integral, and a remainder means the input was not an
    integer-coefficient polynomial of degree ``<= d``.
    """
    d = len(values) - 1
    diffs = list(values)
    newton = []
    fact = 1
    for k in range(d + 1):
        if k:
            fact *= k
        q, r = divmod(diffs[0], fact)
        if r:
            raise ArithmeticError(f"values are not an integer polynomial (order-{k} difference {diffs[0]})")
        newton.append(q)
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    # expand sum newton[k] * x (x-1) ... (x-k+1), ascending powers
    poly = [0] * (d + 1)
    basis = [1]
    for k, c in enumerate(newton):
        for p, b in enumerate(basis):
            poly[p] += c * b
        nxt = [0] * (len(basis) + 1)
        for p, b in enumerate(basis):
            nxt[p + 1] += b
            nxt[p] -= k * b
        basis = nxt
    return tuple(reversed(poly))


def q_polynomial(g: Graph) -> QPolynomial:
    """Exact ``det(x I - Q(g))``, evaluated at ``x = 0..n`` and interpolated."""
    n = g.n
    Q = signless_laplacian(g).tolist()
    values = []
    for x in range(n + 1):
        M = [[-Q[i][j] for j in range(n)] for i in range(n)]
        for i in range(n):
            M[i][i] += x
        values.append(bareiss_det(M))
    coeffs = interpolate_monic(values)
    assert coeffs[0] == 1, coeffs
    return QPolynomial(coeffs)


def are_q_cospectral(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return q_polynomial(g) == q_polynomial(h)


def q_spectrum(g: Graph) -> list[float]:
    """Ascending eigenvalues of ``Q(g)``; display and cross-checks only."""
    if g.n == 0:
        return []
    vals = np.linalg.eigvalsh(signless_laplacian(g).astype(float))
    return [max(float(v), 0.0) if abs(v) < 1e-12 else float(v) for v in vals]


def format_spectrum(values: Sequence[float], digits: int = 4) -> str:
    return "{" + ", ".join(f"{v:.{digits}f}".rstrip("0").rstrip(".") for v in values) + "}"


def poly_multiply(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return QPolynomial(tuple(out))
