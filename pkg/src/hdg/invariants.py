"""Exact integer invariants: Smith normal form, first homology, lens spaces."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import BLUE, RED, Crossing, Curve, HeegaardDiagram, algebraic_intersection_matrix, derive_components


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == diag(factors)`` with ``U`` and ``V`` unimodular."""

    factors: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def torsion_order(self) -> int:
        """Order of the presented group, or 0 when it is infinite."""
        out = 1
        for f in self.factors:
            out *= f
        return out


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def smith_normal_form(m) -> SmithForm:
    """Smith normal form of an integer matrix with its transforms.

    >>> smith_normal_form([[2, 0], [0, 3]]).factors
    (1, 6)
    """
    A = [list(map(int, row)) for row in m]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for M in (A, V):
            for r in M:
                r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility fix-up against the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    factors = tuple(A[i][i] for i in range(min(rows, cols)))
    return SmithForm(factors, tuple(map(tuple, U)), tuple(map(tuple, V)))


def homology_factors(d: HeegaardDiagram) -> tuple[int, ...]:
    """Invariant factors of the first homology of the 3-manifold of ``d``."""
    m = algebraic_intersection_matrix(d)
    if not m:
        return ()
    return smith_normal_form(m).factors


def homology_order(d: HeegaardDiagram) -> int:
    """Order of the first homology, 0 when infinite."""
    out = 1
    for f in homology_factors(d):
        out *= f
    return out


# ------------------------------------------------------------------- lenses


@dataclass(frozen=True, order=True)
class LensParams:
    p: int
    q: int

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def normalize_lens(p: int, q: int) -> LensParams:
    """Smallest representative of ``q`` under ``q -> -q`` and ``q -> 1/q`` modulo ``p``."""
    if p < 0:
        raise ValueError("p must be non-negative")
    if p == 0:
        return LensParams(0, 1)
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    if p == 1:
        return LensParams(1, 0)
    q %= p
    inv = pow(q, -1, p)
    return LensParams(p, min(q, -q % p, inv, -inv % p))


def lens_equivalent(a: LensParams, b: LensParams) -> bool:
    if a.p != b.p:
        return False
    if a.p <= 1:
        return True
    return normalize_lens(a.p, a.q) == normalize_lens(b.p, b.q)


def build_lens(p: int, q: int) -> HeegaardDiagram:
    """Genus-one diagram with ``p`` crossings, all of sign ``+1``.

    Crossing ``k`` sits at blue slot ``k``; red slot ``j`` carries crossing
    ``q * j mod p``.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    q %= p
    inv = pow(q, -1, p) if p > 1 else 0
    curves = (Curve(0, BLUE, 1), Curve(1, RED, 1))
    crossings = tuple(Crossing(k, 0, k, 1, (k * inv) % p, 1) for k in range(p))
    return HeegaardDiagram(1, curves, crossings, derive_components(1, curves, crossings))


def recognize_lens(d: HeegaardDiagram) -> LensParams:
    """Read ``L(p, q)`` off a straight genus-one diagram."""
    if d.genus != 1:
        raise ValueError("lens recognition needs a genus-one diagram")
    p = d.n_crossings
    if p == 0:
        raise ValueError("diagram without crossings")
    blue = d.curves_of(BLUE)[0].id
    red = d.curves_of(RED)[0].id
    bseq = d.slots[blue]
    rseq = d.slots[red]
    found = set()
    for bdir in (1, -1):
        for base in range(p):
            number = {bseq[(base + bdir * k) % p]: k for k in range(p)}
            for rdir in (1, -1):
                vals = [number[rseq[(rdir * j) % p]] for j in range(p)]
                diffs = {(vals[(j + 1) % p] - vals[j]) % p for j in range(p)}
                if len(diffs) != 1:
                    raise ValueError("crossing labels along the red curve do not advance by a constant")
                found.add(normalize_lens(p, diffs.pop()))
    if len(found) != 1:
        raise ValueError(f"inconsistent lens readings {sorted(found)}")
    return found.pop()
