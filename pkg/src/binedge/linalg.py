"""Exact linear algebra over the rationals on sparse rows.

A row is a dict ``{column: Fraction}`` with no zero entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional


def _clean(row: dict) -> dict:
    return {k: Fraction(v) for k, v in row.items() if v}


class EchelonBasis:
    """Incrementally maintained echelon form of a row space.

    Each stored row has a distinct pivot column with entry 1; new rows are
    reduced against the stored ones in insertion order.
    """

    def __init__(self, rows: Iterable[dict] = ()):
        self.pivots: dict[int, dict] = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        r = _clean(row)
        while r:
            hit = None
            for col in sorted(r):
                if col in self.pivots:
                    hit = col
                    break
            if hit is None:
                return r
            c = r[hit]
            for k, v in self.pivots[hit].items():
                s = r.get(k, 0) - c * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        return r

    def add(self, row: dict) -> bool:
        """Add ``row``; return True if it was independent of the current span."""
        r = self.reduce(row)
        if not r:
            return False
        col = min(r)
        c = r[col]
        self.pivots[col] = {k: v / c for k, v in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[dict]) -> int:
    return EchelonBasis(rows).rank


def rref(rows: Iterable[dict]) -> list[dict]:
    """Reduced row echelon form (rows sorted by pivot column)."""
    basis = EchelonBasis(rows)
    cols = sorted(basis.pivots)
    # back-substitute so each pivot column is zero in every other row
    out = {c: dict(basis.pivots[c]) for c in cols}
    for c in reversed(cols):
        pivot_row = out[c]
        for d in cols:
            if d != c and c in out[d]:
                factor = out[d][c]
                for k, v in pivot_row.items():
                    s = out[d].get(k, 0) - factor * v
                    if s:
                        out[d][k] = s
                    else:
                        out[d].pop(k, None)
    return [out[c] for c in cols]


def nullspace(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Basis of ``{z : row . z = 0 for every row}``, one vector per free column
    in ascending order; each vector has entry 1 at its free column."""
    reduced = rref(rows)
    pivot_cols = {min(r): r for r in reduced}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: Fraction(1)}
        for p, r in pivot_cols.items():
            v = r.get(free)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def same_span(a: Iterable[dict], b: Iterable[dict]) -> bool:
    """True iff the row spaces of ``a`` and ``b`` coincide."""
    a, b = list(a), list(b)
    ea, eb = EchelonBasis(a), EchelonBasis(b)
    return ea.rank == eb.rank and all(ea.contains(r) for r in b) and all(eb.contains(r) for r in a)


def dot(u: dict, v: dict):
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v[k] for k, c in u.items() if k in v), Fraction(0))


def find_dependency(rows: list[dict]) -> Optional[int]:
    """Index of the first row lying in the span of the previous ones, or None."""
    basis = EchelonBasis()
    for k, r in enumerate(rows):
        if not basis.add(r):
            return k
    return None
