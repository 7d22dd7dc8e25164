"""Binomial edge ideals: generators, admissible paths, the combinatorial
Groebner basis and Hilbert-series tests for adding an edge."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import Graph, check_labeling, identity_labeling
from .hilbert import PowerSeries, hilbert_series, series_inverse, series_mul
from .poly import QQ, Polynomial, buchberger, is_quadratic_basis, sort_basis

DEFAULT_CHECK_TRUNCATION = 10


def edge_binomial(n: int, i: int, j: int, field=QQ) -> Polynomial:
    """``x_i y_j - x_j y_i`` for positions ``i < j``."""
    if i > j:
        i, j = j, i
    a = [0] * (2 * n)
    b = [0] * (2 * n)
    a[i - 1] = a[n + j - 1] = 1
    b[j - 1] = b[n + i - 1] = 1
    return Polynomial._raw({tuple(a): 1, tuple(b): field.normalize(-1)}, 2 * n, field)


@dataclass(frozen=True)
class BinomialEdgeIdeal:
    graph: Graph
    labeling: tuple
    generators: tuple

    @property
    def n(self) -> int:
        return self.graph.n


def build_ideal(g: Graph, lab=None, field=QQ) -> BinomialEdgeIdeal:
    """One generator per edge, in labeled positions, sorted by (i, j)."""
    lab = identity_labeling(g.n) if lab is None else check_labeling(lab, g.n)
    h = g.relabel(lab)
    gens = tuple(edge_binomial(g.n, i, j, field) for i, j in h.sorted_edges())
    return BinomialEdgeIdeal(g, lab, gens)


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: tuple
    monomial: tuple

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def path_monomial(n: int, path: Sequence[int]) -> tuple:
    """Exponent vector of ``prod_{v > j} x_v * prod_{v < i} y_v`` over the interior."""
    i, j = path[0], path[-1]
    m = [0] * (2 * n)
    for v in path[1:-1]:
        if v > j:
            m[v - 1] += 1
        elif v < i:
            m[n + v - 1] += 1
    return tuple(m)


def is_admissible(h: Graph, path: Sequence[int]) -> bool:
    """Check the three admissibility conditions on ``h`` literally."""
    i, j = path[0], path[-1]
    if i >= j:
        return False
    if any(not h.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    if len(set(path)) != len(path):
        return False
    interior = path[1:-1]
    if any(i <= v <= j for v in interior):
        return False
    r = len(interior)
    for size in range(r):
        for sub in itertools.combinations(interior, size):
            seq = (i,) + sub + (j,)
            if all(h.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                return False
    return True


def _iter_admissible(h: Graph, i: int, j: int) -> Iterator[tuple]:
    # DFS through vertices outside [i, j], ascending neighbour order
    def walk(path, used):
        u = path[-1]
        for w in sorted(h.adj[u]):
            if w == j:
                cand = tuple(path) + (j,)
                if is_admissible(h, cand):
                    yield cand
            elif (w < i or w > j) and w not in used:
                path.append(w)
                used.add(w)
                yield from walk(path, used)
                used.discard(w)
                path.pop()

    yield from walk([i], {i})


def admissible_paths(g: Graph, lab, i: int, j: int) -> list[AdmissiblePath]:
    """All admissible paths between positions ``i < j`` of ``g`` under ``lab``,
    sorted by length and then by vertex sequence (in positions)."""
    lab = identity_labeling(g.n) if lab is None else check_labeling(lab, g.n)
    if not i < j:
        raise ValueError(f"need i < j, got {i}, {j}")
    h = g.relabel(lab)
    found = sorted(set(_iter_admissible(h, i, j)), key=lambda p: (len(p), p))
    return [AdmissiblePath(p, path_monomial(g.n, p)) for p in found]


def _combinatorial_elements(h: Graph, field) -> Iterator[Polynomial]:
    n = h.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = None
            for path in _iter_admissible(h, i, j):
                if f is None:
                    f = edge_binomial(n, i, j, field)
                yield f.scale(1, path_monomial(n, path))


def combinatorial_gb(g: Graph, lab=None, field=QQ) -> list[Polynomial]:
    """``{u_pi * f_ij}`` over all admissible paths, deduplicated, monic and
    sorted by leading monomial (descending).

    The set is not inter-reduced here, so comparing it against the output of
    :func:`buchberger` tests the claim that it is already reduced.
    """
    lab = identity_labeling(g.n) if lab is None else check_labeling(lab, g.n)
    h = g.relabel(lab)
    return sort_basis(set(p.monic() for p in _combinatorial_elements(h, field)))


def has_quadratic_combinatorial_gb(g: Graph, lab=None) -> bool:
    """Same as ``is_quadratic_basis(combinatorial_gb(g, lab))``, stopping at
    the first element of degree above 2."""
    lab = identity_labeling(g.n) if lab is None else check_labeling(lab, g.n)
    h = g.relabel(lab)
    return all(p.total_degree() == 2 for p in _combinatorial_elements(h, QQ))


def quadratic_gb_labeling(g: Graph) -> Optional[tuple]:
    """First labeling (lexicographic permutation order) with a quadratic
    combinatorial Groebner basis, or None."""
    for perm in itertools.permutations(range(1, g.n + 1)):
        if has_quadratic_combinatorial_gb(g, perm):
            return perm
    return None


def oracle_gb(g: Graph, lab=None, field=QQ, **kwargs) -> list[Polynomial]:
    """Reduced Groebner basis of J_G computed by Buchberger's algorithm."""
    return buchberger(build_ideal(g, lab, field).generators, **kwargs)


# ----------------------------------------------------------- adding an edge


def quotient_series(g: Graph, N: int = DEFAULT_CHECK_TRUNCATION, lab=None, **kwargs) -> PowerSeries:
    """Hilbert series of S / J_G through degree N, from the reduced GB."""
    gb = oracle_gb(g, lab, **kwargs)
    return hilbert_series([p.lm for p in gb], N, nvars=2 * g.n)


@dataclass(frozen=True)
class EdgeCheck:
    """Outcome of an edge-addition test.

    ``holds`` is exact when False. When True it is certified only through
    degree ``truncation``.
    """

    holds: bool
    truncation: int
    series_before: PowerSeries
    series_after: PowerSeries
    first_difference: Optional[int] = None

    def __bool__(self):
        return self.holds


def _first_difference(a: PowerSeries, b: PowerSeries) -> Optional[int]:
    for d, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return d
    return None


def _both_series(g: Graph, e, N: int, **kwargs):
    u, v = e
    bigger = g.add_edge(u, v)
    return quotient_series(g, N, **kwargs), quotient_series(bigger, N, **kwargs)


def _one_minus_t2(N: int) -> PowerSeries:
    return PowerSeries.from_polynomial([1, 0, -1], N)


def nonzerodivisor_check(g: Graph, e, N: int = DEFAULT_CHECK_TRUNCATION, **kwargs) -> EdgeCheck:
    """Compare H_{S/J_{G+e}} with (1 - t^2) H_{S/J_G} through degree N."""
    h_a, h_b = _both_series(g, e, N, **kwargs)
    expected = series_mul(_one_minus_t2(N), h_a)
    diff = _first_difference(h_b, expected)
    return EdgeCheck(diff is None, N, h_a, h_b, diff)


def strongly_free_check(g: Graph, e, N: int = DEFAULT_CHECK_TRUNCATION, **kwargs) -> EdgeCheck:
    """Compare 1/H_A with 1/H_B - t^2 through degree N (A = S/J_G, B = S/J_{G+e})."""
    h_a, h_b = _both_series(g, e, N, **kwargs)
    t2 = PowerSeries.from_polynomial([0, 0, 1], N)
    lhs = series_inverse(h_a)
    rhs = series_inverse(h_b) - t2
    diff = _first_difference(lhs, rhs)
    return EdgeCheck(diff is None, N, h_a, h_b, diff)


__all__ = [
    "AdmissiblePath",
    "BinomialEdgeIdeal",
    "EdgeCheck",
    "admissible_paths",
    "build_ideal",
    "combinatorial_gb",
    "edge_binomial",
    "has_quadratic_combinatorial_gb",
    "is_admissible",
    "is_quadratic_basis",
    "nonzerodivisor_check",
    "oracle_gb",
    "path_monomial",
    "quadratic_gb_labeling",
    "quotient_series",
    "strongly_free_check",
]
