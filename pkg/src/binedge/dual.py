"""Quadratic dual of S/J_G and the first two Betti numbers of the residue
field over S/J_G.

Letters of the free algebra are indexed ``0..2n-1`` standing for
``x1..xn, y1..yn``. Degree-2 words ``a*b`` are coordinates ``a * 2n + b`` in
the dual monomial basis of ``V (x) V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional, Sequence

from .errors import CapacityError, DomainError
from .graphs import Graph
from .ideal import build_ideal
from .linalg import EchelonBasis, dot, nullspace, rank, same_span
from .poly import Polynomial, edge_ring_names

BETTI_MAX_N = 6


@dataclass(frozen=True)
class NCQuadraticRelation:
    """``sum c_ab * a * b`` in the free algebra on ``nletters`` letters.

    ``terms`` keeps insertion order, which is the display order; equality
    ignores it.
    """

    nletters: int
    terms: tuple = field(default=())

    @classmethod
    def from_pairs(cls, nletters: int, pairs) -> "NCQuadraticRelation":
        acc: dict = {}
        for (a, b), c in pairs:
            acc[(a, b)] = acc.get((a, b), 0) + Fraction(c)
        return cls(nletters, tuple((ab, c) for ab, c in acc.items() if c))

    def __eq__(self, other):
        if not isinstance(other, NCQuadraticRelation):
            return NotImplemented
        return self.nletters == other.nletters and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.nletters, frozenset(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def vector(self) -> dict:
        m = self.nletters
        return {a * m + b: c for (a, b), c in self.terms}

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        names = edge_ring_names(self.nletters // 2) if names is None else names
        out = []
        for k, ((a, b), c) in enumerate(self.terms):
            word = f"{names[a]}^2" if a == b else f"{names[a]}*{names[b]}"
            mag = -c if c < 0 else c
            body = word if mag == 1 else f"{mag}*{word}"
            if k == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out) or "0"

    def __str__(self):
        return self.render()


def _anticommutator(a: int, b: int, c=1) -> list:
    if a == b:
        return [((a, a), c)]
    return [((a, b), c), ((b, a), c)]


def dual_generators(g: Graph) -> list[NCQuadraticRelation]:
    """Generators of J_G^perp: squares, same-letter anticommutators, mixed
    anticommutators for non-edges (including i = j) and one four-term
    relation per edge."""
    n = g.n
    m = 2 * n
    x = lambda i: i - 1  # noqa: E731
    y = lambda i: n + i - 1  # noqa: E731
    rels = []
    for letter in (x, y):
        for i in range(1, n + 1):
            rels.append([((letter(i), letter(i)), 1)])
    for letter in (x, y):
        for j in range(1, n + 1):
            for i in range(j + 1, n + 1):
                rels.append(_anticommutator(letter(i), letter(j)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or not g.has_edge(i, j):
                rels.append(_anticommutator(x(i), y(j)))
    for i, j in g.sorted_edges():
        rels.append(_anticommutator(x(i), y(j)) + _anticommutator(x(j), y(i)))
    return [NCQuadraticRelation.from_pairs(m, r) for r in rels]


def expected_dual_count(g: Graph) -> int:
    return comb(2 * g.n + 1, 2) - g.m


def _sym_columns(nvars: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(nvars) for k in range(j, nvars)]


def dual_generators_general(quadratic_ideal_basis: Sequence[Polynomial],
                            nvars: Optional[int] = None) -> list[NCQuadraticRelation]:
    """Dual relations of a commutative quadratic algebra.

    Each generator ``sum b_jk X_j X_k`` (j <= k) becomes a row of a linear
    system in unknowns ``Z_jk``; every kernel vector ``c`` gives the relation
    ``sum c_jk [Y_j, Y_k]`` with ``[Y_j, Y_k] = Y_j Y_k + Y_k Y_j`` and
    ``[Y_j, Y_j] = Y_j^2``.
    """
    polys = list(quadratic_ideal_basis)
    if nvars is None:
        if not polys:
            raise DomainError("nvars is required for an empty input")
        nvars = polys[0].nvars
    cols = _sym_columns(nvars)
    index = {jk: c for c, jk in enumerate(cols)}
    rows = []
    for p in polys:
        if p.nvars != nvars:
            raise DomainError("generators live in different rings")
        row = {}
        for mono, coeff in p.terms.items():
            if sum(mono) != 2:
                raise DomainError(f"generator {p} is not homogeneous quadratic")
            support = [k for k, e in enumerate(mono) for _ in range(e)]
            row[index[(support[0], support[1])]] = Fraction(coeff)
        rows.append(row)
    out = []
    for vec in nullspace(rows, len(cols)):
        pairs = []
        for c in sorted(vec):
            j, k = cols[c]
            pairs.extend(_anticommutator(j, k, vec[c]))
        out.append(NCQuadraticRelation.from_pairs(nvars, pairs))
    return out


class OrthogonalityResult(NamedTuple):
    all_orthogonal: bool
    span_dim: int
    expected_dim: int


def quadratic_relation_space(g: Graph) -> list[dict]:
    """Spanning rows of I_2 in V (x) V: all commutators ``ab - ba`` and the
    symmetrised lifts of the edge binomials."""
    m = 2 * g.n
    rows = []
    for a in range(m):
        for b in range(a + 1, m):
            rows.append({a * m + b: Fraction(1), b * m + a: Fraction(-1)})
    half = Fraction(1, 2)
    for f in build_ideal(g).generators:
        row: dict = {}
        for mono, c in f.terms.items():
            a, b = [k for k, e in enumerate(mono) for _ in range(e)]
            if a == b:
                row[a * m + a] = row.get(a * m + a, 0) + Fraction(c)
            else:
                row[a * m + b] = row.get(a * m + b, 0) + c * half
                row[b * m + a] = row.get(b * m + a, 0) + c * half
        rows.append(row)
    return rows


def verify_orthogonality(g: Graph, relations: Sequence[NCQuadraticRelation]) -> OrthogonalityResult:
    """Pair every relation with I_2 and compute the rank of the relations."""
    i2 = quadratic_relation_space(g)
    vecs = [r.vector() for r in relations]
    ok = all(dot(v, w) == 0 for v in vecs for w in i2)
    m = 2 * g.n
    return OrthogonalityResult(ok, rank(vecs), m * m - rank(i2))


def same_relation_span(a: Sequence[NCQuadraticRelation], b: Sequence[NCQuadraticRelation]) -> bool:
    return same_span([r.vector() for r in a], [r.vector() for r in b])


# ------------------------------------------------------------------- Betti


@dataclass(frozen=True)
class BettiReport:
    beta1: int
    beta2: int
    beta2_verified: Optional[int] = None

    @property
    def match(self) -> Optional[bool]:
        if self.beta2_verified is None:
            return None
        return self.beta2_verified == self.beta2


def betti_formula(g: Graph) -> BettiReport:
    n = g.n
    return BettiReport(2 * n, comb(2 * n, 2) + g.m)


class _SyzygySpace:
    """The degree-one syzygy problem ``sum a_p chi_p = 0`` with ``a_p`` linear.

    Domain coordinates are pairs (position p, variable l), index ``p*2n + l``;
    the target is S_2 with columns indexed by sorted variable pairs.
    """

    def __init__(self, g: Graph):
        if g.n > BETTI_MAX_N:
            raise CapacityError(f"brute-force Betti numbers limited to n <= {BETTI_MAX_N}")
        self.g = g
        self.m = m = 2 * g.n
        cols = _sym_columns(m)
        self.col = {jk: c for c, jk in enumerate(cols)}
        self.relations = EchelonBasis()
        for f in build_ideal(g).generators:
            row = {}
            for mono, c in f.terms.items():
                a, b = [k for k, e in enumerate(mono) for _ in range(e)]
                row[self.col[(a, b)]] = Fraction(c)
            self.relations.add(row)

    def image(self, vec: dict) -> dict:
        """Image in S_2 of a domain vector."""
        out: dict = {}
        m = self.m
        for idx, c in vec.items():
            p, l = divmod(idx, m)
            col = self.col[(min(p, l), max(p, l))]
            out[col] = out.get(col, 0) + c
        return {k: v for k, v in out.items() if v}

    def map_rank(self) -> int:
        """Rank of the map into R_2 = S_2 / span(f_ij)."""
        basis = EchelonBasis()
        for pivot_row in self.relations.pivots.values():
            basis.add(pivot_row)
        base = basis.rank
        m = self.m
        for p in range(m):
            for l in range(m):
                basis.add(self.image({p * m + l: Fraction(1)}))
        return basis.rank - base

    def kernel_dim(self) -> int:
        return self.m * self.m - self.map_rank()

    def explicit_syzygies(self) -> list[dict]:
        """Koszul syzygies for every pair of positions, then one syzygy per edge."""
        m, n = self.m, self.g.n
        out = []
        for p in range(m):
            for q in range(p + 1, m):
                out.append({p * m + q: Fraction(1), q * m + p: Fraction(-1)})
        for i, j in self.g.sorted_edges():
            xi, xj, yi, yj = i - 1, j - 1, n + i - 1, n + j - 1
            out.append({xi * m + yj: Fraction(1), xj * m + yi: Fraction(-1)})
        return out

    def in_kernel(self, vec: dict) -> bool:
        return self.relations.contains(self.image(vec))


def betti2_bruteforce(g: Graph) -> int:
    """Dimension of the space of linear syzygies of ``(x1..xn, y1..yn)`` over S/J_G."""
    return _SyzygySpace(g).kernel_dim()


@dataclass(frozen=True)
class SyzygyCertificate:
    count: int
    all_in_kernel: bool
    independent: bool
    kernel_dim: int

    @property
    def spans_kernel(self) -> bool:
        return self.all_in_kernel and self.independent and self.count == self.kernel_dim


def explicit_syzygy_certificate(g: Graph) -> SyzygyCertificate:
    """Check the explicit Koszul and edge syzygies against the brute-force kernel."""
    space = _SyzygySpace(g)
    syz = space.explicit_syzygies()
    return SyzygyCertificate(
        count=len(syz),
        all_in_kernel=all(space.in_kernel(v) for v in syz),
        independent=rank(syz) == len(syz),
        kernel_dim=space.kernel_dim(),
    )


def betti_report(g: Graph, verify: bool = True) -> BettiReport:
    report = betti_formula(g)
    if verify and g.n <= BETTI_MAX_N:
        return BettiReport(report.beta1, report.beta2, betti2_bruteforce(g))
    return report
