"""Sparse multivariate polynomials with exact coefficients in pure lex order,
multivariate division and Buchberger's algorithm.

Monomials are exponent tuples. Variable 0 is the largest, so the lex order is
plain tuple comparison. For a binomial edge ideal on n vertices the ring has
2n variables ``x1..xn, y1..yn`` in that order.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, DomainError

Monomial = tuple


class RationalField:
    """The rationals. Integral values are kept as ``int`` for speed."""

    name = "QQ"
    characteristic = 0

    def __call__(self, c):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c

    def normalize(self, c):
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        if isinstance(a, int) and isinstance(b, int):
            if a % b == 0:
                return a // b
            return Fraction(a, b)
        return self.normalize(Fraction(a) / b)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime ``p``, stored as representatives in 0..p-1."""

    characteristic: int

    def __init__(self, p: int = 32003):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, c):
        if isinstance(c, Fraction):
            return self.div(c.numerator, c.denominator)
        return int(c) % self.characteristic

    def normalize(self, c):
        return c % self.characteristic

    def div(self, a, b):
        p = self.characteristic
        if b % p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a * pow(b, -1, p) % p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return self.name


QQ = RationalField()


def field_from_string(text: Optional[str]):
    """Parse ``"q"`` (rationals) or ``"p:<prime>"``; ``None`` reads ``BEID_FIELD``."""
    if text is None:
        text = os.environ.get("BEID_FIELD", "q")
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("p"):
        _, _, tail = text.partition(":")
        return PrimeField(int(tail) if tail else 32003)
    raise DomainError(f"unknown coefficient field {text!r}; use 'q' or 'p:<prime>'")


def edge_ring_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def render_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("terms", "nvars", "field", "_lm")

    def __init__(self, terms: dict, nvars: int, field=QQ):
        self.terms = {m: c for m, c in terms.items() if c != 0}
        self.nvars = nvars
        self.field = field
        self._lm = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int, field) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p.field = field
        p._lm = None
        return p

    @classmethod
    def zero(cls, nvars: int, field=QQ) -> "Polynomial":
        return cls._raw({}, nvars, field)

    @classmethod
    def monomial(cls, m: Monomial, coeff=1, field=QQ) -> "Polynomial":
        return cls({tuple(m): field(coeff)}, len(m), field)

    @classmethod
    def variable(cls, index: int, nvars: int, field=QQ) -> "Polynomial":
        m = [0] * nvars
        m[index] = 1
        return cls({tuple(m): 1}, nvars, field)

    # -- basic accessors

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise DomainError("zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self) -> list[tuple[object, Monomial]]:
        """``(coefficient, monomial)`` pairs in strictly descending lex order."""
        return [(self.terms[m], m) for m in sorted(self.terms, reverse=True)]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # -- arithmetic

    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars or other.field != self.field:
            raise DomainError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        norm = self.field.normalize
        for m, c in other.terms.items():
            s = norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars, self.field)

    def __neg__(self) -> "Polynomial":
        norm = self.field.normalize
        return Polynomial._raw({m: norm(-c) for m, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, coeff, mono: Optional[Monomial] = None) -> "Polynomial":
        """Multiply by ``coeff * mono``."""
        norm = self.field.normalize
        if not coeff:
            return Polynomial.zero(self.nvars, self.field)
        if mono is None or not any(mono):
            terms = {m: norm(c * coeff) for m, c in self.terms.items()}
        else:
            terms = {monomial_mul(m, mono): norm(c * coeff) for m, c in self.terms.items()}
        return Polynomial._raw(terms, self.nvars, self.field)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(self.field(other))
        self._check(other)
        out: dict = {}
        norm = self.field.normalize
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                out[m] = norm(out.get(m, 0) + c1 * c2)
        return Polynomial({m: c for m, c in out.items() if c}, self.nvars, self.field)

    __rmul__ = __mul__

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        div = self.field.div
        return Polynomial._raw({m: div(c, lc) for m, c in self.terms.items()}, self.nvars, self.field)

    # -- comparison and display

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = edge_ring_names(self.nvars // 2) if self.nvars % 2 == 0 else tuple(
                f"z{i}" for i in range(1, self.nvars + 1)
            )
        if not self.terms:
            return "0"
        pieces = []
        for k, (c, m) in enumerate(self.sorted_terms()):
            negative = c < 0 if isinstance(self.field, RationalField) else False
            mag = -c if negative else c
            mono = render_monomial(m, names)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def sort_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Sort by leading monomial, largest first."""
    return sorted(polys, key=lambda p: p.lm, reverse=True)


# ------------------------------------------------------------------ division


def reduce(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Normal form of ``f``: no term is divisible by a leading monomial of ``basis``."""
    basis = [g for g in basis if g]
    if not basis:
        return f
    field = f.field
    norm = field.normalize
    div = field.div
    leads = [(g.lm, g.lc, g) for g in basis]
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p)
        c = p[m]
        for lm, lc, g in leads:
            if monomial_divides(lm, m):
                q = monomial_quotient(m, lm)
                factor = div(c, lc)
                for gm, gc in g.terms.items():
                    t = monomial_mul(gm, q)
                    s = norm(p.get(t, 0) - factor * gc)
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = p.pop(m)
    return Polynomial._raw(rem, f.nvars, field)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = monomial_lcm(f.lm, g.lm)
    field = f.field
    a = f.scale(field.div(1, f.lc), monomial_quotient(lcm, f.lm))
    b = g.scale(field.div(1, g.lc), monomial_quotient(lcm, g.lm))
    return a - b


# --------------------------------------------------------------- Buchberger

DEFAULT_MAX_PAIRS = 200_000


def interreduce(basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced form of a Groebner basis: minimal, inter-reduced, monic, sorted."""
    polys = [g.monic() for g in basis if g]
    polys.sort(key=lambda p: p.lm)
    minimal = []
    for g in polys:
        if not any(monomial_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        out.append(reduce(g, others).monic())
    return sort_basis(out)


def buchberger(
    gens: Sequence[Polynomial],
    max_pairs: int = DEFAULT_MAX_PAIRS,
    chain_criterion: bool = True,
) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm degree, then
    smallest lcm, then indices). Coprime leading monomials are skipped, and
    with ``chain_criterion`` so is a pair (i, j) whose lcm is divisible by the
    leading monomial of some k with (i, k) and (j, k) already treated.
    Raises CapacityError after ``max_pairs`` S-polynomial reductions.
    """
    # dropping generators by leading monomial is only sound for a Groebner
    # basis, so the input is merely deduplicated here
    G: list[Polynomial] = []
    for f in gens:
        if f and f.monic() not in G:
            G.append(f.monic())
    if not G:
        return []
    pending: set[tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}
    treated: set[tuple[int, int]] = set()
    lcms: dict[tuple[int, int], Monomial] = {}

    def pair_key(pair):
        lcm = lcms.get(pair)
        if lcm is None:
            lcm = lcms[pair] = monomial_lcm(G[pair[0]].lm, G[pair[1]].lm)
        return (sum(lcm), lcm, pair)

    reductions = 0
    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        i, j = pair
        lcm = lcms[pair]
        fi, fj = G[i], G[j]
        treated.add(pair)
        if lcm == monomial_mul(fi.lm, fj.lm):
            continue
        if chain_criterion and any(
            k != i and k != j
            and monomial_divides(G[k].lm, lcm)
            and (min(i, k), max(i, k)) in treated
            and (min(j, k), max(j, k)) in treated
            for k in range(len(G))
        ):
            continue
        reductions += 1
        if reductions > max_pairs:
            raise CapacityError(f"Buchberger exceeded {max_pairs} S-pair reductions")
        r = reduce(s_polynomial(fi, fj), G)
        if r:
            G.append(r.monic())
            new = len(G) - 1
            pending.update((k, new) for k in range(new))
    return interreduce(G)


def is_groebner_basis(basis: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion, checked on every pair without shortcuts."""
    basis = [g for g in basis if g]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if reduce(s_polynomial(basis[a], basis[b]), basis):
                return False
    return True


def is_reduced_basis(basis: Sequence[Polynomial]) -> bool:
    """Monic, and no term of any element divisible by another element's leading monomial."""
    for k, g in enumerate(basis):
        if g.lc != 1:
            return False
        for h_index, h in enumerate(basis):
            if h_index != k and any(monomial_divides(h.lm, m) for m in g.terms):
                return False
    return True


def is_quadratic_basis(basis: Iterable[Polynomial]) -> bool:
    """True iff every element has total degree 2 (vacuously true when empty)."""
    return all(p.total_degree() == 2 for p in basis)
