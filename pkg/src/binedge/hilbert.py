"""Truncated power series and Hilbert series of monomial quotients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError
from .poly import monomial_divides

DEFAULT_TRUNCATION = 12


def _exact(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class PowerSeries:
    """Power series in ``t`` known through degree ``N`` (exact coefficients)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(_exact(c) for c in coeffs)
        if not self.coeffs:
            raise DomainError("a power series needs at least the constant term")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, N: int) -> "PowerSeries":
        padded = list(coeffs[: N + 1]) + [0] * (N + 1 - len(coeffs))
        return cls(padded)

    def truncate(self, N: int) -> "PowerSeries":
        if N > self.N:
            raise DomainError(f"cannot extend a series known through degree {self.N} to {N}")
        return PowerSeries(self.coeffs[: N + 1])

    def _align(self, other: "PowerSeries") -> int:
        return min(self.N, other.N)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        N = self._align(other)
        return PowerSeries(a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs[: N + 1]))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        N = self._align(other)
        return PowerSeries(a - b for a, b in zip(self.coeffs[: N + 1], other.coeffs[: N + 1]))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if d == 0 else f"{c}*t^{d}")
        return (" + ".join(terms) or "0") + f" + O(t^{self.N + 1})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    N = min(a.N, b.N)
    out = [0] * (N + 1)
    for i, ai in enumerate(a.coeffs[: N + 1]):
        if ai:
            for j in range(N + 1 - i):
                out[i + j] += ai * b.coeffs[j]
    return PowerSeries(out)


def series_inverse(s: PowerSeries) -> PowerSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise DomainError("series with zero constant term is not invertible")
    inv = [Fraction(1) / c0]
    for d in range(1, s.N + 1):
        acc = sum(s.coeffs[k] * inv[d - k] for k in range(1, d + 1))
        inv.append(-acc / c0)
    return PowerSeries(inv)


def free_series(nvars: int, N: int) -> PowerSeries:
    """Hilbert series of a polynomial ring in ``nvars`` variables."""
    if nvars == 0:
        return PowerSeries([1] + [0] * N)
    return PowerSeries(comb(nvars - 1 + d, d) for d in range(N + 1))


# ------------------------------------------------------- monomial quotients


def minimalize(gens: Iterable[tuple]) -> list[tuple]:
    """Minimal generators of the monomial ideal generated by ``gens``."""
    out: list[tuple] = []
    for m in sorted(set(gens), key=sum):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _pairwise_coprime(gens: list[tuple]) -> bool:
    seen = [False] * len(gens[0])
    for m in gens:
        for k, e in enumerate(m):
            if e:
                if seen[k]:
                    return False
                seen[k] = True
    return True


def hilbert_numerator(gens: Sequence[tuple]) -> list[int]:
    """Coefficients of K(t) with HS(S/I) = K(t) / (1 - t)^v.

    Splits on a pivot variable x: K(I) = K(I + <x>) + t K(I : x), which is
    the quotient recursion HS(I + <x>) = HS(I) - t HS(I : x) rearranged. The
    pivot is the variable occurring in the most generators.
    """
    gens = minimalize(gens)
    if not gens:
        return [1]
    if _pairwise_coprime(gens):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    nvars = len(gens[0])
    counts = [sum(1 for m in gens if m[k]) for k in range(nvars)]
    v = max(range(nvars), key=lambda k: (counts[k], -k))
    x = tuple(1 if k == v else 0 for k in range(nvars))
    plus = [m for m in gens if not m[v]] + [x]
    colon = [m[:v] + (max(m[v] - 1, 0),) + m[v + 1:] for m in gens]
    return _poly_add(hilbert_numerator(plus), [0] + hilbert_numerator(colon))


def hilbert_series(leading_monomials: Sequence[tuple], N: int = DEFAULT_TRUNCATION,
                   nvars: int | None = None) -> PowerSeries:
    """Hilbert series of S / <leading_monomials>, truncated at degree ``N``.

    ``nvars`` is required when no monomials are given.
    """
    if N < 0:
        raise DomainError("truncation order must be non-negative")
    gens = [tuple(m) for m in leading_monomials]
    if nvars is None:
        if not gens:
            raise DomainError("nvars is required for an empty generator list")
        nvars = len(gens[0])
    if any(len(m) != nvars for m in gens):
        raise DomainError("monomials of inconsistent length")
    if any(not any(m) for m in gens):
        # the unit ideal
        return PowerSeries([0] * (N + 1))
    num = PowerSeries.from_polynomial(hilbert_numerator(gens), N)
    return series_mul(num, free_series(nvars, N))
