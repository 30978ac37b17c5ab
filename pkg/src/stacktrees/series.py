"""Exact truncated power series in ``t`` whose coefficients are polynomials.

A polynomial is a list of coefficients, lowest degree first.  A series is a
list of polynomials indexed by the power of ``t``.  Everything is exact
(``int`` or ``Fraction``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]
Poly = list[Number]
Series = list[Poly]


def ptrim(a: Poly) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return ptrim(out)


def pscale(a: Poly, c: Number) -> Poly:
    return ptrim([c * v for v in a])


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out: Poly = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(out)


def smul(a: Series, b: Series, n: int) -> Series:
    """Product truncated to ``t^0 .. t^(n-1)``."""
    out: Series = [[] for _ in range(n)]
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] = padd(out[i + j], pmul(x, y))
    return out


def sadd(a: Series, b: Series, n: int) -> Series:
    return [padd(a[i] if i < len(a) else [], b[i] if i < len(b) else []) for i in range(n)]


def sscale(a: Series, c: Number) -> Series:
    return [pscale(x, c) for x in a]


def sinv(a: Series, n: int) -> Series:
    """Inverse of a series whose constant term is the polynomial ``1``."""
    if ptrim(a[0]) != [1]:
        raise ValueError("series inverse needs constant term 1")
    out: Series = [[1]]
    for k in range(1, n):
        acc: Poly = []
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = padd(acc, pmul(a[i], out[k - i]))
        out.append(pscale(acc, -1))
    return out


def ssqrt(a: Series, n: int) -> Series:
    """Square root with constant term 1, by Newton iteration ``b <- (b + a/b) / 2``.

    Precision doubles each round, so only the last round runs at full size.
    """
    if ptrim(a[0]) != [1]:
        raise ValueError("series square root needs constant term 1")
    b: Series = [[1]]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        b = sscale(sadd(b, smul(a, sinv(b, prec), prec), prec), Fraction(1, 2))
    return b[:n]


def as_int(x: Number) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {x}")
        return x.numerator
    return x


@dataclass
class SeriesTable:
    """Exact integer coefficients keyed by exponent tuples.

    ``names`` labels the exponents, e.g. ``("t", "p")``; ``bounds`` are the
    inclusive truncation limits.  Missing keys are zero coefficients.
    """

    names: tuple[str, ...]
    bounds: tuple[int, ...]
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    @classmethod
    def from_series(cls, names: tuple[str, str], s: Series, bound2: int | None = None) -> "SeriesTable":
        coeffs = {}
        for n, poly in enumerate(s):
            for k, c in enumerate(poly):
                c = as_int(c)
                if c:
                    coeffs[(n, k)] = c
        if bound2 is None:
            bound2 = max((k for _, k in coeffs), default=0)
        return cls(names, (len(s) - 1, bound2), coeffs)

    def __getitem__(self, exps: tuple[int, ...]) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesTable):
            return NotImplemented
        return self.names == other.names and self.coeffs == other.coeffs

    def restrict(self, n_max: int) -> "SeriesTable":
        """Keep only terms whose first exponent is ``<= n_max``."""
        kept = {e: c for e, c in self.coeffs.items() if e[0] <= n_max}
        return SeriesTable(self.names, (n_max,) + self.bounds[1:], kept)

    def row(self, n: int) -> dict[tuple[int, ...], int]:
        return {e[1:]: c for e, c in sorted(self.coeffs.items()) if e[0] == n}

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.coeffs.items())

    def monomials(self) -> list[str]:
        out = []
        for exps, c in self.items():
            factors = []
            for name, e in zip(self.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors) or "1"
            out.append(body if c == 1 and factors else f"{c}*{body}" if factors else str(c))
        return out

    def to_text(self) -> str:
        return " + ".join(self.monomials()) or "0"

    def to_json(self) -> str:
        doc = {
            "n": self.bounds[0],
            "vars": list(self.names),
            "coeffs": [list(e) + [str(c)] for e, c in self.items()],
        }
        return json.dumps(doc)
