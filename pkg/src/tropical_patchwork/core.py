"""Instance domain types: homogeneous min-plus polynomials and sign distributions.

Polynomials are min-plus: evaluation is min(c_v + <x, v>) over the support.
Coefficients are exact rationals throughout; the patchworking pipeline
additionally requires the support to be every lattice point of the dilated
standard simplex.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class PatchworkError(Exception):
    """Base class for errors raised by this package."""


class ParseError(PatchworkError, ValueError):
    """Malformed instance text."""


def lattice_point_count(n: int, d: int) -> int:
    """Number of lattice points of the degree-d dilated (n-1)-simplex."""
    return math.comb(d + n - 1, n - 1)


def lattice_points(n: int, d: int) -> list[Exponent]:
    """All v in Z^n with v >= 0 and sum(v) == d, lexicographically decreasing."""
    if n < 2:
        raise ValueError("need at least two variables")
    if d < 1:
        raise ValueError("degree must be at least one")
    out: list[Exponent] = []

    def emit(prefix: Exponent, rest: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (rest,))
            return
        for first in range(rest, -1, -1):
            emit(prefix + (first,), rest - first, slots - 1)

    emit((), d, n)
    return out


def antipode(z: int, n: int) -> int:
    """Flip all n coordinate bits of an orthant mask."""
    return ~z & ((1 << n) - 1)


def orthant_bits(z: int, n: int) -> tuple[int, ...]:
    """Orthant mask as the coordinate tuple (z_1, ..., z_n)."""
    return tuple((z >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class TropicalPolynomial:
    """Homogeneous min-plus polynomial with exact rational coefficients.

    Terms are stored in the canonical order (exponents lexicographically
    decreasing) regardless of construction order.
    """

    n: int
    d: int
    exponents: tuple[Exponent, ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two variables")
        if self.d < 1:
            raise ValueError("degree must be at least one")
        if len(self.exponents) != len(self.coefficients):
            raise ValueError("exponent/coefficient length mismatch")
        if not self.exponents:
            raise ValueError("empty support")
        seen = set()
        for v in self.exponents:
            if len(v) != self.n:
                raise ValueError(f"exponent {v} has wrong length")
            if any(e < 0 for e in v):
                raise ValueError(f"negative entry in exponent {v}")
            if sum(v) != self.d:
                raise ValueError(f"term {v} has degree {sum(v)}, expected {self.d}")
            if v in seen:
                raise ValueError(f"duplicate exponent {v}")
            seen.add(v)
        order = sorted(range(len(self.exponents)),
                       key=lambda i: self.exponents[i], reverse=True)
        object.__setattr__(self, "exponents",
                           tuple(self.exponents[i] for i in order))
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(self.coefficients[i]) for i in order))

    @staticmethod
    def from_terms(terms: Iterable[tuple[Sequence[int], Fraction | int | str]]) -> "TropicalPolynomial":
        """Build from (exponent, coefficient) pairs, inferring n and d."""
        exps = []
        coeffs = []
        for v, c in terms:
            exps.append(tuple(int(e) for e in v))
            coeffs.append(Fraction(c))
        if not exps:
            raise ValueError("empty support")
        return TropicalPolynomial(len(exps[0]), sum(exps[0]), tuple(exps), tuple(coeffs))

    @cached_property
    def index(self) -> dict[Exponent, int]:
        return {v: i for i, v in enumerate(self.exponents)}

    @cached_property
    def has_full_support(self) -> bool:
        return (len(self.exponents) == lattice_point_count(self.n, self.d)
                and set(self.exponents) == set(lattice_points(self.n, self.d)))

    def coefficient(self, v: Exponent) -> Fraction:
        return self.coefficients[self.index[tuple(v)]]

    def evaluate(self, x: Sequence[Fraction | int]) -> Fraction:
        """min over the support of c_v + <x, v>."""
        if len(x) != self.n:
            raise ValueError(f"point has length {len(x)}, expected {self.n}")
        xs = [Fraction(t) for t in x]
        return min(c + sum(xi * vi for xi, vi in zip(xs, v))
                   for v, c in zip(self.exponents, self.coefficients))


@dataclass(frozen=True)
class SignDistribution:
    """Assignment of a bit to every support point; 0/1 encode +/- via (-1)^bit."""

    bits: Mapping[Exponent, int]

    def __post_init__(self):
        for v, b in self.bits.items():
            if b not in (0, 1):
                raise ValueError(f"sign {b!r} at {v} is outside {{0,1}}")

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[Sequence[int], int]]) -> "SignDistribution":
        return SignDistribution({tuple(int(e) for e in v): int(b) for v, b in pairs})

    def matches(self, poly: TropicalPolynomial) -> bool:
        return set(self.bits) == set(poly.exponents)

    def vector(self, poly: TropicalPolynomial) -> tuple[int, ...]:
        """Bits aligned with the polynomial's canonical term order."""
        if not self.matches(poly):
            raise ValueError("sign distribution domain differs from the support")
        return tuple(self.bits[v] for v in poly.exponents)


def _parse_rational(token: str) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"bad rational {token!r}")
    return Fraction(token)


def parse_instance(text: str | bytes, *, require_full_support: bool = True
                   ) -> tuple[TropicalPolynomial, SignDistribution]:
    """Parse the instance format: header ``n d`` then one ``v_1 .. v_n c e`` line per term.

    Comment lines start with ``#``; line order is irrelevant because every
    line carries its exponent vector.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: header must be 'n d'")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(f"line {lineno}: header must be two integers") from None
            if header[0] < 2 or header[1] < 1:
                raise ParseError(f"line {lineno}: need n >= 2 and d >= 1")
            continue
        rows.append((lineno, fields))
    if header is None:
        raise ParseError("missing 'n d' header line")
    n, d = header
    if not rows:
        raise ParseError("no term lines")

    exps: list[Exponent] = []
    coeffs: list[Fraction] = []
    signs: dict[Exponent, int] = {}
    for lineno, fields in rows:
        if len(fields) != n + 2:
            raise ParseError(f"line {lineno}: expected {n + 2} fields, got {len(fields)}")
        try:
            v = tuple(int(t) for t in fields[:n])
        except ValueError:
            raise ParseError(f"line {lineno}: exponents must be integers") from None
        if any(e < 0 for e in v):
            raise ParseError(f"line {lineno}: negative exponent in {v}")
        if sum(v) != d:
            raise ParseError(f"line {lineno}: term degree {sum(v)} != {d}")
        if v in signs:
            raise ParseError(f"line {lineno}: duplicate exponent {v}")
        try:
            c = _parse_rational(fields[n])
        except ParseError:
            raise ParseError(f"line {lineno}: bad coefficient {fields[n]!r}") from None
        if fields[n + 1] not in ("0", "1"):
            raise ParseError(f"line {lineno}: sign {fields[n + 1]!r} outside {{0,1}}")
        exps.append(v)
        coeffs.append(c)
        signs[v] = int(fields[n + 1])

    if require_full_support:
        expected = lattice_point_count(n, d)
        if len(exps) != expected:
            raise ParseError(
                f"support incomplete: expected {expected} lattice points, got {len(exps)}")
    poly = TropicalPolynomial(n, d, tuple(exps), tuple(coeffs))
    return poly, SignDistribution(signs)


def serialize_instance(poly: TropicalPolynomial, signs: SignDistribution) -> str:
    """Render an instance in the canonical term order."""
    if not signs.matches(poly):
        raise ValueError("sign distribution domain differs from the support")
    lines = [f"{poly.n} {poly.d}"]
    for v, c in zip(poly.exponents, poly.coefficients):
        coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        lines.append(" ".join(str(e) for e in v) + f" {coeff} {signs.bits[v]}")
    return "\n".join(lines) + "\n"
