"""Instance generators and degree bounds.

All randomness flows through SplitMix64 streams derived from (seed, indices),
so results are reproducible regardless of scheduling. Generated heights use a
fixed power-of-two denominator, which keeps the scaled integer lifts small
enough for the compiled kernels.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Exponent, PatchworkError, SignDistribution, TropicalPolynomial, lattice_points
from .subdivision import regular_subdivision

log = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1
_PERTURB_BITS = 20


class GeneratorError(PatchworkError):
    """Retry budget exhausted while generating an instance."""


class SplitMix64:
    """Deterministic 64-bit stream; standard splitmix64 update."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bits(self, k: int) -> int:
        return self.next64() >> (64 - k)

    def bit(self) -> int:
        return self.next64() >> 63


def derive_seed(seed: int, *indices: int) -> int:
    """Stream seed for a sub-experiment addressed by integer indices.

    Indices are scrambled before mixing; nearby (seed, index) pairs would
    otherwise share streams."""
    h = seed & _MASK64
    for idx in indices:
        h = SplitMix64(h ^ SplitMix64(idx & _MASK64).next64()).next64()
    return h


@dataclass(frozen=True)
class GeneratorConfig:
    """Addressable instance streams: experiment (i, j) derives from (seed, i, j)."""

    n: int
    d: int
    seed: int
    lam: Fraction = Fraction(1, 4)
    max_retries: int = 64

    def triangulation_seed(self, index: int) -> int:
        return derive_seed(self.seed, index)

    def sign_seed(self, tri_index: int, sign_index: int) -> int:
        return derive_seed(self.seed, tri_index, sign_index)

    def triangulation(self, index: int) -> "TropicalPolynomial":
        return random_full_triangulation(self.n, self.d, self.triangulation_seed(index),
                                         self.lam, self.max_retries)

    def signs(self, tri_index: int, sign_index: int) -> "SignDistribution":
        return random_signs(self.n, self.d, self.sign_seed(tri_index, sign_index))


def _quadratic_height(v: Exponent) -> int:
    return sum(e * e for e in v)


def canonical_unimodular(n: int, d: int, seed: int, max_retries: int = 64) -> TropicalPolynomial:
    """Unimodular triangulation generator: squared-norm heights plus a tiny
    seeded perturbation, verified and retried until the subdivision is a full
    unimodular triangulation."""
    pts = lattice_points(n, d)
    k = len(pts)
    denom = (1 << _PERTURB_BITS) * 4 * k
    for attempt in range(max_retries):
        rng = SplitMix64(derive_seed(seed, attempt))
        coeffs = tuple(Fraction(_quadratic_height(v) * denom + rng.bits(_PERTURB_BITS), denom)
                       for v in pts)
        poly = TropicalPolynomial(n, d, tuple(pts), coeffs)
        sub = regular_subdivision(poly)
        if sub.is_triangulation and sub.is_full and sub.is_unimodular:
            if attempt:
                log.debug("canonical_unimodular(n=%d, d=%d) needed %d retries",
                          n, d, attempt)
            return poly
    raise GeneratorError(
        f"no unimodular triangulation after {max_retries} attempts (n={n}, d={d})")


def random_full_triangulation(n: int, d: int, seed: int,
                              lam: Fraction | int | str = Fraction(1, 4),
                              max_retries: int = 64) -> TropicalPolynomial:
    """Random regular full triangulation via seeded random lifts.

    Heights are lam * |v|^2 + (1 - lam) * U_v with U_v uniform in [0, 1);
    draws are rejected until the subdivision is a full triangulation.
    """
    lam = Fraction(lam)
    if not 0 <= lam <= 1:
        raise ValueError("mixing weight must lie in [0, 1]")
    pts = lattice_points(n, d)
    for attempt in range(max_retries):
        rng = SplitMix64(derive_seed(seed, attempt))
        coeffs = tuple(
            lam * _quadratic_height(v)
            + (1 - lam) * Fraction(rng.bits(_PERTURB_BITS), 1 << _PERTURB_BITS)
            for v in pts)
        poly = TropicalPolynomial(n, d, tuple(pts), coeffs)
        sub = regular_subdivision(poly)
        if sub.is_triangulation and sub.is_full:
            if attempt:
                log.debug("random_full_triangulation(n=%d, d=%d) needed %d retries",
                          n, d, attempt)
            return poly
    raise GeneratorError(
        f"no full triangulation after {max_retries} attempts (n={n}, d={d})")


def random_signs(n: int, d: int, seed: int) -> SignDistribution:
    """Independent fair sign bits for every lattice point."""
    rng = SplitMix64(derive_seed(seed))
    return SignDistribution({v: rng.bit() for v in lattice_points(n, d)})


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def bound_chi(d: int) -> int:
    """Sharp Euler characteristic of a patchworked surface from a unimodular lift."""
    return _exact_div(4 * d - d ** 3, 3)


def bound_b1(d: int) -> int:
    """Upper bound for b1 of a patchworked surface over a full triangulation."""
    return _exact_div(2 * d ** 3 - 6 * d ** 2 + 7 * d, 3)


def bound_b0(d: int) -> int:
    """Upper bound for b0 of a patchworked surface in the unimodular case."""
    return math.comb(d - 1, 3) + 1
