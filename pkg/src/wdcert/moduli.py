"""Virtual dimension of the instanton moduli space over a Seifert sphere end.

For fiber orders a_1, ..., a_n with product a, the dimension is

    2/a - 3 + n + sum_i (2/a_i) sum_{k=1}^{a_i-1}
        cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi k / a_i)

(Fintushel-Stern, evaluated with Neumann-Zagier).  Two independent routes are
computed and must agree:

* a float route that sums the trigonometric series term by term, and
* an exact route. Writing b_i = a / a_i, the inner sum collapses by finite
  Fourier inversion of the sawtooth function to ``-a_i (( b_i^{-1} / a_i ))``,
  so the whole expression is the rational number
  ``2/a - 3 + n - 2 sum_i (( b_i^{-1} / a_i ))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CoprimalityError, DomainError, EvaluationDisagreement
from .seifert import SeifertSphere

HARD_TOLERANCE = 1e-3
ACCEPTANCE_TOLERANCE = 1e-6

Rational = Fraction


def sawtooth(x: Fraction) -> Fraction:
    """((x)) = x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    frac = x - math.floor(x)
    if frac == 0:
        return Fraction(0)
    return frac - Fraction(1, 2)


def dedekind_sum(b: int, c: int) -> Fraction:
    """Exact Dedekind sum s(b, c) for c >= 1 and gcd(b, c) = 1.

    Runs the Euclidean algorithm on (b, c), using periodicity in b and the
    reciprocity law at each step, so large c is cheap.
    """
    if c < 1:
        raise DomainError(f"dedekind_sum needs c >= 1, got {c}")
    if math.gcd(b, c) != 1:
        raise CoprimalityError(f"gcd({b}, {c}) != 1")
    total = Fraction(0)
    sign = 1
    b %= c
    while b:
        # s(b, c) = -s(c, b) + (b/c + c/b + 1/(bc))/12 - 1/4
        total += sign * (Fraction(b * b + c * c + 1, 12 * b * c) - Fraction(1, 4))
        sign = -sign
        b, c = c % b, b
    return total


def _check_fibers(fibers):
    fibers = tuple(int(a) for a in fibers)
    if any(a < 1 for a in fibers):
        raise DomainError(f"fiber orders must be >= 1, got {fibers}")
    for i in range(len(fibers)):
        for j in range(i + 1, len(fibers)):
            if math.gcd(fibers[i], fibers[j]) != 1:
                raise CoprimalityError(f"fibers {fibers} are not pairwise coprime")
    return fibers


def dimension_exact(fibers) -> Fraction:
    """Exact rational value of the dimension formula via sawtooth values."""
    fibers = _check_fibers(fibers)
    a = math.prod(fibers)
    # a * value = 2 + (n - 3) a - sum_i b_i (2 x_i - a_i), x_i = b_i^{-1} mod a_i
    numerator = 2 + (len(fibers) - 3) * a
    for ai in fibers:
        if ai == 1:
            continue
        bi = a // ai
        x = pow(bi, -1, ai)
        numerator -= bi * (2 * x - ai)
    return Fraction(numerator, a)


@lru_cache(maxsize=None)
def _fiber_series(ai: int, residue: int) -> float:
    # sum_k cot(pi r k / a_i) cot(pi k / a_i) sin^2(pi k / a_i), r = a / a_i mod a_i.
    # cot has period pi, so only r mod a_i matters.
    terms = []
    for k in range(1, ai):
        x = math.pi * k / ai
        y = math.pi * ((residue * k) % ai) / ai
        terms.append(math.cos(y) / math.sin(y) * math.cos(x) / math.sin(x) * math.sin(x) ** 2)
    return math.fsum(terms)


def dimension_float(fibers) -> float:
    """Float value of the dimension formula, summing the trigonometric series."""
    fibers = _check_fibers(fibers)
    a = math.prod(fibers)
    parts = [2.0 / a, float(len(fibers) - 3)]
    for ai in fibers:
        if ai == 1:
            continue
        parts.append(2.0 / ai * _fiber_series(ai, (a // ai) % ai))
    return math.fsum(parts)


@dataclass(frozen=True)
class ModuliReport:
    sphere: SeifertSphere
    dimension: int
    residual: float

    def to_json(self) -> dict:
        return {"fibers": list(self.sphere.fibers), "dimension": self.dimension, "residual": self.residual}


def moduli_dimension(sphere: SeifertSphere, tolerance: float = HARD_TOLERANCE) -> ModuliReport:
    """Dimension of the moduli space for ``sphere``, cross-checked on two routes.

    The value depends only on the fiber orders, not on orientation.  Raises
    EvaluationDisagreement if the exact value is not an integer, if the float
    route rounds to a different integer, or if the float residual exceeds
    ``tolerance`` (which may not exceed 1e-3).
    """
    if not 0 < tolerance <= HARD_TOLERANCE:
        raise DomainError(f"tolerance must lie in (0, {HARD_TOLERANCE}], got {tolerance}")
    exact = dimension_exact(sphere.fibers)
    approx = dimension_float(sphere.fibers)
    if exact.denominator != 1:
        raise EvaluationDisagreement(f"{sphere}: exact route gave non-integer {exact}")
    residual = abs(approx - round(approx))
    if round(approx) != exact.numerator:
        raise EvaluationDisagreement(f"{sphere}: float route {approx!r} vs exact {exact}")
    if residual > tolerance:
        raise EvaluationDisagreement(f"{sphere}: float residual {residual:.3g} exceeds {tolerance:.3g}")
    return ModuliReport(sphere, exact.numerator, residual)


def _check_pqk(p: int, q: int, k: int) -> None:
    if p < 2 or q < 2:
        raise DomainError(f"need p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise DomainError(f"gcd({p}, {q}) != 1")
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")


def ordering_key(p: int, q: int, k: int) -> int:
    """pq(kpq - 1): the quantity that must increase along a family of Σ(p, q, kpq - 1)."""
    _check_pqk(p, q, k)
    return p * q * (k * p * q - 1)


def bubbling_bound_holds(p: int, q: int, k: int) -> bool:
    """Whether 1/4 < pq(kpq - 1)."""
    return 4 * ordering_key(p, q, k) > 1
