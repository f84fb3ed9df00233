"""Torus knots, Seifert fibered homology spheres and Moser's 1/n surgeries.

A Seifert sphere is stored as three sorted fiber orders plus an orientation
sign; reversing orientation flips the sign and leaves the fibers alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoprimalityError, DomainError, UnsupportedSlope


@dataclass(frozen=True)
class TorusKnotParams:
    """Coprime pair naming the positive torus knot T(p, q), stored with p < q.

    ``p = 1`` (the unknot) is rejected unless ``allow_unknot`` is set.
    """

    p: int
    q: int
    allow_unknot: bool = False

    def __post_init__(self):
        p, q = sorted((int(self.p), int(self.q)))
        if p < 1:
            raise DomainError(f"torus knot parameters must be positive, got ({self.p}, {self.q})")
        if math.gcd(p, q) != 1:
            raise CoprimalityError(f"gcd({p}, {q}) = {math.gcd(p, q)} != 1")
        if p == q:
            raise DomainError(f"degenerate torus knot parameters ({p}, {q})")
        if p == 1 and not self.allow_unknot:
            raise DomainError(f"T(1, {q}) is the unknot; pass allow_unknot=True to permit it")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def label(self) -> str:
        return "U" if self.is_unknot else f"T({self.p},{self.q})"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class SeifertSphere:
    """Oriented Seifert fibered homology sphere with three exceptional fiber orders.

    Use :func:`normalize_seifert` to build one from unsorted input.
    """

    a1: int
    a2: int
    a3: int
    orientation: int = 1

    def __post_init__(self):
        fibers = (self.a1, self.a2, self.a3)
        if any(a < 1 for a in fibers):
            raise DomainError(f"fiber orders must be >= 1, got {fibers}")
        if list(fibers) != sorted(fibers):
            raise DomainError(f"fiber orders must be sorted, got {fibers}")
        for x, y in ((self.a1, self.a2), (self.a1, self.a3), (self.a2, self.a3)):
            if math.gcd(x, y) != 1:
                raise CoprimalityError(f"fibers {fibers} are not pairwise coprime: gcd({x}, {y}) = {math.gcd(x, y)}")
        if self.orientation not in (1, -1):
            raise DomainError(f"orientation must be +1 or -1, got {self.orientation}")

    @property
    def fibers(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def __neg__(self) -> SeifertSphere:
        return SeifertSphere(self.a1, self.a2, self.a3, -self.orientation)

    def __str__(self):
        sign = "-" if self.orientation < 0 else ""
        return f"{sign}Σ({self.a1},{self.a2},{self.a3})"

    def to_json(self) -> dict:
        return {"sign": self.orientation, "fibers": list(self.fibers)}

    @classmethod
    def from_json(cls, data: dict) -> SeifertSphere:
        return normalize_seifert(*data["fibers"], orientation=data.get("sign", 1))


def normalize_seifert(a1: int, a2: int, a3: int, orientation: int = 1) -> SeifertSphere:
    """Sort and validate fiber orders. Raises CoprimalityError on a shared factor."""
    a1, a2, a3 = sorted(int(a) for a in (a1, a2, a3))
    return SeifertSphere(a1, a2, a3, int(orientation))


@dataclass(frozen=True)
class SurgerySlope:
    """Reduced surgery coefficient m/n with n > 0."""

    m: int
    n: int = 1

    def __post_init__(self):
        if self.n <= 0:
            raise DomainError(f"slope denominator must be positive, got {self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise CoprimalityError(f"slope {self.m}/{self.n} is not reduced")

    @classmethod
    def parse(cls, text: str) -> SurgerySlope:
        """Parse ``"1/4"``, ``"-5"`` or ``"+1"``."""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse slope {text!r}") from exc
        return cls(value.numerator, value.denominator)

    def __str__(self):
        return f"{self.m}/{self.n}"


def moser_surgery(knot: TorusKnotParams, slope: SurgerySlope) -> SeifertSphere:
    """Result of 1/n surgery on T(p, q): the sphere -Σ(p, q, npq - 1).

    Only slopes of the form 1/n are supported.
    """
    if slope.m != 1:
        raise UnsupportedSlope(f"only slopes 1/n are supported, got {slope}")
    n = slope.n
    return normalize_seifert(knot.p, knot.q, n * knot.p * knot.q - 1, orientation=-1)
