"""Integer Laurent polynomials in one variable t."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sparse map exponent -> nonzero integer coefficient.

    Instances are immutable; arithmetic returns new objects.  ``normalized``
    gives the canonical representative up to units +-t^k: lowest exponent 0
    and positive leading coefficient.
    """

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict) -> LaurentPolynomial:
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c)))

    @classmethod
    def from_list(cls, coeffs, shift: int = 0) -> LaurentPolynomial:
        """Coefficients in ascending degree starting at t^shift."""
        return cls.from_dict({shift + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls.from_dict({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> LaurentPolynomial:
        return cls.from_dict({exponent: c})

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return self.terms[0][0]

    @property
    def high(self) -> int:
        return self.terms[-1][0]

    @property
    def leading(self) -> int:
        return self.terms[-1][1]

    def __add__(self, other):
        other = _coerce(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial.from_dict(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Quotient in Z[t, 1/t]; raises ArithmeticError if the division leaves a remainder."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        remainder = {e: Fraction(c) for e, c in self.terms}
        quotient: dict[int, int] = {}
        lowest_shift = self.low - divisor.low
        while remainder:
            top = max(remainder)
            shift = top - divisor.high
            coef = remainder[top] / divisor.leading
            if shift < lowest_shift or coef.denominator != 1:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            quotient[shift] = int(coef)
            for e, c in divisor.terms:
                v = remainder.get(e + shift, 0) - coef * c
                if v:
                    remainder[e + shift] = v
                else:
                    remainder.pop(e + shift, None)
        return LaurentPolynomial.from_dict(quotient)

    def __call__(self, t):
        return sum(c * _power(t, e) for e, c in self.terms)

    def normalized(self) -> LaurentPolynomial:
        if self.is_zero():
            return self
        sign = 1 if self.leading > 0 else -1
        return LaurentPolynomial(tuple((e - self.low, sign * c) for e, c in self.terms))

    def symmetrized(self) -> LaurentPolynomial:
        """Unit multiple whose exponents are centred on 0; raises if the span is odd."""
        p = self.normalized()
        if p.is_zero():
            return p
        if p.high % 2:
            raise ArithmeticError(f"{self} has odd span and cannot be centred")
        half = p.high // 2
        return LaurentPolynomial(tuple((e - half, c) for e, c in p.terms))

    def inverted(self) -> LaurentPolynomial:
        """Substitute t -> 1/t."""
        return LaurentPolynomial.from_dict({-e: c for e, c in self.terms})

    def unit_equivalent(self, other: LaurentPolynomial) -> bool:
        """Equality up to multiplication by +-t^k."""
        return self.normalized() == _coerce(other).normalized()

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms}

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if e == 1 else f"t^{e}")
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _power(t, e):
    if e < 0 and isinstance(t, int):
        return Fraction(t) ** e
    return t**e


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot treat {x!r} as a Laurent polynomial")


T = LaurentPolynomial.monomial(1)


def polynomial_determinant(rows) -> LaurentPolynomial:
    """Determinant of a square matrix over Z[t, 1/t] by Bareiss elimination."""
    m = [[_coerce(x) for x in row] for row in rows]
    n = len(m)
    if n == 0:
        return LaurentPolynomial.constant(1)
    sign = 1
    prev = LaurentPolynomial.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return LaurentPolynomial()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign
