"""Families of torus-knot parameters and the ordering inequalities they must satisfy."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import count as _count

from .errors import CoprimalityError, DomainError, InvalidFamily
from .moduli import bubbling_bound_holds, ordering_key

# The basis strings name the known result each check leans on.
FURUTA_FS = "Furuta / Fintushel-Stern: Σ(p_i,q_i,k_i p_i q_i - 1) with strictly increasing pq(kpq-1) are independent"
DOUBLES_CHAIN = "independence of D^r(T(p_i,q_i)) when p_i q_i(4 p_i q_i - 1) < p_{i+1} q_{i+1}(p_{i+1} q_{i+1} - 1)"


@dataclass(frozen=True)
class FamilyMember:
    """Torus knot T(p, q), multiplier k and doubling depth r."""

    p: int
    q: int
    k: int = 1
    r: int = 1

    def __post_init__(self):
        for name in ("p", "q", "k", "r"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidFamily(f"{name} must be an integer, got {value!r}")
        p, q = sorted((self.p, self.q))
        if p < 2:
            raise InvalidFamily(f"need 2 <= p < q, got ({self.p}, {self.q})")
        if math.gcd(p, q) != 1:
            raise InvalidFamily(f"gcd({p}, {q}) != 1")
        if self.k < 1 or self.r < 1:
            raise InvalidFamily(f"need k >= 1 and r >= 1, got k={self.k}, r={self.r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.p, self.q)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "k": self.k, "r": self.r}

    @classmethod
    def from_json(cls, data: dict) -> FamilyMember:
        if not isinstance(data, dict) or not {"p", "q"} <= set(data):
            raise InvalidFamily(f"family entries need keys p and q, got {data!r}")
        extra = set(data) - {"p", "q", "k", "r"}
        if extra:
            raise InvalidFamily(f"unknown keys {sorted(extra)} in family entry")
        return cls(data["p"], data["q"], data.get("k", 1), data.get("r", 1))


@dataclass(frozen=True)
class Check:
    name: str
    basis: str
    inputs: dict
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "basis": self.basis,
            "inputs": self.inputs,
            "result": self.passed,
            "witness": self.witness,
        }


def _valid_pair(p, q):
    if p < 2 or q < 2:
        raise DomainError(f"need p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise CoprimalityError(f"gcd({p}, {q}) != 1")


def check_theorem_family(members) -> Check:
    """Σ(p_i, q_i, k_i p_i q_i - 1) in order: keys strictly increasing and every bubbling bound met."""
    members = [tuple(m) for m in members]
    for p, q, k in members:
        ordering_key(p, q, k)  # domain validation
    keys = [ordering_key(p, q, k) for p, q, k in members]
    inputs = {"members": [list(m) for m in members]}
    for i, (p, q, k) in enumerate(members):
        if not bubbling_bound_holds(p, q, k):
            return Check("seifert-ordering", FURUTA_FS, inputs, False, {"bubbling_failed_at": i, "keys": keys})
    for i in range(len(keys) - 1):
        if not keys[i] < keys[i + 1]:
            return Check(
                "seifert-ordering", FURUTA_FS, inputs, False,
                {"index": [i, i + 1], "lhs": keys[i], "rhs": keys[i + 1], "keys": keys},
            )
    return Check("seifert-ordering", FURUTA_FS, inputs, True, {"keys": keys})


def corollary_sides(p: int, q: int) -> tuple[int, int]:
    """(pq(4pq-1), pq(pq-1)): the value a member must stay below, and the value it offers."""
    _valid_pair(p, q)
    n = p * q
    return n * (4 * n - 1), n * (n - 1)


def check_corollary_family(members) -> Check:
    """p_i q_i(4 p_i q_i - 1) < p_{i+1} q_{i+1}(p_{i+1} q_{i+1} - 1) for every consecutive pair."""
    pairs = [tuple(m) for m in members]
    sides = [corollary_sides(p, q) for p, q in pairs]
    inputs = {"pairs": [list(pq) for pq in pairs]}
    links = []
    for i in range(len(pairs) - 1):
        lhs, rhs = sides[i][0], sides[i + 1][1]
        links.append([lhs, rhs])
        if not lhs < rhs:
            return Check("doubles-chain", DOUBLES_CHAIN, inputs, False, {"index": [i, i + 1], "lhs": lhs, "rhs": rhs})
    return Check("doubles-chain", DOUBLES_CHAIN, inputs, True, {"links": links})


def _pairs_with_product(n: int):
    p = 2
    while p * p < n:
        if n % p == 0 and math.gcd(p, n // p) == 1:
            yield (p, n // p)
        p += 1


def next_member(p: int, q: int) -> tuple[int, int]:
    """Least coprime pair (by product, then p) that may follow (p, q) in a chain."""
    bound = corollary_sides(p, q)[0]
    # smallest product n with n(n-1) > bound
    n = math.isqrt(bound) + 1
    while n > 2 and (n - 1) * (n - 2) > bound:
        n -= 1
    for n in _count(max(n, 6)):
        if n * (n - 1) <= bound:
            continue
        for pair in _pairs_with_product(n):
            return pair
    raise AssertionError("unreachable")


def generate_family(start: tuple[int, int], count: int) -> list[tuple[int, int]]:
    """``count`` pairs beginning at ``start``, each the least valid successor of the previous."""
    p, q = sorted(start)
    _valid_pair(p, q)
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    family = [(p, q)]
    while len(family) < count:
        family.append(next_member(*family[-1]))
    return family
