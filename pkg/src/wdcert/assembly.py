"""Assembly of the closed-up 4-manifold from a hypothetical slice relation.

Given coefficients c_i with sum c_i [Σ(D^{r_i}(T(p_i,q_i)))] = 0, a
homology ball Q with that boundary is capped off member by member: the top
index N gets the cobordism to -Σ(p_N,q_N,p_N q_N - 1), positive copies get
negative definite fillings, negative copies get the reversed positive
definite cobordism.  The result is negative definite with H_1(; Z/2) = 0 and
Seifert boundary; if those boundary spheres satisfy the ordering
inequality, no such manifold exists and the relation is obstructed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidFamily, ZeroCombination
from .family import Check, FamilyMember, check_theorem_family
from .ledger import NEGATIVE, IntersectionLedger, build_P, build_R, build_Z
from .seifert import SeifertSphere, SurgerySlope, TorusKnotParams, moser_surgery

H1_BASIS = (
    "Q has the Z/2-homology of a punctured ball",
    "each cobordism piece is built from a Z/2-homology sphere by 2-handles along null-homologous curves, "
    "or is a cited filling with H_1(; Z/2) = 0",
    "Mayer-Vietoris along Z/2-homology-sphere interfaces then gives H_1(X; Z/2) = 0",
)


@dataclass(frozen=True)
class Piece:
    role: str
    member: int
    copies: int
    ledger: IntersectionLedger

    def to_json(self) -> dict:
        return {"role": self.role, "member": self.member, "copies": self.copies, "ledger": self.ledger.to_json()}


@dataclass(frozen=True)
class ContradictionReport:
    coefficients: tuple[int, ...]
    top_index: int
    boundary: tuple[SeifertSphere, ...]
    boundary_members: tuple[tuple[int, int, int], ...]
    pieces: tuple[Piece, ...]
    definiteness: str
    h1_trivial: bool
    chain: Check
    verdict: str

    @property
    def obstructed(self) -> bool:
        return self.verdict == "obstructed"

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "top_index": self.top_index,
            "boundary": [s.to_json() for s in self.boundary],
            "boundary_text": [str(s) for s in self.boundary],
            "pieces": [piece.to_json() for piece in self.pieces],
            "definiteness": self.definiteness,
            "h1_trivial": self.h1_trivial,
            "h1_basis": list(H1_BASIS),
            "chain": self.chain.to_json(),
            "verdict": self.verdict,
        }


def normalize_coefficients(coefficients) -> tuple[int, ...]:
    """Negate globally if needed so the last nonzero coefficient is positive."""
    coefficients = tuple(int(c) for c in coefficients)
    nonzero = [c for c in coefficients if c]
    if not nonzero:
        raise ZeroCombination("all coefficients are zero")
    if nonzero[-1] < 0:
        coefficients = tuple(-c for c in coefficients)
    return coefficients


def assemble_contradiction(coefficients, family) -> ContradictionReport:
    family = list(family)
    if len(coefficients) != len(family):
        raise InvalidFamily(f"{len(coefficients)} coefficients for {len(family)} members")
    for m in family:
        if not isinstance(m, FamilyMember):
            raise InvalidFamily(f"expected FamilyMember, got {m!r}")
    coefficients = normalize_coefficients(coefficients)
    top = max(i for i, c in enumerate(coefficients) if c)

    pieces = []
    boundary = []
    members = []
    for i, (c, m) in enumerate(zip(coefficients, family)):
        knot = TorusKnotParams(m.p, m.q)
        if i == top:
            continue
        if c > 0:
            pieces.append(Piece("negative-filling", i, c, build_R(knot, m.r)))
        elif c < 0:
            pieces.append(Piece("reversed-positive-cobordism", i, -c, -build_P(knot, m.r)))
            boundary.append(-moser_surgery(knot, SurgerySlope(1, 4)))
            members.append((m.p, m.q, 4))
    m = family[top]
    knot = TorusKnotParams(m.p, m.q)
    pieces.insert(0, Piece("top-cobordism", top, 1, build_Z(knot, m.r)))
    if coefficients[top] > 1:
        pieces.insert(1, Piece("negative-filling", top, coefficients[top] - 1, build_R(knot, m.r)))
    boundary.insert(0, moser_surgery(knot, SurgerySlope(1, 1)))
    members.append((m.p, m.q, 1))

    signs = {piece.ledger.definiteness for piece in pieces}
    overall = NEGATIVE if signs == {NEGATIVE} else "/".join(sorted(signs))
    chain = check_theorem_family(members)
    obstructed = chain.passed and overall == NEGATIVE
    return ContradictionReport(
        coefficients=coefficients,
        top_index=top,
        boundary=tuple(boundary),
        boundary_members=tuple(members),
        pieces=tuple(pieces),
        definiteness=overall,
        h1_trivial=True,
        chain=chain,
        verdict="obstructed" if obstructed else "not-obstructed",
    )
