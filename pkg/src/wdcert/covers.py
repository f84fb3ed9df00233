"""Branched double covers of iterated Whitehead doubles.

Two independent routes to the first homology of Σ(D^r(K)):

* Seifert-matrix route: the determinant |det(V + V^T)| of the genus-one
  Seifert matrix of the untwisted double (the companion never enters V).
* Decomposition route: the cover is glued from the complement of a
  two-component pattern link and two copies of the companion exterior;
  a Mayer-Vietoris presentation of H_1 is reduced by Smith normal form.

Torus-boundary curves are written (meridian coefficient, longitude coefficient).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import intlinalg
from .errors import DepthError, ShapeError
from .laurent import T, LaurentPolynomial, polynomial_determinant
from .seifert import TorusKnotParams

MERIDIAN_FIRST = "meridian-first"
LONGITUDE_FIRST = "longitude-first"
CONVENTIONS = (MERIDIAN_FIRST, LONGITUDE_FIRST)

CLASP_TWIST = -2


def alexander_torus(knot: TorusKnotParams) -> LaurentPolynomial:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by exact polynomial division."""
    p, q = knot.p, knot.q
    numerator = (T ** (p * q) - 1) * (T - 1)
    denominator = (T**p - 1) * (T**q - 1)
    return numerator.exact_div(denominator).normalized()


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        intlinalg.require_square(rows)
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def double_seifert_matrix(twist: int) -> SeifertMatrix:
    """Genus-one Seifert matrix of the positively clasped ``twist``-twisted double."""
    return SeifertMatrix(((-1, 1), (0, twist)))


def alexander_from_seifert(V: SeifertMatrix) -> LaurentPolynomial:
    """det(V - t V^T), normalized. The empty matrix gives 1."""
    Vt = V.transpose()
    rows = [[V.entries[i][j] - T * Vt[i][j] for j in range(V.size)] for i in range(V.size)]
    return polynomial_determinant(rows).normalized()


def determinant_from_seifert(V: SeifertMatrix) -> int:
    """|det(V + V^T)|, the order of H_1 of the double branched cover (0 if infinite)."""
    Vt = V.transpose()
    rows = [[V.entries[i][j] + Vt[i][j] for j in range(V.size)] for i in range(V.size)]
    return abs(intlinalg.determinant(rows))


def _unimodular(g) -> tuple[tuple[int, int], tuple[int, int]]:
    g = tuple(tuple(int(x) for x in row) for row in g)
    if len(g) != 2 or any(len(row) != 2 for row in g):
        raise ShapeError(f"gluing must be 2x2, got {g}")
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if abs(det) != 1:
        raise ShapeError(f"gluing {g} has determinant {det}, not +-1")
    return g


@dataclass(frozen=True)
class PatternPiece:
    """Homological data of the complement of a two-component pattern link.

    ``depth`` counts the doubling applied to each component of T(2,4);
    ``mutual_linking`` is the linking number of the two components, which is all
    H_1 needs: the Seifert longitude of one component equals that many
    meridians of the other.
    """

    depth: int
    twist: int
    mutual_linking: int
    components: int = 2

    @property
    def label(self) -> str:
        if self.depth == 0:
            return "S^3 - N(T(2,4))"
        return f"S^3 - N(D^{self.depth}_{self.twist}(T(2,4)))"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "components": self.components,
            "depth": self.depth,
            "twist": self.twist,
            "mutual_linking": self.mutual_linking,
        }


@dataclass(frozen=True)
class CompanionPiece:
    """Exterior E(K): H_1 is generated by the meridian, the longitude is null."""

    knot: TorusKnotParams

    @property
    def label(self) -> str:
        return f"E({self.knot.label})"

    def to_json(self) -> dict:
        return {"label": self.label, "p": self.knot.p, "q": self.knot.q}


@dataclass(frozen=True)
class CoverDecomposition:
    """Pattern-link complement glued to two companion exteriors.

    ``gluings[j]`` is a 2x2 integer matrix whose columns are the images of
    the companion meridian and longitude, in (meridian, longitude)
    coordinates of boundary component j of the pattern piece.
    """

    knot: TorusKnotParams
    depth: int
    pattern: PatternPiece
    companions: tuple[CompanionPiece, CompanionPiece]
    gluings: tuple
    convention: str = MERIDIAN_FIRST

    def __post_init__(self):
        if len(self.companions) != 2 or len(self.gluings) != 2:
            raise ShapeError("a cover decomposition has exactly two companion pieces")
        object.__setattr__(self, "gluings", tuple(_unimodular(g) for g in self.gluings))

    def with_gluings(self, gluings) -> CoverDecomposition:
        return replace(self, gluings=tuple(gluings))

    def presentation(self) -> list[list[int]]:
        """Relation rows over generators (m_1, m_2, u_1, u_2).

        m_j are meridians of the pattern components, u_j the companion
        meridians.  Each glued torus contributes two relations: the image of
        the companion meridian equals u_j, the image of the companion
        longitude (null in E(K)) vanishes.
        """
        lk = self.pattern.mutual_linking
        rows = []
        for j, g in enumerate(self.gluings):
            other = 1 - j
            for column, companion_side in ((0, 1), (1, 0)):
                mer, lon = g[0][column], g[1][column]
                row = [0, 0, 0, 0]
                row[j] -= mer
                row[other] -= lon * lk
                row[2 + j] += companion_side
                rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {
            "knot": {"p": self.knot.p, "q": self.knot.q},
            "depth": self.depth,
            "convention": self.convention,
            "pattern_piece": self.pattern.to_json(),
            "companion_pieces": [c.to_json() for c in self.companions],
            "gluings": [[list(row) for row in g] for g in self.gluings],
        }


def decompose_cover(knot: TorusKnotParams, r: int, convention: str = MERIDIAN_FIRST) -> CoverDecomposition:
    """Decomposition of Σ(D^r(K)) along the two lifted companion tori.

    r = 1: the pattern piece is the T(2,4) complement (linking 2) and the
    companion meridian goes to the (-2, 1) curve.  r >= 2: the pattern is the
    -2 twisted (r-1)-fold double of T(2,4), whose components have linking 0,
    glued in splice form (meridian to longitude, longitude to meridian).

    ``convention`` selects how the pair (-2, 1) is read in the r = 1 gluing;
    only the meridian-first reading yields a homology sphere.
    """
    if r < 1:
        raise DepthError(f"doubling depth must be >= 1, got {r}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    if r == 1:
        pattern = PatternPiece(depth=0, twist=0, mutual_linking=2)
        # columns: meridian -> (-2, 1), longitude -> (1, 0)
        gluing = ((-2, 1), (1, 0))
        if convention == LONGITUDE_FIRST:
            gluing = (gluing[1], gluing[0])
    else:
        pattern = PatternPiece(depth=r - 1, twist=CLASP_TWIST, mutual_linking=0)
        gluing = ((0, 1), (1, 0))
    companion = CompanionPiece(knot)
    return CoverDecomposition(knot, r, pattern, (companion, companion), (gluing, gluing), convention)


def h1_order(decomposition: CoverDecomposition) -> int:
    """Order of H_1 of the glued manifold (0 if infinite), via Smith normal form."""
    return intlinalg.cokernel_order(decomposition.presentation(), 4)
