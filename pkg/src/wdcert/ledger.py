"""Intersection-form bookkeeping for definite cobordisms between 3-manifolds.

A ledger records the integer intersection form of a 4-dimensional cobordism
built from 2-handles, the labelled 3-manifolds at either end, and whether
its definiteness is computed from an explicit matrix or carried as a cited
assumption ("opaque").  Ledgers are immutable values; composition is block
sum along a matching end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intlinalg
from .covers import CLASP_TWIST
from .errors import DepthError, DomainError, ShapeError
from .seifert import SurgerySlope, TorusKnotParams, moser_surgery

EXPLICIT = "explicit"
OPAQUE = "opaque-definite"

NEGATIVE, POSITIVE, INDEFINITE, DEGENERATE, EMPTY = "negative", "positive", "indefinite", "degenerate", "empty"


def definiteness(matrix) -> str:
    """Exact verdict from leading principal minors (Sylvester).

    Returns "negative", "positive", "indefinite" or "degenerate"; the 0x0
    form returns "empty", which is compatible with either sign.
    """
    m = intlinalg.as_matrix(matrix)
    n = intlinalg.require_square(m)
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise ShapeError("intersection form must be symmetric")
    if n == 0:
        return EMPTY
    # Inertia is additive over a block sum, so each connected block is judged on its own.
    verdicts = {_block_definiteness([[m[i][j] for j in block] for i in block])
                for block in intlinalg.diagonal_blocks(m)}
    if DEGENERATE in verdicts:
        return DEGENERATE
    if len(verdicts) == 1:
        return verdicts.pop()
    return INDEFINITE


def _block_definiteness(m) -> str:
    minors = intlinalg.leading_minors(m)
    if minors[-1] == 0:
        return DEGENERATE
    if all(d > 0 for d in minors):
        return POSITIVE
    if all((-1) ** (k + 1) * d > 0 for k, d in enumerate(minors)):
        return NEGATIVE
    return INDEFINITE


def signs_compatible(a: str, b: str) -> bool:
    return a == EMPTY or b == EMPTY or (a == b and a in (NEGATIVE, POSITIVE))


@dataclass(frozen=True)
class NamedManifold:
    """A 3-manifold known only by name, with an orientation sign."""

    label: str
    orientation: int = 1

    def __neg__(self):
        return NamedManifold(self.label, -self.orientation)

    def __str__(self):
        return ("-" if self.orientation < 0 else "") + self.label

    def to_json(self):
        return {"label": self.label, "sign": self.orientation}


@dataclass(frozen=True)
class End:
    """Connected sum of summands (named manifolds or Seifert spheres)."""

    summands: tuple

    def __neg__(self):
        return End(tuple(-s for s in self.summands))

    def __str__(self):
        return " # ".join(str(s) for s in self.summands)

    def to_json(self):
        return {"summands": [s.to_json() for s in self.summands], "text": str(self)}


def end(*summands) -> End:
    return End(tuple(NamedManifold(s) if isinstance(s, str) else s for s in summands))


@dataclass(frozen=True)
class FramedCurve:
    """Attaching curve for a 2-handle: its framing and linking numbers with earlier curves."""

    framing: int
    linking_row: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "linking_row", tuple(int(x) for x in self.linking_row))


def unlinked_curves(framing: int, count: int, start: int = 0) -> list[FramedCurve]:
    """``count`` curves of the same framing, pairwise unlinked, after ``start`` existing handles."""
    return [FramedCurve(framing, (0,) * (start + i)) for i in range(count)]


@dataclass(frozen=True)
class IntersectionLedger:
    matrix: tuple[tuple[int, ...], ...] = ()
    ends_in: tuple[End, ...] = ()
    ends_out: tuple[End, ...] = ()
    opacity: str = EXPLICIT
    assumed_sign: str | None = None
    assumptions: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if self.opacity == EXPLICIT:
            definiteness(rows)
        elif self.opacity == OPAQUE:
            if self.assumed_sign not in (NEGATIVE, POSITIVE):
                raise DomainError("an opaque ledger must carry an assumed sign")
            if not self.assumptions:
                raise DomainError("an opaque ledger must cite the assumption it rests on")
        else:
            raise DomainError(f"unknown opacity {self.opacity!r}")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def definiteness(self) -> str:
        if self.opacity == OPAQUE:
            return self.assumed_sign
        return definiteness(self.matrix)

    def boundary(self) -> tuple[End, ...]:
        """Oriented boundary: reversed incoming ends, then outgoing ends."""
        return tuple(-e for e in self.ends_in) + self.ends_out

    def __neg__(self) -> IntersectionLedger:
        flipped = {NEGATIVE: POSITIVE, POSITIVE: NEGATIVE}.get(self.assumed_sign)
        return IntersectionLedger(
            matrix=tuple(tuple(-x for x in row) for row in self.matrix),
            ends_in=tuple(-e for e in self.ends_in),
            ends_out=tuple(-e for e in self.ends_out),
            opacity=self.opacity,
            assumed_sign=flipped,
            assumptions=self.assumptions,
        )

    def to_json(self) -> dict:
        return {
            "matrix": [list(row) for row in self.matrix],
            "definiteness": self.definiteness,
            "opacity": self.opacity if self.opacity == EXPLICIT else f"{OPAQUE}({self.assumed_sign})",
            "ends_in": [e.to_json() for e in self.ends_in],
            "ends_out": [e.to_json() for e in self.ends_out],
            "assumptions": list(self.assumptions),
        }


def _block_sum(a, b):
    na, nb = len(a), len(b)
    top = [tuple(row) + (0,) * nb for row in a]
    bottom = [(0,) * na + tuple(row) for row in b]
    return tuple(top + bottom)


def _merge_opacity(first: IntersectionLedger, second: IntersectionLedger):
    sa, sb = first.definiteness, second.definiteness
    if first.opacity == EXPLICIT and second.opacity == EXPLICIT:
        return EXPLICIT, None
    if not signs_compatible(sa, sb):
        raise DomainError(f"cannot certify a union of {sa} and {sb} pieces")
    return OPAQUE, sb if sa == EMPTY else sa


def compose(first: IntersectionLedger, second: IntersectionLedger) -> IntersectionLedger:
    """Stack ``second`` on top of ``first``; the outgoing ends of ``first`` must match ``second``'s incoming ends."""
    if first.ends_out != second.ends_in:
        raise ShapeError(
            f"cannot compose: {[str(e) for e in first.ends_out]} != {[str(e) for e in second.ends_in]}"
        )
    opacity, sign = _merge_opacity(first, second)
    return IntersectionLedger(
        matrix=_block_sum(first.matrix, second.matrix),
        ends_in=first.ends_in,
        ends_out=second.ends_out,
        opacity=opacity,
        assumed_sign=sign,
        assumptions=first.assumptions + second.assumptions,
    )


def disjoint_union(first: IntersectionLedger, second: IntersectionLedger) -> IntersectionLedger:
    opacity, sign = _merge_opacity(first, second)
    return IntersectionLedger(
        matrix=_block_sum(first.matrix, second.matrix),
        ends_in=first.ends_in + second.ends_in,
        ends_out=first.ends_out + second.ends_out,
        opacity=opacity,
        assumed_sign=sign,
        assumptions=first.assumptions + second.assumptions,
    )


def attach_handles(ledger: IntersectionLedger, curves) -> IntersectionLedger:
    """Extend the linking matrix by one row and column per framed curve."""
    if ledger.opacity != EXPLICIT:
        raise ShapeError("handles can only be attached to an explicit ledger")
    rows = [list(row) for row in ledger.matrix]
    for curve in curves:
        if len(curve.linking_row) != len(rows):
            raise ShapeError(f"linking row of length {len(curve.linking_row)} but {len(rows)} handles present")
        for row, lk in zip(rows, curve.linking_row):
            row.append(lk)
        rows.append(list(curve.linking_row) + [curve.framing])
    return IntersectionLedger(
        matrix=tuple(tuple(r) for r in rows),
        ends_in=ledger.ends_in,
        ends_out=ledger.ends_out,
        assumptions=ledger.assumptions,
    )


def hoste_framing(m: int) -> int:
    """Linking of an (m, 1) push-off with the clasp curve inside a splice: m - 2."""
    return m - 2


def default_crossing_count(p: int, q: int) -> int:
    """Crossing changes used to unknot T(p, q): (p-1)(q-1)/2, one per positive braid crossing pair."""
    knot = TorusKnotParams(p, q, allow_unknot=True)
    return (knot.p - 1) * (knot.q - 1) // 2


# Labels of the intermediate manifolds.

def cover_label(knot: TorusKnotParams, r: int) -> str:
    return f"Σ(D^{r}({knot.label}))"


def twisted_unknot_label(depth: int) -> str:
    return f"D^{depth}_{CLASP_TWIST}(U)"


def splice_label(k0: str, k1: str) -> str:
    return f"Splice({k0}, {k1})"


def plus_one_surgery_label(k: str) -> str:
    return f"S^3_+1({k})"


def cover_to_splice(knot: TorusKnotParams, r: int, c: int | None = None) -> IntersectionLedger:
    """Negative definite cobordism from Σ(D^r(K)) to Splice(D^{r-1}_{-2}(U), K).

    One -1 framed handle per crossing change in an unknotting sequence of K;
    the curves are unlinked from K and from each other, so the form is -I_c.
    """
    if r < 2:
        raise DepthError(f"cover_to_splice needs depth r >= 2, got {r}")
    if c is None:
        c = default_crossing_count(knot.p, knot.q)
    if c < 1:
        raise DomainError(f"need at least one crossing change, got {c}")
    start = IntersectionLedger(
        ends_in=(end(cover_label(knot, r)),),
        ends_out=(end(splice_label(twisted_unknot_label(r - 1), knot.label)),),
    )
    return attach_handles(start, unlinked_curves(-1, c))


def splice_to_surgery(k0: str, k1: str) -> IntersectionLedger:
    """Single -1 framed handle unlinking the splice into S^3_+1(K0) # S^3_+1(K1)."""
    start = IntersectionLedger(
        ends_in=(end(splice_label(k0, k1)),),
        ends_out=(end(plus_one_surgery_label(k0), plus_one_surgery_label(k1)),),
    )
    return attach_handles(start, [FramedCurve(-1)])


def build_Z(knot: TorusKnotParams, r: int, c: int | None = None) -> IntersectionLedger:
    """Negative definite cobordism from Σ(D^r(T(p,q))) to -Σ(p, q, pq - 1).

    For r >= 2 the form is explicit: the crossing-change handles, the
    splice-unlinking handle and one more -1 handle around the innermost clasp
    of D^{r-1}_{-2}(U), giving -I_{c+2}.  For r = 1 definiteness is a cited
    assumption.
    """
    target = moser_surgery(knot, SurgerySlope(1, 1))
    if r < 1:
        raise DepthError(f"doubling depth must be >= 1, got {r}")
    if r == 1:
        return IntersectionLedger(
            ends_in=(end(cover_label(knot, 1)),),
            ends_out=(end(target),),
            opacity=OPAQUE,
            assumed_sign=NEGATIVE,
            assumptions=(
                "depth-one case: negative definite cobordism from Σ(D(T(p,q))) to S^3_+1(T(p,q)) "
                "via S^3_1/2(T(p,q)) (a cited result of Cochran and Gompf); not computed",
            ),
        )
    pattern = twisted_unknot_label(r - 1)
    first = cover_to_splice(knot, r, c)
    second = splice_to_surgery(pattern, knot.label)
    unknotting = attach_handles(
        IntersectionLedger(
            ends_in=second.ends_out,
            ends_out=(end(target),),
            assumptions=(
                f"S^3_+1(U) = S^3, so S^3_+1({pattern} -> U) # S^3_+1({knot.label}) = S^3_+1({knot.label}) = {target}",
            ),
        ),
        [FramedCurve(-1)],
    )
    return compose(compose(first, second), unknotting)


def build_P(knot: TorusKnotParams, r: int) -> IntersectionLedger:
    """Positive definite cobordism from Σ(D^r(T(p,q))) to -Σ(p,q,4pq-1) # -Σ(p,q,4pq-1).

    Two +1 framed curves, one around a clasp of each pattern component;
    their mutual linking is taken to be 0.
    """
    if r < 1:
        raise DepthError(f"doubling depth must be >= 1, got {r}")
    target = moser_surgery(knot, SurgerySlope(1, 4))
    start = IntersectionLedger(
        ends_in=(end(cover_label(knot, r)),),
        ends_out=(end(target, target),),
        assumptions=("the two clasp curves are mutually unlinked (lie around different pattern components)",),
    )
    return attach_handles(start, unlinked_curves(+1, 2))


def build_R(knot: TorusKnotParams, r: int) -> IntersectionLedger:
    """Negative definite filling with oriented boundary -Σ(D^r(T(p,q))); cited, not computed."""
    if r < 1:
        raise DepthError(f"doubling depth must be >= 1, got {r}")
    return IntersectionLedger(
        ends_in=(end(cover_label(knot, r)),),
        ends_out=(),
        opacity=OPAQUE,
        assumed_sign=NEGATIVE,
        assumptions=("negative definite filling of the branched double cover of an iterated double; cited, not computed",),
    )


def pos_to_neg_ledger(change_count: int, slope: SurgerySlope, source: str = "J", target: str = "K") -> IntersectionLedger:
    """Cobordism S^3_q(J) -> S^3_q(K) across ``change_count`` positive-to-negative crossing changes.

    The surgered annulus leaves H_2 unchanged, so the form is -I regardless of the slope.
    """
    if change_count < 1:
        raise DomainError(f"need at least one crossing change, got {change_count}")
    start = IntersectionLedger(
        ends_in=(end(f"S^3_{slope}({source})"),),
        ends_out=(end(f"S^3_{slope}({target})"),),
    )
    return attach_handles(start, unlinked_curves(-1, change_count))
