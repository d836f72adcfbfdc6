"""Deciding cluster-cyclicity of rank-3 cyclic quivers.

Three independent procedures answer the same question for a nonnegative
triple and must always agree:

* :func:`predicate_constant` looks only at the Markov constant and the minimum,
* :func:`predicate_band` tests the third entry against the band [m-, m+]
  with exact integer arithmetic,
* :func:`descend` runs the mutation descent and returns a witness word.

The module also holds the fundamental domain, the band functions m-/m+ and
the helpers describing the real surfaces ``C(x, y, z) = C``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import NamedTuple

from .core import (
    GroupWord,
    Letter,
    Triple,
    apply_letter,
    markov_constant,
)


class Verdict(enum.Enum):
    CYCLIC = "cyclic"
    ACYCLIC = "acyclic"


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`descend`.

    For a cyclic verdict ``representative`` is the unique orbit element in the
    fundamental domain; for an acyclic verdict it is the first triple reached
    with a non-positive entry.  ``apply_word(input, witness) == representative``.
    """

    verdict: Verdict
    representative: Triple
    witness: GroupWord
    constant: int

    @property
    def is_cyclic(self) -> bool:
        return self.verdict is Verdict.CYCLIC

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "representative": self.representative.to_json(),
            "witness": [letter.value for letter in self.witness],
            "constant": str(self.constant),
        }


def _require_nonnegative(t: Triple) -> None:
    if min(t) < 0:
        raise ValueError(
            f"triple {tuple(t)} has a negative entry; expected x, y, z >= 0 "
            "(a negative entry already encodes an acyclic orientation)"
        )


def predicate_constant(t: Triple) -> bool:
    """True when the triple is cluster-acyclic: C > 4 or some entry below 2."""
    _require_nonnegative(t)
    return markov_constant(t) > 4 or min(t) < 2


def predicate_band(t: Triple) -> bool:
    """True when the triple is cluster-cyclic: all entries >= 2 and m-(x,y) <= z <= m+(x,y).

    Band membership is |2z - xy| <= sqrt((x^2-4)(y^2-4)), squared to stay in
    the integers.
    """
    _require_nonnegative(t)
    x, y, z = t
    if min(t) < 2:
        return False
    return (2 * z - x * y) ** 2 <= (x * x - 4) * (y * y - 4)


def _sort_desc(t: Triple, word: list[Letter]) -> Triple:
    # three-element bubble sort, recording the transpositions used
    for letter, a, b in ((Letter.SWAP12, 0, 1), (Letter.SWAP23, 1, 2), (Letter.SWAP12, 0, 1)):
        if t[a] < t[b]:
            t = apply_letter(t, letter)
            word.append(letter)
    return t


def _step(t: Triple, letter: Letter, word: list[Letter]) -> Triple:
    word.append(letter)
    return apply_letter(t, letter)


def descend(t: Triple) -> Classification:
    """Reduce ``t`` by strictly decreasing mutations until a verdict is forced.

    Each round sorts the triple descending and mutates the largest entry while
    that strictly decreases it.  The loop ends in one of these ways:

    * smallest entry <= 0 (on input, or after a mutation overshoots): acyclic;
    * smallest entry 1: one more mutation ``(x, y, 1) -> (y - x, y, 1)`` gives
      an entry <= 0;
    * ``(x, x, 2)``: cyclic, this is the domain point of the C = 4 family;
    * ``(x, y, 2)`` with x > y: the arithmetic ladder ``x, y, 2y - x, 3y - 2x, ...``
      goes negative;
    * no strictly decreasing mutation left: the sorted triple lies in the
      fundamental domain and the orbit is cyclic.

    Every mutation strictly lowers one nonnegative entry, so the loop terminates.
    """
    _require_nonnegative(t)
    t = Triple(*t)
    constant = markov_constant(t)
    word: list[Letter] = []
    cur = t
    while True:
        cur = _sort_desc(cur, word)
        x, y, z = cur
        if z <= 0:
            break
        if z == 1:
            cur = _step(cur, Letter.MU1, word)
            break
        if z == 2:
            if x == y:
                return Classification(Verdict.CYCLIC, cur, tuple(word), constant)
            while min(cur) > 0:
                cur = _step(cur, Letter.MU1 if cur.x > cur.y else Letter.MU2, word)
            break
        if y * z - x < x:
            cur = _step(cur, Letter.MU1, word)
            continue
        return Classification(Verdict.CYCLIC, cur, tuple(word), constant)
    return Classification(Verdict.ACYCLIC, cur, tuple(word), constant)


def is_cluster_cyclic(t: Triple) -> bool:
    return descend(t).is_cyclic


def fundamental_representative(t: Triple) -> Triple:
    """The unique element of the fundamental domain in the orbit of a cyclic triple."""
    result = descend(t)
    if not result.is_cyclic:
        raise ValueError(f"triple {tuple(t)} is cluster-acyclic; it has no fundamental representative")
    return result.representative


def in_fundamental_domain(t: Triple) -> bool:
    x, y, z = t
    return x >= y >= z >= 2 and y * z >= 2 * x


def in_open_domain(t: Triple) -> bool:
    """Fundamental domain minus the C = 4 family ``(x, x, 2)``."""
    return in_fundamental_domain(t) and markov_constant(t) < 4


# -- band functions ---------------------------------------------------------

_BAND_SLACK = 1e-12


def _band_args(x: Real, y: Real) -> tuple[float, float]:
    xf, yf = float(x), float(y)
    # composed identities feed computed floats like 1.9999999999999998 back in
    for v in (xf, yf):
        if not v >= 2 - _BAND_SLACK * max(1.0, abs(v)):
            raise ValueError(f"band functions need x, y >= 2, got ({x}, {y})")
    return max(xf, 2.0), max(yf, 2.0)


def m_plus(x: Real, y: Real) -> float:
    xf, yf = _band_args(x, y)
    return 0.5 * (xf * yf + math.sqrt((xf * xf - 4) * (yf * yf - 4)))


def m_minus(x: Real, y: Real) -> float:
    xf, yf = _band_args(x, y)
    # product of the two roots is x^2 + y^2 - 4; avoids cancellation
    hi = m_plus(xf, yf)
    # the division can round one ulp past a double root
    return min((xf * xf + yf * yf - 4) / hi, hi)


class BandValues(NamedTuple):
    x: Real
    y: Real
    m_minus: float
    m_plus: float


def band(x: Real, y: Real) -> BandValues:
    return BandValues(x, y, m_minus(x, y), m_plus(x, y))


# -- real geometry of C(x, y, z) = C ----------------------------------------


class SliceKind(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    ELLIPSE = "ellipse"
    ONE_LINE = "one_line"
    TWO_PARALLEL_LINES = "two_parallel_lines"
    TWO_CROSSING_LINES = "two_crossing_lines"
    HYPERBOLA = "hyperbola"


def slice_classify(C: int, z: int) -> SliceKind:
    """Shape of the real plane conic ``x^2 + y^2 - z*x*y = C - z^2`` for fixed ``z``."""
    zz = z * z
    if abs(z) < 2:
        if C < zz:
            return SliceKind.EMPTY
        if C == zz:
            return SliceKind.POINT
        return SliceKind.ELLIPSE
    if abs(z) == 2:
        # (x -+ y)^2 + 4 = C
        if C < 4:
            return SliceKind.EMPTY
        if C == 4:
            return SliceKind.ONE_LINE
        return SliceKind.TWO_PARALLEL_LINES
    if C == zz:
        return SliceKind.TWO_CROSSING_LINES
    return SliceKind.HYPERBOLA


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


_CONE_POINTS = frozenset(
    {Triple(2, 2, 2), Triple(2, -2, -2), Triple(-2, 2, -2), Triple(-2, -2, 2)}
)


def singular_points(C: int, field: Field = Field.REAL) -> frozenset[Triple]:
    """Singular points of the surface ``C(x, y, z) = C``.

    Over the reals the origin of ``C = 0`` is an isolated point of the surface
    and does not count as singular.
    """
    if C == 4:
        return _CONE_POINTS
    if C == 0 and field is Field.COMPLEX:
        return frozenset({Triple(0, 0, 0)})
    return frozenset()


class ComponentCounts(NamedTuple):
    total: int
    smooth: int
    compact: int


def component_table(C: int) -> ComponentCounts:
    """Connected components of the real surface, of its smooth part, and compact ones."""
    if C < 0:
        return ComponentCounts(4, 4, 0)
    if C < 4:
        return ComponentCounts(5, 5, 1)
    if C == 4:
        return ComponentCounts(1, 5, 0)
    return ComponentCounts(1, 1, 0)


class Component(enum.Enum):
    COMPACT = "compact"
    PPP = "+++"
    MMP = "--+"
    MPM = "-+-"
    PMM = "+--"


_SIGN_LABELS = {
    (1, 1, 1): Component.PPP,
    (-1, -1, 1): Component.MMP,
    (-1, 1, -1): Component.MPM,
    (1, -1, -1): Component.PMM,
}


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def component_of(p, rel_tol: float = 1e-9) -> Component:
    """Connected component of a real point with 0 <= C(p) <= 4.

    Exact for int and Fraction coordinates; floats get ``rel_tol`` on the range test.
    """
    x, y, z = p
    c = x * x + y * y + z * z - x * y * z
    exact = all(isinstance(v, (int, Fraction)) for v in p)
    slack = 0 if exact else rel_tol * max(1.0, abs(float(x * y * z)))
    if not (-slack <= c <= 4 + slack):
        raise ValueError(f"component_of needs 0 <= C(p) <= 4, got C = {c}")
    if exact and c == 4 and Triple(*p) in _CONE_POINTS:
        raise ValueError(f"{tuple(p)} is a singular point; it has no component")
    if not exact and any(
        all(abs(float(a) - b) <= rel_tol * 2 for a, b in zip(p, cone)) for cone in _CONE_POINTS
    ):
        raise ValueError(f"{tuple(p)} is a singular point; it has no component")
    if all(-2 <= v <= 2 for v in p):
        return Component.COMPACT
    key = (_sign(x), _sign(y), _sign(z))
    try:
        return _SIGN_LABELS[key]
    except KeyError:
        raise ValueError(f"no component with sign pattern {key} at {tuple(p)}") from None
