"""Triples, the mutation group action, and the Markov constant.

A cyclic quiver on three vertices with ``x`` arrows 1->2, ``y`` arrows 2->3 and
``z`` arrows 3->1 is recorded as the integer triple ``(x, y, z)``.  The group
generated by the three mutations and the coordinate permutations acts on all of
Z^3 by the formulas below; on cyclic quivers it agrees with quiver mutation.
Python integers are unbounded, so no component can overflow.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from typing import NamedTuple


class Triple(NamedTuple):
    x: int
    y: int
    z: int

    def to_json(self) -> list[str]:
        return [str(self.x), str(self.y), str(self.z)]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "Triple":
        if len(data) != 3:
            raise ValueError(f"a triple needs exactly three entries, got {len(data)}")
        return cls(*(_parse_int(v) for v in data))

    def sorted_desc(self) -> "Triple":
        return Triple(*sorted(self, reverse=True))


def _parse_int(value: str | int) -> int:
    if isinstance(value, bool):
        raise ValueError(f"not an integer: {value!r}")
    if isinstance(value, int):
        return value
    text = value.strip()
    if not text or not text.lstrip("+-").isdigit():
        raise ValueError(f"not a decimal integer: {value!r}")
    return int(text)


class Letter(enum.Enum):
    """Generators of the group: three mutations and three transpositions."""

    MU1 = "mu1"
    MU2 = "mu2"
    MU3 = "mu3"
    SWAP12 = "swap12"
    SWAP13 = "swap13"
    SWAP23 = "swap23"

    def __str__(self) -> str:
        return self.value


GENERATORS: tuple[Letter, ...] = tuple(Letter)
MUTATIONS = (Letter.MU1, Letter.MU2, Letter.MU3)
SWAPS = (Letter.SWAP12, Letter.SWAP13, Letter.SWAP23)

# A group word is a plain tuple of letters, applied left to right.
GroupWord = tuple[Letter, ...]

def mutate(t: Triple, i: int) -> Triple:
    """Mutation at vertex ``i``: replace one coordinate by (product of the others) - itself."""
    x, y, z = t
    if i == 1:
        return Triple(y * z - x, y, z)
    if i == 2:
        return Triple(x, x * z - y, z)
    if i == 3:
        return Triple(x, y, x * y - z)
    raise ValueError(f"vertex index must be 1, 2 or 3, got {i!r}")


def _check_perm(sigma: Sequence[int]) -> tuple[int, int, int]:
    perm = tuple(sigma)
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1, 2, 3): {sigma!r}")
    return perm  # type: ignore[return-value]


def permute(t: Triple, sigma: Sequence[int]) -> Triple:
    """Move the entry at position ``i`` to position ``sigma[i-1]``.

    ``sigma`` is given in one-line notation ``(sigma(1), sigma(2), sigma(3))``.
    With this convention ``permute(mutate(t, i), sigma) == mutate(permute(t, sigma), sigma(i))``.
    """
    perm = _check_perm(sigma)
    out = [0, 0, 0]
    for i, target in enumerate(perm):
        out[target - 1] = t[i]
    return Triple(*out)


def swap(i: int, j: int) -> tuple[int, int, int]:
    """The transposition of ``i`` and ``j`` in one-line notation."""
    if {i, j} <= {1, 2, 3} and i != j:
        perm = [1, 2, 3]
        perm[i - 1], perm[j - 1] = j, i
        return tuple(perm)  # type: ignore[return-value]
    raise ValueError(f"invalid transposition ({i} {j})")


def _mu1(t: Triple) -> Triple:
    return Triple(t[1] * t[2] - t[0], t[1], t[2])


def _mu2(t: Triple) -> Triple:
    return Triple(t[0], t[0] * t[2] - t[1], t[2])


def _mu3(t: Triple) -> Triple:
    return Triple(t[0], t[1], t[0] * t[1] - t[2])


_ACTIONS = {
    Letter.MU1: _mu1,
    Letter.MU2: _mu2,
    Letter.MU3: _mu3,
    Letter.SWAP12: lambda t: Triple(t[1], t[0], t[2]),
    Letter.SWAP13: lambda t: Triple(t[2], t[1], t[0]),
    Letter.SWAP23: lambda t: Triple(t[0], t[2], t[1]),
}


def apply_letter(t: Triple, letter: Letter) -> Triple:
    return _ACTIONS[letter](t)


def apply_word(t: Triple, word: Iterable[Letter]) -> Triple:
    for letter in word:
        t = apply_letter(t, letter)
    return t


def inverse_word(word: Sequence[Letter]) -> GroupWord:
    # every generator is an involution
    return tuple(reversed(word))


def parse_word(names: Iterable[str]) -> GroupWord:
    return tuple(Letter(name.strip().lower()) for name in names)


def markov_constant(t: Sequence[int]) -> int:
    x, y, z = t
    return x * x + y * y + z * z - x * y * z


class MCase(enum.Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"


def is_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise partial order."""
    return all(p <= q for p, q in zip(a, b))


def non_decreasing_count(t: Triple) -> int:
    """Number of vertices ``i`` with ``t <= mutate(t, i)``."""
    x, y, z = t
    return (y * z - x >= x) + (x * z - y >= y) + (x * y - z >= z)


def m_case(t: Triple) -> MCase:
    n = non_decreasing_count(t)
    if n == 3:
        return MCase.M1
    if n == 2:
        return MCase.M2
    return MCase.M3
