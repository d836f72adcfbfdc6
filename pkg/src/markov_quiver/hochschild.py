"""First Hochschild cohomology of hereditary algebras of acyclic 3-vertex quivers.

``Q(r, s, t)`` has ``r`` arrows 1->2, ``s`` arrows 2->3 and ``t`` arrows 1->3.
For the path algebra ``H`` of an acyclic quiver with ``n`` vertices and ``d``
connected components, Happel's formula reads

    dim H^1(H) = d - n + sum over arrows a of nu(a),

where ``nu(a)`` counts the paths from the source of ``a`` to its target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Triple, markov_constant

N_VERTICES = 3


@dataclass(frozen=True, order=True)
class AcyclicQuiver3:
    r: int
    s: int
    t: int

    def __post_init__(self):
        for name in ("r", "s", "t"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"arrow count {name} must be a nonnegative integer, got {value!r}")

    def adjacency(self) -> list[list[int]]:
        """Arrow multiplicities, vertices 1..3 at indices 0..2."""
        return [[0, self.r, self.t], [0, 0, self.s], [0, 0, 0]]

    def arrow_classes(self) -> list[tuple[int, int, int]]:
        """(source, target, multiplicity) for each parallel class of arrows."""
        return [(1, 2, self.r), (2, 3, self.s), (1, 3, self.t)]

    def components(self) -> int:
        """Connected components of the underlying undirected graph."""
        parent = list(range(N_VERTICES))

        def find(v: int) -> int:
            while parent[v] != v:
                v = parent[v]
            return v

        for source, target, count in self.arrow_classes():
            if count:
                parent[find(source - 1)] = find(target - 1)
        return len({find(v) for v in range(N_VERTICES)})

    @property
    def connected(self) -> bool:
        return self.components() == 1

    def to_json(self) -> dict:
        return {"r": str(self.r), "s": str(self.s), "t": str(self.t)}


def path_matrix(q: AcyclicQuiver3) -> list[list[int]]:
    """Number of paths of positive length between each pair of vertices.

    Sum of the powers of the adjacency matrix; the quiver is acyclic, so
    paths have length at most ``n - 1``.
    """
    a = q.adjacency()
    total = [[0] * N_VERTICES for _ in range(N_VERTICES)]
    power = [row[:] for row in a]
    for _ in range(N_VERTICES - 1):
        for i in range(N_VERTICES):
            for j in range(N_VERTICES):
                total[i][j] += power[i][j]
        power = [
            [sum(power[i][k] * a[k][j] for k in range(N_VERTICES)) for j in range(N_VERTICES)]
            for i in range(N_VERTICES)
        ]
    return total


def path_counts(q: AcyclicQuiver3) -> dict[tuple[int, int], int]:
    """``nu`` for each arrow class, keyed by (source, target)."""
    paths = path_matrix(q)
    return {(src, tgt): paths[src - 1][tgt - 1] for src, tgt, count in q.arrow_classes() if count}


def dim_h1(q: AcyclicQuiver3) -> int:
    nu = path_counts(q)
    arrows = sum(count * nu[(src, tgt)] for src, tgt, count in q.arrow_classes() if count)
    return q.components() - N_VERTICES + arrows


def dim_h1_closed_form(q: AcyclicQuiver3) -> int:
    """``r^2 + s^2 + t^2 + rst - 2``; valid for connected quivers only."""
    return q.r**2 + q.s**2 + q.t**2 + q.r * q.s * q.t - 2


def mutate_to_cyclic(q: AcyclicQuiver3) -> Triple:
    """Cyclic triple obtained by mutating ``Q(r, s, t)`` at vertex 2.

    The arrows at vertex 2 reverse and the ``r*s`` two-step paths 1->2->3 add
    arrows 1->3, giving the cycle 1 -> 3 -> 2 -> 1 with ``t + rs``, ``s`` and
    ``r`` arrows, returned as ``(t + rs, s, r)``.
    """
    if q.r == 0 or q.s == 0:
        raise ValueError(f"mutation at vertex 2 needs r, s > 0 to create a cycle, got {q}")
    return Triple(q.t + q.r * q.s, q.s, q.r)


def verify_appendix_theorem(q: AcyclicQuiver3) -> bool:
    """Check C(mutated triple) - 2 == dim H^1 for a connected Q(r, s, t) with r, s > 0."""
    if not q.connected:
        raise ValueError(f"{q} is not connected")
    return markov_constant(mutate_to_cyclic(q)) - 2 == dim_h1(q)


def hereditary_candidates(C: int) -> list[AcyclicQuiver3]:
    """All Q(r, s, t) with r, s > 0, t >= 0 and r^2 + s^2 + t^2 + rst = C, sorted."""
    if C < 2:
        raise ValueError(f"candidates need C >= 2, got {C}")
    bound = math.isqrt(C)
    out = []
    for r in range(1, bound + 1):
        for s in range(1, bound + 1):
            rest = C - r * r - s * s
            if rest < 0:
                break
            # t^2 + rs*t - rest = 0
            disc = (r * s) ** 2 + 4 * rest
            root = math.isqrt(disc)
            if root * root == disc and (root - r * s) % 2 == 0:
                out.append(AcyclicQuiver3(r, s, (root - r * s) // 2))
    return sorted(out)
