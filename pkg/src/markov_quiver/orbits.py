"""Bounded exploration of orbits under the mutation group.

Orbits are usually infinite, so every search here takes explicit bounds and
reports whether it closed.  Nodes are visited layer by layer with each layer
sorted, which makes every result reproducible.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable
from dataclasses import dataclass

from .classify import Verdict, descend, in_fundamental_domain
from .core import GENERATORS, Letter, Triple, apply_letter, markov_constant


@dataclass(frozen=True)
class OrbitGraph:
    seed: Triple
    nodes: tuple[Triple, ...]
    # undirected: (a, b, letter) with a < b; every generator is an involution
    edges: tuple[tuple[Triple, Triple, Letter], ...]
    closed: bool
    max_abs: int | None = None
    max_nodes: int | None = None

    @property
    def truncated(self) -> bool:
        return not self.closed

    def neighbours(self, t: Triple) -> list[tuple[Triple, Letter]]:
        out = []
        for a, b, letter in self.edges:
            if a == t:
                out.append((b, letter))
            elif b == t:
                out.append((a, letter))
        return out


def _check_bound(name: str, value: int | None) -> None:
    if value is not None and value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")


def enumerate_orbit(
    seed: Triple,
    max_abs: int | None = None,
    max_nodes: int = 10_000,
    max_depth: int | None = None,
) -> OrbitGraph:
    """Breadth-first search from ``seed`` over the six generators.

    Triples with an entry larger than ``max_abs`` in absolute value are not
    visited, and the search stops adding nodes at ``max_nodes``.  The result
    is the induced subgraph on the visited nodes; ``closed`` is true only when
    no neighbour of any visited node was left out.
    """
    _check_bound("max_abs", max_abs)
    _check_bound("max_nodes", max_nodes)
    seed = Triple(*seed)
    nodes = [seed]
    seen = {seed}
    edges: set[tuple[Triple, Triple, Letter]] = set()
    closed = True

    def add_edge(a: Triple, b: Triple, letter: Letter) -> None:
        edges.add((a, b, letter) if a < b else (b, a, letter))

    frontier = [seed]
    depth = 0
    while frontier:
        expand = max_depth is None or depth < max_depth
        layer: set[Triple] = set()
        for t in frontier:
            for letter in GENERATORS:
                u = apply_letter(t, letter)
                if u == t:
                    continue
                if u in seen:
                    add_edge(t, u, letter)
                    continue
                if not expand:
                    closed = False
                    continue
                if max_abs is not None and max(abs(u.x), abs(u.y), abs(u.z)) > max_abs:
                    closed = False
                    continue
                if u not in layer and len(seen) + len(layer) >= max_nodes:
                    closed = False
                    continue
                layer.add(u)
                add_edge(t, u, letter)
        if not expand:
            break
        frontier = sorted(layer)
        seen.update(frontier)
        nodes.extend(frontier)
        depth += 1
    return OrbitGraph(seed, tuple(nodes), tuple(sorted(edges, key=_edge_key)), closed, max_abs, max_nodes)


def _edge_key(edge: tuple[Triple, Triple, Letter]) -> tuple:
    a, b, letter = edge
    return (a, b, letter.value)


class Finiteness(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def has_increasing_ray(t: Triple, steps: int = 3) -> bool:
    """Certify an infinite orbit by repeatedly mutating the smallest entry.

    If ``steps`` consecutive mutations each produce a new strict maximum and
    the second largest entry of the result is at least 2, the maximum keeps
    growing forever: for a sorted ``(X, a, b)`` with ``X > a >= 2`` the next
    value ``X*a - b`` exceeds ``X``.
    """
    cur = t.sorted_desc()
    for _ in range(steps):
        a, b, c = cur
        new = a * b - c
        if new <= a:
            return False
        cur = Triple(new, a, b)
    return cur.y >= 2


def is_finite_orbit(seed: Triple, safety_bound: int = 10_000) -> Finiteness:
    """YES if the orbit closes within ``safety_bound`` nodes, NO on an increasing ray."""
    seed = Triple(*seed)
    if has_increasing_ray(seed):
        return Finiteness.NO
    graph = enumerate_orbit(seed, max_nodes=safety_bound)
    if graph.closed:
        return Finiteness.YES
    if any(has_increasing_ray(t) for t in graph.nodes):
        return Finiteness.NO
    return Finiteness.UNKNOWN


@dataclass(frozen=True)
class OrbitSummary:
    seed: Triple
    representative: Triple
    elements_found: int
    is_finite: Finiteness
    constant: int
    verdict: Verdict
    bound: int

    def to_json(self) -> dict:
        return {
            "seed": self.seed.to_json(),
            "representative": self.representative.to_json(),
            "elements_found": self.elements_found,
            "is_finite": self.is_finite.value,
            "bound": self.bound,
            "constant": str(self.constant),
            "verdict": self.verdict.value,
        }


def summarize_orbit(seed: Triple, max_abs: int | None = None, max_nodes: int = 10_000) -> OrbitSummary:
    """Orbit summary; the representative is the domain point for cyclic seeds.

    For acyclic seeds there is no canonical form, so the representative is the
    sorted end point of the descent (or the seed itself when it already has a
    negative entry).
    """
    seed = Triple(*seed)
    graph = enumerate_orbit(seed, max_abs=max_abs, max_nodes=max_nodes)
    if min(seed) < 0:
        verdict, rep = Verdict.ACYCLIC, seed.sorted_desc()
    else:
        result = descend(seed)
        verdict = result.verdict
        rep = result.representative if result.is_cyclic else result.representative.sorted_desc()
    if graph.closed:
        finite = Finiteness.YES
    else:
        finite = is_finite_orbit(seed, safety_bound=max_nodes)
    return OrbitSummary(seed, rep, len(graph.nodes), finite, markov_constant(seed), verdict, max_nodes)


# -- representatives per Markov constant -------------------------------------


class InfiniteFamilyError(ValueError):
    """Raised for C = 4, whose cyclic orbits form the infinite family (x, x, 2)."""

    family = "(x, x, 2) for x >= 2"

    def __init__(self, constant: int = 4):
        self.constant = constant
        super().__init__(
            f"Markov constant {constant} has infinitely many cyclic orbits, "
            f"one for each domain point {self.family}"
        )


def _slice_can_reach(C: int, y: int, z: int) -> bool:
    # largest C on the segment y <= x <= y*z/2 is at one of its ends (convex in x),
    # compared after multiplying by 4 to stay integral
    at_diagonal = 4 * (y * y * (2 - z) + z * z)
    at_edge = 4 * z * z + y * y * (4 - z * z)
    return max(at_diagonal, at_edge) >= 4 * C


def cyclic_representatives(C: int) -> list[Triple]:
    """All integer points of the fundamental domain with Markov constant ``C``.

    The domain slice at height ``z = 2`` is the line ``x = y`` with C = 4, so
    for C != 4 the scan starts at ``z = 3``.  For ``z >= 3`` the largest
    constant on the slice is ``z^2 (3 - z)`` at ``(z, z, z)``, which bounds
    ``z``; within a slice the constant decreases in ``y`` along both edges,
    which bounds ``y``; ``x`` is the smaller root of the quadratic in ``x``.
    """
    if C == 4:
        raise InfiniteFamilyError(C)
    reps = []
    z = 3
    while z * z * (3 - z) >= C:
        y = z
        while _slice_can_reach(C, y, z):
            disc = (y * z) ** 2 - 4 * (y * y + z * z - C)
            if disc >= 0:
                s = math.isqrt(disc)
                if s * s == disc and (y * z - s) % 2 == 0:
                    x = (y * z - s) // 2
                    t = Triple(x, y, z)
                    if in_fundamental_domain(t):
                        reps.append(t)
            y += 1
        z += 1
    return sorted(reps)


def acyclic_solutions(C: int) -> list[Triple]:
    """Solutions of C(x, y, z) = C with x >= y >= 0 >= z.

    Every term x^2, y^2, z^2, -xyz is nonnegative there, so each entry is at
    most sqrt(C) in absolute value.
    """
    if C < 0:
        return []
    s = math.isqrt(C)
    out = []
    for x in range(s + 1):
        for y in range(x + 1):
            for z in range(-s, 1):
                if x * x + y * y + z * z - x * y * z == C:
                    out.append(Triple(x, y, z))
    return out


@dataclass(frozen=True)
class AcyclicClass:
    """Acyclic solutions grouped by orbit connectivity.

    ``merge_verified`` is true when the orbit was explored completely, so the
    class is exactly the set of solutions in that orbit.  Otherwise classes
    are only known to be connected inside the search bound and two unverified
    classes may still belong to one orbit.
    """

    representative: Triple
    solutions: tuple[Triple, ...]
    nonnegative_members: tuple[Triple, ...]
    merge_verified: bool
    orbit_size: int | None
    max_abs: int
    max_nodes: int

    def to_json(self) -> dict:
        return {
            "verdict": "acyclic",
            "representative": self.representative.to_json(),
            "solutions": [t.to_json() for t in self.solutions],
            "nonnegative_members": [t.to_json() for t in self.nonnegative_members],
            "merge_verified": self.merge_verified,
            "orbit_size": self.orbit_size,
            "max_abs": self.max_abs,
            "max_nodes": self.max_nodes,
        }


def _nonnegative_sorted(nodes: Iterable[Triple]) -> tuple[Triple, ...]:
    return tuple(sorted(t for t in nodes if t.x >= t.y >= t.z >= 0))


def acyclic_representatives(
    C: int,
    max_abs: int | None = None,
    max_nodes: int = 50_000,
) -> list[AcyclicClass]:
    """Orbit classes of acyclic triples with Markov constant ``C``.

    Every acyclic orbit contains a solution with x >= y >= 0 >= z.  Those are
    enumerated exactly and then joined by bounded breadth-first search.  The
    representative of a class is its lexicographically largest solution.
    """
    if C < 0:
        raise ValueError(f"acyclic triples have Markov constant >= 0, got {C}")
    if max_abs is None:
        max_abs = 4 * math.isqrt(C) + 4
    candidates = acyclic_solutions(C)
    parent = {t: t for t in candidates}

    def find(t: Triple) -> Triple:
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    graphs = {}
    for t in candidates:
        if t in graphs:
            continue
        g = enumerate_orbit(t, max_abs=max_abs, max_nodes=max_nodes)
        reached = set(g.nodes)
        found = [u for u in candidates if u in reached]
        for u in found:
            # one search covers all candidates it reached when it closed
            if g.closed:
                graphs.setdefault(u, g)
            ru, rt = find(u), find(t)
            if ru != rt:
                parent[max(ru, rt)] = min(ru, rt)
        graphs.setdefault(t, g)

    classes: dict[Triple, list[Triple]] = {}
    for t in candidates:
        classes.setdefault(find(t), []).append(t)
    out = []
    for members in classes.values():
        members.sort()
        closed_graph = next((graphs[m] for m in members if graphs[m].closed), None)
        if closed_graph is not None:
            nonneg = _nonnegative_sorted(closed_graph.nodes)
            size = len(closed_graph.nodes)
        else:
            nodes = set()
            for m in members:
                nodes.update(graphs[m].nodes)
            nonneg = _nonnegative_sorted(nodes)
            size = None
        out.append(
            AcyclicClass(
                representative=members[-1],
                solutions=tuple(members),
                nonnegative_members=nonneg,
                merge_verified=closed_graph is not None,
                orbit_size=size,
                max_abs=max_abs,
                max_nodes=max_nodes,
            )
        )
    out.sort(key=lambda c: c.representative)
    return out


# -- export -------------------------------------------------------------------


def _label(t: Triple) -> str:
    return f'"{t.x},{t.y},{t.z}"'


def export_dot(graph: OrbitGraph, name: str = "orbit") -> str:
    lines = [f"graph {name} {{"]
    for t in graph.nodes:
        attrs = ' [shape=doublecircle]' if t == graph.seed else ""
        lines.append(f"  {_label(t)}{attrs};")
    for a, b, letter in graph.edges:
        lines.append(f'  {_label(a)} -- {_label(b)} [label="{letter.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
