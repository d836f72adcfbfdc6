"""Acceptance suite: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Tolerances are the ones stated with each criterion; nothing is loosened.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest
import sympy

from markov_quiver.classify import (
    Field,
    component_of,
    component_table,
    descend,
    fundamental_representative,
    m_minus,
    m_plus,
    predicate_band,
    predicate_constant,
    singular_points,
)
from markov_quiver.core import GENERATORS, Triple, apply_word, markov_constant, mutate
from markov_quiver.hochschild import AcyclicQuiver3, dim_h1, mutate_to_cyclic
from markov_quiver.orbits import (
    Finiteness,
    InfiniteFamilyError,
    acyclic_representatives,
    cyclic_representatives,
    enumerate_orbit,
    is_finite_orbit,
)
from markov_quiver.spectral import cartan, char_poly, coxeter, det3, spectrum_from_constant, trace

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

BAND_REL_TOL = 1e-9
BAND_MARGIN = 1e-6
UNIT_TOL = 1e-12

# filled by test_criterion; conftest prints it in the terminal summary
LINES = {}


class Outcome:
    def __init__(self):
        self.checked = 0
        self.failures = []

    def expect(self, ok, example):
        self.checked += 1
        if not ok:
            self.failures.append(example)

    @property
    def passed(self):
        return not self.failures


def report(number, title, outcome, started, extra=""):
    status = "PASS" if outcome.passed else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title} ({outcome.checked} checks, {len(outcome.failures)} failures, {time.perf_counter() - started:.1f}s)"
    if extra:
        line += f" {extra}"
    if outcome.failures:
        line += f" first failure: {outcome.failures[0]}"
    return line


def _sorted_members(classes):
    return {m for cls in classes for m in cls.nonnegative_members}


def criterion_1():
    o = Outcome()
    for t in itertools.product(range(0, 31), repeat=3):
        t = Triple(*t)
        acyclic = predicate_constant(t)
        cyclic = predicate_band(t)
        o.expect(acyclic != cyclic and cyclic == descend(t).is_cyclic, t)
    return "theorem equivalence on [0,30]^3", o, ""


def criterion_2():
    o = Outcome()
    expected = {
        0: {Triple(0, 0, 0)},
        1: {Triple(1, 0, 0)},
        2: {Triple(1, 1, 0), Triple(1, 1, 1)},
        4: {Triple(2, 0, 0), Triple(2, 1, 1)},
    }
    for c, members in expected.items():
        classes = acyclic_representatives(c)
        o.expect(_sorted_members(classes) == members and all(cl.merge_verified for cl in classes), ("acyclic", c))
    o.expect(cyclic_representatives(0) == [Triple(3, 3, 3)], ("cyclic", 0))
    o.expect(cyclic_representatives(1) == [], ("cyclic", 1))
    o.expect(cyclic_representatives(2) == [], ("cyclic", 2))
    try:
        cyclic_representatives(4)
        o.expect(False, ("cyclic", 4, "no flag"))
    except InfiniteFamilyError as exc:
        o.expect("(x, x, 2)" in str(exc), ("cyclic", 4, str(exc)))
    return "finite lists for C in {0,1,2,4}", o, ""


def criterion_3():
    o = Outcome()
    bound = 40
    solutions = {Triple(*t) for t in itertools.product(range(0, bound + 1), repeat=3) if markov_constant(t) == 0}
    origin = enumerate_orbit(Triple(0, 0, 0))
    markov = enumerate_orbit(Triple(3, 3, 3), max_abs=bound, max_nodes=10**6)
    o.expect(origin.closed and set(origin.nodes) == {Triple(0, 0, 0)}, "origin orbit is a single point")
    o.expect(Triple(0, 0, 0) not in set(markov.nodes), "orbits are disjoint")
    reached = set(markov.nodes)
    for t in sorted(solutions - {Triple(0, 0, 0)}):
        o.expect(t in reached, t)
    return "C = 0 has exactly two orbits", o, f"({len(solutions)} solutions in [0,{bound}]^3)"


def criterion_4():
    o = Outcome()
    for t in itertools.product(range(2, 16), repeat=3):
        t = Triple(*t)
        if not predicate_band(t):
            continue
        want = Finiteness.YES if t == (2, 2, 2) else Finiteness.NO
        o.expect(is_finite_orbit(t) is want, t)
    return "(2,2,2) is the only finite cyclic orbit in [2,15]^3", o, ""


def criterion_5():
    o = Outcome()
    rng = random.Random(20240501)
    for _ in range(10_000):
        t = Triple(*(rng.randint(-(10**50), 10**50) for _ in range(3)))
        word = tuple(rng.choice(GENERATORS) for _ in range(rng.randint(0, 30)))
        o.expect(markov_constant(apply_word(t, word)) == markov_constant(t), (t, word))
    return "Markov invariance, 10^4 triples up to 10^50, words <= 30", o, ""


def _rel_close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def criterion_6():
    # the displayed chain m+(x, m-(x,y)) = m+(x, xy - m+(x,y)) = m-(x, m+(x,y)) = m-(x, xy - m-(x,y)) = y
    o = Outcome()
    chain_failures = 0
    for x in range(2, 51):
        for y in range(2, 51):
            lo, hi = m_minus(x, y), m_plus(x, y)
            chain = (m_plus(x, lo), m_plus(x, x * y - hi), m_minus(x, hi), m_minus(x, x * y - lo))
            ok = all(_rel_close(v, y, BAND_REL_TOL) for v in chain)
            chain_failures += not ok
            o.expect(ok, {"x": x, "y": y, "chain": chain})
            for z in range(0, x * y + 2):
                if min(abs(z - lo), abs(z - hi)) > BAND_MARGIN:
                    o.expect(predicate_band(Triple(x, y, z)) == (lo <= z <= hi), {"x": x, "y": y, "z": z})
    return "m+- composition identities on [2,50]^2", o, f"(chain fails on {chain_failures} pairs)"


def criterion_7():
    o = Outcome()
    for t in itertools.product(range(-10, 11), repeat=3):
        phi = coxeter(cartan(t))
        o.expect(trace(phi) == markov_constant(t) - 3 and det3(phi) == -1, t)
    T = sympy.Symbol("T")
    for c in range(-20, 21):
        s = spectrum_from_constant(c)
        o.expect((abs(abs(s.lam) - 1) <= UNIT_TOL) == (0 <= c <= 4), ("unit circle", c, s.lam))
        # lambda is a root of T^2 - (C-2)T + 1, hence lambda + 1/lambda = C - 2 in Q(lambda)
        lam = (sympy.Integer(s.lambda_sum) + sympy.sqrt(sympy.Integer(s.discriminant))) / 2
        o.expect(s.lambda_sum == c - 2 and sympy.simplify(lam + 1 / lam - (c - 2)) == 0, ("sum", c))
        factor = sympy.Poly((T + 1) * (T**2 - s.lambda_sum * T + 1), T).all_coeffs()
        o.expect([int(v) for v in factor] == [1, 3 - c, 3 - c, 1], ("factor", c))
    for t in itertools.product(range(-4, 5), repeat=3):
        c = markov_constant(t)
        o.expect(char_poly(coxeter(cartan(t))) == (1, 3 - c, 3 - c, 1), ("char poly", t))
    return "spectral identities", o, ""


def criterion_8():
    o = Outcome()
    for r, s, t in itertools.product(range(1, 21), range(1, 21), range(0, 21)):
        q = AcyclicQuiver3(r, s, t)
        o.expect(markov_constant(mutate_to_cyclic(q)) - 2 == dim_h1(q), (r, s, t))
    return "C(mutated Q(r,s,t)) - 2 = dim H^1 on [1,20]^2 x [0,20]", o, ""


def criterion_9():
    o = Outcome()
    cones = {Triple(2, 2, 2), Triple(2, -2, -2), Triple(-2, 2, -2), Triple(-2, -2, 2)}
    o.expect(singular_points(4, Field.REAL) == cones, "singular points of V(4)")
    critical = set()
    for t in itertools.product(range(-10, 11), repeat=3):
        x, y, z = t
        if markov_constant(t) == 4 and (2 * x - y * z, 2 * y - x * z, 2 * z - x * y) == (0, 0, 0):
            critical.add(Triple(*t))
    o.expect(critical == cones, ("gradient scan", sorted(critical)))
    table = {-7: (4, 4, 0), -1: (4, 4, 0), 0: (5, 5, 1), 1: (5, 5, 1), 3: (5, 5, 1), 4: (1, 5, 0), 5: (1, 1, 0), 100: (1, 1, 0)}
    for c, row in table.items():
        o.expect(tuple(component_table(c)) == row, ("table", c))
    rng = random.Random(99)
    sampled = 0
    while sampled < 1000:
        p = tuple(Fraction(rng.randint(-64, 64), 8) for _ in range(3))
        if not 0 < markov_constant(p) < 4:
            continue
        sampled += 1
        label = component_of(p)
        for i in (1, 2, 3):
            o.expect(component_of(mutate(p, i)) is label, (p, i))
    return "geometry: singular points, gradient scan, component table, mutation", o, ""


def criterion_10():
    o = Outcome()
    for t in itertools.product(range(2, 21), repeat=3):
        t = Triple(*t)
        if not predicate_band(t) or markov_constant(t) >= 4:
            continue
        graph = enumerate_orbit(t, max_nodes=50)
        reps = {fundamental_representative(u) for u in graph.nodes}
        o.expect(len(graph.nodes) == 50 and len(reps) == 1, (t, sorted(reps)))
    return "fundamental-domain uniqueness on [2,20]^3 with C < 4", o, ""


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    started = time.perf_counter()
    title, outcome, extra = CRITERIA[number - 1]()
    line = report(number, title, outcome, started, extra)
    LINES[number] = line
    assert outcome.passed, line


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, 1):
        started = time.perf_counter()
        title, outcome, extra = fn()
        print(report(n, title, outcome, started, extra), flush=True)
        results.append(outcome.passed)
    sys.exit(0 if all(results) else 1)
