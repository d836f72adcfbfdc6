import itertools
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from markov_quiver.core import Triple, markov_constant
from markov_quiver.spectral import (
    Regime,
    cartan,
    char_poly,
    coxeter,
    det3,
    lambda_roots,
    poly_eval,
    spectrum,
    spectrum_from_constant,
    trace,
    unitriangular_inverse,
)

from strategies import triples

T = sympy.Symbol("T")


def sympy_coxeter(t):
    x, y, z = t
    d = sympy.Matrix([[1, x, y], [0, 1, z], [0, 0, 1]])
    return -d.T * d.inv()


class TestMatrices:
    def test_cartan_examples(self):
        assert cartan(Triple(0, 0, 0)) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert cartan(Triple(1, 1, 1)) == ((1, 1, 1), (0, 1, 1), (0, 0, 1))
        assert cartan(Triple(3, 3, 3)) == ((1, 3, 3), (0, 1, 3), (0, 0, 1))

    def test_trace_examples(self):
        assert trace(coxeter(cartan(Triple(2, 2, 2)))) == 1
        assert trace(coxeter(cartan(Triple(0, 0, 0)))) == -3

    @given(triples(-(10**20), 10**20))
    def test_inverse(self, t):
        d = cartan(t)
        inv = unitriangular_inverse(d)
        prod = [[sum(d[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert prod == [[int(i == j) for j in range(3)] for i in range(3)]

    @given(triples(-(10**30), 10**30))
    def test_trace_and_det(self, t):
        phi = coxeter(cartan(t))
        assert trace(phi) == markov_constant(t) - 3
        assert det3(phi) == -1

    @given(triples(-50, 50))
    def test_coxeter_matches_sympy(self, t):
        phi = coxeter(cartan(t))
        assert sympy.Matrix(phi) == sympy_coxeter(t)

    @given(triples(-50, 50))
    def test_char_poly_matches_sympy(self, t):
        phi = coxeter(cartan(t))
        expected = sympy.Matrix(phi).charpoly(T).all_coeffs()
        assert list(char_poly(phi)) == [int(c) for c in expected]

    @given(triples(-(10**9), 10**9))
    def test_char_poly_factors(self, t):
        # (T + 1)(T^2 - (C - 2) T + 1)
        c = markov_constant(t)
        assert char_poly(coxeter(cartan(t))) == (1, 3 - c, 3 - c, 1)
        assert poly_eval(char_poly(coxeter(cartan(t))), -1) == 0


class TestSpectrum:
    def test_examples(self):
        s = spectrum(Triple(1, 1, 1))
        assert s.regime is Regime.TAME and s.lam == pytest.approx(1j) and abs(s.lam) == pytest.approx(1)
        s = spectrum(Triple(2, 2, 2))
        assert s.regime is Regime.BOUNDARY and s.lam == 1
        s = spectrum(Triple(3, 3, 3))
        assert s.regime is Regime.BOUNDARY and s.lambda_sum == -2 and s.lam == -1

    @pytest.mark.parametrize("c", range(-20, 21))
    def test_unimodular_window(self, c):
        s = spectrum_from_constant(c)
        on_circle = abs(abs(s.lam) - 1) <= 1e-12
        assert on_circle == (0 <= c <= 4) == s.unimodular

    @pytest.mark.parametrize("c", range(-20, 21))
    def test_lambda_sum_rational(self, c):
        # lambda is a root of T^2 - (C-2)T + 1, so lambda + 1/lambda = C - 2 exactly
        lam = (sympy.Integer(c - 2) + sympy.sqrt(sympy.Integer((c - 2) ** 2 - 4))) / 2
        assert sympy.simplify(lam + 1 / lam - (c - 2)) == 0
        assert spectrum_from_constant(c).lambda_sum == c - 2

    @pytest.mark.parametrize("c", range(-20, 21))
    def test_roots_agree(self, c):
        a, b = lambda_roots(c)
        s = spectrum_from_constant(c)
        assert min(abs(s.lam - a), abs(s.lam - b)) <= 1e-9 * max(1, abs(s.lam))
        assert a * b == pytest.approx(1)

    def test_regimes(self):
        assert spectrum_from_constant(2).regime is Regime.TAME
        assert spectrum_from_constant(0).regime is Regime.BOUNDARY
        assert spectrum_from_constant(4).regime is Regime.BOUNDARY
        assert spectrum_from_constant(-1).regime is Regime.WILD
        assert spectrum_from_constant(5).regime is Regime.WILD

    def test_huge_constant(self):
        s = spectrum_from_constant(10**400)
        assert s.regime is Regime.WILD and math.isinf(s.lam.real)
        s = spectrum_from_constant(-(10**400))
        assert s.lam.real == -math.inf

    @given(st.integers(-(10**6), 10**6))
    def test_eigenvalues_are_roots(self, c):
        s = spectrum_from_constant(c)
        for ev in s.eigenvalues:
            val = poly_eval((1, 3 - c, 3 - c, 1), ev)
            assert abs(val) <= 1e-6 * max(1.0, abs(ev)) ** 3 * max(1, abs(c))

    def test_json(self):
        js = spectrum(Triple(3, 3, 3)).to_json()
        assert js["regime"] == "boundary" and js["lambda_sum"] == "-2"
