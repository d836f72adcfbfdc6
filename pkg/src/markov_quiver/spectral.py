"""Cartan and Coxeter matrices attached to a triple, and the Coxeter spectrum.

All matrix work is over the integers.  The characteristic polynomial of the
Coxeter matrix always has the factor ``T + 1``; the remaining quadratic
``T^2 - (C - 2) T + 1`` depends on the Markov constant alone.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .core import Triple, markov_constant

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def _matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)  # type: ignore[return-value]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return _matrix(
        [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)
    )


def transpose(a: Matrix) -> Matrix:
    return _matrix(zip(*a))


def det3(a: Matrix) -> int:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def trace(a: Matrix) -> int:
    return a[0][0] + a[1][1] + a[2][2]


def cartan(t: Triple) -> Matrix:
    x, y, z = t
    return ((1, x, y), (0, 1, z), (0, 0, 1))


def unitriangular_inverse(d: Matrix) -> Matrix:
    if any(d[i][i] != 1 for i in range(3)) or any(d[i][j] for i in range(3) for j in range(i)):
        raise ValueError("expected an upper unitriangular matrix")
    x, y, z = d[0][1], d[0][2], d[1][2]
    return ((1, -x, x * z - y), (0, 1, -z), (0, 0, 1))


def coxeter(d: Matrix) -> Matrix:
    """Coxeter matrix ``-D^T D^{-1}`` of an upper unitriangular Cartan matrix."""
    prod = matmul(transpose(d), unitriangular_inverse(d))
    return _matrix([-v for v in row] for row in prod)


def char_poly(phi: Matrix) -> tuple[int, int, int, int]:
    """Coefficients of ``det(T I - phi)``, highest degree first."""
    minors = sum(
        phi[i][i] * phi[j][j] - phi[i][j] * phi[j][i] for i, j in ((0, 1), (0, 2), (1, 2))
    )
    return (1, -trace(phi), minors, -det3(phi))


def poly_eval(coeffs, value):
    acc = 0
    for c in coeffs:
        acc = acc * value + c
    return acc


class Regime(enum.Enum):
    TAME = "tame"  # lambda non-real on the unit circle, 0 < C < 4
    BOUNDARY = "boundary"  # lambda = +-1, C in {0, 4}
    WILD = "wild"  # lambda real with |lambda| > 1


@dataclass(frozen=True)
class CoxeterSpectrum:
    """Eigenvalues ``-1, lam, 1/lam`` of the Coxeter matrix.

    ``lambda_sum`` is ``lam + 1/lam = C - 2`` and ``discriminant`` is
    ``(C - 2)^2 - 4``, so ``lam = (lambda_sum + sqrt(discriminant)) / 2``
    exactly; the complex value is the floating-point evaluation, picked with
    ``|lam| >= 1`` when real.
    """

    constant: int
    lambda_sum: int
    discriminant: int
    lam: complex
    regime: Regime

    @property
    def unimodular(self) -> bool:
        return self.regime is not Regime.WILD

    @property
    def eigenvalues(self) -> tuple[complex, complex, complex]:
        return (-1 + 0j, self.lam, 1 / self.lam)

    def to_json(self) -> dict:
        return {
            "constant": str(self.constant),
            "lambda_sum": str(self.lambda_sum),
            "discriminant": str(self.discriminant),
            "lambda": [self.lam.real, self.lam.imag],
            "abs_lambda": abs(self.lam),
            "regime": self.regime.value,
        }


def spectrum_from_constant(C: int) -> CoxeterSpectrum:
    s = C - 2
    disc = s * s - 4
    if disc < 0:
        lam = complex(s / 2, math.sqrt(-disc) / 2)
        regime = Regime.TAME
    elif disc == 0:
        lam = complex(s // 2, 0)
        regime = Regime.BOUNDARY
    else:
        # larger root in absolute value; the other is 1/lam
        try:
            lam = complex(math.copysign((abs(s) + math.sqrt(disc)) / 2, s), 0)
        except OverflowError:
            lam = complex(math.inf if s > 0 else -math.inf, 0)
        regime = Regime.WILD
    return CoxeterSpectrum(C, s, disc, lam, regime)


def spectrum(t: Triple) -> CoxeterSpectrum:
    return spectrum_from_constant(markov_constant(t))


def lambda_roots(C: int) -> tuple[complex, complex]:
    """Both roots of ``T^2 - (C - 2) T + 1`` via :mod:`cmath`."""
    s = C - 2
    r = cmath.sqrt(s * s - 4)
    return ((s + r) / 2, (s - r) / 2)
