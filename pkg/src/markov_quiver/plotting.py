"""Figures written next to the ``verify`` report."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .classify import m_minus, m_plus, predicate_band  # noqa: E402
from .core import Triple  # noqa: E402
from .orbits import cyclic_representatives  # noqa: E402
from .spectral import spectrum_from_constant  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.dpi": 120,
    "savefig.bbox": "tight",
}

CYCLIC_COLOR = "#1f77b4"
ACYCLIC_COLOR = "#bbbbbb"


def _new(ncols=1, width=3.4):
    golden = (math.sqrt(5) - 1) / 2
    fig, axes = plt.subplots(1, ncols, figsize=(width * ncols, width * golden * 1.2))
    return fig, axes


def plot_band(path, box: int = 20, xs=(3, 5)):
    """Cyclic integer points in the (y, z) plane for fixed x, with the band edges."""
    with plt.rc_context(STYLE):
        fig, axes = _new(len(xs))
        for ax, x in zip(axes if len(xs) > 1 else [axes], xs):
            ys = range(2, box + 1)
            zmax = x * box
            cyc, acyc = [], []
            for y in ys:
                for z in range(0, zmax + 1):
                    (cyc if predicate_band(Triple(x, y, z)) else acyc).append((y, z))
            if acyc:
                ax.scatter(*zip(*acyc), s=2, color=ACYCLIC_COLOR, label="acyclic")
            if cyc:
                ax.scatter(*zip(*cyc), s=4, color=CYCLIC_COLOR, label="cyclic")
            fine = [2 + i * (box - 2) / 400 for i in range(401)]
            ax.plot(fine, [m_plus(x, y) for y in fine], color="k", lw=0.8, label="m+")
            ax.plot(fine, [m_minus(x, y) for y in fine], color="k", lw=0.8, ls="--", label="m-")
            ax.set_xlabel("y")
            ax.set_ylabel("z")
            ax.set_title(f"x = {x}")
            ax.set_ylim(0, zmax)
        (axes[0] if len(xs) > 1 else axes).legend(loc="upper left", markerscale=3)
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def plot_spectrum(path, c_range=(-20, 20)):
    """Modulus of the Coxeter eigenvalue against the Markov constant."""
    cs = list(range(c_range[0], c_range[1] + 1))
    mods = [abs(spectrum_from_constant(c).lam) for c in cs]
    with plt.rc_context(STYLE):
        fig, ax = _new()
        ax.axvspan(0, 4, color="#dddddd", label="0 <= C <= 4")
        ax.semilogy(cs, mods, "o", ms=3, color=CYCLIC_COLOR)
        ax.axhline(1.0, color="k", lw=0.6)
        ax.set_xlabel("Markov constant C")
        ax.set_ylabel("|lambda|")
        ax.legend(loc="upper center")
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def plot_orbit_counts(path, c_min: int = -200):
    """Number of cyclic orbits (domain points) per constant C < 4."""
    cs = list(range(c_min, 4))
    counts = [len(cyclic_representatives(c)) for c in cs]
    with plt.rc_context(STYLE):
        fig, ax = _new(width=4.5)
        ax.bar(cs, counts, width=0.9, color=CYCLIC_COLOR)
        ax.set_xlabel("Markov constant C")
        ax.set_ylabel("cyclic orbits")
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def render_report_figures(directory, box: int = 20) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    return [
        plot_band(out / "band.png", box=box),
        plot_spectrum(out / "spectrum.png"),
        plot_orbit_counts(out / "orbit_counts.png", c_min=-10 * box),
    ]
