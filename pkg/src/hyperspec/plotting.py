"""Static figures for spectral measures, walk tables and the CLT probe.

Everything renders through the non-interactive Agg backend straight to a
file; nothing here opens a window.
"""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .distribution import SpectralMeasure, normal_cdf, real_part_distribution  # noqa: E402
from .walks import WalkTable  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "legend.fontsize": 8,
    "figure.figsize": (4.5, 4.0),
    "savefig.dpi": 150,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _new():
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
    return fig, ax


def _save(fig, path) -> None:
    with plt.rc_context(STYLE):
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def plot_measure(measure: SpectralMeasure, path, scaled: bool = False) -> None:
    """Atoms of nu_n in the complex plane, marker area proportional to mass."""
    scale = math.sqrt(measure.n) if scaled else 1.0
    pts = [(v.embed() / scale, float(p)) for v, p in measure.sorted_atoms()]
    fig, ax = _new()
    if pts:
        top = max(p for _, p in pts)
        ax.scatter(
            [z.real for z, _ in pts],
            [z.imag for z, _ in pts],
            s=[12 + 300 * p / top for _, p in pts],
            c=[p for _, p in pts],
            cmap="viridis",
            edgecolors="k",
            linewidths=0.3,
        )
    ax.axhline(0, color="0.8", lw=0.5, zorder=0)
    ax.axvline(0, color="0.8", lw=0.5, zorder=0)
    ax.set_xlabel("Re" + (r" / $\sqrt{n}$" if scaled else ""))
    ax.set_ylabel("Im" + (r" / $\sqrt{n}$" if scaled else ""))
    ax.set_title(f"spectral measure, n={measure.n}, m={measure.m}")
    _save(fig, path)


def plot_walk_table(table: WalkTable, path) -> None:
    rows = table.rows()
    fig, ax = _new()
    sc = ax.scatter(
        [r[0] for r in rows], [r[1] for r in rows], c=[r[2] for r in rows], s=10, cmap="magma_r"
    )
    fig.colorbar(sc, ax=ax, label="walks")
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_title(f"{table.n}-step walks, steps = {table.q}-th roots of unity")
    _save(fig, path)


def plot_clt(n: int, m: int, path) -> None:
    """Distribution function of Re(X_n)/sqrt(n) against N(0, 1/2)."""
    atoms = real_part_distribution(n, m)
    xs, ys, acc = [], [], 0.0
    for x, p in atoms:
        acc += float(p)
        xs.append(x)
        ys.append(acc)
    fig, ax = _new()
    ax.step(xs, ys, where="post", label="walk", lw=1.0)
    lo, hi = (min(xs) - 0.5, max(xs) + 0.5) if xs else (-2.0, 2.0)
    grid = [lo + (hi - lo) * k / 400 for k in range(401)]
    ax.plot(grid, [normal_cdf(g) for g in grid], "--", lw=1.0, label="N(0, 1/2)")
    ax.set_xlabel(r"Re$(X_n)/\sqrt{n}$")
    ax.set_ylabel("distribution function")
    ax.set_title(f"n={n}, m={m}")
    ax.legend(frameon=False)
    _save(fig, path)
