"""
SVG Plots

Fitted coefficients as dots over the closed forms of both branches (low in
blue, high in red), and the exact finite-size curves.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from app.asymptotics.params import Branch  # noqa: E402
from app.combinatorics.patterns import BoundaryKind  # noqa: E402
from app.schemas.fit import CurveRow, FitRow  # noqa: E402
from app.services.figures import closed_form  # noqa: E402

logger = logging.getLogger(__name__)

CURVE_POINTS = 200
CURVE_BITS = 53

BRANCH_COLORS = {Branch.LOW: "tab:blue", Branch.HIGH: "tab:red"}

plt.rcParams["font.size"] = 9
plt.rcParams["axes.linewidth"] = 0.5
plt.rcParams["svg.hashsalt"] = "boundary-entropy"


def create_figure(width: float = 5.5, ratio: float = 1.5):
    return plt.figure(figsize=(width, width / ratio), constrained_layout=True)


def save_fig(figure, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    figure.savefig(path, format="svg", metadata={"Date": None})
    plt.close(figure)
    logger.info("wrote plot path=%s", path)
    return path


def branch_curve(
    geometry: BoundaryKind, name: str, branch: Branch, xs: np.ndarray
) -> np.ndarray:
    """Closed form on one branch sampled at xs; NaN where it is not real."""
    values = []
    for x in xs:
        value = closed_form(geometry, name, Fraction(float(x)), branch, CURVE_BITS)
        values.append(np.nan if value is None else float(value))
    return np.array(values)


def plot_fit_rows(rows: Sequence[FitRow], geometry: BoundaryKind, path: Path) -> Path:
    """
    One panel per coefficient name.

    Args:
        rows: Fit rows, any order.
        geometry: Geometry the rows were fitted on.
        path: SVG destination.
    """
    names = sorted({row.coeff_name for row in rows})
    figure = create_figure(ratio=1.5 / max(1, len(names)))
    axes = figure.subplots(len(names), 1, squeeze=False)[:, 0]
    for ax, name in zip(axes, names):
        points = [(float(Fraction(row.x)), float(row.fitted)) for row in rows if row.coeff_name == name]
        xs_fit = np.array([p[0] for p in points])
        lo, hi = xs_fit.min(), xs_fit.max()
        pad = 0.05 * (hi - lo or 1.0)
        xs = np.linspace(lo - pad, hi + pad, CURVE_POINTS)
        for branch, color in BRANCH_COLORS.items():
            ax.plot(xs, branch_curve(geometry, name, branch, xs), color=color, linewidth=1, label=f"{branch.value} branch")
        ax.plot(xs_fit, [p[1] for p in points], "k.", markersize=5, label="fit")
        ax.axvline(-1, color="0.7", linewidth=0.5, linestyle=":")
        ax.set_xlabel("x")
        ax.set_ylabel(name)
        ax.legend(frameon=False)
    return save_fig(figure, path)


def plot_curves(rows: Sequence[CurveRow], path: Path) -> Path:
    """Exact reduced curves, one line per size."""
    figure = create_figure()
    ax = figure.add_subplot()
    for n in sorted({row.n for row in rows}):
        points = [(float(Fraction(row.x)), float(row.value)) for row in rows if row.n == n]
        ax.plot([p[0] for p in points], [p[1] for p in points], marker=".", linewidth=1, label=f"n = {n}")
    ax.axhline(0, color="0.7", linewidth=0.5)
    ax.set_xlabel("x")
    ax.set_ylabel("F~(x)")
    ax.legend(frameon=False)
    return save_fig(figure, path)
