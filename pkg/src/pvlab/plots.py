"""Figure rendering for the sweep and exponent reports.

Opt-in from the command line via --plot; the data streams stay plain CSV or
JSON either way. Uses the file-only Agg backend.
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bounds import generalized_pv_bound_real  # noqa: E402
from .exponent import ExponentSeries  # noqa: E402
from .joint import JointDistribution  # noqa: E402


def render_theta_sweep(
    path: str,
    joint: JointDistribution,
    alpha: Fraction,
    thetas: list[int],
    bounds: list[Fraction],
    asymptotic: Fraction,
) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    # smooth curve from the real-exponent evaluator, exact points on top
    if thetas[-1] > thetas[0]:
        step = (thetas[-1] - thetas[0]) / 200
        grid = [thetas[0] + k * step for k in range(201)]
        ax.plot(grid, [generalized_pv_bound_real(joint, t, alpha) for t in grid],
                color="tab:blue", lw=1, label="real-exponent evaluation")
    ax.plot(thetas, [float(b) for b in bounds], "o", ms=4, color="tab:blue",
            label="exact bound")
    limit = float((1 - alpha) * asymptotic)
    ax.axhline(limit, color="tab:red", ls="--", lw=1,
               label="(1-alpha) x asymptotic value")
    ax.set_xlabel("tilt exponent")
    ax.set_ylabel("error probability lower bound")
    ax.set_title(f"threshold bound vs tilt exponent (alpha = {alpha})")
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_exponent_series(path: str, series: ExponentSeries, e0: float) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = [r.n for r in series.rows]
    ax.plot(ns, [r.rate_a for r in series.rows], "o-", ms=4, label="rate of a_n")
    ax.plot(ns, [r.rate_b for r in series.rows], "s-", ms=4, label="rate of b_n")
    finite = [(r.n, r.rate_delta) for r in series.rows if r.rate_delta != float("inf")]
    if finite:
        ax.plot([n for n, _ in finite], [v for _, v in finite], "^-", ms=4,
                label="rate of delta_n")
    ax.axhline(2 * e0, color="tab:red", ls="--", lw=1, label="pair limit 2 E(0)")
    ax.axhline(e0, color="tab:gray", ls=":", lw=1, label="E(0) reference")
    ax.set_xlabel("blocklength n")
    ax.set_ylabel("rate (nats)")
    ax.set_title(f"{series.family}, p = {series.p}")
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
