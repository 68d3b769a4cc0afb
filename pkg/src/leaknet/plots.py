"""Figure rendering for the CLI report paths.

Each writer produces a PNG next to the delimited output it illustrates. The
Agg backend is forced so the CLI works headless; figures are closed after
saving to keep long batch runs memory-flat.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.path import Path as MplPath
from matplotlib.patches import PathPatch

from .core import CoreReport, StrengthRanking
from .richclub import RichClubCurve


def save_ranking_plot(ranking: StrengthRanking, path: Path, top: int = 30) -> None:
    """Horizontal bar chart of the strongest countries, rank 1 on top."""
    rows = ranking[:top]
    if not rows:
        return
    labels = [row.country for row in rows]
    strengths = [row.strength for row in rows]
    height = max(3.0, 0.28 * len(rows) + 1.2)
    fig, ax = plt.subplots(figsize=(7.2, height))
    positions = range(len(rows))
    ax.barh(positions, strengths, color="#2f6f9f")
    ax.set_yticks(list(positions))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("country strength (in + out flow)")
    ax.set_title(f"Top {len(rows)} countries by strength")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_richclub_plot(curve: RichClubCurve, path: Path) -> None:
    """Observed estimator with the null band on top, the ratio below."""
    points = curve.points
    if not points:
        return
    ks = [p.k for p in points]
    phis = [p.phi for p in points]
    means = [p.phi_null_mean for p in points]
    lows = [p.phi_null_p05 for p in points]
    highs = [p.phi_null_p95 for p in points]
    threshold_label = "strength rank r" if curve.weighted_variant else "degree threshold k"

    fig, (ax_phi, ax_rho) = plt.subplots(
        2, 1, figsize=(7.2, 6.4), sharex=True, height_ratios=[1, 1]
    )
    ax_phi.plot(ks, phis, "o-", ms=3, color="#b6403a", label="observed")
    if all(v is not None for v in means):
        ax_phi.plot(ks, means, "-", color="#666666", label="null mean")
        if all(v is not None for v in lows) and all(v is not None for v in highs):
            ax_phi.fill_between(ks, lows, highs, color="#bbbbbb", alpha=0.5, label="null 5-95%")
    ax_phi.set_ylabel("estimator")
    ax_phi.legend(fontsize=8, loc="best")

    rho_ks = [p.k for p in points if p.rho is not None]
    rhos = [p.rho for p in points if p.rho is not None]
    ax_rho.plot(rho_ks, rhos, "o-", ms=3, color="#2f6f9f")
    ax_rho.axhline(1.0, color="#999999", lw=1, ls="--")
    ax_rho.set_ylabel("normalized coefficient")
    ax_rho.set_xlabel(threshold_label)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_chord_plot(report: CoreReport, path: Path) -> None:
    """Circular flow diagram of the core: ribbon width tracks flow weight."""
    if report.empty or not report.internal_flows:
        return
    codes = [row.country for row in report.members]
    angle = {
        code: 2.0 * math.pi * i / len(codes) for i, code in enumerate(codes)
    }
    xy = {c: (math.cos(a), math.sin(a)) for c, a in angle.items()}
    max_weight = max(w for _, _, w in report.internal_flows)

    fig, ax = plt.subplots(figsize=(7.2, 7.2))
    cmap = matplotlib.colormaps["tab20"]
    color = {code: cmap(i % 20) for i, code in enumerate(codes)}
    for src, dst, weight in report.internal_flows:
        x0, y0 = xy[src]
        x1, y1 = xy[dst]
        # pull the curve toward the center to read as a chord
        bezier = MplPath(
            [(x0, y0), (0.0, 0.0), (x1, y1)],
            [MplPath.MOVETO, MplPath.CURVE3, MplPath.CURVE3],
        )
        lw = 0.5 + 6.0 * weight / max_weight
        ax.add_patch(
            PathPatch(bezier, fill=False, lw=lw, color=color[src], alpha=0.55)
        )
    for code in codes:
        x, y = xy[code]
        ax.plot([x], [y], "o", ms=6, color=color[code])
        ax.annotate(
            code,
            (1.08 * x, 1.08 * y),
            ha="center",
            va="center",
            fontsize=8,
            rotation=0,
        )
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"Core internal flows (degree > {report.k_used})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
