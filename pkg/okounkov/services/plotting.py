"""
SVG rendering of planar bodies and subdivisions with matplotlib.

Output is deterministic: the Agg backend, a fixed hash salt and no date
metadata, so identical inputs give byte-identical files.
"""
import io
from fractions import Fraction
from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as PolygonPatch  # noqa: E402

from okounkov.config import settings  # noqa: E402
from okounkov.core.geometry import Polytope, boundary_ring, convex_hull  # noqa: E402
from okounkov.core.rational import format_rational  # noqa: E402
from okounkov.errors import GeometryError  # noqa: E402
from okounkov.logging_config import get_logger  # noqa: E402

logger = get_logger(__name__)

plt.rcParams["svg.hashsalt"] = "okounkov"
plt.rcParams["svg.fonttype"] = "none"

COLORS = ["#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c"]


def _label(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _draw(ax, P: Polytope, color: str, label: Optional[str], annotate: bool, **kwargs) -> None:
    ring = boundary_ring(P)
    if not ring:
        return
    xy = [(float(v[0]), float(v[1])) for v in ring]
    if len(xy) >= 3:
        ax.add_patch(PolygonPatch(xy, closed=True, facecolor=color, edgecolor="black", alpha=0.35, label=label, **kwargs))
    else:
        ax.plot([p[0] for p in xy], [p[1] for p in xy], color=color, marker="o", label=label)
    if annotate:
        for v, p in zip(ring, xy):
            ax.annotate(_label(v), p, fontsize=7, textcoords="offset points", xytext=(3, 3))


def _render(fig) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _figure():
    size = settings.SVG_SIZE / 72
    fig = plt.figure(figsize=(size, size))
    return fig, fig.add_subplot(1, 1, 1)


def _frame(ax, polytopes: Sequence[Polytope]) -> None:
    pts = [v for P in polytopes for v in P.vertices]
    if not pts:
        ax.text(0.5, 0.5, "empty", ha="center", va="center", transform=ax.transAxes)
        return
    xs, ys = [float(v[0]) for v in pts], [float(v[1]) for v in pts]
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    ax.set_xlim(min(xs) - pad, max(xs) + pad)
    ax.set_ylim(min(ys) - pad, max(ys) + pad)
    ax.set_aspect("equal")


def plot_svg(
    polytopes: Sequence[Polytope],
    labels: Optional[Sequence[str]] = None,
    overlay: Optional[Polytope] = None,
    title: Optional[str] = None,
) -> str:
    """
    Draw planar polytopes with exact "p/q" vertex labels, and an optional
    overlay (the fitted simplex) with a dashed outline.
    """
    if any(P.dim != 2 for P in polytopes) or (overlay is not None and overlay.dim != 2):
        raise GeometryError("only planar bodies can be plotted")
    labels = list(labels) if labels is not None else [None] * len(polytopes)
    fig, ax = _figure()
    for idx, (P, label) in enumerate(zip(polytopes, labels)):
        _draw(ax, P, COLORS[idx % len(COLORS)], label, annotate=True)
    if overlay is not None and not overlay.is_empty:
        ring = boundary_ring(overlay)
        xy = [(float(v[0]), float(v[1])) for v in ring]
        if len(xy) >= 3:
            ax.add_patch(PolygonPatch(xy, closed=True, fill=False, edgecolor="black", linestyle="--", label="simplex fit"))
    _frame(ax, list(polytopes) + ([overlay] if overlay is not None else []))
    if any(labels) or overlay is not None:
        ax.legend(loc="upper right", fontsize=8)
    if title:
        ax.set_title(title)
    logger.debug("svg_rendered", polytopes=len(polytopes))
    return _render(fig)


def plot_subdivision(base: Polytope, cells: Sequence[Polytope], chosen: Sequence[Sequence[Fraction]]) -> str:
    """The polytope, its cells and the chosen vertices."""
    if base.dim != 2:
        raise GeometryError("only planar subdivisions can be plotted")
    fig, ax = _figure()
    _draw(ax, base, "#ffffff", None, annotate=False)
    for idx, cell in enumerate(cells):
        _draw(ax, cell, COLORS[idx % len(COLORS)], f"cell {idx}", annotate=True)
    for idx, v in enumerate(chosen):
        ax.plot(float(v[0]), float(v[1]), marker="s", color=COLORS[idx % len(COLORS)], markeredgecolor="black")
    _frame(ax, [base])
    ax.legend(loc="upper right", fontsize=8)
    return _render(fig)


def simplex_overlay(xi: Fraction) -> Optional[Polytope]:
    if xi <= 0:
        return None
    return convex_hull([(0, 0), (xi, 0), (0, xi)])


def body_svgs(bodies: Sequence[Polytope], xi: Optional[Fraction] = None) -> List[str]:
    overlay = simplex_overlay(xi) if xi is not None else None
    return [plot_svg([B], [f"body {j}"], overlay=overlay) for j, B in enumerate(bodies)]
