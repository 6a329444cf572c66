"""
Static closed-braid diagrams.

The braid is drawn top to bottom with one row per letter; strand k sits at
x = k. The under strand of each crossing is broken around the crossing
point and every position is closed by an arc running round the right-hand
side, nested so that closure arcs never meet. Strands are coloured by the
closure component they belong to.
"""
import logging
import os
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from errors import DomainError
from models.braid_models import BraidWord
from services.braid_service import permutation

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

COLORS = ["#08589e", "#d7301f", "#238b45", "#6a51a3", "#ec7014", "#4eb3d3", "#737373"]
GAP = 0.18
RC_PARAMS = {
    "svg.hashsalt": "closed-braid",
    "svg.fonttype": "none",
    "lines.linewidth": 2.0,
    "lines.solid_capstyle": "round",
    "figure.dpi": 72,
}


def _component_of_position(b: BraidWord) -> Dict[int, int]:
    """Start position (0-based) -> index of its closure component."""
    component = {}
    for index, cycle in enumerate(permutation(b).cycles()):
        for p in cycle:
            component[p - 1] = index
    return component


def braid_paths(b: BraidWord) -> List[Tuple[int, List[Point]]]:
    """Polylines (component, points) making up the diagram, in drawing order."""
    n, c = b.strands, len(b.letters)
    component = _component_of_position(b)
    at = list(range(n))  # at[p] = start position of the strand now at position p
    paths: List[Tuple[int, List[Point]]] = []

    for row, (index, sign) in enumerate(b.letters):
        top, bottom = -float(row), -float(row + 1)
        left, right = index - 1, index
        for p in range(n):
            if p not in (left, right):
                paths.append((component[at[p]], [(p, top), (p, bottom)]))
        # for σ_i the strand moving left-to-right is over; σ_i^-1 the reverse
        over = ((left, top), (right, bottom))
        under = ((right, top), (left, bottom))
        over_strand, under_strand = at[left], at[right]
        if sign < 0:
            over, under = under, over
            over_strand, under_strand = under_strand, over_strand
        (x0, y0), (x1, y1) = under
        mid = np.array([(x0 + x1) / 2, (y0 + y1) / 2])
        step = np.array([x1 - x0, y1 - y0]) / np.hypot(x1 - x0, y1 - y0)
        before, after = mid - GAP * step, mid + GAP * step
        paths.append((component[under_strand], [(x0, y0), (float(before[0]), float(before[1]))]))
        paths.append((component[under_strand], [(float(after[0]), float(after[1])), (x1, y1)]))
        paths.append((component[over_strand], list(over)))
        at[left], at[right] = at[right], at[left]

    bottom = -float(c)
    for p in range(n):
        if c == 0:
            paths.append((component[p], [(p, 0.0), (p, bottom)]))
        rise = 0.4 * (n - p)
        outer = (n - 1) + 0.6 * (n - p)
        paths.append(
            (component[at[p]], [(p, bottom), (p, bottom - rise), (outer, bottom - rise), (outer, rise), (p, rise), (p, 0.0)])
        )
    return paths


def draw(b: BraidWord, out: str) -> Dict[str, int]:
    """Write the closed braid diagram as SVG to ``out`` and return a summary."""
    paths = braid_paths(b)
    n, c = b.strands, len(b.letters)
    components = len(permutation(b).cycles())

    with plt.rc_context(RC_PARAMS):
        fig, ax = plt.subplots(figsize=(1.0 + 0.9 * n, 1.0 + 0.5 * (c + n)))
        for component, points in paths:
            xs, ys = zip(*points)
            ax.plot(xs, ys, color=COLORS[component % len(COLORS)])
        ax.set_aspect("equal")
        ax.axis("off")
        try:
            directory = os.path.dirname(out)
            if directory:
                os.makedirs(directory, exist_ok=True)
            fig.savefig(out, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise DomainError(f"cannot write diagram to {out}: {exc.strerror or exc}")
        finally:
            plt.close(fig)

    logger.info("diagram of %d crossings written to %s", c, out)
    return {"crossings": c, "closure_arcs": n, "components": components}
