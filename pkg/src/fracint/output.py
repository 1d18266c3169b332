"""Deterministic CSV, JSON, and SVG emission.

All numeric fields use fixed 12-significant-digit scientific notation and
files end with a single trailing newline, so identical configurations produce
byte-identical output.
"""

import json
import sys

import numpy as np

SVG_WIDTH = 800
SVG_HEIGHT = 600
_MARGIN = 50.0


def format_number(value) -> str:
    return f"{float(value):.11e}"


def join_blocks(*blocks) -> str:
    """Assemble CSV blocks (lists of lines) separated by single blank lines."""
    return "\n\n".join("\n".join(block) for block in blocks) + "\n"


def write_text(path, text) -> None:
    """Write to a file (newline-preserving) or stdout when path is None."""
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _shade(level: float) -> str:
    """Gray stroke, darker for level 0, lighter for level 1."""
    gray = int(round(40 + 160 * min(max(level, 0.0), 1.0)))
    return f"rgb({gray},{gray},{gray})"


def svg_document(curves) -> str:
    """Render polylines into a fixed 800x600 view box.

    ``curves`` is a sequence of dicts with keys ``points`` ((m, 2) array),
    ``dashed`` (bool), and ``shade`` (0 darkest .. 1 lightest).
    """
    pts = np.vstack([np.asarray(c["points"], dtype=float) for c in curves if len(c["points"])])
    x_lo, y_lo = pts.min(axis=0)
    x_hi, y_hi = pts.max(axis=0)
    x_lo, y_lo = min(x_lo, 0.0), min(y_lo, 0.0)
    x_span = max(x_hi - x_lo, 1e-12)
    y_span = max(y_hi - y_lo, 1e-12)
    inner_w = SVG_WIDTH - 2 * _MARGIN
    inner_h = SVG_HEIGHT - 2 * _MARGIN

    def to_px(xy):
        x = _MARGIN + (xy[:, 0] - x_lo) / x_span * inner_w
        y = SVG_HEIGHT - _MARGIN - (xy[:, 1] - y_lo) / y_span * inner_h
        return x, y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
    ]
    # axes through the data origin
    ox = _MARGIN + (0.0 - x_lo) / x_span * inner_w
    oy = SVG_HEIGHT - _MARGIN - (0.0 - y_lo) / y_span * inner_h
    parts.append(
        f'<line x1="{_MARGIN:.2f}" y1="{oy:.2f}" x2="{SVG_WIDTH - _MARGIN:.2f}" '
        f'y2="{oy:.2f}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{ox:.2f}" y1="{_MARGIN:.2f}" x2="{ox:.2f}" '
        f'y2="{SVG_HEIGHT - _MARGIN:.2f}" stroke="black" stroke-width="1"/>'
    )
    for curve in curves:
        points = np.asarray(curve["points"], dtype=float)
        if len(points) < 2:
            continue
        x, y = to_px(points)
        coords = " ".join(f"{xi:.2f},{yi:.2f}" for xi, yi in zip(x, y))
        dash = ' stroke-dasharray="6,4"' if curve.get("dashed") else ""
        stroke = _shade(curve.get("shade", 0.0))
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="1.5"{dash}/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
