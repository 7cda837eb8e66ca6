"""Serialization of gain maps to CSV and SVG."""

from __future__ import annotations

import csv
import io

from .amap import AMap
from .coords import NEG_INF, POS_INF, format_extended, is_finite

CSV_HEADER = ("t", "kind", "x1", "y1", "x2", "y2")


def amap_to_csv(amap: AMap) -> str:
    """One row per segment: t, kind, x1, y1, x2, y2 (infinite ends as +/-inf)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for line in amap.polylines:
        for s in line.segments:
            w.writerow(
                (
                    line.level,
                    s.kind.value,
                    format_extended(s.x1),
                    format_extended(s.y1),
                    format_extended(s.x2),
                    format_extended(s.y2),
                )
            )
    return buf.getvalue()


_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def amap_to_svg(amap: AMap, size: int = 480) -> str:
    """Fixed-size picture of every level chain, one colour per level.

    Infinite ends are clipped to a frame one voter-gap wider than the
    voter range; the y axis points up.
    """
    coords = amap.voters.coords
    lo, hi = coords[0], coords[-1]
    pad = (hi - lo) / 8 if hi > lo else 1
    # widest chain point is the level-n* diagonal end at y = v_1 + 2(v_n - v_1)
    top = hi + 2 * (hi - lo) + pad
    left, right, bottom = lo - pad, hi + pad, lo - pad

    def sx(x):
        x = left if x is NEG_INF else (right if x is POS_INF else x)
        return float((x - left) / (right - left) * size)

    def sy(y):
        y = top if y is POS_INF else y
        return float(size - (y - bottom) / (top - bottom) * size)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for v in coords:
        parts.append(
            f'<circle cx="{sx(v):.2f}" cy="{sy(v):.2f}" r="3" fill="black"/>'
        )
    for line in amap.polylines:
        colour = _PALETTE[(line.level - 1) % len(_PALETTE)]
        pts = []
        for s in line.segments:
            x1 = s.x1
            y2 = s.y2
            if not is_finite(x1):
                # clip the leading horizontal without changing its height
                x1 = left
            if not is_finite(y2):
                y2 = top
            if not pts:
                pts.append(f"{sx(x1):.2f},{sy(s.y1):.2f}")
            pts.append(f"{sx(s.x2):.2f},{sy(y2):.2f}")
        parts.append(
            f'<polyline points="{" ".join(pts)}" fill="none" '
            f'stroke="{colour}" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
