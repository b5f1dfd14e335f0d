"""Minimal deterministic SVG output for phase-space frames.

Frames are pure geometry (ellipse, polyline, circle, line) in a fixed
viewport mapping the phase-space square [-8, 8]^2 to 480 x 480 pixels.
There is no text and no styling beyond stroke attributes, so files are
byte-stable across platforms and easy to compare numerically: use
:func:`parse_frame_geometry` to read the shapes back.

Every frame contains the 1/e contour ellipse of the state at the frame
time (class ``contour``), the centroid trajectory polyline (class
``trajectory``) and, where the picture defines one, a dashed reference
curve (class ``reference``).
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.etree import ElementTree

import numpy as np

from .states import ContourEllipse

__all__ = ["Viewport", "render_frame", "parse_frame_geometry"]

_FMT = "%.10f"


@dataclass(frozen=True)
class Viewport:
    """Square phase-space window mapped onto a square pixel canvas."""

    half_width: float = 8.0
    pixels: int = 480

    @property
    def scale(self) -> float:
        return self.pixels / (2.0 * self.half_width)

    def to_pixels(self, points: np.ndarray) -> np.ndarray:
        """Map phase-space points (..., 2) to pixel coordinates (p up -> y down)."""
        pts = np.asarray(points, dtype=float)
        out = np.empty_like(pts)
        out[..., 0] = (pts[..., 0] + self.half_width) * self.scale
        out[..., 1] = (self.half_width - pts[..., 1]) * self.scale
        return out


def _num(value: float) -> str:
    return _FMT % value


def _points_attr(pixels: np.ndarray) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in pixels)


def render_frame(
    contour: ContourEllipse,
    trajectory: np.ndarray,
    reference: tuple | None,
    viewport: Viewport = Viewport(),
) -> str:
    """Render one frame to an SVG 1.1 document string.

    ``reference`` is None or one of
    ``("circle", center, radius)``, ``("line", p_start, p_end)``,
    ``("polyline", points)`` in phase-space coordinates.
    """
    vp = viewport
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{vp.pixels}" height="{vp.pixels}" '
        f'viewBox="0 0 {vp.pixels} {vp.pixels}">',
    ]

    if reference is not None:
        kind = reference[0]
        if kind == "circle":
            center = vp.to_pixels(np.asarray(reference[1], dtype=float))
            radius = float(reference[2]) * vp.scale
            parts.append(
                f'<circle class="reference" cx="{_num(center[0])}" cy="{_num(center[1])}" '
                f'r="{_num(radius)}" fill="none" stroke="black" stroke-width="1" '
                f'stroke-dasharray="6 4"/>'
            )
        elif kind == "line":
            p1 = vp.to_pixels(np.asarray(reference[1], dtype=float))
            p2 = vp.to_pixels(np.asarray(reference[2], dtype=float))
            parts.append(
                f'<line class="reference" x1="{_num(p1[0])}" y1="{_num(p1[1])}" '
                f'x2="{_num(p2[0])}" y2="{_num(p2[1])}" '
                f'stroke="black" stroke-width="1" stroke-dasharray="6 4"/>'
            )
        elif kind == "polyline":
            pts = vp.to_pixels(np.asarray(reference[1], dtype=float))
            parts.append(
                f'<polyline class="reference" points="{_points_attr(pts)}" '
                f'fill="none" stroke="black" stroke-width="1" stroke-dasharray="6 4"/>'
            )
        else:
            raise ValueError(f"unknown reference kind {kind!r}")

    if len(trajectory) >= 2:
        pts = vp.to_pixels(np.asarray(trajectory, dtype=float))
        parts.append(
            f'<polyline class="trajectory" points="{_points_attr(pts)}" '
            f'fill="none" stroke="gray" stroke-width="1"/>'
        )

    center = vp.to_pixels(contour.center)
    # SVG rotation is screen-clockwise; the p-axis flip makes a phase-space
    # counterclockwise orientation appear as a negative screen angle.
    angle_deg = -np.degrees(contour.orientation)
    parts.append(
        f'<ellipse class="contour" cx="{_num(center[0])}" cy="{_num(center[1])}" '
        f'rx="{_num(contour.semi_major * vp.scale)}" ry="{_num(contour.semi_minor * vp.scale)}" '
        f'transform="rotate({_num(angle_deg)} {_num(center[0])} {_num(center[1])})" '
        f'fill="none" stroke="black" stroke-width="2"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def parse_frame_geometry(text: str) -> dict:
    """Extract the numeric geometry of a rendered frame.

    Returns a dict with optional keys ``contour`` (cx, cy, rx, ry, angle),
    ``trajectory`` (ndarray of vertices) and ``reference`` (kind plus its
    numbers), all in pixel coordinates.
    """
    root = ElementTree.fromstring(text)
    ns = {"svg": "http://www.w3.org/2000/svg"}
    out: dict = {}
    for el in root.findall("svg:ellipse", ns):
        rotate = el.get("transform", "rotate(0 0 0)")
        angle = float(rotate[len("rotate("):-1].split()[0])
        out["contour"] = tuple(
            float(el.get(k)) for k in ("cx", "cy", "rx", "ry")
        ) + (angle,)
    for el in root.findall("svg:polyline", ns):
        pts = np.array(
            [[float(v) for v in pair.split(",")] for pair in el.get("points").split()]
        )
        key = "reference" if el.get("class") == "reference" else "trajectory"
        out[key] = ("polyline", pts) if key == "reference" else pts
    for el in root.findall("svg:circle", ns):
        out["reference"] = ("circle", float(el.get("cx")), float(el.get("cy")),
                            float(el.get("r")))
    for el in root.findall("svg:line", ns):
        out["reference"] = ("line", float(el.get("x1")), float(el.get("y1")),
                            float(el.get("x2")), float(el.get("y2")))
    return out
