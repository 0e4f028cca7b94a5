"""SVG figure of a realization: labeled points and one segment per line.

Floating point is used for layout only; 12 significant digits.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from signrank.core.config import settings
from signrank.counterexample.bundle import normalize_affine
from signrank.incidence.structure import IncidenceStructure
from signrank.realizer.realization import Realization

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">
<rect x="0" y="0" width="{size}" height="{size}" style="fill:#ffffff"/>
"""

POSTAMBLE = "</svg>\n"

EXTENSION = 0.10


def fmt(value: float) -> str:
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


class SVG:
    """Collects drawing commands in model coordinates; fits them on save."""

    def __init__(self, size: Optional[int] = None):
        self.size = size or settings.svg_size
        self.min_x = self.max_x = self.min_y = self.max_y = None
        self.segments: List[Tuple[Tuple[float, float], Tuple[float, float]]] = []
        self.points: List[Tuple[float, float, str]] = []

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x, self.max_x = min(self.min_x, x), max(self.max_x, x)
            self.min_y, self.max_y = min(self.min_y, y), max(self.max_y, y)

    def line(self, start: Tuple[float, float], end: Tuple[float, float]) -> None:
        self.require(*start)
        self.require(*end)
        self.segments.append((start, end))

    def point(self, x: float, y: float, label: str) -> None:
        self.require(x, y)
        self.points.append((x, y, label))

    def _transform(self):
        span = max(self.max_x - self.min_x, self.max_y - self.min_y) or 1.0
        pad = 0.08 * self.size
        scale = (self.size - 2 * pad) / span

        def to_screen(x: float, y: float) -> Tuple[float, float]:
            # y grows downward on screen
            return pad + (x - self.min_x) * scale, self.size - pad - (y - self.min_y) * scale

        return to_screen

    def render(self) -> str:
        to_screen = self._transform()
        out = [PREAMBLE.format(size=self.size)]
        for start, end in self.segments:
            (x1, y1), (x2, y2) = to_screen(*start), to_screen(*end)
            out.append(
                f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
                'style="stroke:#000000;stroke-width:1.5"/>\n'
            )
        for x, y, label in self.points:
            sx, sy = to_screen(x, y)
            out.append(f'<circle cx="{fmt(sx)}" cy="{fmt(sy)}" r="4" style="fill:#000000"/>\n')
            out.append(
                f'<text x="{fmt(sx + 7)}" y="{fmt(sy - 7)}" font-size="16" font-family="sans-serif">{label}</text>\n'
            )
        out.append(POSTAMBLE)
        return "".join(out)

    def save(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(), encoding="utf-8")
        return path


def affine_points(r: Realization) -> Dict[str, Tuple[float, float]]:
    """Float approximation of (x/z, y/z); points at infinity are moved first."""
    if any(r.field.is_zero(triple[2]) for triple in r.point_coords.values()):
        r = normalize_affine(r)
    return {label: (float(x / z), float(y / z)) for label, (x, y, z) in r.point_coords.items()}


def draw(s: IncidenceStructure, r: Realization, size: Optional[int] = None) -> SVG:
    coords = affine_points(r)
    svg = SVG(size)
    for line in s.lines:
        members = [coords[label] for label in line]
        (ax, ay), (bx, by) = members[0], members[1]
        dx, dy = bx - ax, by - ay
        norm = dx * dx + dy * dy
        ts = [((x - ax) * dx + (y - ay) * dy) / norm for x, y in members]
        lo, hi = min(ts), max(ts)
        grow = (hi - lo) * EXTENSION / 2
        lo, hi = lo - grow, hi + grow
        svg.line((ax + lo * dx, ay + lo * dy), (ax + hi * dx, ay + hi * dy))
    for label in s.points:
        svg.point(*coords[label], label)
    return svg


def render_svg(s: IncidenceStructure, r: Realization, out: Path, size: Optional[int] = None) -> Path:
    return draw(s, r, size).save(out)
