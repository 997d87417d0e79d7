"""Static SVG drawings of a word as a chord diagram or a linked diagram.

Chord style: the 2n endpoints sit evenly on a circle, read clockwise from
a base point at the top; each letter is a straight chord. Linked style:
the endpoints sit left to right on a line and each letter is a semicircle
above it. The base point is drawn as a pair of short parallel ticks.

Connectors carry ``class="chord"`` or ``class="arc"`` and endpoint labels
``class="label"``, so the output is easy to check or restyle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DowError
from .word import Dow


@dataclass(frozen=True)
class DiagramSpec:
    word: Dow
    style: str = "chord"
    size: float = 320.0  # canvas width; height follows from the style
    radius: float = 120.0  # circle radius, or spacing between points on the line
    font_size: float = 14.0
    base_point_mark: bool = True


def _f(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _header(width, height):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
    ]


def _label(x, y, text, fs):
    return (f'<text class="label" x="{_f(x)}" y="{_f(y)}" font-size="{_f(fs)}" '
            f'text-anchor="middle" dominant-baseline="central">{escape(text)}</text>')


def _chord(spec: DiagramSpec) -> list[str]:
    letters = spec.word.letters
    m = len(letters)
    r = spec.radius
    pad = 2.5 * spec.font_size
    side = max(spec.size, 2 * (r + pad))
    cx = cy = side / 2
    out = _header(side, side)
    out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="none" stroke="black"/>')

    def at(k, rad):
        # endpoint k sits half a step clockwise of the k-th gap after the base point
        theta = 2 * math.pi * (k + 0.5) / m
        return cx + rad * math.sin(theta), cy - rad * math.cos(theta)

    first = {}
    for k, a in enumerate(letters):
        if a in first:
            (x1, y1), (x2, y2) = at(first[a], r), at(k, r)
            out.append(f'<line class="chord" data-letter="{a}" x1="{_f(x1)}" y1="{_f(y1)}" '
                       f'x2="{_f(x2)}" y2="{_f(y2)}" stroke="black"/>')
        else:
            first[a] = k
    for k, a in enumerate(letters):
        x, y = at(k, r)
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="2.5" fill="black"/>')
        lx, ly = at(k, r + 1.2 * spec.font_size)
        out.append(_label(lx, ly, str(a), spec.font_size))
    if spec.base_point_mark:
        out.append('<g class="base-point" stroke="black" stroke-width="1.5">')
        tick = 0.6 * spec.font_size
        for dx in (-2.5, 2.5):
            out.append(f'<line x1="{_f(cx + dx)}" y1="{_f(cy - r - tick)}" '
                       f'x2="{_f(cx + dx)}" y2="{_f(cy - r + tick)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return out


def _linked(spec: DiagramSpec) -> list[str]:
    letters = spec.word.letters
    m = len(letters)
    step = spec.radius / 2
    margin = 2 * spec.font_size
    width = max(spec.size, 2 * margin + step * (m - 1))
    # tallest arc spans the whole line
    height = step * (m - 1) / 2 + 3 * spec.font_size + margin
    base_y = height - 2 * spec.font_size
    x0 = (width - step * (m - 1)) / 2
    xs = [x0 + step * k for k in range(m)]
    out = _header(width, height)
    out.append(f'<line x1="{_f(xs[0] - margin)}" y1="{_f(base_y)}" x2="{_f(xs[-1] + margin / 2)}" '
               f'y2="{_f(base_y)}" stroke="black"/>')
    first = {}
    for k, a in enumerate(letters):
        if a in first:
            x1, x2 = xs[first[a]], xs[k]
            rad = (x2 - x1) / 2
            out.append(f'<path class="arc" data-letter="{a}" d="M {_f(x1)} {_f(base_y)} '
                       f'A {_f(rad)} {_f(rad)} 0 0 1 {_f(x2)} {_f(base_y)}" fill="none" stroke="black"/>')
        else:
            first[a] = k
    for k, a in enumerate(letters):
        out.append(f'<circle cx="{_f(xs[k])}" cy="{_f(base_y)}" r="2.5" fill="black"/>')
        out.append(_label(xs[k], base_y + 1.2 * spec.font_size, str(a), spec.font_size))
    if spec.base_point_mark:
        bx = xs[0] - margin / 2
        tick = 0.6 * spec.font_size
        out.append('<g class="base-point" stroke="black" stroke-width="1.5">')
        for dx in (-2.5, 2.5):
            out.append(f'<line x1="{_f(bx + dx)}" y1="{_f(base_y - tick)}" '
                       f'x2="{_f(bx + dx)}" y2="{_f(base_y + tick)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return out


def render_svg(spec: DiagramSpec) -> str:
    if not spec.word.letters:
        raise DowError("cannot draw the empty word")
    if min(spec.size, spec.radius, spec.font_size) <= 0:
        raise ValueError("geometry must be positive")
    if spec.style == "chord":
        lines = _chord(spec)
    elif spec.style == "linked":
        lines = _linked(spec)
    else:
        raise ValueError(f"unknown style {spec.style!r}")
    return "\n".join(lines) + "\n"
