"""Deterministic SVG rendering of persistence diagrams and barcodes."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .algebra import format_extended, is_finite
from .persistence import PersistenceDiagram

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f")
MARGIN = 40
SIZE = 360
BAR_STEP = 14

HEAD = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">\
<path d="M0,0 L8,4 L0,8 z" fill="context-stroke"/></marker></defs>
<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>
"""


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _range(dgm: PersistenceDiagram) -> tuple:
    vals = [float(v) for p in dgm.points for v in (p.birth, p.death) if is_finite(v)]
    if not vals:
        return 0.0, 1.0
    lo, hi = min(vals), max(vals)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    pad = (hi - lo) * 0.1
    return lo - pad, hi + pad


def _color(degree: int) -> str:
    return PALETTE[degree % len(PALETTE)]


def _legend(dgm: PersistenceDiagram, x0: float, y0: float) -> list:
    out = []
    for n, d in enumerate(dgm.degrees()):
        y = y0 + 12 * n
        out.append(f'<rect x="{_fmt(x0)}" y="{_fmt(y - 8)}" width="8" height="8" fill="{_color(d)}"/>')
        out.append(f'<text x="{_fmt(x0 + 12)}" y="{_fmt(y)}" font-size="10">H{d}</text>')
    return out


def render_diagram(dgm: PersistenceDiagram) -> str:
    lo, hi = _range(dgm)
    w = h = SIZE + 2 * MARGIN
    top, left, right, bottom = MARGIN, MARGIN, MARGIN + SIZE, MARGIN + SIZE
    inner_top = top + 16  # row reserved for infinite deaths

    def sx(v):
        if not is_finite(v):
            return left
        return left + (float(v) - lo) / (hi - lo) * SIZE

    def sy(v):
        return bottom - (float(v) - lo) / (hi - lo) * (bottom - inner_top)

    body = [
        f'<rect x="{left}" y="{top}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#000000"/>',
        f'<line class="diagonal" x1="{_fmt(sx(lo))}" y1="{_fmt(sy(lo))}" x2="{_fmt(sx(hi))}" '
        f'y2="{_fmt(sy(hi))}" stroke="#888888" stroke-dasharray="4,3"/>',
        f'<text x="{_fmt(left)}" y="{_fmt(bottom + 16)}" font-size="10">{_fmt(lo)}</text>',
        f'<text x="{_fmt(right - 24)}" y="{_fmt(bottom + 16)}" font-size="10">{_fmt(hi)}</text>',
        f'<text x="{_fmt((left + right) / 2 - 12)}" y="{_fmt(bottom + 30)}" font-size="11">birth</text>',
        f'<text x="8" y="{_fmt((top + bottom) / 2)}" font-size="11">death</text>',
    ]
    for p in dgm.points:
        x = sx(p.birth)
        title = escape(f"H{p.degree} ({format_extended(p.birth)}, {format_extended(p.death)})")
        if is_finite(p.death):
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(sy(p.death))}" r="3" fill="{_color(p.degree)}">'
                        f'<title>{title}</title></circle>')
        else:
            body.append(f'<line class="infinite" x1="{_fmt(x)}" y1="{_fmt(inner_top)}" x2="{_fmt(x)}" '
                        f'y2="{_fmt(top)}" stroke="{_color(p.degree)}" marker-end="url(#arrow)">'
                        f'<title>{title}</title></line>')
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(inner_top)}" r="3" fill="{_color(p.degree)}"/>')
    body += _legend(dgm, right - 40, top + 28)
    return HEAD.format(w=w, h=h) + "\n".join(body) + "\n</svg>\n"


def render_barcode(dgm: PersistenceDiagram) -> str:
    lo, hi = _range(dgm)
    bars = sorted(dgm.points, key=lambda p: (p.degree, p.birth, p.death))
    w = SIZE + 2 * MARGIN
    h = 2 * MARGIN + max(1, len(bars)) * BAR_STEP
    left, right = MARGIN, MARGIN + SIZE

    def sx(v):
        if not is_finite(v):
            return left if v < 0 else right
        return left + (float(v) - lo) / (hi - lo) * SIZE

    body = [
        f'<line class="axis" x1="{left}" y1="{h - MARGIN}" x2="{right}" y2="{h - MARGIN}" stroke="#000000"/>',
        f'<text x="{left}" y="{h - MARGIN + 14}" font-size="10">{_fmt(lo)}</text>',
        f'<text x="{right - 24}" y="{h - MARGIN + 14}" font-size="10">{_fmt(hi)}</text>',
    ]
    for n, p in enumerate(bars):
        y = MARGIN + n * BAR_STEP + BAR_STEP / 2
        title = escape(f"H{p.degree} ({format_extended(p.birth)}, {format_extended(p.death)})")
        arrow = "" if is_finite(p.death) else ' marker-end="url(#arrow)"'
        cls = "bar" if is_finite(p.death) else "bar infinite"
        body.append(f'<line class="{cls}" x1="{_fmt(sx(p.birth))}" y1="{_fmt(y)}" x2="{_fmt(sx(p.death))}" '
                    f'y2="{_fmt(y)}" stroke="{_color(p.degree)}" stroke-width="4"{arrow}>'
                    f'<title>{title}</title></line>')
    body += _legend(dgm, right - 40, MARGIN - 20)
    return HEAD.format(w=w, h=h) + "\n".join(body) + "\n</svg>\n"


def render(dgm: PersistenceDiagram, kind: str = "diagram") -> str:
    if kind == "diagram":
        return render_diagram(dgm)
    if kind == "barcode":
        return render_barcode(dgm)
    raise ValueError(f"unknown plot kind {kind!r}")
