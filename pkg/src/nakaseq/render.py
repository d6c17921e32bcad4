"""Deterministic SVG and ASCII pictures of the lattice of a selfinjective algebra.

Lattice point ``(a, b)`` sits at pixel ``(40a + 20b, -40b)`` shifted by a margin,
so rows lean right as ``b`` grows, as in the AR quiver.
"""
from __future__ import annotations

from typing import Iterable

from .algebra import Indec, NakayamaAlgebra
from .homology import ext_region_contains, hom_region_contains
from .modcat import gamma, gamma_inv

HOM_FILL = "#cfe8ff"
EXT_FILL = "#ffd9cc"
MARGIN = 30
REGIONS = ("hom", "ext")


def _blend(*colors: str) -> str:
    chans = [[int(c[i:i + 2], 16) for i in (1, 3, 5)] for c in colors]
    return "#" + "".join(f"{sum(ch) // len(ch):02x}" for ch in zip(*chans))


BOTH_FILL = _blend(HOM_FILL, EXT_FILL)


def _membership(A: NakayamaAlgebra, M: Indec, regions: Iterable[str]):
    regions = set(regions)
    unknown = regions - set(REGIONS)
    if unknown:
        raise ValueError(f"unknown regions {sorted(unknown)}")
    A.check(M)
    gamma(A, M)  # rejects non-selfinjective algebras
    out = {}
    # row-major: top row first, left to right
    for b in range(A.k - 1, -1, -1):
        for a in range(A.n):
            X = gamma_inv(A, (a, b))
            h = "hom" in regions and hom_region_contains(A, M, X)
            e = "ext" in regions and ext_region_contains(A, M, X)
            out[(a, b)] = (X, h, e)
    return out


def render_ascii(A: NakayamaAlgebra, M: Indec, regions: Iterable[str] = REGIONS) -> str:
    """One character per lattice point: ``o`` for ``M``, ``B``/``H``/``E`` for region membership, ``.`` otherwise."""
    cells = _membership(A, M, regions)
    width = 2 * (A.n - 1) + (A.k - 1) + 1
    lines = []
    for b in range(A.k - 1, -1, -1):
        row = [" "] * width
        for a in range(A.n):
            X, h, e = cells[(a, b)]
            ch = "o" if X == M else "B" if h and e else "H" if h else "E" if e else "."
            row[2 * a + b] = ch
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(A: NakayamaAlgebra, M: Indec, regions: Iterable[str] = REGIONS) -> str:
    cells = _membership(A, M, regions)
    width = 40 * (A.n - 1) + 20 * (A.k - 1) + 2 * MARGIN
    height = 40 * (A.k - 1) + 2 * MARGIN

    def px(a: int, b: int) -> tuple[int, int]:
        return MARGIN + 40 * a + 20 * b, MARGIN + 40 * (A.k - 1) - 40 * b

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        '<g id="regions">',
    ]
    for (a, b), (X, h, e) in cells.items():
        if h or e:
            fill = BOTH_FILL if h and e else HOM_FILL if h else EXT_FILL
            x, y = px(a, b)
            out.append(
                f'<polygon points="{x - 20},{y} {x},{y - 20} {x + 20},{y} {x},{y + 20}" fill="{fill}"/>'
            )
    out.append("</g>")
    out.append('<g id="modules">')
    for (a, b), (X, h, e) in cells.items():
        x, y = px(a, b)
        color = "#d62728" if X == M else "#000000"
        out.append(
            f'<circle cx="{x}" cy="{y}" r="3" fill="{color}"><title>{X.top},{X.length}</title></circle>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
