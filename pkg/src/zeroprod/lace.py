"""Lace diagrams: columns of dots joined by unit segments.

Column x holds one dot per dimension unit of d_x at consecutive integer
heights (negative heights are allowed).  A segment joins a dot in column x
to a dot in column x+1, and no dot touches more than one segment on either
side.  Maximal chains of segments ("strands") span column intervals; the
number of strands spanning exactly [k, l] is the multiplicity m_kl of the
Kostant partition the diagram represents.

Diagrams built here use horizontal segments only.  Imported diagrams with
slanted segments are accepted read-only: strand tracing and partition
extraction work on them, construction never produces them.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InfeasibleVector, MalformedDiagram, NotIncreasing
from .kostant import DimensionVector, KostantPartition
from .qip import RisingVector

Dot = tuple[int, int]  # (column, height)
Segment = tuple[Dot, Dot]  # ((x, y), (x + 1, y2))


class LaceDiagram:
    """Immutable diagram: per-column dot heights plus unit segments."""

    __slots__ = ("n", "columns", "segments")

    def __init__(
        self,
        columns: Sequence[Sequence[int]],
        segments: Sequence[Segment] = (),
    ):
        if len(columns) < 2:
            raise ValueError("a diagram needs at least two columns")
        self.n = len(columns) - 1
        self.columns = tuple(tuple(sorted(set(col))) for col in columns)
        dots = {(x, y) for x, col in enumerate(self.columns) for y in col}
        left_used: set[Dot] = set()
        right_used: set[Dot] = set()
        segs = []
        for a, b in segments:
            a = (int(a[0]), int(a[1]))
            b = (int(b[0]), int(b[1]))
            if b[0] != a[0] + 1:
                raise MalformedDiagram(f"segment {a}->{b} does not join adjacent columns")
            if a not in dots or b not in dots:
                raise MalformedDiagram(f"segment {a}->{b} touches a missing dot")
            if a in right_used:
                raise MalformedDiagram(f"dot {a} has two segments to the right")
            if b in left_used:
                raise MalformedDiagram(f"dot {b} has two segments to the left")
            right_used.add(a)
            left_used.add(b)
            segs.append((a, b))
        self.segments = frozenset(segs)

    def column_counts(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    def dimension_vector(self) -> DimensionVector:
        return DimensionVector(self.column_counts())

    def validate_against(self, d: Sequence[int]) -> None:
        if self.column_counts() != tuple(d):
            raise InfeasibleVector(
                f"column counts {self.column_counts()} != dimension vector {tuple(d)}"
            )

    def dot_index(self, x: int, y: int) -> int:
        """Bottom-up position of a dot within its column, starting at 0."""
        return self.columns[x].index(y)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaceDiagram)
            and self.columns == other.columns
            and self.segments == other.segments
        )

    def __hash__(self) -> int:
        return hash((self.columns, self.segments))

    def __repr__(self) -> str:
        return (
            f"LaceDiagram(columns={self.columns!r}, "
            f"segments={sorted(self.segments)!r})"
        )


def _horizontal_segments(columns: Sequence[Sequence[int]]) -> list[Segment]:
    segs = []
    for x in range(len(columns) - 1):
        shared = set(columns[x]) & set(columns[x + 1])
        segs.extend(((x, y), (x + 1, y)) for y in sorted(shared))
    return segs


def diagram_from_rising(d: Sequence[int], v: RisingVector) -> LaceDiagram:
    """Staircase diagram of a rising vector.

    Column k sits at heights [0, d_k).  To the right of k the bottom of
    column x rises e_x units above the bottom of column x-1; to the left of
    k the top of column x drops e_x units below the top of column x+1.  All
    possible horizontal segments are drawn.
    """
    dims = DimensionVector(d)
    v.require_feasible_for(dims)
    k, e = v.k, v.values
    columns = []
    for x in range(dims.n + 1):
        if x < k:
            drop = sum(e[i] for i in range(x, k))
            lo = dims[k] - dims[x] - drop
        elif x == k:
            lo = 0
        else:
            lo = sum(e[i] for i in range(k + 1, x + 1))
        columns.append(range(lo, lo + dims[x]))
    return LaceDiagram(columns, _horizontal_segments(columns))


def diagram_increasing_case(d_incr: Sequence[int], e: Sequence[int]) -> LaceDiagram:
    """Deletion-style diagram for a weakly increasing dimension vector.

    Start from the fully linked bottom-aligned diagram, then between
    columns x-1 and x delete the segments in the height block
    [e_1 + ... + e_{x-1}, e_1 + ... + e_x).  The blocks tile [0, d_0), so
    every full-width strand of the start diagram is cut exactly once.
    """
    dims = DimensionVector(d_incr)
    if list(dims) != sorted(dims):
        raise NotIncreasing(f"{tuple(dims)} is not weakly increasing")
    ev = tuple(int(x) for x in e)
    if len(ev) != dims.n or any(x < 0 for x in ev) or sum(ev) != dims[0]:
        raise InfeasibleVector(f"{ev} is not a composition of {dims[0]} into {dims.n} parts")
    columns = [range(dims[x]) for x in range(dims.n + 1)]
    segs = []
    cum = 0
    for x in range(1, dims.n + 1):
        lo, hi = cum, cum + ev[x - 1]
        cum = hi
        shared = min(dims[x - 1], dims[x])
        segs.extend(
            ((x - 1, y), (x, y)) for y in range(shared) if not lo <= y < hi
        )
    return LaceDiagram(columns, segs)


def open_orbit_diagram(d: Sequence[int]) -> LaceDiagram:
    """Bottom-aligned, fully linked diagram; its orbit has codimension 0."""
    dims = DimensionVector(d)
    columns = [range(dims[x]) for x in range(dims.n + 1)]
    return LaceDiagram(columns, _horizontal_segments(columns))


def partition_of_diagram(
    g: LaceDiagram, d: Sequence[int] | None = None
) -> KostantPartition:
    """Count maximal strands per spanned interval.

    Walks every strand from its left end to its right end; a strand whose
    dots occupy columns k..l contributes 1 to m_kl.  When a dimension
    vector is supplied the result is validated against it.
    """
    right_of = {a: b for a, b in g.segments}
    has_left = {b for _, b in g.segments}
    m: dict[tuple[int, int], int] = {}
    for x, col in enumerate(g.columns):
        for y in col:
            dot = (x, y)
            if dot in has_left:
                continue
            end = dot
            while end in right_of:
                end = right_of[end]
            key = (x, end[0])
            m[key] = m.get(key, 0) + 1
    part = KostantPartition(g.n, m)
    if d is not None:
        part.require_partition_of(d)
    return part


def render(
    g: LaceDiagram,
    format: str = "ascii",
    cell_width: int = 3,
    standalone: bool = False,
) -> str:
    """Deterministic text rendering: "ascii", "svg", or "tikz".

    The svg output is a complete SVG 1.1 document; tikz produces a picture
    environment, or a compilable standalone document when requested.
    """
    if format == "ascii":
        return _render_ascii(g, cell_width)
    if format == "svg":
        return _render_svg(g)
    if format == "tikz":
        return _render_tikz(g, standalone)
    raise ValueError(f"unknown format {format!r}")


def _height_range(g: LaceDiagram) -> tuple[int, int]:
    ys = [y for col in g.columns for y in col]
    if not ys:
        return 0, -1
    return min(ys), max(ys)


def _render_ascii(g: LaceDiagram, cell_width: int) -> str:
    if cell_width < 2:
        raise ValueError("cell width must be at least 2")
    y_min, y_max = _height_range(g)
    if y_max < y_min:
        return ""
    width = g.n * cell_width + 1
    grid = {}
    for x, col in enumerate(g.columns):
        for y in col:
            grid[(y, x * cell_width)] = "*"
    for (x, y), (_, y2) in sorted(g.segments):
        if y2 == y:
            for c in range(x * cell_width + 1, (x + 1) * cell_width):
                grid[(y, c)] = "-"
        else:
            ch = "/" if y2 > y else "\\"
            row = -(-(y + y2) // 2)  # midpoint rounded up
            grid[(row, x * cell_width + cell_width // 2)] = ch
    lines = []
    for y in range(y_max, y_min - 1, -1):
        line = "".join(grid.get((y, c), " ") for c in range(width))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _render_svg(g: LaceDiagram) -> str:
    sx, sy, margin, radius = 24, 16, 12, 3
    y_min, y_max = _height_range(g)
    if y_max < y_min:
        y_min = y_max = 0
    width = g.n * sx + 2 * margin
    height = (y_max - y_min) * sy + 2 * margin

    def px(x: int) -> int:
        return margin + x * sx

    def py(y: int) -> int:
        return margin + (y_max - y) * sy

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for (x, y), (x2, y2) in sorted(g.segments):
        parts.append(
            f'  <line x1="{px(x)}" y1="{py(y)}" x2="{px(x2)}" y2="{py(y2)}" '
            f'stroke="black" stroke-width="1.5"/>'
        )
    for x, col in enumerate(g.columns):
        for y in col:
            parts.append(f'  <circle cx="{px(x)}" cy="{py(y)}" r="{radius}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _render_tikz(g: LaceDiagram, standalone: bool) -> str:
    parts = ["\\begin{tikzpicture}[x=0.8cm,y=0.45cm]"]
    for (x, y), (x2, y2) in sorted(g.segments):
        parts.append(f"  \\draw[thick] ({x},{y}) -- ({x2},{y2});")
    for x, col in enumerate(g.columns):
        for y in col:
            parts.append(f"  \\fill ({x},{y}) circle (2pt);")
    parts.append("\\end{tikzpicture}")
    body = "\n".join(parts) + "\n"
    if standalone:
        return (
            "\\documentclass[tikz]{standalone}\n"
            "\\begin{document}\n" + body + "\\end{document}\n"
        )
    return body
