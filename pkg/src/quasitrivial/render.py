"""Static visual output: contour plots of operations and profile plots of
weak orderings against a reference ordering.

Output is byte-deterministic for fixed inputs.  The ASCII contour form is the
raw value grid; the SVG form draws one polyline group per level set,
connecting the sorted points of the set first along rows, then along columns.
Profile plots mark plateaus as horizontal runs and annotate any V / L /
reversed-L violations, in exact agreement with `orders.profile_patterns`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .magmas import FiniteBinOp
from .orders import TotalOrder, WeakOrder, profile_patterns

CELL = 40
MARGIN = 50

FORMATS = ("ascii", "svg")


@dataclass(frozen=True)
class ContourPlot:
    """Level sets of an operation laid out on a drawing axis."""

    n: int
    axis: TotalOrder
    level_sets: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    @classmethod
    def from_operation(cls, f: FiniteBinOp, axis: TotalOrder | None = None) -> "ContourPlot":
        axis = axis or TotalOrder.natural(f.n)
        if axis.n != f.n:
            raise ValueError("axis ordering has the wrong cardinality")
        sets: dict[int, list[tuple[int, int]]] = {}
        for x in range(1, f.n + 1):
            for y in range(1, f.n + 1):
                sets.setdefault(f(x, y), []).append((x, y))
        levels = tuple(
            (v, tuple(sorted(pts, key=lambda p: (axis.rank_of(p[0]), axis.rank_of(p[1])))))
            for v, pts in sorted(sets.items())
        )
        return cls(f.n, axis, levels)


@dataclass(frozen=True)
class ProfilePlot:
    """A weak ordering drawn over a reference ordering: horizontal position is
    the reference rank, vertical position the reversed weak-order rank (so the
    bottom class of the weak ordering sits on top)."""

    n: int
    reference: TotalOrder
    order: WeakOrder

    def level_of(self, x: int) -> int:
        return self.order.k + 1 - self.order.rank_of(x)


def render_contour(f: FiniteBinOp, axis: TotalOrder | None = None, fmt: str = "ascii") -> str:
    axis = axis or TotalOrder.natural(f.n)
    if fmt == "ascii":
        return _contour_ascii(f, axis)
    if fmt == "svg":
        return _contour_svg(f, axis)
    raise ValueError(f"unknown format {fmt!r}")


def _contour_ascii(f: FiniteBinOp, axis: TotalOrder) -> str:
    elems = axis.ordered_elements()
    lines = []
    for x in elems:
        lines.append(" ".join(str(f(x, y)) for y in elems))
    return "\n".join(lines) + "\n"


def _svg_header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _contour_svg(f: FiniteBinOp, axis: TotalOrder) -> str:
    n = f.n
    plot = ContourPlot.from_operation(f, axis)
    size = 2 * MARGIN + (n - 1) * CELL

    def px(x: int) -> int:
        return MARGIN + (axis.rank_of(x) - 1) * CELL

    def py(y: int) -> int:
        return MARGIN + (n - axis.rank_of(y)) * CELL

    lines = _svg_header(size, size)
    for value, points in plot.level_sets:
        lines.append(f'<g id="level-{value}" stroke="black" fill="none">')
        by_row: dict[int, list[tuple[int, int]]] = {}
        by_col: dict[int, list[tuple[int, int]]] = {}
        for x, y in points:
            by_row.setdefault(y, []).append((x, y))
            by_col.setdefault(x, []).append((x, y))
        for y in sorted(by_row, key=axis.rank_of):
            run = sorted(by_row[y], key=lambda p: axis.rank_of(p[0]))
            if len(run) >= 2:
                coords = " ".join(f"{px(x)},{py(yy)}" for x, yy in run)
                lines.append(f'<polyline points="{coords}"/>')
        for x in sorted(by_col, key=axis.rank_of):
            run = sorted(by_col[x], key=lambda p: axis.rank_of(p[1]))
            if len(run) >= 2:
                coords = " ".join(f"{px(xx)},{py(y)}" for xx, y in run)
                lines.append(f'<polyline points="{coords}"/>')
        lines.append("</g>")
    lines.append('<g id="points" fill="black">')
    for x in axis.ordered_elements():
        for y in axis.ordered_elements():
            lines.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="3"/>')
    lines.append("</g>")
    lines.append('<g id="labels" font-size="14" fill="black">')
    for v in axis.ordered_elements():
        lines.append(f'<text x="{px(v) + 6}" y="{py(v) - 6}">{v}</text>')
        lines.append(f'<text x="{px(v) - 4}" y="{size - 8}">{v}</text>')
        lines.append(f'<text x="8" y="{py(v) + 5}">{v}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_profile(t: TotalOrder, w: WeakOrder, fmt: str = "ascii") -> str:
    if t.n != w.n:
        raise ValueError("reference and weak order have different cardinalities")
    if fmt == "ascii":
        return _profile_ascii(t, w)
    if fmt == "svg":
        return _profile_svg(t, w)
    raise ValueError(f"unknown format {fmt!r}")


def _violation_lines(t: TotalOrder, w: WeakOrder) -> list[str]:
    flags = profile_patterns(t, w)
    found = []
    if not flags.v_free:
        found.append("violation: V")
    if not flags.l_free:
        found.append("violation: L")
    if not flags.reversed_l_free:
        found.append("violation: reversed-L")
    return found or ["violations: none"]


def _profile_ascii(t: TotalOrder, w: WeakOrder) -> str:
    plot = ProfilePlot(w.n, t, w)
    elems = t.ordered_elements()
    levels = [plot.level_of(x) for x in elems]
    lines = []
    for level in range(w.k, 0, -1):
        row = []
        for i, lv in enumerate(levels):
            if i:
                joined = lv == level == levels[i - 1] and w.equiv(elems[i - 1], elems[i])
                row.append("=" if joined else " ")
            row.append("*" if lv == level else ".")
        lines.append("".join(row))
    lines.append("x-axis: " + " ".join(str(x) for x in elems))
    lines.extend(_violation_lines(t, w))
    return "\n".join(lines) + "\n"


def _profile_svg(t: TotalOrder, w: WeakOrder) -> str:
    plot = ProfilePlot(w.n, t, w)
    n, k = w.n, w.k
    width = 2 * MARGIN + (n - 1) * CELL
    height = 2 * MARGIN + (k - 1) * CELL if k > 1 else 2 * MARGIN
    elems = t.ordered_elements()

    def px(pos: int) -> int:
        return MARGIN + (pos - 1) * CELL

    def py(level: int) -> int:
        return MARGIN + (k - level) * CELL

    lines = _svg_header(width, height)
    coords = " ".join(f"{px(i + 1)},{py(plot.level_of(x))}" for i, x in enumerate(elems))
    lines.append(f'<polyline points="{coords}" stroke="black" fill="none"/>')
    lines.append('<g id="points" fill="black">')
    for i, x in enumerate(elems):
        lines.append(f'<circle cx="{px(i + 1)}" cy="{py(plot.level_of(x))}" r="3"/>')
    lines.append("</g>")
    lines.append('<g id="labels" font-size="14" fill="black">')
    for i, x in enumerate(elems):
        lines.append(f'<text x="{px(i + 1) - 4}" y="{height - 8}">{x}</text>')
    for level in range(1, k + 1):
        members = sorted(x for x in range(1, n + 1) if plot.level_of(x) == level)
        label = "~".join(str(x) for x in members)
        lines.append(f'<text x="4" y="{py(level) + 5}">{label}</text>')
    for i, note in enumerate(_violation_lines(t, w)):
        lines.append(f'<text x="{MARGIN}" y="{16 + 16 * i}">{note}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
