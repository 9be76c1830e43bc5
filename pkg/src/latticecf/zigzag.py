"""Zigzag diagrams: both hull chains of a number drawn around one cone.

For a rational ``t > 1`` written in subtractive block form
``t = [(2)^m1, n1+3, (2)^m2, ..., ns+3, (2)^m_{s+1}]-``, the diagram holds
the chain of the cone of type ``t`` on the right (edge lengths ``m_i + 1``,
vertex weights ``n_i + 3``) and the supplementary chain on the left (edge
lengths ``1, n_1+1, ..., n_s+1, 1``, vertex weights ``m_1+2, m_2+3, ...,
m_{s+1}+2``), the two joined at the apex.  A zigzag line connects each
right vertex with the two opposite left vertices; the governing rule is
that a vertex weight equals the length of its opposite edge plus the
number of that edge's vertices away from the three base points.

All four expansions of the pair ``t, t/(t-1)`` can be read off the
diagram; :func:`read` exposes them and they agree with the algebraic
computations of :mod:`latticecf.cf`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cf import canonical_e, expand_hj, hj_blocks
from .errors import DomainError

READINGS = ("hj_lambda", "hj_involute", "e_involute", "e_lambda")


@dataclass(frozen=True)
class ZigzagDiagram:
    """Decorated double chain of a rational number > 1.

    ``right_edge_lengths``/``right_vertex_weights`` describe the chain of
    the cone itself, ``left_*`` the supplementary chain including its two
    unit end edges.  ``extreme_is_vertex`` tells whether the first and last
    left points are genuine vertices (weight >= 3) of their chain.
    """

    value: Fraction
    right_edge_lengths: tuple[int, ...]
    right_vertex_weights: tuple[int, ...]
    left_edge_lengths: tuple[int, ...]
    left_vertex_weights: tuple[int, ...]
    extreme_is_vertex: tuple[bool, bool]

    @property
    def s(self) -> int:
        """Number of interior vertices of the right chain."""
        return len(self.right_vertex_weights)


def build(value) -> ZigzagDiagram:
    """Construct the diagram of a rational number > 1 from its block form."""
    value = Fraction(value)
    if value <= 1:
        raise DomainError(f"zigzag diagrams need a value > 1, got {value}")
    blocks, m_last = hj_blocks(expand_hj(value).terms)
    ms = [m for m, _ in blocks] + [m_last]
    ns = [n for _, n in blocks]
    s = len(ns)
    right_edges = tuple(m + 1 for m in ms)
    right_weights = tuple(n + 3 for n in ns)
    left_edges = (1,) + tuple(n + 1 for n in ns) + (1,)
    if s == 0:
        left_weights: tuple[int, ...] = (ms[0] + 1,)
    else:
        left_weights = (
            (ms[0] + 2,)
            + tuple(m + 3 for m in ms[1:-1])
            + (ms[-1] + 2,)
        )
    flags = (left_weights[0] >= 3, left_weights[-1] >= 3)
    return ZigzagDiagram(value, right_edges, right_weights, left_edges, left_weights, flags)


def read(d: ZigzagDiagram, which: str) -> tuple[int, ...]:
    """One of the four expansions encoded by the diagram.

    ``hj_lambda`` reads the right chain, ``hj_involute`` the left one,
    ``e_involute`` alternates the edge lengths of both, and ``e_lambda``
    applies the two-case involution rule to the latter.  The results agree
    with expanding the value and its involute directly.
    """
    ms = [e - 1 for e in d.right_edge_lengths]
    ns = [w - 3 for w in d.right_vertex_weights]
    s = d.s
    if which == "hj_lambda":
        out: list[int] = []
        for i in range(s):
            out.extend([2] * ms[i])
            out.append(ns[i] + 3)
        out.extend([2] * ms[-1])
        return tuple(out)
    if which == "hj_involute":
        if s == 0:
            return (ms[0] + 1,)
        out = [ms[0] + 2]
        for i in range(s):
            out.extend([2] * ns[i])
            out.append(ms[i + 1] + (2 if i == s - 1 else 3))
        return tuple(out)
    if which == "e_involute":
        out = [ms[0] + 1]
        for i in range(s):
            out.extend([ns[i] + 1, ms[i + 1] + 1])
        return canonical_e(out)
    if which == "e_lambda":
        inv = list(read(d, "e_involute"))
        if inv[0] == 1:
            return canonical_e([1 + inv[1]] + inv[2:])
        return canonical_e([1, inv[0] - 1] + inv[1:])
    raise DomainError(f"unknown reading {which!r}; choose one of {READINGS}")


def rule_ok(d: ZigzagDiagram) -> bool:
    """Check the weight rule at every vertex of the diagram.

    Each vertex weight must equal the length of the opposite edge plus the
    number of its endpoints distinct from the two base points and the apex.
    """
    s = d.s
    re, rw = d.right_edge_lengths, d.right_vertex_weights
    le, lw = d.left_edge_lengths, d.left_vertex_weights
    # right vertex j (1-based) faces the left edge between V_j' and V_{j+1}'
    for j in range(1, s + 1):
        if rw[j - 1] != le[j] + 2:
            return False
    # left vertex j faces the right edge between V_{j-1} and V_j
    for j in range(1, s + 2):
        ends = 2
        if j == 1:
            ends -= 1  # that edge starts at the base point
        if j == s + 1:
            ends -= 1  # that edge ends at the apex
        if lw[j - 1] != re[j - 1] + ends:
            return False
    return True


# rendering ------------------------------------------------------------

_DH = 6          # rows between consecutive zigzag vertices
_LX, _RX = 10, 16
_AX, _ASH = 13, 3  # apex column and its height above the last left point


def _zig_rows(d: ZigzagDiagram) -> list[tuple[int, int, str]]:
    """Rows and columns of the zigzag vertices, bottom-up: (row, col, side)."""
    m = 2 * d.s + 1
    out = []
    for k in range(m + 1):
        row = _ASH + _DH * (m - k)
        col = _RX if k % 2 == 0 else _LX
        out.append((row, col, "right" if k % 2 == 0 else "left"))
    return out


def render(d: ZigzagDiagram, format: str = "ascii") -> str:
    """Deterministic text rendering; ``format`` is "ascii" or "svg"."""
    if format == "ascii":
        return _render_ascii(d)
    if format == "svg":
        return _render_svg(d)
    raise DomainError(f"unknown format {format!r}; choose ascii or svg")


def _render_ascii(d: ZigzagDiagram) -> str:
    zig = _zig_rows(d)
    baseline = zig[0][0]
    grid: dict[tuple[int, int], str] = {}

    def put(row: int, col: int, text: str):
        for i, ch in enumerate(text):
            grid[(row, col + i)] = ch

    # baseline with its three marked points
    for c in range(_LX, _RX + 1):
        grid[(baseline, c)] = "-"
    put(baseline, _LX, "*")
    put(baseline, _AX, "O")
    put(baseline, _RX, "*")
    put(baseline + 1, _LX - 1, "V0'")
    put(baseline + 1, _RX, "V0")

    # the two curves: vertical runs capped by 45-degree bends into the apex
    for col in (_LX, _RX):
        for row in range(_ASH, baseline):
            grid[(row, col)] = "|"
    for t in range(1, _ASH):
        grid[(_ASH - t, _LX + t)] = "/"
        grid[(_ASH - t, _RX - t)] = "\\"
    put(0, _AX, "A+")
    grid[(_ASH, _LX)] = "*"
    grid[(_ASH, _RX)] = "|"

    # zigzag chords between consecutive marked points
    for (r1, c1, _), (r2, c2, _) in zip(zig, zig[1:]):
        step = 1 if c2 > c1 else -1
        ch = "/" if step > 0 else "\\"
        for t in range(1, _DH):
            grid[(r1 - t, c1 + step * t)] = ch

    # marked points with their weights
    for j, w in enumerate(d.left_vertex_weights, start=1):
        row = zig[2 * j - 1][0]
        put(row, _LX, "*")
        put(row, _LX - 5, f"({w})".rjust(4))
    for j, w in enumerate(d.right_vertex_weights, start=1):
        row = zig[2 * j][0]
        put(row, _RX, "*")
        put(row, _RX + 2, f"({w})")

    # edge lengths beside the runs they decorate
    left_rows = [baseline] + [zig[2 * j - 1][0] for j in range(1, d.s + 2)]
    for length, (lo, hi) in zip(d.left_edge_lengths, zip(left_rows, left_rows[1:])):
        put((lo + hi) // 2, _LX - 3, str(length).rjust(2))
    put(1, _LX, str(d.left_edge_lengths[-1]))
    right_rows = [baseline] + [zig[2 * j][0] for j in range(1, d.s + 1)] + [_ASH]
    for length, (lo, hi) in zip(d.right_edge_lengths, zip(right_rows, right_rows[1:])):
        put((lo + hi) // 2, _RX + 2, str(length))

    nrows = baseline + 2
    ncols = max(c for _, c in grid) + 1
    lines = [f"ZZ({d.value})"]
    for r in range(nrows):
        lines.append("".join(grid.get((r, c), " ") for c in range(ncols)).rstrip())
    return "\n".join(lines) + "\n"


def _render_svg(d: ZigzagDiagram) -> str:
    zig = _zig_rows(d)

    def xy(row: int, col: int) -> tuple[int, int]:
        return 16 * col - 96, 16 * row + 32

    baseline = zig[0][0]
    apex = xy(0, _AX)
    left_pts = [xy(baseline, _LX)]
    left_pts += [xy(zig[2 * j - 1][0], _LX) for j in range(1, d.s + 2)]
    left_pts.append(apex)
    right_pts = [xy(baseline, _RX)]
    right_pts += [xy(zig[2 * j][0], _RX) for j in range(1, d.s + 1)]
    right_pts += [xy(_ASH, _RX), apex]
    zig_pts = [xy(r, c) for r, c, _ in zig]

    def path(points, dash: bool = False) -> str:
        data = "M " + " L ".join(f"{x} {y}" for x, y in points)
        extra = ' stroke-dasharray="4 3"' if dash else ""
        return f'<path d="{data}" fill="none" stroke="black"{extra}/>'

    width = 16 * (_RX + 8) - 96
    height = 16 * (baseline + 2) + 32
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        path([xy(baseline, _LX - 2), xy(baseline, _RX + 2)]),
        path(left_pts),
        path(right_pts),
        path(zig_pts, dash=True),
    ]
    for x, y in sorted(set(left_pts[:-1] + right_pts[:-2] + [apex, xy(baseline, _AX)])):
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')

    def text(x: int, y: int, s: str) -> str:
        return f'<text x="{x}" y="{y}" font-size="12">{s}</text>'

    out.append(text(apex[0] - 8, apex[1] - 8, "A+"))
    out.append(text(left_pts[0][0] - 28, left_pts[0][1] + 14, "V0'"))
    out.append(text(right_pts[0][0] + 8, right_pts[0][1] + 14, "V0"))
    ox, oy = xy(baseline, _AX)
    out.append(text(ox - 4, oy + 14, "O"))
    for j, w in enumerate(d.left_vertex_weights, start=1):
        x, y = left_pts[j]
        out.append(text(x - 36, y + 4, f"({w})"))
    for j, w in enumerate(d.right_vertex_weights, start=1):
        x, y = right_pts[j]
        out.append(text(x + 10, y + 4, f"({w})"))
    for k, length in enumerate(d.left_edge_lengths):
        (x1, y1), (x2, y2) = left_pts[k], left_pts[k + 1]
        out.append(text((x1 + x2) // 2 - 14, (y1 + y2) // 2, str(length)))
    for k, length in enumerate(d.right_edge_lengths):
        (x1, y1), (x2, y2) = right_pts[k], right_pts[min(k + 1, len(right_pts) - 2)]
        out.append(text((x1 + x2) // 2 + 10, (y1 + y2) // 2, str(length)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_json_dict(d: ZigzagDiagram) -> dict:
    """JSON-ready description used by the command-line front end."""
    return {
        "schema": "lattice-cf/1",
        "type": "zigzag",
        "lambda": str(d.value),
        "involute": str(d.value / (d.value - 1)),
        "right": {
            "edge_lengths": list(d.right_edge_lengths),
            "vertex_weights": list(d.right_vertex_weights),
        },
        "left": {
            "edge_lengths": list(d.left_edge_lengths),
            "vertex_weights": list(d.left_vertex_weights),
        },
        "extreme_is_vertex": list(d.extreme_is_vertex),
        "readings": {name: list(read(d, name)) for name in READINGS},
    }
