"""Dyck paths and Young tableaux of numerical semigroups.

Walking ``i = 1, ..., 2g`` the path steps up when ``i`` is a gap and right
when it is a member.  The up-step for the ``i``-th gap sits at horizontal
offset ``gap_i - i`` (the members below it), so row ``i`` of the tableau
holds ``gap_i - i`` boxes and the box count is the S-weight.  Dropping the
top row (the Frobenius number) leaves the K-tableau, whose box count is
``W_K - (g - 1)``.

Rows are numbered from the bottom: grid row ``y`` holds the boxes of gap
``y + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from xml.sax.saxutils import escape

from .errors import GenusMismatch
from .gapset import Semigroup, gaps

__all__ = ["DiffCounts", "PathTableau", "Step", "cell_diff", "path_of", "render_ascii", "render_svg"]

CELL = 12
GRAY = "#d3d3d3"
RED = "#ff0000"
GRID = "#0000ff"


class Step(str, Enum):
    UP = "U"
    RIGHT = "R"


@dataclass(frozen=True)
class PathTableau:
    genus: int
    steps: tuple[Step, ...]
    rows_s: tuple[int, ...]  # top row first

    @property
    def rows_k(self) -> tuple[int, ...]:
        return self.rows_s[1:]

    def rows(self, mode: str = "S") -> tuple[int, ...]:
        """Row lengths, top first; in K mode the top row is emptied."""
        mode = _mode(mode)
        if mode == "K" and self.rows_s:
            return (0,) + self.rows_k
        return self.rows_s

    def cells(self, mode: str = "S") -> set[tuple[int, int]]:
        """Filled cells as ``(x, y)`` with ``y = 0`` the bottom row."""
        g = self.genus
        return {
            (x, g - 1 - r)
            for r, length in enumerate(self.rows(mode))
            for x in range(length)
        }

    def path_string(self) -> str:
        return "".join(step.value for step in self.steps)


def _mode(mode: str) -> str:
    m = str(mode).upper()
    if m not in ("S", "K"):
        raise ValueError(f"mode must be 'S' or 'K', got {mode!r}")
    return m


def path_of(s: Semigroup) -> PathTableau:
    g = s.genus
    steps = tuple(Step.RIGHT if i in s else Step.UP for i in range(1, 2 * g + 1))
    rows = tuple(ell - i for i, ell in enumerate(gaps(s), start=1))
    return PathTableau(genus=g, steps=steps, rows_s=rows[::-1])


@dataclass(frozen=True)
class DiffCounts:
    only_in_first: int
    only_in_second: int
    shared: int

    @property
    def dominated(self) -> bool:
        """True when the second tableau fits inside the first."""
        return self.only_in_second == 0


def cell_diff(t: PathTableau, other: PathTableau, mode: str = "S") -> DiffCounts:
    if t.genus != other.genus:
        raise GenusMismatch(f"genus {t.genus} != {other.genus}")
    a, b = t.cells(mode), other.cells(mode)
    return DiffCounts(len(a - b), len(b - a), len(a & b))


def render_ascii(t: PathTableau, mode: str = "S", diff_against: PathTableau | None = None) -> str:
    """Grid with ``#`` for boxes, ``.`` for empty cells, top row first.

    With ``diff_against`` the boxes missing from it are drawn as ``x``.
    """
    cells = t.cells(mode)
    other = set()
    if diff_against is not None:
        if diff_against.genus != t.genus:
            raise GenusMismatch(f"genus {t.genus} != {diff_against.genus}")
        other = diff_against.cells(mode)
    g = t.genus
    lines = []
    for y in range(g - 1, -1, -1):
        row = []
        for x in range(g):
            if (x, y) not in cells:
                row.append(".")
            elif diff_against is not None and (x, y) not in other:
                row.append("x")
            else:
                row.append("#")
        lines.append("".join(row))
    return "\n".join(lines) + ("\n" if lines else "")


def render_svg(
    t: PathTableau,
    mode: str = "S",
    diff_against: PathTableau | None = None,
    title: str | None = None,
) -> str:
    """SVG 1.1 drawing of the tableau on its ``g x g`` grid.

    Boxes shared with ``diff_against`` (or every box, without a diff) are
    gray; boxes absent from ``diff_against`` are red.  Output is a pure
    function of the inputs, so it is byte-stable.

    Raises
    ------
    GenusMismatch
        If the two tableaux have different genus.
    """
    if diff_against is not None and diff_against.genus != t.genus:
        raise GenusMismatch(f"genus {t.genus} != {diff_against.genus}")
    g = t.genus
    size = max(g, 1) * CELL
    pad = 1
    cells = sorted(t.cells(mode), key=lambda c: (-c[1], c[0]))
    other = diff_against.cells(mode) if diff_against is not None else None

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size + 2 * pad}" height="{size + 2 * pad}" '
        f'viewBox="{-pad} {-pad} {size + 2 * pad} {size + 2 * pad}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(
        f'<rect class="grid" x="0" y="0" width="{size}" height="{size}" '
        f'fill="none" stroke="{GRID}" stroke-width="1"/>'
    )
    for x, y in cells:
        red = other is not None and (x, y) not in other
        top = (g - 1 - y) * CELL
        out.append(
            f'<rect class="{"red" if red else "box"}" x="{x * CELL}" y="{top}" '
            f'width="{CELL}" height="{CELL}" fill="{RED if red else GRAY}" '
            f'stroke="{GRID}" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
