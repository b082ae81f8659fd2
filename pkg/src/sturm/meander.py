"""Canonical arc diagrams, the meander test, and crossing numbers.

In canonical form the curve crosses the axis vertically and consecutive
crossings (by label) are joined by semicircles that alternate sides,
starting above. The permutation is a meander permutation exactly when
the arcs above the axis are pairwise non-crossing and so are the arcs
below; the test runs as a stack sweep over axis positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import NotSturmError
from .perm import SturmPermutation, is_dissipative, is_morse

__all__ = [
    "Arc",
    "MeanderDiagram",
    "build_diagram",
    "is_meander",
    "is_sturm",
    "CrossingCount",
    "crossing_number",
    "quadrant_parity",
]

Side = Literal["above", "below"]


class Arc(NamedTuple):
    """Semicircle joining the crossings labeled ``curve_step`` and ``curve_step + 1``.

    Endpoints are axis positions in curve orientation (from the lower
    label to the higher), so ``from_pos > to_pos`` happens routinely.
    """

    from_pos: int
    to_pos: int
    side: Side
    curve_step: int

    @property
    def span(self) -> tuple[int, int]:
        """Normalized (left, right) endpoint positions."""
        a, b = self.from_pos, self.to_pos
        return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MeanderDiagram:
    """The n-1 arcs of the canonical diagram of a permutation."""

    n: int
    arcs: tuple[Arc, ...]

    def side(self, side: Side) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a.side == side)


def build_diagram(p: SturmPermutation) -> MeanderDiagram:
    """Arcs of the canonical form: step j joins positions of labels j, j+1.

    Step j lies above the axis iff j is odd (the first crossing of the
    curve is upward and arcs alternate sides from there).

    >>> [(a.from_pos, a.to_pos, a.side) for a in build_diagram(SturmPermutation((1, 2, 3))).arcs]
    [(1, 2, 'above'), (2, 3, 'below')]
    """
    inv = p.inv
    arcs = tuple(
        Arc(
            from_pos=inv[j - 1],
            to_pos=inv[j],
            side="above" if j % 2 == 1 else "below",
            curve_step=j,
        )
        for j in range(1, p.n)
    )
    return MeanderDiagram(n=p.n, arcs=arcs)


def _noncrossing(arcs: tuple[Arc, ...], n: int) -> bool:
    # Stack sweep: each position hosts at most one endpoint per side, and
    # same-side semicircles are non-crossing iff spans close in LIFO order.
    opens: list[int | None] = [None] * (n + 1)
    closes: list[int | None] = [None] * (n + 1)
    for arc in arcs:
        left, right = arc.span
        opens[left] = right
        closes[right] = left
    stack: list[int] = []
    for x in range(1, n + 1):
        partner = closes[x]
        if partner is not None:
            if not stack or stack[-1] != partner:
                return False
            stack.pop()
        if opens[x] is not None:
            stack.append(x)
    return not stack


def is_meander(p: SturmPermutation) -> bool:
    """True when the canonical diagram is free of self-intersections.

    >>> is_meander(SturmPermutation((1, 3, 2, 4, 5)))
    False
    >>> is_meander(SturmPermutation((1, 4, 5, 6, 3, 2, 7)))
    True
    """
    diagram = build_diagram(p)
    return _noncrossing(diagram.side("above"), p.n) and _noncrossing(
        diagram.side("below"), p.n
    )


def is_sturm(p: SturmPermutation) -> bool:
    """Dissipative, Morse, and meander: the full validity test."""
    return is_dissipative(p) and is_morse(p) and is_meander(p)


class CrossingCount(NamedTuple):
    """Net clockwise crossings of a curve segment with a vertical line."""

    value: int
    j: int
    k: int
    ell: int


def _doubled_step(p: SturmPermutation, m: int, ell: int) -> int:
    """Twice the signed crossing of arc step m with the vertical line at ell.

    Steps whose arc ends at the crossing ell contribute nothing: touching
    the line at the crossing itself is not a transverse crossing.
    """
    if ell == m or ell == m + 1:
        return 0
    inv = p.inv
    x_ell = inv[ell - 1]
    d_hi = (inv[m] > x_ell) - (inv[m] < x_ell)
    d_lo = (inv[m - 1] > x_ell) - (inv[m - 1] < x_ell)
    diff = d_hi - d_lo
    return diff if m % 2 == 1 else -diff


def crossing_number(p: SturmPermutation, j: int, k: int, ell: int) -> CrossingCount:
    """Signed crossings of the curve segment from label j to label k
    with the vertical line through the crossing labeled ell.

    Clockwise crossings count +1, counter-clockwise -1, crossings at ell
    itself are ignored, and reversing the segment negates the count.

    >>> p = SturmPermutation((1, 4, 5, 6, 3, 2, 7))
    >>> crossing_number(p, 1, 7, 4).value
    1
    >>> crossing_number(p, 7, 1, 4).value
    -1
    """
    n = p.n
    for name, label in (("j", j), ("k", k), ("ell", ell)):
        if not 1 <= label <= n:
            raise ValueError(f"label {name}={label} out of range 1..{n}")
    lo, hi = min(j, k), max(j, k)
    doubled = sum(_doubled_step(p, m, ell) for m in range(lo, hi))
    assert doubled % 2 == 0, "crossing count must be an integer"
    value = doubled // 2
    if j > k:
        value = -value
    return CrossingCount(value=value, j=j, k=k, ell=ell)


def quadrant_parity(p: SturmPermutation, j: int) -> Literal["odd", "even"]:
    """Parity class of the arc leaving crossing j.

    "odd" when the Morse number rises across the step to j+1, "even" when
    it falls; this is the case selector of the zero-number formula.
    """
    if not 1 <= j < p.n:
        raise ValueError(f"label {j} has no outgoing arc (need 1 <= j < {p.n})")
    if not is_sturm(p):
        raise NotSturmError(f"not a Sturm permutation: {p}")
    morse = p.morse
    return "odd" if morse[j] == morse[j - 1] + 1 else "even"
