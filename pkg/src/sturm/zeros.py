"""Zero numbers of equilibrium differences, and windowed local analysis.

Two independent routes compute the same quantity:

* :func:`z_matrix` fills the whole symmetric matrix by the descending
  boundary recursion (rows start from the zero boundary values forced by
  dissipativity);
* :func:`z_pair_nsl` evaluates a single pair through the nonlinear
  Sturm-Liouville identity, Morse number plus crossing count with a
  quadrant-parity correction.

Their exact agreement on every pair is a core invariant of the test
suite, which is also what pins down the quadrant-parity convention.

A :class:`MeanderWindow` captures the purely local data of a contiguous
label range: the relative axis order of its labels plus one anchoring
Morse number. That data suffices to reproduce the exact sub-block of the
full zero-number matrix, because every sign comparison in the recursion
for a window pair involves window labels only.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal, NamedTuple, Sequence

import numpy as np

from .errors import NotSturmError, WindowError
from .meander import crossing_number, is_sturm, quadrant_parity
from .perm import SturmPermutation

__all__ = [
    "ZeroMatrix",
    "z_matrix",
    "z_pair_nsl",
    "SignedZero",
    "signed_z",
    "MeanderWindow",
    "window_morse",
    "window_z",
    "matrix_text",
]

Sign = Literal["+", "-"]


@dataclass(frozen=True, eq=False)
class ZeroMatrix:
    """Symmetric matrix of zero numbers, Morse numbers on the diagonal.

    The diagonal is a display and storage convention only: z(v - v) is
    undefined and never read as a zero number. Use :meth:`pair` for
    off-diagonal access with 1-based labels.
    """

    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def pair(self, j: int, k: int) -> int:
        """Zero number z(v_k - v_j) for distinct labels j, k."""
        if j == k:
            raise ValueError("zero number of a pair requires distinct labels")
        return int(self.values[j - 1, k - 1])

    def morse(self, j: int) -> int:
        return int(self.values[j - 1, j - 1])


def _zero_matrix_values(p: SturmPermutation) -> np.ndarray:
    n = p.n
    out = np.zeros((n, n), dtype=np.int64)
    if n > 1:
        pos = np.asarray(p.inv, dtype=np.int64)
        # d[j, m] = sign(position(m+1) - position(j+1)) for 0-based j, m
        d = np.sign(pos[None, :] - pos[:, None])
        # doubled increment of row j at 1-based step m: (-1)^m (d[j,m+1]-d[j,m])
        alt = np.where(np.arange(1, n) % 2 == 0, 1, -1)  # (-1)^m for m = 1..n-1
        twostep = alt[None, :] * (d[:, 1:] - d[:, :-1])
        # z_{j,k} sums the steps m = k..n-1 (descending recursion from z_{j,n} = 0)
        suffix = np.flip(np.cumsum(np.flip(twostep, axis=1), axis=1), axis=1)
        for j in range(n - 1):
            seg = suffix[j, j + 1 : n - 1]
            assert not np.any(seg % 2), "doubled recursion must stay even"
            out[j, j + 1 : n - 1] = seg // 2
            # column k = n stays at the boundary value 0
        out = out + out.T
    out[np.diag_indices(n)] = p.morse
    return out


def z_matrix(p: SturmPermutation) -> ZeroMatrix:
    """Full zero-number matrix of a Sturm permutation.

    >>> m = z_matrix(SturmPermutation((1, 4, 5, 6, 3, 2, 7)))
    >>> m.pair(2, 3), m.pair(2, 6), m.pair(4, 5), m.pair(3, 5)
    (1, 1, 0, 1)
    """
    if not is_sturm(p):
        raise NotSturmError(f"not a Sturm permutation: {p}")
    values = _zero_matrix_values(p)
    off = ~np.eye(p.n, dtype=bool)
    assert np.all(values[off] >= 0), "zero numbers must be non-negative"
    return ZeroMatrix(values=values)


def z_pair_nsl(p: SturmPermutation, j: int, k: int) -> int:
    """Zero number of one pair via Morse number plus crossing count.

    Evaluated on (min, max) since the zero number is symmetric and the
    identity is stated for ordered pairs. Independent of :func:`z_matrix`.
    """
    if j == k:
        raise ValueError("zero number of a pair requires distinct labels")
    lo, hi = min(j, k), max(j, k)
    base = p.morse[lo - 1] + crossing_number(p, lo, hi, lo).value
    if quadrant_parity(p, lo) == "even":
        base -= 1
    return base


class SignedZero(NamedTuple):
    """Zero number with the sign of the difference at the left boundary."""

    z: int
    sign: Sign

    def __str__(self) -> str:
        return f"{self.z}{self.sign}"


def signed_z(p: SturmPermutation, base: int, w: int) -> SignedZero:
    """Signed zero number of w relative to base.

    The sign records which side of the base equilibrium w starts on at
    the left boundary, which in label terms is just the label order.

    >>> signed_z(SturmPermutation((1, 4, 5, 6, 3, 2, 7)), 3, 2)
    SignedZero(z=1, sign='-')
    """
    if base == w:
        raise ValueError("signed zero number requires distinct labels")
    return SignedZero(z=z_matrix(p).pair(base, w), sign="+" if w > base else "-")


@dataclass(frozen=True)
class MeanderWindow:
    """A contiguous run of L meander labels, seen only through their
    relative axis order and one anchoring Morse number.

    ``axis_rank[t-1]`` is the rank (1..L) of the t-th window label's axis
    position among the window labels. ``anchor_morse`` is the Morse
    number of the first window label; its parity also fixes the crossing
    direction at the anchor, which orients the whole window.
    """

    axis_rank: tuple[int, ...]
    anchor_morse: int

    def __post_init__(self):
        ranks = tuple(self.axis_rank)
        object.__setattr__(self, "axis_rank", ranks)
        L = len(ranks)
        if L < 2:
            raise ValueError("window needs at least two labels")
        if sorted(ranks) != list(range(1, L + 1)):
            raise ValueError(f"axis ranks must be a bijection of 1..{L}: {ranks}")
        if self.anchor_morse < 0:
            raise ValueError("anchor Morse number must be non-negative")

    @property
    def length(self) -> int:
        return len(self.axis_rank)

    @classmethod
    def from_axis_order(cls, order: Sequence[int], anchor_morse: int) -> "MeanderWindow":
        """Build from the window labels listed left to right along the axis.

        ``order`` lists 1-based window labels (offset within the window
        plus one) in axis order, the way a permutation segment is read.
        """
        L = len(order)
        if sorted(order) != list(range(1, L + 1)):
            raise ValueError(f"axis order must be a bijection of 1..{L}: {tuple(order)}")
        ranks = [0] * L
        for rank, label in enumerate(order, start=1):
            ranks[label - 1] = rank
        return cls(axis_rank=tuple(ranks), anchor_morse=anchor_morse)

    @classmethod
    def from_permutation(cls, p: SturmPermutation, first: int, last: int) -> "MeanderWindow":
        """Window of the labels first..last of a Sturm permutation."""
        if not 1 <= first < last <= p.n:
            raise ValueError(f"need 1 <= first < last <= {p.n}")
        positions = [p.position(j) for j in range(first, last + 1)]
        by_pos = sorted(range(len(positions)), key=positions.__getitem__)
        ranks = [0] * len(positions)
        for rank, t in enumerate(by_pos, start=1):
            ranks[t] = rank
        return cls(axis_rank=tuple(ranks), anchor_morse=p.morse[first - 1])

    @cached_property
    def _step_signs(self) -> tuple[int, ...]:
        # Orientation of step t (window label t to t+1): the anchor Morse
        # parity recovers the absolute label parity, so the alternating
        # factor of the Morse recursion is (+1 iff anchor_morse + t odd).
        return tuple(
            1 if (self.anchor_morse + t) % 2 == 1 else -1 for t in range(1, self.length)
        )


def window_morse(win: MeanderWindow) -> tuple[int, ...]:
    """Morse numbers of the window labels, grown from the anchor.

    Raises :class:`WindowError` when the recursion dips below zero, in
    which case no Sturm permutation can contain the window.

    >>> window_morse(MeanderWindow.from_axis_order([2, 1], anchor_morse=0))
    (0, 1)
    """
    ranks = win.axis_rank
    out = [win.anchor_morse]
    for t, orient in enumerate(win._step_signs, start=1):
        step = (ranks[t] > ranks[t - 1]) - (ranks[t] < ranks[t - 1])
        value = out[-1] + orient * step
        if value < 0:
            raise WindowError(
                f"window label {t + 1} gets Morse number {value}; "
                "window is inconsistent with any Sturm completion"
            )
        out.append(value)
    return tuple(out)


def _window_crossing(win: MeanderWindow, s: int, t: int) -> int:
    # Crossing count of the window segment from label s to t (s < t)
    # with the vertical line through label s, all in window indices.
    ranks = win.axis_rank
    signs = win._step_signs
    x = ranks[s - 1]
    doubled = 0
    for m in range(s, t):
        if m == s or m + 1 == s:
            continue
        d_hi = (ranks[m] > x) - (ranks[m] < x)
        d_lo = (ranks[m - 1] > x) - (ranks[m - 1] < x)
        doubled += signs[m - 1] * (d_hi - d_lo)
    assert doubled % 2 == 0
    return doubled // 2


def window_z(win: MeanderWindow) -> np.ndarray:
    """Zero numbers of all window pairs, Morse numbers on the diagonal.

    Uses the pairwise identity, which only ever compares axis positions
    of window labels; the result equals the corresponding sub-block of
    the full matrix whenever the window comes from an actual Sturm
    permutation with the correct anchor.
    """
    morse = window_morse(win)
    L = win.length
    out = np.zeros((L, L), dtype=np.int64)
    for s in range(1, L):
        odd_quadrant = morse[s] == morse[s - 1] + 1
        for t in range(s + 1, L + 1):
            value = morse[s - 1] + _window_crossing(win, s, t)
            if not odd_quadrant:
                value -= 1
            if value < 0:
                raise WindowError(
                    f"window pair ({s}, {t}) gets zero number {value}; "
                    "window is inconsistent with any Sturm completion"
                )
            out[s - 1, t - 1] = out[t - 1, s - 1] = value
    out[np.diag_indices(L)] = morse
    out.setflags(write=False)
    return out


def matrix_text(values: np.ndarray) -> str:
    """Rows of space-separated integers, one line per row."""
    return "\n".join(" ".join(str(int(v)) for v in row) for row in values)
