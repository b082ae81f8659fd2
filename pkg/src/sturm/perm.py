"""Meander permutations on {1..n} and their Morse numbers.

The label convention throughout the package: a crossing carries the
*meander label* j in {1..n}, assigned along the curve, while ``sigma(k)``
is the label found at the k-th position along the horizontal axis.
Consequently ``position(j) = sigma^{-1}(j)`` is the axis position of the
crossing labeled j. All labels and positions are 1-based.

A permutation is *dissipative* when it fixes 1 and n, *Morse* when the
half-winding recursion stays non-negative, and *Sturm* when it is
additionally a meander permutation (see :mod:`sturm.meander`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotSturmError, ParseError

__all__ = [
    "SturmPermutation",
    "identity",
    "parse_permutation",
    "format_permutation",
    "inverse",
    "is_dissipative",
    "morse_indices",
    "is_morse",
    "apply_tau",
    "apply_kappa",
    "klein_orbit",
    "KleinOrbit",
]


def _sign(x: int) -> int:
    # sign(0) := 0; the Morse recursion never hits it for a bijection.
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SturmPermutation:
    """A candidate Sturm permutation: a bijection of {1..n} with n odd.

    ``map[k-1]`` is the meander label at axis position k; ``inv[j-1]`` is
    the axis position of label j. Instances are immutable and hashable,
    and every derived quantity is a pure function of ``map``, so objects
    are safe to share between threads.

    >>> p = SturmPermutation((1, 4, 5, 6, 3, 2, 7))
    >>> p.n
    7
    >>> p.inv
    (1, 6, 5, 2, 3, 4, 7)
    >>> p.morse
    (0, 1, 2, 1, 0, 1, 0)
    """

    map: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.map)
        object.__setattr__(self, "map", entries)
        n = len(entries)
        if n == 0:
            raise ValueError("empty permutation")
        if n % 2 == 0:
            raise ValueError(f"crossing count must be odd, got {n}")
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {entries}")

    @property
    def n(self) -> int:
        return len(self.map)

    @cached_property
    def inv(self) -> tuple[int, ...]:
        out = [0] * self.n
        for pos, label in enumerate(self.map, start=1):
            out[label - 1] = pos
        return tuple(out)

    @cached_property
    def morse(self) -> tuple[int, ...]:
        return _morse_recursion(self.inv)

    def sigma(self, k: int) -> int:
        """Label at axis position k (1-based)."""
        return self.map[k - 1]

    def position(self, j: int) -> int:
        """Axis position of meander label j (1-based)."""
        return self.inv[j - 1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.map)


def identity(n: int) -> SturmPermutation:
    """The identity permutation of odd size n.

    >>> identity(5).morse
    (0, 1, 0, 1, 0)
    """
    return SturmPermutation(tuple(range(1, n + 1)))


def parse_permutation(text: str, zero_based: bool = False) -> SturmPermutation:
    """Parse whitespace- or comma-separated labels into a permutation.

    The result is a candidate: it is guaranteed to be a bijection of
    {1..n} with n odd, but need not be dissipative, Morse, or meander.
    With ``zero_based`` the tokens are read as 0..n-1 and shifted up.

    >>> parse_permutation("1 4 5 6 3 2 7").map
    (1, 4, 5, 6, 3, 2, 7)
    >>> parse_permutation("0 7 2 3 6 5 4 1 8", zero_based=True).map
    (1, 8, 3, 4, 7, 6, 5, 2, 9)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty input")
    values: list[int] = []
    for idx, tok in enumerate(tokens, start=1):
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"non-integer token {tok!r}", position=idx) from None
        values.append(v + 1 if zero_based else v)
    n = len(values)
    if n % 2 == 0:
        raise ParseError(f"crossing count must be odd, got {n} entries")
    seen: dict[int, int] = {}
    for idx, v in enumerate(values, start=1):
        if not 1 <= v <= n:
            raise ParseError(f"label {v} out of range 1..{n}", position=idx)
        if v in seen:
            raise ParseError(f"duplicate label {v}, first at token {seen[v]}", position=idx)
        seen[v] = idx
    return SturmPermutation(tuple(values))


def format_permutation(p: SturmPermutation, zero_based: bool = False) -> str:
    """One-line text form; ``zero_based`` shifts the display to 0..n-1."""
    return " ".join(str(v - 1 if zero_based else v) for v in p.map)


def inverse(p: SturmPermutation) -> SturmPermutation:
    """The inverse permutation, as a permutation object.

    >>> inverse(SturmPermutation((1, 4, 5, 6, 3, 2, 7))).map
    (1, 6, 5, 2, 3, 4, 7)
    """
    return SturmPermutation(p.inv)


def is_dissipative(p: SturmPermutation) -> bool:
    """True when the permutation fixes both end labels."""
    return p.map[0] == 1 and p.map[-1] == p.n


def _morse_recursion(inv: Sequence[int]) -> tuple[int, ...]:
    n = len(inv)
    out = [0] * n
    for j in range(1, n):
        # step from label j to j+1, 1-based, with alternating orientation
        step = _sign(inv[j] - inv[j - 1])
        out[j] = out[j - 1] + (step if j % 2 == 1 else -step)
    return tuple(out)


def morse_indices(p: SturmPermutation) -> tuple[int, ...]:
    """Morse numbers of the crossings, indexed by meander label.

    Entry j counts the net clockwise half-windings of the unit tangent
    from the first crossing to crossing j; entries may be negative for
    non-Morse candidates and the caller decides what to do about it.

    >>> morse_indices(SturmPermutation((1, 4, 5, 6, 3, 2, 7)))
    (0, 1, 2, 1, 0, 1, 0)
    """
    return p.morse


def is_morse(p: SturmPermutation) -> bool:
    """True when every Morse number is non-negative."""
    return all(i >= 0 for i in p.morse)


def _require_sturm(p: SturmPermutation) -> None:
    # local import: meander.py needs perm.py types
    from .meander import is_sturm

    if not is_sturm(p):
        raise NotSturmError(f"not a Sturm permutation: {p}")


def apply_tau(p: SturmPermutation) -> SturmPermutation:
    """Swap the roles of the two boundaries (the involution x -> 1-x).

    At permutation level this is the inverse permutation: exchanging the
    boundaries exchanges the two orders whose composition defines the
    permutation. The relabeling law ``morse(tau p)[k] == morse(p)[sigma(k)]``
    is exercised by the property suite.
    """
    _require_sturm(p)
    return SturmPermutation(p.inv)


def apply_kappa(p: SturmPermutation) -> SturmPermutation:
    """Flip the dependent variable (the involution u -> -u).

    Conjugation by the order reversal rho(j) = n+1-j: flipping u reverses
    both boundary orders, so ``morse(kappa p)[j] == morse(p)[n+1-j]``.
    """
    _require_sturm(p)
    n = p.n
    return SturmPermutation(tuple(n + 1 - p.map[n - k - 1] for k in range(n)))


@dataclass(frozen=True)
class KleinOrbit:
    """Orbit of a Sturm permutation under the two trivial involutions."""

    base: SturmPermutation
    tau: SturmPermutation
    kappa: SturmPermutation
    tau_kappa: SturmPermutation

    @property
    def members(self) -> tuple[SturmPermutation, ...]:
        """Distinct orbit members, in base/tau/kappa/tau-kappa order."""
        out: list[SturmPermutation] = []
        for q in (self.base, self.tau, self.kappa, self.tau_kappa):
            if q not in out:
                out.append(q)
        return tuple(out)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def collapsed(self) -> bool:
        """True when the four images are not pairwise distinct."""
        return self.size < 4


def klein_orbit(p: SturmPermutation) -> KleinOrbit:
    """Orbit {p, tau p, kappa p, tau kappa p}, with repetitions flagged.

    >>> klein_orbit(SturmPermutation((1, 4, 5, 6, 3, 2, 7))).size
    2
    """
    t = apply_tau(p)
    k = apply_kappa(p)
    tk = apply_kappa(t)
    return KleinOrbit(base=p, tau=t, kappa=k, tau_kappa=tk)


def as_permutation(value: "SturmPermutation | Iterable[int] | str") -> SturmPermutation:
    """Coerce a permutation object, label sequence, or text line."""
    if isinstance(value, SturmPermutation):
        return value
    if isinstance(value, str):
        return parse_permutation(value)
    return SturmPermutation(tuple(value))
