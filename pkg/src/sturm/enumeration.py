"""Exhaustive generation of Sturm permutations and the property harness.

Two interchangeable engines produce every Sturm permutation of a given
odd size in lexicographic order:

* the *filter* engine tests all permutations fixing the end labels,
  which is fine up to size 9 or so;
* the *backtrack* engine grows the axis sequence left to right, keeping
  one stack of open arcs per side (the non-crossing discipline makes the
  closable arc unique per side) and checking Morse numbers on the fly as
  label prefixes complete.

The property harness replays the documented invariants of every module
over the whole enumerated family and reports the first counterexample
per property, which is how the package keeps itself honest.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Literal, Optional

import numpy as np

from .attractor import (
    AttractorModel,
    boundary_neighbors,
    build_model,
    minimax,
    target_set,
    verify_minimax_theorem,
)
from .meander import crossing_number, is_meander, is_sturm
from .perm import SturmPermutation, apply_kappa, apply_tau, is_dissipative, is_morse
from .suspension import suspend, verify_suspension
from .zeros import MeanderWindow, window_z, z_matrix, z_pair_nsl

__all__ = [
    "DEFAULT_BOUND",
    "enumerate_sturm",
    "count_sturm",
    "PropertyResult",
    "HarnessReport",
    "property_harness",
]

DEFAULT_BOUND = 11

Engine = Literal["auto", "filter", "backtrack"]


def _check_size(n: int, bound: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"size must be odd and positive, got {n}")
    if n > bound:
        raise ValueError(f"size {n} exceeds the configured bound {bound}")


def _enumerate_filter(n: int) -> Iterator[SturmPermutation]:
    if n == 1:
        yield SturmPermutation((1,))
        return
    for middle in itertools.permutations(range(2, n)):
        p = SturmPermutation((1,) + middle + (n,))
        if is_morse(p) and is_meander(p):
            yield p


def _above_partner(label: int, n: int) -> Optional[int]:
    # The unique label sharing an arc above the axis with this one.
    if label % 2 == 1:
        return label + 1 if label + 1 <= n else None
    return label - 1


def _below_partner(label: int, n: int) -> Optional[int]:
    if label % 2 == 1:
        return label - 1 if label - 1 >= 1 else None
    return label + 1


def _enumerate_backtrack(n: int) -> Iterator[SturmPermutation]:
    if n == 1:
        yield SturmPermutation((1,))
        return

    placed_pos = [0] * (n + 1)  # label -> axis position, 0 when unplaced
    axis: list[int] = []
    above: list[int] = []  # labels expected to close the open arcs, LIFO
    below: list[int] = []
    morse = [0] * (n + 1)

    def morse_prefix_ok(frontier: int) -> tuple[bool, int]:
        # Extend Morse values over the longest placed label prefix.
        m = frontier
        while m < n and placed_pos[m + 1]:
            step = 1 if placed_pos[m + 1] > placed_pos[m] else -1
            value = morse[m] + (step if m % 2 == 1 else -step)
            if value < 0:
                return False, frontier
            morse[m + 1] = value
            m += 1
        return True, m

    def place(label: int, pos: int) -> Optional[tuple[bool, bool]]:
        # Returns which sides were opened, or None when the stack
        # discipline rejects the label here.
        opened_above = opened_below = False
        pa = _above_partner(label, n)
        pb = _below_partner(label, n)
        if pa is not None and placed_pos[pa]:
            if not above or above[-1] != label:
                return None
        if pb is not None and placed_pos[pb]:
            if not below or below[-1] != label:
                return None
        if pa is not None:
            if placed_pos[pa]:
                above.pop()
            else:
                above.append(pa)
                opened_above = True
        if pb is not None:
            if placed_pos[pb]:
                below.pop()
            else:
                below.append(pb)
                opened_below = True
        placed_pos[label] = pos
        axis.append(label)
        return opened_above, opened_below

    def unplace(label: int, opened: tuple[bool, bool]) -> None:
        opened_above, opened_below = opened
        axis.pop()
        placed_pos[label] = 0
        pa = _above_partner(label, n)
        pb = _below_partner(label, n)
        if pa is not None:
            if opened_above:
                above.pop()
            else:
                above.append(label)
        if pb is not None:
            if opened_below:
                below.pop()
            else:
                below.append(label)

    def candidates(pos: int) -> list[int]:
        if pos == n:
            return [n]
        out = set()
        if above and not placed_pos[above[-1]]:
            out.add(above[-1])
        if below and not placed_pos[below[-1]]:
            out.add(below[-1])
        for label in range(2, n):
            if placed_pos[label]:
                continue
            pa = _above_partner(label, n)
            pb = _below_partner(label, n)
            if (pa is None or not placed_pos[pa]) and (pb is None or not placed_pos[pb]):
                out.add(label)
        # Crossing directions alternate along the axis, so position and
        # label parity must agree; label n is reserved for the last slot.
        return sorted(
            c for c in out if c % 2 == pos % 2 and c != n and not placed_pos[c]
        )

    def search(pos: int, frontier: int) -> Iterator[tuple[int, ...]]:
        remaining = n - pos + 1
        if len(above) > remaining or len(below) > remaining:
            return
        if pos > n:
            if frontier == n:
                yield tuple(axis)
            return
        for label in [n] if pos == n else candidates(pos):
            opened = place(label, pos)
            if opened is None:
                continue
            ok, new_frontier = morse_prefix_ok(frontier)
            if ok:
                yield from search(pos + 1, new_frontier)
            unplace(label, opened)

    first = place(1, 1)
    assert first is not None
    for entry in search(2, 1):
        yield SturmPermutation(entry)
    unplace(1, first)


def enumerate_sturm(
    n: int, engine: Engine = "auto", bound: int = DEFAULT_BOUND
) -> Iterator[SturmPermutation]:
    """All Sturm permutations of odd size n, in lexicographic map order.

    >>> [p.map for p in enumerate_sturm(5)]
    [(1, 2, 3, 4, 5), (1, 4, 3, 2, 5)]
    """
    _check_size(n, bound)
    if engine == "auto":
        engine = "filter" if n <= 7 else "backtrack"
    if engine == "filter":
        yield from _enumerate_filter(n)
    elif engine == "backtrack":
        yield from _enumerate_backtrack(n)
    else:
        raise ValueError(f"unknown engine {engine!r}")


def count_sturm(n: int, engine: Engine = "auto", bound: int = DEFAULT_BOUND) -> int:
    return sum(1 for _ in enumerate_sturm(n, engine=engine, bound=bound))


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_counterexample: Optional[str] = None

    def record(self, ok: bool, context: str) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = context

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class HarnessReport:
    n_max: int
    permutations: int = 0
    counts: dict[int, int] = field(default_factory=dict)
    properties: dict[str, PropertyResult] = field(default_factory=dict)

    def prop(self, name: str) -> PropertyResult:
        if name not in self.properties:
            self.properties[name] = PropertyResult(name=name)
        return self.properties[name]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.properties.values())

    def text(self) -> str:
        lines = [
            f"checked {self.permutations} Sturm permutations up to size {self.n_max}",
            "counts: " + ", ".join(f"n={n}: {c}" for n, c in sorted(self.counts.items())),
        ]
        for name in sorted(self.properties):
            r = self.properties[name]
            status = "pass" if r.passed else "FAIL"
            line = f"  {status}  {name}  ({r.checked} checks"
            if r.failures:
                line += f", {r.failures} failures, first: {r.first_counterexample}"
            lines.append(line + ")")
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)


def _check_permutation_properties(
    report: HarnessReport, p: SturmPermutation, rng: random.Random
) -> None:
    n = p.n
    morse = p.morse
    ctx = str(p)

    r = report.prop("morse recursion starts at zero with unit steps")
    r.record(
        morse[0] == 0 and all(abs(morse[j] - morse[j - 1]) == 1 for j in range(1, n)),
        ctx,
    )
    report.prop("morse parity is opposite to label parity").record(
        all((morse[j - 1] + j) % 2 == 1 for j in range(1, n + 1)), ctx
    )
    report.prop("last Morse number is zero (empirical)").record(morse[-1] == 0, ctx)

    t, k = apply_tau(p), apply_kappa(p)
    report.prop("boundary swap and flip are commuting involutions").record(
        apply_tau(t) == p and apply_kappa(k) == p and apply_kappa(t) == apply_tau(k),
        ctx,
    )
    report.prop("boundary swap relabels Morse numbers through the permutation").record(
        all(t.morse[i] == morse[p.map[i] - 1] for i in range(n)), ctx
    )
    report.prop("flip reverses the Morse vector").record(
        k.morse == tuple(reversed(morse)), ctx
    )

    zm = z_matrix(p)
    report.prop("zero matrix is symmetric with zero boundary rows").record(
        bool(
            np.array_equal(zm.values, zm.values.T)
            and all(zm.pair(1, j) == 0 and zm.pair(j, n) == 0 for j in range(2, n))
        )
        if n > 2
        else True,
        ctx,
    )
    report.prop("adjacent zero number is the smaller Morse number").record(
        all(zm.pair(j, j + 1) == min(morse[j - 1], morse[j]) for j in range(1, n)), ctx
    )
    r = report.prop("pairwise zero formula agrees with the matrix recursion")
    r.record(
        all(
            z_pair_nsl(p, j, k) == zm.pair(j, k)
            for j in range(1, n + 1)
            for k in range(1, n + 1)
            if j != k
        ),
        ctx,
    )

    r = report.prop("crossing numbers are additive and antisymmetric")
    ok = True
    for _ in range(min(20, n * n)):
        j1, j2, j3, ell = (rng.randint(1, n) for _ in range(4))
        c12 = crossing_number(p, j1, j2, ell).value
        c23 = crossing_number(p, j2, j3, ell).value
        c13 = crossing_number(p, j1, j3, ell).value
        if c12 + c23 != c13 or crossing_number(p, j2, j1, ell).value != -c12:
            ok = False
            break
    r.record(ok, ctx)
    report.prop("arc endpoints never count as crossings").record(
        all(
            crossing_number(p, j, j + 1, j).value == 0
            and crossing_number(p, j, j + 1, j + 1).value == 0
            for j in range(1, n)
        ),
        ctx,
    )

    if n >= 3:
        r = report.prop("windows reproduce the matrix sub-block")
        first = rng.randint(1, n - 1)
        last = rng.randint(first + 1, n)
        win = MeanderWindow.from_permutation(p, first, last)
        block = zm.values[first - 1 : last, first - 1 : last]
        r.record(bool(np.array_equal(window_z(win), block)), f"{ctx} window {first}..{last}")

    model = build_model(p)
    report.prop("boundary neighbors have Morse number one off").record(
        all(
            model.morse[w - 1] in (morse[base - 1] - 1, morse[base - 1] + 1)
            for base in range(1, n + 1)
            for w in boundary_neighbors(model, base)
            if w is not None
        ),
        ctx,
    )
    ok = True
    for j in range(1, n):
        hi, lo = (j, j + 1) if morse[j - 1] > morse[j] else (j + 1, j)
        if (hi, lo) not in model.connections:
            ok = False
        a, b = p.sigma(j), p.sigma(j + 1)
        hi, lo = (a, b) if model.morse[a - 1] > model.morse[b - 1] else (b, a)
        if (hi, lo) not in model.connections:
            ok = False
    report.prop("boundary-adjacent equilibria are connected").record(ok, ctx)

    theorem_ok = True
    extended_ok = True
    for base in model.unstable():
        verdict = verify_minimax_theorem(model, base)
        theorem_ok = theorem_ok and verdict.passed
        extended_ok = extended_ok and verdict.extended_passed
    report.prop("minimax property at more-stable boundary neighbors").record(theorem_ok, ctx)
    report.prop("minimax property at every signed level (extended)").record(extended_ok, ctx)

    _check_klein_equivariance(report, p, model, ctx)


def _check_klein_equivariance(
    report: HarnessReport, p: SturmPermutation, model: AttractorModel, ctx: str
) -> None:
    n = p.n
    t = apply_tau(p)
    k = apply_kappa(p)
    model_t = build_model(t)
    model_k = build_model(k)

    # Boundary swap relabels j to its axis position; flip reverses labels.
    tau_of = {j: p.position(j) for j in range(1, n + 1)}
    kappa_of = {j: n + 1 - j for j in range(1, n + 1)}
    report.prop("connection graph is equivariant under the involutions").record(
        {(tau_of[a], tau_of[b]) for a, b in model.connections} == set(model_t.connections)
        and {(kappa_of[a], kappa_of[b]) for a, b in model.connections}
        == set(model_k.connections),
        ctx,
    )

    flip = {"+": "-", "-": "+"}
    ok = True
    for base in model.unstable():
        nb = model.morse[base - 1]
        for sign in ("+", "-"):
            # The sign class records which side of the base an equilibrium
            # starts on at x = 0. Swapping boundaries reads the sign at
            # x = 1 instead, which differs by the parity of the level.
            tau_sign = sign if (nb - 1) % 2 == 0 else flip[sign]
            members = target_set(model, base, nb - 1, sign)
            if {tau_of[w] for w in members} != target_set(
                model_t, tau_of[base], nb - 1, tau_sign
            ):
                ok = False
                break
            if {kappa_of[w] for w in members} != target_set(
                model_k, kappa_of[base], nb - 1, flip[sign]
            ):
                ok = False
                break
            if members:
                ex = minimax(model, base, nb - 1, sign)
                ex_t = minimax(model_t, tau_of[base], nb - 1, tau_sign)
                # Swapping the boundaries swaps the two distance orders.
                if (
                    tau_of[ex.closest_at_0] != ex_t.closest_at_1
                    or tau_of[ex.closest_at_1] != ex_t.closest_at_0
                    or tau_of[ex.farthest_at_0] != ex_t.farthest_at_1
                    or tau_of[ex.farthest_at_1] != ex_t.farthest_at_0
                ):
                    ok = False
                    break
                ex_k = minimax(model_k, kappa_of[base], nb - 1, flip[sign])
                if (
                    kappa_of[ex.closest_at_0] != ex_k.closest_at_0
                    or kappa_of[ex.closest_at_1] != ex_k.closest_at_1
                    or kappa_of[ex.farthest_at_0] != ex_k.farthest_at_0
                    or kappa_of[ex.farthest_at_1] != ex_k.farthest_at_1
                ):
                    ok = False
                    break
        if not ok:
            break
    report.prop("minimax data is equivariant under the involutions").record(ok, ctx)


def property_harness(
    n_max: int = 7,
    *,
    bound: int = DEFAULT_BOUND,
    seed: int = 20240,
    suspension_max: Optional[int] = None,
    progress: Optional[Callable[[str], None]] = None,
) -> HarnessReport:
    """Run every documented invariant over all Sturm permutations up to n_max.

    Randomized spot checks (crossing triples, window placement) draw from
    a seeded generator, so reports are reproducible. Suspension laws are
    checked up to ``suspension_max`` (default: n_max - 2, so the
    suspended sizes stay within the enumerated range).
    """
    _check_size(n_max, bound)
    if suspension_max is None:
        suspension_max = n_max - 2
    rng = random.Random(seed)
    report = HarnessReport(n_max=n_max)
    for n in range(1, n_max + 1, 2):
        members: list[SturmPermutation] = []
        for p in enumerate_sturm(n, bound=bound):
            members.append(p)
            report.permutations += 1
            _check_permutation_properties(report, p, rng)
            if n <= suspension_max:
                report.prop("suspension laws hold").record(
                    verify_suspension(p).passed, str(p)
                )
            if progress:
                progress(f"n={n}: checked {p}")
        report.counts[n] = len(members)

        if n <= 7:
            via_backtrack = list(enumerate_sturm(n, engine="backtrack", bound=bound))
            report.prop("both enumeration engines agree").record(
                via_backtrack == members, f"n={n}"
            )
        member_set = {q.map for q in members}
        report.prop("the family is closed under the involutions").record(
            all(
                apply_tau(q).map in member_set and apply_kappa(q).map in member_set
                for q in members
            ),
            f"n={n}",
        )
        if n + 2 <= n_max:
            larger = {q.map for q in enumerate_sturm(n + 2, bound=bound)}
            report.prop("suspensions reappear two sizes up").record(
                all(suspend(q).suspended.map in larger for q in members), f"n={n}"
            )
    return report
