"""Structured report assembly and serialization (JSON and DOT).

The analyze report is a single hierarchical document with fixed field
names and 1-based arrays (declared by the explicit ``index_base`` field)
so golden tests can compare bytes. Dictionaries are built in the
documented key order and serialized without re-sorting.
"""
from __future__ import annotations

import json
from typing import Any

from .attractor import (
    AttractorModel,
    MinimaxReport,
    minimax_report,
)

__all__ = ["minimax_record", "analyze_record", "to_json", "dot_graph"]


def _quartet_record(report: MinimaxReport) -> dict[str, Any]:
    q = report.neighbors
    return {
        "w0_minus": q.w0_minus,
        "w0_plus": q.w0_plus,
        "w1_minus": q.w1_minus,
        "w1_plus": q.w1_plus,
    }


def minimax_record(report: MinimaxReport) -> dict[str, Any]:
    """JSON-ready record of one equilibrium's minimax analysis."""
    extrema = {
        key: {
            "closest_at_0": ex.closest_at_0,
            "closest_at_1": ex.closest_at_1,
            "farthest_at_0": ex.farthest_at_0,
            "farthest_at_1": ex.farthest_at_1,
        }
        for key, ex in report.extrema.items()
    }
    verdicts = {}
    for case in report.verdict.cases:
        record: dict[str, Any] = {
            "neighbor": case.neighbor,
            "applicable": case.applicable,
        }
        if case.applicable:
            record.update(
                {
                    "sign": case.sign,
                    "iota": case.iota,
                    "closest": case.closest,
                    "farthest_opposite": case.farthest_opposite,
                    "neighbor_is_closest": case.neighbor_is_closest,
                    "passed": case.passed,
                }
            )
        verdicts[case.slot] = record
    extended = [
        {
            "k": e.k,
            "sign": e.sign,
            "empty": e.empty,
            "passed": e.passed,
        }
        for e in report.verdict.extended
    ]
    return {
        "O": report.base,
        "n": report.n,
        "neighbors": _quartet_record(report),
        "target_sets": {key: list(v) for key, v in report.target_sets.items()},
        "minimax": extrema,
        "verdicts": verdicts,
        "extended": extended,
        "passed": report.verdict.passed,
    }


def analyze_record(model: AttractorModel) -> dict[str, Any]:
    """The full structured report for one Sturm permutation."""
    return {
        "index_base": 1,
        "n": model.n,
        "sigma": list(model.p.map),
        "sigma_inverse": list(model.p.inv),
        "morse": list(model.morse),
        "z_matrix": model.z.values.tolist(),
        "connections": sorted(model.connections),
        "minimax": [minimax_record(minimax_report(model, j)) for j in model.unstable()],
    }


def to_json(record: dict[str, Any]) -> str:
    return json.dumps(record, indent=2) + "\n"


def dot_graph(model: AttractorModel) -> str:
    """Connection digraph in DOT form, nodes in label order."""
    lines = ["digraph attractor {"]
    for j in range(1, model.n + 1):
        lines.append(f'  {j} [label="{j} i={model.morse[j - 1]}"];')
    for j, k in sorted(model.connections):
        lines.append(f"  {j} -> {k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
