"""JSON metric reports and DOT export.

Rationals are written as ``"p/q"`` strings in lowest terms and infinities as
``"inf"`` so downstream tools never see float drift. Output is key-sorted and
contains no timing unless explicitly requested, so it is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .colouring import DELTA, Colour, EdgeColouring
from .factors import INF, BoundResult, Extremal, MetricsReport
from .structure import CheckResult


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def _number(x: Any) -> Any:
    if isinstance(x, float) and x == INF:
        return "inf"
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def _unnumber(x: Any) -> Any:
    return INF if x == "inf" else x


def bound_to_dict(b: BoundResult) -> dict:
    return {"name": b.name, "rhs": None if b.rhs is None else fraction_text(b.rhs), "status": b.status, "detail": b.detail}


def bound_from_dict(d: dict) -> BoundResult:
    return BoundResult(d["name"], None if d["rhs"] is None else parse_fraction(d["rhs"]), d["status"], d["detail"])


def metrics_to_dict(r: MetricsReport) -> dict:
    return {
        "n": r.n,
        "m": r.m,
        "v2_count": r.v2_count,
        "v3_count": r.v3_count,
        "s": r.s,
        "c": r.m - r.s,
        "gamma": fraction_text(r.gamma),
        "odd_girth": _number(r.odd_girth),
        "oddness": _number(r.oddness),
        "g_plus": _number(r.g_plus),
        "bounds": [bound_to_dict(b) for b in r.bounds],
        "extremal": r.extremal.value,
    }


def metrics_from_dict(d: dict) -> MetricsReport:
    return MetricsReport(
        n=d["n"],
        m=d["m"],
        v2_count=d["v2_count"],
        v3_count=d["v3_count"],
        s=d["s"],
        gamma=parse_fraction(d["gamma"]),
        odd_girth=_unnumber(d["odd_girth"]),
        oddness=_unnumber(d["oddness"]),
        g_plus=_unnumber(d["g_plus"]),
        bounds=[bound_from_dict(b) for b in d["bounds"]],
        extremal=Extremal(d["extremal"]),
    )


def witness_list(c: EdgeColouring) -> list[list]:
    return [[u, v, col.label] for (u, v), col in zip(c.graph.edges, c.colours)]


@dataclass
class Report:
    graph: str
    metrics: MetricsReport
    checks: list[CheckResult] = field(default_factory=list)
    witness: list[list] = field(default_factory=list)
    name: str | None = None
    timing: float | None = None

    def to_dict(self) -> dict:
        d = {
            "graph": self.graph,
            "name": self.name,
            "metrics": metrics_to_dict(self.metrics),
            "checks": [ch.to_dict() for ch in self.checks],
            "witness": [list(w) for w in self.witness],
        }
        if self.timing is not None:
            d["timing"] = self.timing
        return d

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(
            graph=d["graph"],
            metrics=metrics_from_dict(d["metrics"]),
            checks=[CheckResult(ch["name"], ch["status"], ch["detail"]) for ch in d["checks"]],
            witness=[list(w) for w in d["witness"]],
            name=d.get("name"),
            timing=d.get("timing"),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


DOT_COLOURS = {"alpha": "red", "beta": "blue", "gamma": "darkgreen", "delta": "black"}


def to_dot(c: EdgeColouring, name: str = "G") -> str:
    """Undirected DOT graph; delta edges drawn bold, each edge labelled with its colour name."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in c.graph.vertices():
        lines.append(f"  {v};")
    for (u, v), col in zip(c.graph.edges, c.colours):
        attrs = f'label="{col.label}", color="{DOT_COLOURS[col.label]}"'
        if col is DELTA:
            attrs += ", style=bold, penwidth=3"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def colouring_from_witness(graph, witness: list[list]) -> EdgeColouring:
    return EdgeColouring.from_mapping(graph, {(u, v): Colour.parse(x) for u, v, x in witness})
