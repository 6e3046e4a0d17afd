"""Regenerate the bundled corpus of connected cubic graphs on 4..10 vertices.

Graphs are sampled from the configuration model with a fixed seed and
deduplicated up to isomorphism until the known counts (1, 2, 5, 19) are
reached. The manifest records (s, gamma) computed by the brute-force
minimum-delta oracle in tests/oracles.py, never by the library search.

    python3 tools/make_corpus.py
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "src"))

from oracles import brute_min_delta  # noqa: E402

from deltamin.graph import Graph, are_isomorphic  # noqa: E402
from deltamin.graph6 import emit_graph6  # noqa: E402

EXPECTED = {4: 1, 6: 2, 8: 5, 10: 19}
DATA = ROOT / "src" / "deltamin" / "data"


def random_cubic(n: int, rng: random.Random) -> Graph | None:
    points = [v for v in range(n) for _ in range(3)]
    rng.shuffle(points)
    pairs = set()
    for i in range(0, len(points), 2):
        u, v = points[i], points[i + 1]
        if u == v or (min(u, v), max(u, v)) in pairs:
            return None
        pairs.add((min(u, v), max(u, v)))
    g = Graph.build(n, pairs)
    return g if g.is_connected() else None


def classes(n: int, rng: random.Random, attempts: int = 200_000) -> list[Graph]:
    found: list[Graph] = []
    for _ in range(attempts):
        g = random_cubic(n, rng)
        if g is None or any(are_isomorphic(g, h) for h in found):
            continue
        found.append(g)
        if len(found) == EXPECTED[n]:
            break
    if len(found) != EXPECTED[n]:
        raise SystemExit(f"n={n}: found {len(found)} classes, expected {EXPECTED[n]}")
    return found


def main() -> None:
    rng = random.Random(20240101)
    lines, manifest = [], []
    for n in sorted(EXPECTED):
        for g in sorted(classes(n, rng), key=emit_graph6):
            s = brute_min_delta(g)
            code = emit_graph6(g)
            lines.append(code)
            manifest.append({"graph6": code, "n": n, "m": g.m, "s": s, "gamma": str(Fraction(g.m - s, g.m))})
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "cubic_4_10.g6").write_text("\n".join(lines) + "\n")
    (DATA / "cubic_4_10.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(lines)} graphs")


if __name__ == "__main__":
    main()
