#!/usr/bin/env python3
"""Regenerate the frozen graph6 corpora under tests/data/.

Deterministic: the atlas enumerations are fixed and the 8-vertex sample
uses a hard-coded seed.  Run from the repository root:

    python3 scripts/gen_corpora.py
"""

from __future__ import annotations

import random
from pathlib import Path

import networkx as nx

from lexdom import build_graph, write_graph6

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def from_nx(nxg) -> "Graph":
    mapping = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
    return build_graph(len(mapping), [(mapping[u], mapping[v]) for u, v in nxg.edges()])


def dump(name: str, graphs) -> None:
    lines = [write_graph6(g).decode() for g in graphs]
    (DATA / name).write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(lines)} graphs")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    atlas = nx.graph_atlas_g()  # all graphs on at most 7 vertices

    connected_g = [from_nx(g) for g in atlas
                   if 2 <= g.number_of_nodes() <= 5 and nx.is_connected(g)]
    dump("connected_g_2_5.g6", connected_g)

    all_h = [from_nx(g) for g in atlas if 2 <= g.number_of_nodes() <= 4]
    dump("all_h_2_4.g6", all_h)

    trees = [from_nx(t) for n in range(2, 10) for t in nx.nonisomorphic_trees(n)]
    dump("trees_2_9.g6", trees)

    oracle = [from_nx(g) for g in atlas if 2 <= g.number_of_nodes() <= 7]
    dump("oracle_2_7.g6", oracle)

    rng = random.Random(83411)
    sample = []
    seen = set()
    while len(sample) < 60:
        p = rng.choice((0.15, 0.3, 0.5, 0.7, 0.85))
        g = from_nx(nx.gnp_random_graph(8, p, seed=rng.randrange(1 << 30)))
        key = write_graph6(g)
        if key not in seen:
            seen.add(key)
            sample.append(g)
    dump("sample_8.g6", sample)


if __name__ == "__main__":
    main()
