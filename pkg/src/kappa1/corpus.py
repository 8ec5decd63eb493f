"""Small-graph corpora for cross-checking the solvers against the oracle.

Graphs are stored in graph6, one per line.  Random corpora are drawn from a
caller-supplied seed only.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Iterator

from .errors import GraphFormatError
from .graph import Graph

DATA_DIR = Path(__file__).parent / "data"
CONNECTED_LE8 = DATA_DIR / "connected_le8.g6"


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n > 62:
        raise ValueError("only graphs with at most 62 vertices are supported")
    bits = [g.has_edge(i, j) for j in range(n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[10:]
    if not line or not 63 <= ord(line[0]) <= 125:
        raise GraphFormatError(f"not a small graph6 string: {line!r}")
    n = ord(line[0]) - 63
    bits = []
    for ch in line[1:]:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphFormatError(f"bad graph6 character {ch!r}")
        bits.extend(value >> s & 1 for s in range(5, -1, -1))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if len(bits) < len(pairs):
        raise GraphFormatError(f"graph6 string too short for {n} vertices")
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def read_graph6_file(path: Path | str) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                yield from_graph6(line)


def connected_graphs_le8() -> list[Graph]:
    """Every connected graph on 1 to 8 vertices, one per isomorphism class."""
    return list(read_graph6_file(CONNECTED_LE8))


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """G(n, p) conditioned on connectivity (rejection sampling)."""
    while True:
        q = rng.uniform(0.2, 0.6) if p is None else p
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g


def random_corpus(seed: int, count: int, n_min: int, n_max: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]
