"""Immutable simple graphs, Kneser graph generation and the text formats.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
unions and intersections cost O(V / word size).  Public functions accept and
return vertex sets as ``frozenset[int]``; the ``*_mask`` helpers expose the
bitmask view for the hot loops in the flow and oracle modules.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, GraphFormatError, InvalidInput

LabelSet = tuple[int, ...]
VertexSet = frozenset[int]

DEFAULT_VERTEX_CAP = 10**6


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k > n."""
    if n < 0 or k < 0:
        raise InvalidInput(f"binomial needs n, k >= 0, got ({n}, {k})")
    return math.comb(n, k)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    ``labels`` maps vertex id to its 1-based label set when the graph is a
    Kneser graph (or was read from a labelled file); ``params`` is ``(n, k)``
    when the graph is exactly KG(n, k) in lexicographic vertex order.
    """

    vertex_count: int
    adj: tuple[int, ...]
    labels: tuple[LabelSet, ...] | None = None
    params: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if len(self.adj) != self.vertex_count:
            raise InvalidInput("adjacency table length differs from vertex_count")
        full = self.full_mask
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise InvalidInput(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise InvalidInput(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise InvalidInput(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise InvalidInput("label table length differs from vertex_count")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[LabelSet] | None = None,
    ) -> Graph:
        adj = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInput(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vertex_count, tuple(adj), tuple(labels) if labels is not None else None)

    # Views -------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, in ascending order."""
        return [(u, v) for u in range(self.vertex_count) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_complete(self) -> bool:
        return self.edge_count == self.vertex_count * (self.vertex_count - 1) // 2

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and len(component_masks(self.adj, self.full_mask)) == 1

    def label_of(self, v: int) -> LabelSet | None:
        return self.labels[v] if self.labels is not None else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count, self.adj, self.labels) == (other.vertex_count, other.adj, other.labels)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adj, self.labels))

    def __repr__(self) -> str:
        name = f"KG{self.params}" if self.params else "Graph"
        return f"<{name} V={self.vertex_count} E={self.edge_count}>"


# Components --------------------------------------------------------------


def component_masks(adj: Sequence[int], remaining: int) -> list[int]:
    """Connected components of the subgraph induced by ``remaining``, as masks.

    Components come out ordered by their smallest vertex.
    """
    comps = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``g - removed``, ordered by smallest vertex id."""
    removed_mask = to_mask(removed)
    if removed_mask & ~g.full_mask:
        raise InvalidInput("removed set contains vertices outside the graph")
    return [from_mask(c) for c in component_masks(g.adj, g.full_mask & ~removed_mask)]


# Label sets and ranking ----------------------------------------------------


def check_label_set(labels: Iterable[int], n: int, k: int | None = None) -> LabelSet:
    """Validate and return ``labels`` as a sorted tuple of distinct labels in ``[1, n]``."""
    ls = tuple(labels)
    if any(not isinstance(x, int) for x in ls):
        raise InvalidInput(f"labels must be integers: {ls!r}")
    if list(ls) != sorted(set(ls)):
        raise InvalidInput(f"labels must be distinct and ascending: {ls!r}")
    if ls and (ls[0] < 1 or ls[-1] > n):
        raise InvalidInput(f"labels must lie in [1, {n}]: {ls!r}")
    if k is not None and len(ls) != k:
        raise InvalidInput(f"expected {k} labels, got {len(ls)}")
    return ls


def rank_subset(labels: Iterable[int], n: int) -> int:
    """Position of a k-subset of ``[n]`` in lexicographic order (0-based)."""
    ls = check_label_set(labels, n)
    k = len(ls)
    rank = 0
    prev = 0
    for i, c in enumerate(ls, start=1):
        for j in range(prev + 1, c):
            rank += math.comb(n - j, k - i)
        prev = c
    return rank


def unrank_subset(index: int, n: int, k: int) -> LabelSet:
    """Inverse of :func:`rank_subset`."""
    if not 0 <= k <= n:
        raise InvalidInput(f"need 0 <= k <= n, got n={n}, k={k}")
    if not 0 <= index < math.comb(n, k):
        raise InvalidInput(f"index {index} out of range for C({n}, {k})")
    out = []
    c = 0
    for i in range(1, k + 1):
        c += 1
        while True:
            block = math.comb(n - c, k - i)
            if index < block:
                break
            index -= block
            c += 1
        out.append(c)
    return tuple(out)


def label_mask(labels: Iterable[int]) -> int:
    """Bitmask with bit ``x`` set for every label ``x``."""
    return to_mask(labels)


# Kneser graphs -------------------------------------------------------------


def kneser_graph(n: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """KG(n, k): k-subsets of ``[n]``, adjacent iff disjoint.

    Vertex ``i`` is the ``i``-th subset in lexicographic order of sorted label
    tuples, so vertex 0 is ``{1, ..., k}``.
    """
    if not (isinstance(n, int) and isinstance(k, int)) or not n >= k >= 1:
        raise InvalidInput(f"kneser_graph needs n >= k >= 1, got n={n}, k={k}")
    count = math.comb(n, k)
    if count > cap:
        raise CapExceeded(f"KG({n},{k}) has {count} vertices, cap is {cap}")
    labels = list(itertools.combinations(range(1, n + 1), k))
    adj = []
    for ls in labels:
        rest = [x for x in range(1, n + 1) if x not in ls]
        mask = 0
        for other in itertools.combinations(rest, k):
            mask |= 1 << rank_subset(other, n)
        adj.append(mask)
    return Graph(count, tuple(adj), tuple(labels), (n, k))


# Text formats ----------------------------------------------------------------

_HEADER = re.compile(r"graph\s+(\d+)\s+(\d+)")


def serialize_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    if g.labels is not None:
        lines.extend(f"l {v} {','.join(map(str, ls))}" for v, ls in enumerate(g.labels))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read the ``graph <V> <E>`` / ``e u v`` / ``l v a,b,c`` text format.

    When the labels describe every k-subset of ``[max label]`` in lexicographic
    order and adjacency is exactly label disjointness, the result carries the
    Kneser ``params`` again, so serialisation round-trips.
    """
    header: tuple[int, int] | None = None
    edges: dict[tuple[int, int], int] = {}
    labels: dict[int, LabelSet] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER.fullmatch(line)
            if not m:
                raise GraphFormatError(f"expected 'graph <V> <E>' header, got {line!r}", lineno)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        V = header[0]
        parts = line.split()
        if parts[0] == "e":
            if len(parts) != 3:
                raise GraphFormatError(f"edge line needs two endpoints: {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (0 <= u < V and 0 <= v < V):
                raise GraphFormatError(f"vertex id out of range [0, {V}) in {line!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in edges:
                raise GraphFormatError(f"duplicate edge {key} (first on line {edges[key]})", lineno)
            edges[key] = lineno
        elif parts[0] == "l":
            if len(parts) != 3:
                raise GraphFormatError(f"label line needs a vertex and labels: {line!r}", lineno)
            try:
                v = int(parts[1])
                ls = tuple(int(x) for x in parts[2].split(","))
            except ValueError:
                raise GraphFormatError(f"malformed label line {line!r}", lineno) from None
            if not 0 <= v < V:
                raise GraphFormatError(f"vertex id out of range [0, {V}) in {line!r}", lineno)
            if v in labels:
                raise GraphFormatError(f"duplicate labels for vertex {v}", lineno)
            if list(ls) != sorted(set(ls)) or ls[0] < 1:
                raise GraphFormatError(f"labels must be distinct, ascending and >= 1: {line!r}", lineno)
            labels[v] = ls
        else:
            raise GraphFormatError(f"unknown record type {parts[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'graph <V> <E>' header", 1)
    V, E = header
    if len(edges) != E:
        raise GraphFormatError(f"header declares {E} edges, found {len(edges)}")
    label_table = None
    if labels:
        if len(labels) != V:
            raise GraphFormatError(f"labels given for {len(labels)} of {V} vertices")
        label_table = tuple(labels[v] for v in range(V))
    g = Graph.from_edges(V, edges, label_table)
    params = _detect_kneser(g)
    if params is not None:
        g = Graph(g.vertex_count, g.adj, g.labels, params)
    return g


def _detect_kneser(g: Graph) -> tuple[int, int] | None:
    if not g.labels:
        return None
    k = len(g.labels[0])
    n = max(ls[-1] for ls in g.labels)
    if any(len(ls) != k for ls in g.labels) or math.comb(n, k) != g.vertex_count:
        return None
    if list(g.labels) != list(itertools.combinations(range(1, n + 1), k)):
        return None
    masks = [label_mask(ls) for ls in g.labels]
    for u in range(g.vertex_count):
        expected = to_mask(v for v in range(g.vertex_count) if not masks[u] & masks[v])
        if expected != g.adj[u]:
            return None
    return (n, k)


def _dot_name(g: Graph, v: int) -> str:
    if g.labels is None:
        return f'"{v}"'
    return '"{' + ",".join(map(str, g.labels[v])) + '}"'


def export_dot(g: Graph, name: str = "G") -> str:
    """DOT text; labelled vertices are named by their label sets, e.g. ``"{1,2}"``."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {_dot_name(g, v)};" for v in range(g.vertex_count))
    lines.extend(f"  {_dot_name(g, u)} -- {_dot_name(g, v)};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# Small named graphs used by tests and the CLI ------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))
