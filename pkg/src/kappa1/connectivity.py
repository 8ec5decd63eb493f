"""Vertex connectivity and certified bounds on super-connectivity.

The super-connectivity is bracketed rather than guessed.  Any super cut
leaves two components that each contain an edge, and no edge crosses between
them.  So the smallest vertex cut separating two such "admissible" edges is a
lower bound.  Upper bounds come from explicit certificates: the neighbourhood
of an edge, and the flow cuts of the lower-bound sweep with their isolated
vertices folded into the cut.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .certificates import (
    CutCertificate,
    SuperCutCertificate,
    certificate_for,
    validate_super_cut,
)
from .errors import CannotAugment, Disconnected, NotAnEdge, NotASuperCut, TooSmall, Undecided
from .flow import FlowNetwork, MinCutAnswer
from .graph import Graph, component_masks, from_mask, iter_bits, to_mask
from .oracle import OracleBudget, brute_force_super_connectivity
from .parallel import ordered_map, split

SCHEMA = "kappa1.result/1"
AUTO_ORACLE_MAX_VERTICES = 16

Edge = tuple[int, int]


class Status(str, enum.Enum):
    EXACT = "Exact"
    INTERVAL = "Interval"
    NO_SUPER_CUT = "NoSuperCut"
    NOT_APPLICABLE = "NotApplicable"


class Strategy(str, enum.Enum):
    AUTO = "auto"
    FLOW = "flow"
    ORACLE = "oracle"


# Vertex connectivity -----------------------------------------------------------


@dataclass(frozen=True)
class VertexConnectivity:
    """``kappa`` with a cut certificate, or ``complete=True`` for complete graphs."""

    kappa: int
    certificate: CutCertificate | None
    complete: bool = False
    pair: Edge | None = None

    def to_dict(self, g: Graph | None = None) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "kind": "vertex_connectivity",
            "kappa": self.kappa,
            "complete_graph": self.complete,
            "pair": list(self.pair) if self.pair else None,
            "certificate": self.certificate.to_dict(g) if self.certificate else None,
        }


def _pair_cut_job(job: tuple[Graph, list[Edge]]) -> tuple[int, Edge, tuple[int, ...]] | None:
    g, pairs = job
    best = None
    for s, t in pairs:
        net = FlowNetwork(g, [s], [t])
        if best is None or net.value < best[0]:
            best = (net.value, (s, t), tuple(sorted(net.source_cut())))
    return best


def vertex_connectivity(g: Graph, symmetry: bool = False, workers: int = 1) -> VertexConnectivity:
    """Minimum vertex cut size over all non-adjacent vertex pairs.

    With ``symmetry`` (only sound for vertex-transitive graphs) one terminal is
    pinned to vertex 0.  Otherwise sources are scanned in id order and the scan
    stops once the source index exceeds the best cut found: a minimum cut
    misses one of the first ``kappa + 1`` vertices, and every vertex in another
    component has a larger id than the first such vertex.
    """
    V = g.vertex_count
    if V < 2:
        raise TooSmall("vertex connectivity needs at least two vertices")
    comps = component_masks(g.adj, g.full_mask)
    if len(comps) > 1:
        return VertexConnectivity(0, CutCertificate(frozenset(), tuple(map(from_mask, comps))))
    if g.is_complete():
        return VertexConnectivity(V - 1, None, complete=True)

    best: tuple[int, Edge, tuple[int, ...]] | None = None
    sources = [0] if symmetry else range(V)
    for s in sources:
        if best is not None and s > best[0]:
            break
        pairs = [(s, t) for t in range(s + 1, V) if not g.has_edge(s, t)]
        if not pairs:
            continue
        for hit in ordered_map(_pair_cut_job, [(g, c) for c in split(pairs, workers)], workers):
            if hit is not None and (best is None or hit[:2] < best[:2]):
                best = hit
    assert best is not None
    cert = certificate_for(g, best[2], super_=False)
    return VertexConnectivity(best[0], cert, pair=best[1])


# Super cuts from explicit constructions -----------------------------------------------


def constructive_super_cut(g: Graph, u: int, v: int) -> SuperCutCertificate:
    """Delete the neighbourhood of edge ``uv`` and certify the result.

    The edge ``{u, v}`` becomes a two-vertex component.  Raises
    :class:`NotASuperCut` when the rest is empty or leaves an isolated vertex.
    """
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count) or not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    cut_mask = (g.adj[u] | g.adj[v]) & ~(1 << u | 1 << v)
    report = validate_super_cut(g, iter_bits(cut_mask))
    if not report.is_cut:
        raise NotASuperCut("G - S is connected")
    if not report.is_super:
        lonely = next(min(c) for c in report.components if len(c) == 1)
        raise NotASuperCut(f"vertex {lonely} is isolated in G - S")
    if frozenset((u, v)) not in report.components:
        raise NotASuperCut(f"{{{u}, {v}}} is not a component of G - S")
    return SuperCutCertificate(from_mask(cut_mask), report.components)


def augment_cut_to_super(g: Graph, answer: MinCutAnswer) -> SuperCutCertificate:
    """Fold every isolated vertex of ``G - cut`` into the cut.

    Removing a singleton component never changes any other component, so one
    pass suffices.
    """
    cut_mask = to_mask(answer.cut)
    comps = component_masks(g.adj, g.full_mask & ~cut_mask)
    big = [c for c in comps if c & (c - 1)]
    if len(big) < 2:
        raise CannotAugment(f"only {len(big)} component(s) of size >= 2 remain")
    for c in comps:
        if not c & (c - 1):
            cut_mask |= c
    return SuperCutCertificate(from_mask(cut_mask), tuple(from_mask(c) for c in big))


# Edge-pair sweep ------------------------------------------------------------------


@dataclass(frozen=True)
class EdgePairBound:
    """Lower bound ``m`` on the super-connectivity (None means no super cut exists).

    ``witness`` is the minimising ``(e1, e2, cut)``; ``upper_witness`` is the
    smallest super cut obtained by augmenting the sweep's flow cuts.
    """

    m: int | None
    witness: tuple[Edge, Edge, MinCutAnswer] | None
    upper_witness: SuperCutCertificate | None
    pairs_examined: int
    inseparable_skipped: int


def _admissible(g: Graph, e1: Edge, e2: Edge) -> bool:
    m2 = 1 << e2[0] | 1 << e2[1]
    if m2 & (1 << e1[0] | 1 << e1[1]):
        return False
    return not (g.adj[e1[0]] | g.adj[e1[1]]) & m2


def _cut_key(cut: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(cut))


def _edge_pair_job(job: tuple[Graph, list[tuple[Edge, Edge]]]) -> tuple[Any, Any, int, int]:
    g, pairs = job
    lower = upper = None
    examined = skipped = 0
    for e1, e2 in pairs:
        if not _admissible(g, e1, e2):
            skipped += 1
            continue
        examined += 1
        net = FlowNetwork(g, e1, e2)
        src = net.source_cut()
        key = (net.value, (e1, e2), _cut_key(src))
        if lower is None or key < lower:
            lower = key
        for cut in (src, net.sink_cut()):
            cert = augment_cut_to_super(g, net.answer(cut))
            ukey = (cert.size, (e1, e2), _cut_key(cert.cut))
            if upper is None or ukey < upper:
                upper = ukey
    return lower, upper, examined, skipped


def _edge_pair_sweep(g: Graph, symmetry: bool, workers: int) -> EdgePairBound:
    edges = g.edges()
    if symmetry:
        pairs = [(edges[0], e) for e in edges[1:]] if edges else []
    else:
        pairs = [(edges[i], edges[j]) for i in range(len(edges)) for j in range(i + 1, len(edges))]
    lower = upper = None
    examined = skipped = 0
    jobs = [(g, chunk) for chunk in split(pairs, workers)]
    for lo, up, ex, sk in ordered_map(_edge_pair_job, jobs, workers):
        examined += ex
        skipped += sk
        if lo is not None and (lower is None or lo < lower):
            lower = lo
        if up is not None and (upper is None or up < upper):
            upper = up
    if lower is None:
        return EdgePairBound(None, None, None, examined, skipped)
    size, (e1, e2), cut = lower
    answer = FlowNetwork(g, e1, e2).answer(frozenset(cut))
    assert answer.size == size
    upper_cert = certificate_for(g, upper[2], super_=True)
    assert isinstance(upper_cert, SuperCutCertificate)
    return EdgePairBound(size, (e1, e2, answer), upper_cert, examined, skipped)


def edge_pair_lower_bound(g: Graph, symmetry: bool = False, workers: int = 1) -> EdgePairBound:
    """Minimum vertex cut between two admissible edges.

    Two edges are admissible when they share no vertex and no edge joins an
    endpoint of one to an endpoint of the other.  With ``symmetry`` (sound only
    for edge-transitive graphs) the first edge is pinned to the
    lexicographically first edge.
    """
    if not g.is_connected():
        raise Disconnected("edge-pair bound needs a connected graph")
    return _edge_pair_sweep(g, symmetry, workers)


# Super-connectivity ---------------------------------------------------------------


@dataclass(frozen=True)
class SuperConnectivityResult:
    """Certified interval ``[lower_bound, upper_bound]`` for the super-connectivity.

    ``None`` bounds mean infinity (no super cut of that kind is known).
    """

    status: Status
    lower_bound: int | None
    upper_bound: int | None
    upper_witness: SuperCutCertificate | None = None
    lower_witness: tuple[Edge, Edge, MinCutAnswer] | None = None
    strategy: Strategy = Strategy.FLOW
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def value(self) -> int | None:
        return self.lower_bound if self.status is Status.EXACT else None

    def to_dict(self, g: Graph | None = None) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "schema": SCHEMA,
            "kind": "super_connectivity",
            "status": self.status.value,
            "strategy": self.strategy.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "cut": None,
            "components": None,
            "witnesses": {"upper": None, "lower": None},
            "diagnostics": dict(self.diagnostics),
        }
        if self.upper_witness is not None:
            w = self.upper_witness
            doc["cut"] = sorted(w.cut)
            if g is not None and g.labels is not None:
                doc["cut_labels"] = [list(g.labels[v]) for v in sorted(w.cut)]
            doc["components"] = [sorted(c) for c in w.components]
            doc["witnesses"]["upper"] = w.to_dict(g)
        if self.lower_witness is not None:
            e1, e2, ans = self.lower_witness
            doc["witnesses"]["lower"] = {
                "edges": [list(e1), list(e2)],
                "size": ans.size,
                "cut": sorted(ans.cut),
                "source_side": sorted(ans.source_side),
            }
        return doc


def _oracle_result(g: Graph, budget: OracleBudget, workers: int) -> SuperConnectivityResult:
    res = brute_force_super_connectivity(g, budget, workers)
    diag = {"subsets_checked": res.subsets_checked, "oracle_up_to": res.up_to}
    if res.value is not None:
        return SuperConnectivityResult(
            Status.EXACT, res.value, res.value, res.certificate, None, Strategy.ORACLE, diag
        )
    if res.complete:
        return SuperConnectivityResult(Status.NO_SUPER_CUT, None, None, None, None, Strategy.ORACLE, diag)
    return SuperConnectivityResult(Status.INTERVAL, res.up_to + 1, None, None, None, Strategy.ORACLE, diag)


def super_connectivity(
    g: Graph,
    strategy: Strategy | str = Strategy.AUTO,
    budget: OracleBudget = OracleBudget(),
    assume_transitive: bool = False,
    workers: int = 1,
) -> SuperConnectivityResult:
    """Bracket the size of a minimum super vertex cut of ``g``.

    ``auto`` runs the brute-force oracle up to 16 vertices and the flow sweep
    beyond.  The sweep pins one edge only for Kneser-generated graphs or when
    ``assume_transitive`` is set.
    """
    strategy = Strategy(strategy)
    if not g.is_connected():
        raise Disconnected("super-connectivity needs a connected graph")
    if g.vertex_count < 4:
        return SuperConnectivityResult(Status.NOT_APPLICABLE, None, None, strategy=strategy)
    if strategy is Strategy.ORACLE or (
        strategy is Strategy.AUTO and g.vertex_count <= AUTO_ORACLE_MAX_VERTICES
    ):
        return _oracle_result(g, budget, workers)

    symmetry = assume_transitive or g.params is not None
    sweep = _edge_pair_sweep(g, symmetry, workers)
    diag = {
        "symmetry": symmetry,
        "pairs_examined": sweep.pairs_examined,
        "inseparable_skipped": sweep.inseparable_skipped,
    }
    if sweep.m is None:
        return SuperConnectivityResult(Status.NO_SUPER_CUT, None, None, None, None, Strategy.FLOW, diag)

    best = sweep.upper_witness
    constructive_ok = 0
    for u, v in g.edges():
        try:
            cert = constructive_super_cut(g, u, v)
        except NotASuperCut:
            continue
        constructive_ok += 1
        if best is None or (cert.size, _cut_key(cert.cut)) < (best.size, _cut_key(best.cut)):
            best = cert
    diag["constructive_edges_valid"] = constructive_ok
    assert best is not None
    status = Status.EXACT if best.size == sweep.m else Status.INTERVAL
    return SuperConnectivityResult(status, sweep.m, best.size, best, sweep.witness, Strategy.FLOW, diag)


def is_super_connected(
    g: Graph,
    strategy: Strategy | str = Strategy.AUTO,
    budget: OracleBudget = OracleBudget(),
    assume_transitive: bool = False,
    workers: int = 1,
) -> bool:
    """True iff every minimum vertex cut of ``g`` isolates a vertex."""
    if not g.is_connected():
        raise Disconnected("super-connectedness needs a connected graph")
    kappa = vertex_connectivity(g, symmetry=assume_transitive or g.params is not None, workers=workers).kappa
    res = super_connectivity(g, strategy, budget, assume_transitive, workers)
    if res.status in (Status.NO_SUPER_CUT, Status.NOT_APPLICABLE):
        return True
    if res.lower_bound is not None and res.lower_bound > kappa:
        return True
    if res.upper_bound is not None and res.upper_bound <= kappa:
        return False
    raise Undecided(f"interval [{res.lower_bound}, {res.upper_bound}] straddles kappa = {kappa}")
