"""Brute-force ground truth for small graphs.

Vertex subsets are enumerated by increasing size, lexicographically within a
size, so the first hit is a minimum cut and the returned certificate is the
same on every run.  Each size level is split into chunks by its smallest
element; chunks may be scanned concurrently and the first chunk (in order)
holding a hit wins.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any

from .certificates import CutCertificate, SuperCutCertificate, certificate_for, is_super_cut_mask
from .errors import BudgetExceeded, Disconnected, InvalidInput
from .graph import Graph, component_masks, from_mask
from .parallel import ordered_map


@dataclass(frozen=True)
class OracleBudget:
    max_cut_size: int = 8
    max_subset_count: int = 10**8

    def __post_init__(self) -> None:
        if self.max_cut_size < 1 or self.max_subset_count < 1:
            raise InvalidInput("oracle budget fields must be positive")


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the super-cut search.

    ``value`` is the exact super-connectivity when a super cut of size at most
    ``up_to`` exists.  Otherwise ``value`` is None and no super cut of size
    ``<= up_to`` exists; ``complete`` says whether that rules out every size.
    """

    value: int | None
    certificate: SuperCutCertificate | None
    up_to: int
    complete: bool
    subsets_checked: int

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_dict(self, g: Graph | None = None) -> dict[str, Any]:
        return {
            "kind": "exact" if self.exact else "no_super_cut_up_to",
            "value": self.value,
            "up_to": self.up_to,
            "complete": self.complete,
            "subsets_checked": self.subsets_checked,
            "certificate": self.certificate.to_dict(g) if self.certificate else None,
        }


def _is_cut_mask(adj: tuple[int, ...], full: int, cut: int) -> bool:
    comps = component_masks(adj, full & ~cut)
    return len(comps) >= 2


_CHECKS = {"super": is_super_cut_mask, "cut": _is_cut_mask}


def _scan_chunk(job: tuple[tuple[int, ...], int, str, int, int]) -> int | None:
    """First subset (as a mask) of the given size and leading vertex passing the check."""
    adj, full, kind, size, lead = job
    check = _CHECKS[kind]
    V = len(adj)
    head = 1 << lead
    for rest in itertools.combinations([1 << v for v in range(lead + 1, V)], size - 1):
        cut = head + sum(rest)
        if check(adj, full, cut):
            return cut
    return None


def _search(g: Graph, kind: str, sizes: range, budget: OracleBudget, workers: int) -> tuple[int | None, int]:
    V = g.vertex_count
    checked = 0
    for size in sizes:
        level = math.comb(V, size)
        if checked + level > budget.max_subset_count:
            raise BudgetExceeded(
                f"size-{size} level needs {checked + level} subsets, budget is {budget.max_subset_count}"
            )
        jobs = [(g.adj, g.full_mask, kind, size, lead) for lead in range(V - size + 1)]
        if workers <= 1:
            # Sequential scan stops at the first chunk with a hit.
            for job in jobs:
                hit = _scan_chunk(job)
                if hit is not None:
                    return hit, checked + _count_through(V, size, job[-1], hit)
        else:
            for job, hit in zip(jobs, ordered_map(_scan_chunk, jobs, workers)):
                if hit is not None:
                    return hit, checked + _count_through(V, size, job[-1], hit)
        checked += level
    return None, checked


def _count_through(V: int, size: int, lead: int, hit: int) -> int:
    """Number of subsets enumerated up to and including ``hit`` within its level."""
    before = sum(math.comb(V - 1 - i, size - 1) for i in range(lead))
    members = sorted(from_mask(hit))
    # Lexicographic rank of the remaining members among subsets of (lead, V).
    rank = 0
    prev = lead
    for i, c in enumerate(members[1:], start=1):
        for j in range(prev + 1, c):
            rank += math.comb(V - 1 - j, size - 1 - i)
        prev = c
    return before + rank + 1


def brute_force_super_connectivity(
    g: Graph, budget: OracleBudget = OracleBudget(), workers: int = 1
) -> OracleResult:
    """Smallest vertex set whose deletion leaves at least two components, none a singleton."""
    if g.vertex_count == 0 or not g.is_connected():
        raise Disconnected("super-connectivity needs a connected graph")
    # A super cut leaves at least two components of two vertices each.
    largest = g.vertex_count - 4
    sizes = range(1, min(budget.max_cut_size, largest) + 1)
    hit, checked = _search(g, "super", sizes, budget, workers)
    if hit is None:
        return OracleResult(None, None, budget.max_cut_size, budget.max_cut_size >= largest, checked)
    cert = certificate_for(g, from_mask(hit), super_=True)
    assert isinstance(cert, SuperCutCertificate)
    return OracleResult(len(cert.cut), cert, budget.max_cut_size, True, checked)


def brute_force_vertex_connectivity(
    g: Graph, budget: OracleBudget = OracleBudget(), workers: int = 1
) -> tuple[int, CutCertificate]:
    """Smallest vertex set whose deletion disconnects ``g``."""
    if g.vertex_count == 0 or not g.is_connected():
        raise Disconnected("vertex connectivity oracle needs a connected graph")
    if g.is_complete():
        raise InvalidInput("complete graphs have no vertex cut")
    sizes = range(1, min(budget.max_cut_size, g.vertex_count - 2) + 1)
    hit, _ = _search(g, "cut", sizes, budget, workers)
    if hit is None:
        raise BudgetExceeded(f"no vertex cut of size <= {budget.max_cut_size}")
    return hit.bit_count(), certificate_for(g, from_mask(hit), super_=False)
