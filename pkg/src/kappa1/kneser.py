"""Closed forms and counting checks for the super-connectivity of Kneser graphs.

The super-connectivity of KG(n, k) is expected to be
``2 * (C(n-k, k) - 1) - C(n-2k, k)`` for ``n >= 2k + 1``; with the convention
``C(a, b) = 0`` for ``b > a`` the second term vanishes exactly when
``n < 3k``, so one expression covers both regimes.

For k = 3, three labelled configurations of a 3-vertex connected subgraph
matter: a triangle, and induced 2-paths whose ends share one label (type 1)
or two labels (type 2).  A vertex on the far side of a cut must share a label
with each of the three, and :func:`meeting_count` counts those vertices by
plain enumeration.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

from .connectivity import SCHEMA, Status, Strategy, SuperConnectivityResult, super_connectivity
from .errors import DomainError, DuplicateVertex, InvalidInput, LabelOutOfRange, UnclassifiedTriple
from .graph import LabelSet, binomial, kneser_graph, label_mask
from .oracle import OracleBudget

DEFAULT_VERIFY_CAP = 12
DEFAULT_SWEEP_CAP = 12

TRIANGLE_TRIPLE: tuple[LabelSet, LabelSet, LabelSet] = ((1, 2, 3), (4, 5, 6), (7, 8, 9))
TYPE1_TRIPLE: tuple[LabelSet, LabelSet, LabelSet] = ((1, 2, 3), (4, 5, 6), (1, 7, 8))
TYPE2_TRIPLE: tuple[LabelSet, LabelSet, LabelSet] = ((1, 2, 3), (4, 5, 6), (1, 2, 7))


# Formulas -------------------------------------------------------------------------


def conjecture_value(n: int, k: int) -> int:
    """Conjectured super-connectivity of KG(n, k), single-expression form."""
    if k < 1 or n < 2 * k + 1:
        raise DomainError(f"formula needs k >= 1 and n >= 2k + 1, got n={n}, k={k}")
    return 2 * (binomial(n - k, k) - 1) - binomial(n - 2 * k, k)


def conjecture_value_two_branch(n: int, k: int) -> int:
    """Same value, written with the explicit ``n < 3k`` / ``n >= 3k`` split."""
    if k < 1 or n < 2 * k + 1:
        raise DomainError(f"formula needs k >= 1 and n >= 2k + 1, got n={n}, k={k}")
    if n < 3 * k:
        return 2 * (binomial(n - k, k) - 1)
    return 2 * (binomial(n - k, k) - 1) - binomial(n - 2 * k, k)


def residual_identity(n: int) -> tuple[int, int, bool]:
    """Vertices left after deleting a cut of the conjectured size, versus ``9n - 34``."""
    if n < 9:
        raise DomainError(f"identity is stated for n >= 9, got {n}")
    lhs = binomial(n, 3) - conjecture_value(n, 3)
    rhs = 9 * n - 34
    return lhs, rhs, lhs == rhs


# Triples ------------------------------------------------------------------------------


class TripleKind(str, enum.Enum):
    TRIANGLE = "Triangle"
    TYPE1 = "Type1Path"
    TYPE2 = "Type2Path"
    OTHER = "Other"


@dataclass(frozen=True)
class TripleClass:
    kind: TripleKind
    shared: tuple[int, ...] = ()
    middle: LabelSet | None = None
    note: str = ""


def classify_triple(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> TripleClass:
    """Triangle, type-1 path, type-2 path or other, for three vertices of KG(n, 3)."""
    triple = [tuple(sorted(x)) for x in (a, b, c)]
    for ls in triple:
        if len(ls) != 3 or len(set(ls)) != 3:
            raise InvalidInput(f"expected a 3-subset, got {ls!r}")
    if len(set(triple)) < 3:
        raise DuplicateVertex(f"triple repeats a vertex: {triple!r}")
    sets = [set(x) for x in triple]
    disjoint = [[not (sets[i] & sets[j]) for j in range(3)] for i in range(3)]
    edges = sum(disjoint[i][j] for i, j in ((0, 1), (0, 2), (1, 2)))
    if edges == 3:
        return TripleClass(TripleKind.TRIANGLE)
    if edges < 2:
        return TripleClass(TripleKind.OTHER, note=f"induces {edges} edge(s)")
    mid = next(i for i in range(3) if all(disjoint[i][j] for j in range(3) if j != i))
    ends = [sets[j] for j in range(3) if j != mid]
    shared = tuple(sorted(ends[0] & ends[1]))
    kind = {1: TripleKind.TYPE1, 2: TripleKind.TYPE2}[len(shared)]
    return TripleClass(kind, shared, triple[mid])


def meeting_count(n: int, triple: Sequence[Sequence[int]]) -> int:
    """Number of 3-subsets of ``[n]`` meeting all three triple vertices, the triple excluded."""
    for ls in triple:
        if min(ls) < 1 or max(ls) > n:
            raise LabelOutOfRange(f"label set {tuple(ls)} does not fit in [1, {n}]")
    k = len(triple[0])
    masks = [label_mask(ls) for ls in triple]
    own = set(masks)
    count = 0
    for cand in itertools.combinations(range(1, n + 1), k):
        m = label_mask(cand)
        if m not in own and all(m & t for t in masks):
            count += 1
    return count


def claim_bound(cls: TripleClass | TripleKind, n: int) -> int:
    """Upper bound on the far-side vertex count for each triple class."""
    kind = cls.kind if isinstance(cls, TripleClass) else TripleKind(cls)
    if n < 7:
        raise DomainError(f"bounds are stated for n >= 7, got {n}")
    if kind is TripleKind.TRIANGLE:
        return 27
    if kind is TripleKind.TYPE1:
        return 3 * n + 3
    if kind is TripleKind.TYPE2:
        return 6 * n - 18
    raise UnclassifiedTriple("no bound for an unclassified triple")


@dataclass(frozen=True)
class ClaimReport:
    triple: tuple[LabelSet, LabelSet, LabelSet]
    cls: TripleClass
    exact_count: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.exact_count <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "triple": [list(t) for t in self.triple],
            "class": self.cls.kind.value,
            "shared": list(self.cls.shared),
            "exact_count": self.exact_count,
            "bound": self.bound,
            "holds": self.holds,
        }


@dataclass
class ClassSweep:
    """Every triple of one class with a fixed pinned vertex, and how the bound fared."""

    kind: TripleKind
    triples: int = 0
    violations: int = 0
    max_count: int | None = None
    min_count: int | None = None
    bound: int | None = None

    @property
    def attained(self) -> bool:
        return self.max_count is not None and self.max_count == self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "class": self.kind.value,
            "triples": self.triples,
            "violations": self.violations,
            "max_count": self.max_count,
            "min_count": self.min_count,
            "bound": self.bound,
            "attained": self.attained,
        }


@dataclass
class ClaimSweep:
    n: int
    reports: list[ClaimReport]
    sweeps: dict[TripleKind, ClassSweep] = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return sum(not r.holds for r in self.reports) + sum(s.violations for s in self.sweeps.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "kind": "claims",
            "n": self.n,
            "reports": [r.to_dict() for r in self.reports],
            "sweeps": {k.value: s.to_dict() for k, s in self.sweeps.items()},
            "violations": self.violations,
        }


def claim_report(n: int, triple: tuple[LabelSet, LabelSet, LabelSet]) -> ClaimReport:
    cls = classify_triple(*triple)
    return ClaimReport(triple, cls, meeting_count(n, triple), claim_bound(cls, n))


def _exhaustive_sweep(n: int) -> dict[TripleKind, ClassSweep]:
    # Relabelling preserves both class and count, so one vertex is pinned to
    # {1, 2, 3}: the first vertex of a triangle, the middle vertex of a path.
    pinned = (1, 2, 3)
    pm = label_mask(pinned)
    verts = list(itertools.combinations(range(1, n + 1), 3))
    masks = [label_mask(v) for v in verts]
    away = [i for i, m in enumerate(masks) if not m & pm]

    sweeps = {kind: ClassSweep(kind) for kind in (TripleKind.TRIANGLE, TripleKind.TYPE1, TripleKind.TYPE2)}
    for s in sweeps.values():
        s.bound = claim_bound(s.kind, n)
    for i, j in itertools.combinations(away, 2):
        # Both others avoid the pinned vertex: a triangle if they are disjoint,
        # otherwise a path through the pinned vertex.
        cls = classify_triple(pinned, verts[i], verts[j])
        s = sweeps[cls.kind]
        # Triple members never qualify: each is disjoint from a neighbour in the triple.
        count = sum(1 for m in masks if m & pm and m & masks[i] and m & masks[j])
        s.triples += 1
        s.violations += count > s.bound
        s.max_count = count if s.max_count is None else max(s.max_count, count)
        s.min_count = count if s.min_count is None else min(s.min_count, count)
    return sweeps


def claim_sweep(n: int, sweep_cap: int = DEFAULT_SWEEP_CAP) -> ClaimSweep:
    """Bounds for the three canonical triples that fit in ``[n]``, plus an
    exhaustive sweep over every triple (one vertex pinned) when ``n <= sweep_cap``.
    """
    if n < 7:
        raise DomainError(f"claims need n >= 7, got {n}")
    reports = [
        claim_report(n, t) for t in (TRIANGLE_TRIPLE, TYPE1_TRIPLE, TYPE2_TRIPLE) if max(map(max, t)) <= n
    ]
    sweeps = _exhaustive_sweep(n) if n <= sweep_cap else {}
    return ClaimSweep(n, reports, sweeps)


# End-to-end theorem check -------------------------------------------------------------


class Verdict(str, enum.Enum):
    CONFIRMED = "Confirmed"
    UPPER_CONFIRMED = "UpperConfirmed"
    INCONCLUSIVE = "Inconclusive"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class TheoremVerdict:
    n: int
    expected: int
    verdict: Verdict
    result: SuperConnectivityResult

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "kind": "verify",
            "n": self.n,
            "k": 3,
            "expected": self.expected,
            "verdict": self.verdict.value,
            "result": self.result.to_dict(kneser_graph(self.n, 3)),
        }


def judge(expected: int, res: SuperConnectivityResult) -> Verdict:
    lo, hi = res.lower_bound, res.upper_bound
    if res.status is Status.EXACT:
        return Verdict.CONFIRMED if lo == expected else Verdict.REFUTED
    if res.status in (Status.NO_SUPER_CUT, Status.NOT_APPLICABLE):
        return Verdict.REFUTED
    if (hi is not None and hi < expected) or (lo is not None and lo > expected):
        return Verdict.REFUTED
    if hi == expected:
        return Verdict.UPPER_CONFIRMED
    return Verdict.INCONCLUSIVE


def verify_theorem(
    n: int,
    strategy: Strategy | str = Strategy.AUTO,
    cap: int = DEFAULT_VERIFY_CAP,
    budget: OracleBudget = OracleBudget(),
    workers: int = 1,
) -> TheoremVerdict:
    """Compute the super-connectivity of KG(n, 3) and compare it with the closed form."""
    if n < 7:
        raise DomainError(f"KG(n, 3) formula needs n >= 7, got {n}")
    if n > cap:
        raise InvalidInput(f"n = {n} exceeds the verification cap {cap}")
    expected = conjecture_value(n, 3)
    res = super_connectivity(kneser_graph(n, 3), strategy, budget, workers=workers)
    return TheoremVerdict(n, expected, judge(expected, res), res)
