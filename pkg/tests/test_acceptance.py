"""Acceptance criteria. Each test records one PASS/FAIL line shown in the terminal summary."""

from __future__ import annotations

import math
import random
import time
from contextlib import contextmanager

from kappa1.certificates import validate_super_cut
from kappa1.connectivity import (
    Status,
    constructive_super_cut,
    edge_pair_lower_bound,
    super_connectivity,
    vertex_connectivity,
)
from kappa1.corpus import connected_graphs_le8, random_connected_graph, random_corpus
from kappa1.flow import disjoint_paths, min_vertex_cut
from kappa1.graph import components, kneser_graph
from kappa1.kneser import (
    TRIANGLE_TRIPLE,
    TYPE1_TRIPLE,
    TYPE2_TRIPLE,
    TripleKind,
    Verdict,
    claim_sweep,
    conjecture_value,
    conjecture_value_two_branch,
    meeting_count,
    residual_identity,
    verify_theorem,
)
from kappa1.oracle import OracleBudget, brute_force_super_connectivity

from .conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and limit is not None and elapsed > limit:
            ok = False
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.1f}s)")
    assert limit is None or elapsed <= limit, f"took {elapsed:.1f}s, limit {limit}s"


def test_criterion_1_connectivity():
    with criterion(1, "kappa(KG(n,3)) = 4, 10, 20, 35 for n = 7..10", limit=300):
        got = [vertex_connectivity(kneser_graph(n, 3), symmetry=True).kappa for n in (7, 8, 9, 10)]
        assert got == [4, 10, 20, 35] == [math.comb(n - 3, 3) for n in (7, 8, 9, 10)]


def test_criterion_2_oracle_kg73(kg73):
    with criterion(2, "oracle kappa1(KG(7,3)) = 6, none up to 5", limit=600):
        res = brute_force_super_connectivity(kg73)
        assert res.value == 6 and res.certificate.size == 6
        assert validate_super_cut(kg73, res.certificate.cut).is_super
        capped = brute_force_super_connectivity(kg73, OracleBudget(max_cut_size=5))
        assert capped.value is None and capped.up_to == 5


def test_criterion_3_petersen(petersen):
    with criterion(3, "Petersen kappa1 = 4 by oracle and flow, kappa = 3", limit=60):
        assert super_connectivity(petersen, "oracle").value == 4
        flow = super_connectivity(petersen, "flow")
        assert flow.status is Status.EXACT and flow.value == 4
        assert vertex_connectivity(petersen).kappa == 3


def test_criterion_4_constructive():
    with criterion(4, "constructive cuts of size 6, 18, 37, 64, 100 for n = 7..11"):
        sizes = []
        for n in range(7, 12):
            g = kneser_graph(n, 3)
            v = g.neighbors(0)[0]
            cert = constructive_super_cut(g, 0, v)
            report = validate_super_cut(g, cert.cut)
            assert report.is_super and 2 in report.component_sizes
            assert frozenset({0, v}) in cert.components
            assert cert.size == conjecture_value(n, 3)
            sizes.append(cert.size)
        assert sizes == [6, 18, 37, 64, 100]


def test_criterion_5_edge_pair_bounds(kg73):
    with criterion(5, "edge-pair bound 6, 18, 37 for n = 7, 8, 9; verdict Confirmed"):
        assert edge_pair_lower_bound(kg73, symmetry=True).m == 6
        assert brute_force_super_connectivity(kg73).value == 6
        for n, frozen in ((8, 18), (9, 37)):
            start = time.perf_counter()
            assert edge_pair_lower_bound(kneser_graph(n, 3), symmetry=True).m == frozen
            assert time.perf_counter() - start < 3600
        for n in (7, 8, 9):
            assert verify_theorem(n, "flow").verdict is Verdict.CONFIRMED


def test_criterion_6_claims():
    with criterion(6, "meeting counts 27, 30, 36; no violations n = 9..12; n = 7 bound 24"):
        assert [meeting_count(9, t) for t in (TRIANGLE_TRIPLE, TYPE1_TRIPLE, TYPE2_TRIPLE)] == [27, 30, 36]
        for n in range(9, 13):
            assert claim_sweep(n).violations == 0
        sweep = claim_sweep(7)
        assert sweep.sweeps[TripleKind.TYPE2].bound == 24
        assert sweep.sweeps[TripleKind.TYPE1].triples == 0


def test_criterion_7_identities():
    with criterion(7, "residual identity n = 9..60; formula forms agree n = 7..60, k = 2..4"):
        assert all(residual_identity(n)[2] for n in range(9, 61))
        for k in (2, 3, 4):
            for n in range(max(7, 2 * k + 1), 61):
                assert conjecture_value(n, k) == conjecture_value_two_branch(n, k)


def _sandwich(g) -> None:
    oracle = brute_force_super_connectivity(g, OracleBudget(max_cut_size=g.vertex_count))
    res = super_connectivity(g, "flow")
    if oracle.value is None:
        assert res.status is Status.NO_SUPER_CUT
        return
    assert res.lower_bound <= oracle.value <= res.upper_bound
    if res.status is Status.EXACT:
        assert res.value == oracle.value
    assert validate_super_cut(g, res.upper_witness.cut).is_super
    assert validate_super_cut(g, oracle.certificate.cut).is_super


def test_criterion_8_properties():
    with criterion(8, "interval contains oracle value on corpus; Menger on 50 instances"):
        corpus = connected_graphs_le8()
        assert len(corpus) == 12113
        for g in corpus:
            if g.vertex_count >= 4:
                _sandwich(g)
        for g in random_corpus(seed=2024, count=200, n_min=9, n_max=12):
            _sandwich(g)
        rng = random.Random(50)
        done = 0
        while done < 50:
            g = random_connected_graph(rng, rng.randint(6, 20))
            s, t = rng.sample(range(g.vertex_count), 2)
            if g.has_edge(s, t):
                continue
            ans = min_vertex_cut(g, {s}, {t})
            paths = disjoint_paths(g, {s}, {t})
            assert len(paths) == ans.size
            assert all(not ({s, t} <= c) for c in components(g, ans.cut))
            done += 1
