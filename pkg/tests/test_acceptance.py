"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from collections import Counter
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, KINDS, expected_delta_h, same_type_pairs, synth_pair  # noqa: E402

from arcorder.category import (  # noqa: E402
    decompose,
    delta_matrices,
    hom_dim,
    mesh_defect,
    orbit_dim_embed,
    tableau_of_decomposition,
)
from arcorder.finite_field.oracle import aut_count, hom_space_dim_ff, orbit_identity_check, scan  # noqa: E402
from arcorder.orders import leq_arc_bfs, leq_hom, move_sequence, unit_chain_exists  # noqa: E402
from arcorder.partitions import partitions_of  # noqa: E402
from arcorder.posets import build_poset_gamma, build_poset_type, extremes  # noqa: E402
from arcorder.reference import THREE_STRATA_TYPE, four_move_pair, single_stratum_gamma  # noqa: E402
from arcorder.summands import B2, P0, P1, P2, Decomposition  # noqa: E402
from arcorder.tableaux import (  # noqa: E402
    deviation,
    dominant_refinement,
    enumerate_lr,
    iter_klein_tableaux,
    lr_leq_part,
    refinements,
)

@contextmanager
def criterion(number, title, limit):
    """Print one line for the criterion, including wall time against its limit."""
    t0 = time.perf_counter()
    detail = []
    ok = False
    try:
        yield detail
        ok = True
    finally:
        dt = time.perf_counter() - t0
        in_time = limit is None or dt < limit
        status = "PASS" if ok and in_time else "FAIL"
        budget = f" (limit {limit:g} s)" if limit else ""
        extra = f" - {'; '.join(detail)}" if detail else ""
        if ok and not in_time:
            extra += " - over the time limit"
        line = f"criterion {number:2d} {status}: {title} [{dt:.2f} s{budget}]{extra}"
        ACCEPTANCE_LINES[number] = line
        print(line)
    assert in_time, f"criterion {number} took {dt:.2f} s"


def D(*items):
    return Decomposition(tuple(items))


def test_criterion_01_worked_sequence():
    with criterion(1, "four-move sequence and Hom differences", 1.0) as info:
        y, z = four_move_pair()
        chain = [
            D(B2(7, 2), B2(6, 1), B2(5, 3), P1(4)),
            D(B2(7, 1), B2(6, 2), B2(5, 3), P1(4)),
            D(B2(7, 1), B2(6, 2), P2(5), P0(4), P1(3)),
            decompose(y),
        ]
        moves = move_sequence(y, z)
        cur, seen = decompose(z), []
        for mv in moves:
            cur = cur - mv.removed + mv.added
            seen.append(cur)
        assert seen == chain
        dH, _ = delta_matrices(y, z)
        want = {(6, 2): 1, (6, 3): 1, (7, 3): 0, (5, 2): 0, (6, 1): 0, (5, 1): 0}
        ff = {k: hom_space_dim_ff(B2(*k), z, 2) - hom_space_dim_ff(B2(*k), y, 2) for k in want}
        assert {k: dH.at(*k) for k in want} == want == ff
        info.append(f"{len(moves)} moves, dH checked over F_2")


def test_criterion_02_single_stratum():
    with criterion(2, "seven refinements, deviations and Hasse diagram", 1.0) as info:
        g = single_stratum_gamma()
        refs = refinements(g)
        assert len(refs) == 7
        assert sorted(deviation(pi) for pi in refs) == [0, 1, 2, 2, 3, 4, 5]
        poset = build_poset_gamma(g)
        edges = [(i + 1, j + 1) for i, j in poset.hasse_edges]
        assert edges == [(1, 2), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 7), (6, 7)]
        ext = extremes(poset)
        assert ext == {"minimal": {0}, "maximal": {6}}
        assert poset.nodes[0] == dominant_refinement(g)
        info.append(f"{len(poset)} nodes, {len(edges)} edges")


def test_criterion_03_three_strata():
    with criterion(3, "three LR-tableaux and the full poset", 1.0) as info:
        lrs = enumerate_lr(*THREE_STRATA_TYPE)
        assert len(lrs) == 3
        assert lr_leq_part(lrs[0], lrs[1]) and lr_leq_part(lrs[1], lrs[2])
        poset = build_poset_type(*THREE_STRATA_TYPE)
        ext = extremes(poset)
        assert len(poset) == 6
        assert ext == {"minimal": {0, 1, 2}, "maximal": {5}}
        assert {poset.nodes[i] for i in ext["minimal"]} == {dominant_refinement(t) for t in lrs}
        info.append(f"{len(poset.hasse_edges)} Hasse edges")


def test_criterion_04_crossings_equal_deviation():
    with criterion(4, "deviation equals crossings, |beta| <= 10", 60.0) as info:
        n = 0
        for size in range(1, 11):
            for beta in partitions_of(size):
                for pi in iter_klein_tableaux(beta):
                    assert deviation(pi) == pi.crossings, pi
                    n += 1
        info.append(f"{n} tableaux")


def test_criterion_05_order_equivalence():
    with criterion(5, "hom order equals arc order, |beta| <= 8", 600.0) as info:
        pairs = comparable = 0
        for y, z in same_type_pairs(8):
            pairs += 1
            h = leq_hom(y, z).leq
            assert h == leq_arc_bfs(y, z), (y, z)
            if not h or y == z:
                continue
            comparable += 1
            assert not leq_hom(z, y).leq
            if y.lr == z.lr:
                assert {m.kind for m in move_sequence(y, z)} <= {"A", "B"}
        info.append(f"{pairs} ordered pairs, {comparable} strict relations")


def _indecomposables(top):
    for m in range(1, top + 1):
        yield P0(m)
        yield P1(m)
        if m >= 2:
            yield P2(m)
        for r in range(1, m - 1):
            yield B2(m, r)


def test_criterion_06_hom_table():
    with criterion(6, "Hom table against linear algebra over F_2 and F_3", 60.0) as info:
        objs = list(_indecomposables(6))
        bad, indicator = [], 0
        for p in (2, 3):
            for x in objs:
                for y in objs:
                    if hom_space_dim_ff(x, y, p) != hom_dim(x, y):
                        bad.append((p, x, y))
                    if p == 2 and x.kind == y.kind == "B2" and x.m > y.m and x.r <= y.r:
                        indicator += 1
        assert not bad, bad[:5]
        assert indicator > 0
        info.append(f"{len(objs)} indecomposables, {indicator} pairs on the indicator branch")


def test_criterion_07_orbit_counts():
    with criterion(7, "classification and orbit-stabilizer identity over F_2", 120.0) as info:
        rep = orbit_identity_check(*THREE_STRATA_TYPE, p=2)
        tabs = {pi for lr in enumerate_lr(*THREE_STRATA_TYPE) for pi in refinements(lr)}
        assert rep.points == 2**15
        assert len(rep.rows) == len(tabs) == 6
        assert all(r["count"] > 0 for r in rep.rows)
        assert sum(r["count"] for r in rep.rows) == rep.in_variety
        assert rep.group_order == aut_count((2, 1, 1), 2) * aut_count((4, 3, 2, 1), 2)
        assert rep.ok
        info.append(f"counts {[r['count'] for r in rep.rows]}")


def test_criterion_08_dimension_differences():
    with criterion(8, "orbit dimension plus crossings is constant per type", None) as info:
        types = 0
        for size in range(1, 9):
            for beta in partitions_of(size):
                by_type = {}
                for pi in iter_klein_tableaux(beta):
                    by_type.setdefault(pi.type(), set()).add(orbit_dim_embed(pi) + pi.crossings)
                assert all(len(v) == 1 for v in by_type.values())
                types += len(by_type)
        refs = refinements(single_stratum_gamma())
        dims = [orbit_dim_embed(pi) for pi in refs]
        shift = dims[-1]
        assert [d - shift for d in dims] == [5, 4, 3, 3, 2, 1, 0]
        info.append(f"{types} types; absolute values {dims[0]}..{dims[-1]} (only differences are asserted)")


def test_criterion_09_unit_chains():
    with criterion(9, "chains of single-crossing moves", 1.0) as info:
        pis = [None] + refinements(single_stratum_gamma())
        assert not unit_chain_exists(pis[5], pis[7])
        assert not unit_chain_exists(pis[4], pis[6])
        assert unit_chain_exists(*four_move_pair())
        info.append("two counterexamples confirmed, worked pair has a unit chain")


def test_criterion_10_single_moves():
    with criterion(10, "per-move Hom and multiplicity differences", 60.0) as info:
        rng = random.Random(20240611)
        tally = Counter()
        for kind in KINDS:
            for _ in range(500):
                mv, y, z = synth_pair(kind, rng, top=9)
                assert z.lr.height <= 9
                dH, dM = delta_matrices(y, z)
                B, P = expected_delta_h(mv, dH.N)
                assert dH.B == B and dH.P1 == P, (mv, y, z)
                delta = Counter(mv.removed.counts())
                delta.subtract(mv.added.counts())
                for l in range(3, dH.N + 1):
                    for t in range(1, l - 1):
                        assert dM.at(l, t) == delta[B2(l, t)]
                        assert mesh_defect(dH, ("B", l, t)) == dM.at(l, t)
                for t in range(1, dH.N + 1):
                    assert dM.p1(t) == delta[P1(t)]
                for l in range(2, dH.N + 1):
                    assert dM.pair[l] == (delta[P2(l)], delta[P0(l - 1)])
                tally[kind] += 1
        info.append(", ".join(f"{k}:{v}" for k, v in tally.items()))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
