"""Small canned objects used by the repro command and the tests."""

from __future__ import annotations

from .category import decompose, delta_matrices, tableau_of_decomposition
from .orders import ext_witness, move_sequence
from .posets import build_poset_gamma, build_poset_type, extremes
from .summands import B2, P0, P1, P2, Decomposition
from .tableaux import LRTableau, deviation, enumerate_lr, lr_leq_part, refinements


def four_move_pair():
    """(Y, Z) of type ((2,2,2,1), (7,6,5,4,3,2,1), (6,5,4,3,2,1)), four moves apart."""
    y = tableau_of_decomposition(Decomposition((B2(7, 3), B2(6, 2), P2(5), P0(4), P1(1))))
    z = tableau_of_decomposition(Decomposition((B2(7, 2), B2(6, 3), B2(5, 1), P1(4))))
    return y, z


def single_stratum_gamma() -> LRTableau:
    """An LR-tableau with seven refinements forming a lattice."""
    return LRTableau((4, 3, 2, 2, 1), (4, 3, 3, 3, 2, 1), (5, 4, 3, 3, 2, 1))


THREE_STRATA_TYPE = ((2, 1, 1), (4, 3, 2, 1), (3, 2, 1))


def _poset_json(poset) -> dict:
    ext = extremes(poset)
    return {
        "nodes": [
            {"index": i + 1, "arcs": [list(a) for a in pi.arcs], "poles": list(pi.poles), **lab}
            for i, (pi, lab) in enumerate(zip(poset.nodes, poset.labels))
        ],
        "hasse_edges": [[i + 1, j + 1, poset.edge_moves[(i, j)]] for i, j in poset.hasse_edges],
        "minimal": sorted(i + 1 for i in ext["minimal"]),
        "maximal": sorted(i + 1 for i in ext["maximal"]),
    }


def repro_four_moves() -> dict:
    y, z = four_move_pair()
    moves = move_sequence(y, z)
    steps, cur = [], decompose(z)
    for mv in moves:
        cur = cur - mv.removed + mv.added
        w = ext_witness(mv)
        steps.append({"move": mv.to_json(), "result": str(cur), "ext": w.to_json()})
    dh, _ = delta_matrices(y, z)
    return {
        "y": str(decompose(y)),
        "z": str(decompose(z)),
        "steps": steps,
        "deltaH": dh.to_json(),
    }


def repro_single_stratum() -> dict:
    g = single_stratum_gamma()
    refs = refinements(g)
    out = _poset_json(build_poset_gamma(g))
    out["deviations"] = [deviation(pi) for pi in refs]
    return out


def repro_three_strata() -> dict:
    lrs = enumerate_lr(*THREE_STRATA_TYPE)
    out = _poset_json(build_poset_type(*THREE_STRATA_TYPE))
    out["lr_tableaux"] = [t.to_json() for t in lrs]
    out["lr_chain"] = [lr_leq_part(a, b) for a, b in zip(lrs, lrs[1:])]
    out["strata"] = [[[list(a) for a in pi.arcs] for pi in refinements(t)] for t in lrs]
    return out


REPROS = {
    "four_moves": repro_four_moves,
    "single_stratum": repro_single_stratum,
    "three_strata": repro_three_strata,
}
