"""Posets of Klein tableaux under the arc order, with Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .arcs import arc_diagram_of, enumerate_down_moves
from .category import orbit_dim_embed, orbit_dim_tableau
from .orders import leq_hom, move_sequence
from .tableaux import KleinTableau, LRTableau, enumerate_lr, refinements

__all__ = [
    "TableauPoset",
    "build_poset",
    "build_poset_gamma",
    "build_poset_type",
    "extremes",
    "export_dot",
]


@dataclass
class TableauPoset:
    """Nodes sorted canonically; relation[i][j] means nodes[i] <= nodes[j]."""

    nodes: list
    relation: list
    hasse_edges: list
    labels: list
    edge_moves: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.nodes)

    def index(self, pi: KleinTableau) -> int:
        return self.nodes.index(pi)

    def to_json(self) -> dict:
        return {
            "nodes": [dict(pi.to_json(), **lab) for pi, lab in zip(self.nodes, self.labels)],
            "hasse_edges": [
                {"from": i, "to": j, "moves": self.edge_moves.get((i, j), "")} for i, j in self.hasse_edges
            ],
        }


def _edge_label(lo: KleinTableau, hi: KleinTableau) -> str:
    target = arc_diagram_of(lo)
    for mv, delta in enumerate_down_moves(arc_diagram_of(hi)):
        if delta == target:
            return mv.name
    return "+".join(m.name for m in move_sequence(lo, hi))


def build_poset(tableaux) -> TableauPoset:
    """Poset on the given tableaux of one type, ordered by the hom order."""
    nodes = sorted(set(tableaux), key=KleinTableau.sort_key)
    k = len(nodes)
    rel = [[i == j or leq_hom(nodes[i], nodes[j]).leq for j in range(k)] for i in range(k)]
    g = nx.DiGraph()
    g.add_nodes_from(range(k))
    g.add_edges_from((i, j) for i in range(k) for j in range(k) if i != j and rel[i][j])
    edges = sorted(nx.transitive_reduction(g).edges())
    labels = [
        {
            "crossings": pi.crossings,
            "orbit_dim_tableau": orbit_dim_tableau(pi),
            "orbit_dim_embed": orbit_dim_embed(pi),
        }
        for pi in nodes
    ]
    moves = {(i, j): _edge_label(nodes[i], nodes[j]) for i, j in edges}
    return TableauPoset(nodes, rel, edges, labels, moves)


def build_poset_gamma(gamma_tab: LRTableau) -> TableauPoset:
    return build_poset(refinements(gamma_tab))


def build_poset_type(alpha, beta, gamma) -> TableauPoset:
    return build_poset([pi for lr in enumerate_lr(alpha, beta, gamma) for pi in refinements(lr)])


def extremes(poset: TableauPoset) -> dict:
    """Indices of the minimal and of the maximal nodes."""
    k = len(poset.nodes)
    rel = poset.relation
    minimal = {j for j in range(k) if not any(rel[i][j] for i in range(k) if i != j)}
    maximal = {i for i in range(k) if not any(rel[i][j] for j in range(k) if j != i)}
    return {"minimal": minimal, "maximal": maximal}


def _node_label(pi: KleinTableau, lab: dict) -> str:
    arcs = " ".join(f"({m},{r})" for m, r in pi.arcs) or "-"
    poles = " ".join(str(p) for p in pi.poles) or "-"
    return (
        f"arcs {arcs}\\npoles {poles}\\n"
        f"x={lab['crossings']} dimT={lab['orbit_dim_tableau']} dimE={lab['orbit_dim_embed']}"
    )


def export_dot(poset: TableauPoset, name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, (pi, lab) in enumerate(zip(poset.nodes, poset.labels)):
        lines.append(f'  n{i + 1} [label="P{i + 1}\\n{_node_label(pi, lab)}"];')
    for i, j in poset.hasse_edges:
        lines.append(f'  n{i + 1} -> n{j + 1} [label="{poset.edge_moves.get((i, j), "")}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
