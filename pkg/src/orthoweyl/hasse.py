"""Minimal coset representatives as the labelled orbit graph of δ_P.

For a parabolic choice (root datum + crossed simple roots) let δ_P be the sum
of the fundamental weights of the crossed nodes.  The map ``w ↦ w^{-1}(δ_P)``
is a bijection from the minimal coset representatives W^P onto the W-orbit of
δ_P, so W^P can be generated by a breadth-first walk over that orbit:

  * node identity is the orbit weight (a tuple of integers);
  * from a node with weight x and inverse-inversion set Φ, each simple index α
    with α ∉ Φ ("do not go back") and s_α(x) ≠ x ("do not halt") contributes
    the edge x --α--> s_α(x);
  * the inversion set of the new node is {α} ∪ s_α(Φ), so it never has to be
    recomputed from scratch.

Reading edge labels along any path from the root spells a reduced word for the
node's coset representative.  The walk is deterministic: frontier nodes are
processed in word order and letters in ascending order, so node ids, stored
words and all rendered output are byte-stable across runs.

Edges produced by the walk are weak-order covers; :func:`with_bruhat_covers`
completes them to the full Bruhat cover relation by testing, for every node w
and every positive root β, whether s_β·w is again a node one length higher.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import IndexRangeError, OrthoweylError
from .rootsystem import (
    DynkinKind,
    RootDatum,
    Weight,
    positive_root_vectors,
    reflect_vector,
    simple_root_vector,
    to_epsilon,
)
from .weylgroup import Matrix, WeylWord, mat_mul, word_action_matrix

__all__ = [
    "ParabolicChoice",
    "HasseNode",
    "HasseDiagram",
    "delta_weight",
    "build_hasse",
    "length_histogram",
    "with_bruhat_covers",
    "to_dot",
    "to_json_dict",
]


@dataclass(frozen=True)
class ParabolicChoice:
    """A root datum together with the set of crossed simple-root indices."""

    datum: RootDatum
    crossed: frozenset[int]

    def __post_init__(self):
        for j in self.crossed:
            if not 1 <= j <= self.datum.rank:
                raise IndexRangeError(f"crossed index {j} outside 1..{self.datum.rank}")


@dataclass(frozen=True)
class HasseNode:
    """One minimal coset representative."""

    id: int
    word: WeylWord
    weight: tuple[int, ...]  # w^{-1}(δ_P) in ϖ-coordinates
    length: int


@dataclass(frozen=True)
class HasseDiagram:
    """Orbit graph: nodes, labelled walk edges, and (optionally) all covers."""

    parabolic: ParabolicChoice
    nodes: tuple[HasseNode, ...]
    algo_edges: tuple[tuple[int, int, int], ...]  # (from, to, simple index)
    cover_edges: tuple[tuple[int, int], ...] | None = None  # None until computed

    def node_by_weight(self, weight: tuple[int, ...]) -> HasseNode:
        for node in self.nodes:
            if node.weight == weight:
                return node
        raise KeyError(weight)

    @property
    def max_length(self) -> int:
        return max(node.length for node in self.nodes)


def delta_weight(p: ParabolicChoice) -> Weight:
    """Sum of the fundamental weights of the crossed nodes."""
    vec = [1 if i in p.crossed else 0 for i in range(1, p.datum.rank + 1)]
    return Weight.from_constants(vec)


def build_hasse(p: ParabolicChoice, max_nodes: int | None = None) -> HasseDiagram:
    """Breadth-first walk over the W-orbit of δ_P; see the module docstring."""
    datum = p.datum
    k = datum.rank
    alphas = {j: simple_root_vector(datum, j) for j in range(1, k + 1)}
    delta = tuple(1 if i in p.crossed else 0 for i in range(1, k + 1))

    words: list[WeylWord] = [()]
    weights: list[tuple[int, ...]] = [delta]
    inversions: list[frozenset[tuple[int, ...]]] = [frozenset()]
    index: dict[tuple[int, ...], int] = {delta: 0}
    edges: list[tuple[int, int, int]] = []

    frontier = [0]
    while frontier:
        next_frontier: list[int] = []
        for node_id in sorted(frontier, key=lambda i: words[i]):
            x = weights[node_id]
            inv = inversions[node_id]
            for j in range(1, k + 1):
                alpha = alphas[j]
                if alpha in inv:  # do not go back
                    continue
                if x[j - 1] == 0:  # do not halt
                    continue
                # Forward steps point away from the dominant chamber.
                assert x[j - 1] > 0
                y = reflect_vector(datum, j, x)
                child = index.get(y)
                if child is None:
                    child = len(words)
                    index[y] = child
                    words.append(words[node_id] + (j,))
                    weights.append(y)
                    inversions.append(
                        frozenset({alpha} | {reflect_vector(datum, j, r) for r in inv})
                    )
                    next_frontier.append(child)
                    if max_nodes is not None and child + 1 > max_nodes:
                        raise OrthoweylError(f"orbit exceeded max_nodes={max_nodes}")
                edges.append((node_id, child, j))
        frontier = next_frontier

    nodes = tuple(
        HasseNode(i, words[i], weights[i], len(words[i])) for i in range(len(words))
    )
    for a, b, _ in edges:
        assert nodes[b].length == nodes[a].length + 1
    return HasseDiagram(p, nodes, tuple(edges))


def length_histogram(h: HasseDiagram) -> dict[int, int]:
    """Counts N(l) of representatives per length l."""
    out: dict[int, int] = {}
    for node in h.nodes:
        out[node.length] = out.get(node.length, 0) + 1
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def _reflection_matrices(datum: RootDatum) -> tuple[Matrix, ...]:
    """ϖ-action matrices of the reflections s_β, one per positive root β."""
    from .rootsystem import _eps_positive_roots  # same enumeration order

    k = datum.rank
    eps_roots = _eps_positive_roots(datum)
    weight_roots = positive_root_vectors(datum)
    # ε-coordinates of the fundamental weights = columns of the basis change.
    eps_basis = [
        to_epsilon(datum, Weight.from_constants([1 if i == j else 0 for i in range(k)]))
        for j in range(k)
    ]
    eps_fund = [[c.constant for c in ew.coords] for ew in eps_basis]
    out: list[Matrix] = []
    for beta_eps, beta_w in zip(eps_roots, weight_roots):
        norm = sum(x * x for x in beta_eps)
        rows = []
        for i in range(k):
            row = []
            for j in range(k):
                t = 2 * sum(a * b for a, b in zip(eps_fund[j], beta_eps)) / norm
                entry = (1 if i == j else 0) - t * beta_w[i]
                assert entry.denominator == 1
                row.append(int(entry))
            rows.append(tuple(row))
        out.append(tuple(rows))
    return tuple(out)


def with_bruhat_covers(h: HasseDiagram) -> HasseDiagram:
    """Fill in the full Bruhat cover relation on W^P.

    A pair w' → w is a cover iff w = s_β w' for some positive root β and
    l(w) = l(w') + 1.  Every walk edge is such a cover (with β = w'(α)), and
    the completed relation may be strictly larger.
    """
    datum = h.parabolic.datum
    if datum.kind is DynkinKind.CUSTOM:
        raise OrthoweylError("cover completion needs positive roots (types B/D)")
    node_matrices = [word_action_matrix(datum, node.word) for node in h.nodes]
    by_matrix = {m: node.id for m, node in zip(node_matrices, h.nodes)}
    # Found from scratch, not seeded with the walk edges: that the walk edges
    # reappear here is a checked invariant, not a construction artifact.
    covers = set()
    for node, m in zip(h.nodes, node_matrices):
        for refl in _reflection_matrices(datum):
            target = by_matrix.get(mat_mul(refl, m))
            if target is not None and h.nodes[target].length == node.length + 1:
                covers.add((node.id, target))
    assert {(a, b) for a, b, _ in h.algo_edges} <= covers
    return replace(h, cover_edges=tuple(sorted(covers)))


def _weight_label(weight: tuple[int, ...]) -> str:
    return "(" + ",".join(str(x) for x in weight) + ")"


def to_dot(h: HasseDiagram, include_covers: bool = False) -> str:
    """Deterministic DOT rendering of the diagram.

    Nodes are ``n{id}`` labelled with the orbit-weight tuple; walk edges carry
    ``label="s{α}"``; with ``include_covers`` the cover-only edges (computed if
    necessary) are added dashed.
    """
    if include_covers and h.cover_edges is None:
        h = with_bruhat_covers(h)
    lines = ["digraph WP {"]
    for node in h.nodes:
        lines.append(f'  n{node.id} [label="{_weight_label(node.weight)}"];')
    for a, b, j in sorted(h.algo_edges):
        lines.append(f'  n{a} -> n{b} [label="s{j}"];')
    if include_covers:
        walk_pairs = {(a, b) for a, b, _ in h.algo_edges}
        for a, b in h.cover_edges or ():
            if (a, b) not in walk_pairs:
                lines.append(f'  n{a} -> n{b} [style="dashed"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(h: HasseDiagram) -> dict:
    """JSON-ready dict: {nodes, algo_edges, cover_edges}."""
    return {
        "nodes": [
            {
                "id": n.id,
                "word": list(n.word),
                "length": n.length,
                "weight": list(n.weight),
            }
            for n in h.nodes
        ],
        "algo_edges": [list(e) for e in sorted(h.algo_edges)],
        "cover_edges": None
        if h.cover_edges is None
        else [list(e) for e in h.cover_edges],
    }
