"""Stallings folding for finitely generated subgroups of F_2 = <a, b>.

A subgroup graph is a finite labeled graph with a base vertex: for each
generator there is a partial injective map on vertices (the labeled
edges).  Folding a wedge of generator loops yields the core graph, which
answers membership, index and rank queries exactly.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Tuple, Union

from .words import Letter, TwistWord, free_reduce

INFINITE = math.inf

# Signed labels: lowercase = forward edge, uppercase = reverse.
_ALL_LABELS = ("a", "A", "b", "B")


def _label(letter: Letter) -> str:
    gen, sign = letter
    return gen if sign == 1 else gen.upper()


def _inverse_label(lab: str) -> str:
    return lab.swapcase()


class StallingsGraph:
    """Folded core graph of a subgroup of F_2.

    ``adj[v]`` maps signed labels to the neighbor reached from v; an edge
    and its inverse are both stored.  Vertex 0 is the base.  Vertices are
    in canonical (breadth-first, label order a, A, b, B) numbering, so two
    graphs are equal iff their edge dumps are byte-equal.
    """

    def __init__(self, adj: List[Dict[str, int]]):
        self.adj = adj

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        # each geometric edge counted once, at its forward label
        return sum(1 for nbrs in self.adj for lab in nbrs if lab.islower())

    def member(self, w: TwistWord) -> bool:
        """Whether w (freely reduced first) traces a loop at the base."""
        v = 0
        for letter in free_reduce(w):
            nxt = self.adj[v].get(_label(letter))
            if nxt is None:
                return False
            v = nxt
        return v == 0

    def is_complete(self) -> bool:
        return all(len(nbrs) == 4 for nbrs in self.adj)

    def index_and_rank(self) -> Tuple[Union[int, float], int]:
        """(index in F_2 or INFINITE, rank of the subgroup).

        The subgroup has finite index iff the graph is a full covering of
        the wedge of two circles, i.e. every vertex carries all four
        edge-ends; then the index is the vertex count.  Rank is E - V + 1.
        """
        index = self.num_vertices if self.is_complete() else INFINITE
        rank = self.num_edges - self.num_vertices + 1
        return index, rank

    def dump(self) -> str:
        """One line per edge, ``v --g--> w``, in canonical order."""
        lines = []
        for v, nbrs in enumerate(self.adj):
            for lab in ("a", "b"):
                if lab in nbrs:
                    lines.append(f"{v} --{lab}--> {nbrs[lab]}")
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StallingsGraph) and self.adj == other.adj

    def __repr__(self) -> str:
        return f"StallingsGraph({self.num_vertices} vertices, {self.num_edges} edges)"


def build_subgroup_graph(generators: Iterable[TwistWord]) -> StallingsGraph:
    """Fold the wedge of generator loops into the core graph.

    The result is independent of generator order (folding is confluent).
    An empty generator list gives the one-vertex graph (trivial subgroup).
    """
    builder = _Builder()
    for gen in generators:
        builder.add_loop(free_reduce(gen))
    builder.fold()
    builder.trim_core()
    return builder.canonical_graph()


def from_permutations(perm_a: List[int], perm_b: List[int]) -> StallingsGraph:
    """Complete folded graph on range(q) from two permutations (the a- and
    b-edge maps).  The graph must be connected from vertex 0."""
    q = len(perm_a)
    adj: List[Dict[str, int]] = [{} for _ in range(q)]
    for v in range(q):
        adj[v]["a"] = perm_a[v]
        adj[perm_a[v]]["A"] = v
        adj[v]["b"] = perm_b[v]
        adj[perm_b[v]]["B"] = v
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v].values():
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != q:
        raise ValueError("permutation graph is not connected")
    return _canonicalize(adj, base=0)


class _Builder:
    """Mutable graph under construction; vertices live in a union-find.

    During construction a vertex may have several same-labeled out-edges,
    so adjacency maps labels to target *sets*; folding merges targets
    until every set is a singleton.
    """

    def __init__(self):
        self.parent = [0]
        self.adj: List[Dict[str, set]] = [{}]

    def _new_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.adj.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def add_loop(self, w: TwistWord) -> None:
        v = 0
        letters = w.letters
        for i, letter in enumerate(letters):
            target = 0 if i == len(letters) - 1 else self._new_vertex()
            self._add_edge(v, _label(letter), target)
            v = target

    def _add_edge(self, u: int, lab: str, v: int) -> None:
        self.adj[u].setdefault(lab, set()).add(v)
        self.adj[v].setdefault(_inverse_label(lab), set()).add(u)

    def fold(self) -> None:
        """Merge targets of same-labeled edges until injective everywhere."""
        pending = list(range(len(self.adj)))
        while pending:
            v = self.find(pending.pop())
            nbrs = self.adj[v]
            for lab in list(nbrs):
                targets = {self.find(t) for t in nbrs[lab]}
                nbrs[lab] = targets
                if len(targets) > 1:
                    first, *rest = targets
                    for other in rest:
                        self._union(first, other, pending)
                    pending.append(self.find(v))
                    break

    def _union(self, u: int, v: int, pending: List[int]) -> None:
        u, v = self.find(u), self.find(v)
        if u == v:
            return
        # keep the smaller index as representative so the base survives
        if v < u:
            u, v = v, u
        self.parent[v] = u
        for lab, targets in self.adj[v].items():
            self.adj[u].setdefault(lab, set()).update(targets)
        self.adj[v] = {}
        pending.append(u)

    def _live_adj(self) -> Dict[int, Dict[str, int]]:
        live: Dict[int, Dict[str, int]] = {}
        for v in range(len(self.adj)):
            if self.find(v) == v and self.adj[v]:
                resolved = {}
                for lab, targets in self.adj[v].items():
                    finds = {self.find(t) for t in targets}
                    assert len(finds) == 1, "graph not fully folded"
                    resolved[lab] = next(iter(finds))
                live[v] = resolved
            elif self.find(v) == v:
                live[v] = {}
        return live

    def trim_core(self) -> None:
        """Remove non-base vertices of degree <= 1 until none remain."""
        live = self._live_adj()
        changed = True
        while changed:
            changed = False
            for v in list(live):
                if v != 0 and len(live[v]) <= 1:
                    for lab, w in live[v].items():
                        del live[w][_inverse_label(lab)]
                    del live[v]
                    changed = True
        self._trimmed = live

    def canonical_graph(self) -> StallingsGraph:
        live = getattr(self, "_trimmed", None)
        if live is None:
            live = self._live_adj()
        adj = [dict(live[v]) for v in sorted(live)]
        renum = {v: i for i, v in enumerate(sorted(live))}
        adj = [{lab: renum[w] for lab, w in nbrs.items()} for nbrs in adj]
        return _canonicalize(adj, base=0)


def _canonicalize(adj: List[Dict[str, int]], base: int) -> StallingsGraph:
    """Breadth-first relabeling from the base with fixed label order."""
    order = [base]
    number = {base: 0}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for lab in _ALL_LABELS:
            w = adj[v].get(lab)
            if w is not None and w not in number:
                number[w] = len(order)
                order.append(w)
    new_adj = [
        {lab: number[w] for lab, w in adj[v].items()} for v in order
    ]
    return StallingsGraph(new_adj)


def member(graph: StallingsGraph, w: TwistWord) -> bool:
    return graph.member(w)


def index_and_rank(graph: StallingsGraph) -> Tuple[Union[int, float], int]:
    return graph.index_and_rank()
