"""Finite simple graphs and the graph-theoretic notions used for classification.

Vertices are the integers ``0..n-1``.  Edges are pairs ``(i, j)`` with
``i < j``; wherever an edge index is needed it is the position of the edge
in ``Graph.edge_list()``, which is sorted lexicographically.  The triangle
graph uses that indexing for its vertices.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidOrder


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidOrder(f"negative order {self.n}")
        normalized = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset((int(i), int(j)) for i, j in edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adjacency), reverse=True)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Graph with vertex v renamed to mapping[v]."""
        return Graph(self.n, frozenset((mapping[i], mapping[j]) for i, j in self.edges))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; new vertex k is old vertex vertices[k]."""
        index = {v: k for k, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            frozenset((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def without_edge(self, e: tuple[int, int]) -> Graph:
        return Graph(self.n, self.edges - {e})

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edge_list()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["n"]), data.get("edges", []))

    @classmethod
    def parse(cls, text: str) -> Graph:
        """Read Graph JSON or a plain "i j" edge list (one edge per line).

        For the plain form the order is one more than the largest index; a
        line holding a single integer declares a vertex without edges.
        """
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_json(json.loads(stripped))
        edges = []
        top = -1
        for line in stripped.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [int(tok) for tok in line.split()]
            if len(parts) == 1:
                top = max(top, parts[0])
            elif len(parts) == 2:
                edges.append(tuple(parts))
                top = max(top, *parts)
            else:
                raise ValueError(f"cannot parse edge line {line!r}")
        return cls.from_edges(top + 1, edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"


# ---------------------------------------------------------------- generators


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidOrder("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    """C_n with edges i -- i+1 (mod n)."""
    if n < 3:
        raise InvalidOrder(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """P_n on n vertices, 0 -- 1 -- ... -- n-1."""
    if n < 1:
        raise InvalidOrder(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; vertices 0..m-1 form one side, m..m+n-1 the other."""
    if m < 1 or n < 1:
        raise InvalidOrder(f"complete bipartite needs m, n >= 1, got {m}, {n}")
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def hypercube(n: int) -> Graph:
    """Q_n; vertex index v is the coordinate word, bit i being coordinate i."""
    if n < 0:
        raise InvalidOrder(f"hypercube needs n >= 0, got {n}")
    return Graph.from_edges(
        1 << n, ((v, v | (1 << i)) for v in range(1 << n) for i in range(n) if not v >> i & 1)
    )


def random_graph(n: int, edge_probability: float, seed: int | None = None) -> Graph:
    if n < 1:
        raise InvalidOrder(f"random graph needs n >= 1, got {n}")
    rng = random.Random(seed)
    return Graph.from_edges(
        n, (e for e in itertools.combinations(range(n), 2) if rng.random() < edge_probability)
    )


def random_forest(n: int, seed: int | None = None, attach_probability: float = 0.8) -> Graph:
    """Each vertex after the first joins a uniformly chosen earlier vertex with the given probability."""
    if n < 1:
        raise InvalidOrder(f"random forest needs n >= 1, got {n}")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < attach_probability]
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------- structure


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * G.n
    result = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        result.append(sorted(comp))
    return result


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def complement(G: Graph) -> Graph:
    return Graph.from_edges(
        G.n, (e for e in itertools.combinations(range(G.n), 2) if e not in G.edges)
    )


def bridges(G: Graph) -> list[tuple[int, int]]:
    """Edges whose removal increases the number of components."""
    base = len(components(G))
    return [e for e in G.edge_list() if len(components(G.without_edge(e))) > base]


def is_doubly_connected(G: Graph) -> bool:
    """Connected and stays connected after deleting any single edge."""
    return is_connected(G) and not bridges(G)


def is_forest(G: Graph) -> bool:
    return G.num_edges == G.n - len(components(G))


def bipartition(G: Graph) -> list[int] | None:
    """A proper 2-colouring (colour per vertex) or None for non-bipartite graphs."""
    colour = [-1] * G.n
    for start in range(G.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.adjacency[v]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def triangles(G: Graph) -> list[tuple[int, int, int]]:
    result = []
    for i, j in G.edge_list():
        for k in sorted(G.adjacency[i] & G.adjacency[j]):
            if k > j:
                result.append((i, j, k))
    return result


def has_triangle(G: Graph) -> bool:
    return any(G.adjacency[i] & G.adjacency[j] for i, j in G.edges)


def triangle_graph(G: Graph) -> Graph:
    """G^Δ: vertex k is the k-th edge of ``G.edge_list()``; two edges are
    adjacent when some triangle of G contains both."""
    index = {e: k for k, e in enumerate(G.edge_list())}
    adj = set()
    for i, j, k in triangles(G):
        a, b, c = index[(i, j)], index[(i, k)], index[(j, k)]
        adj.update({(min(a, b), max(a, b)), (min(a, c), max(a, c)), (min(b, c), max(b, c))})
    return Graph(len(index), frozenset(adj))


def delta_components(G: Graph) -> list[list[int]]:
    """Vertex carriers of the Δ-connected components of G.

    Each component of G^Δ is a set of edges of G; its carrier is the set of
    endpoints of those edges.  An edge in no triangle is its own component.
    Vertices of G without edges belong to no Δ-component.
    """
    edges = G.edge_list()
    carriers = []
    for comp in components(triangle_graph(G)):
        carriers.append(sorted({v for k in comp for v in edges[k]}))
    return carriers


def h_graph(G: Graph) -> tuple[Graph, list[list[int]]]:
    """H(G) together with the Δ-component carriers that are its vertices.

    Two Δ-components are adjacent in H(G) when their carriers share at least
    two vertices of G.
    """
    carriers = delta_components(G)
    sets = [set(c) for c in carriers]
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(len(sets)), 2)
        if len(sets[a] & sets[b]) >= 2
    ]
    return Graph.from_edges(len(carriers), edges), carriers


def is_delta_connected(G: Graph) -> bool:
    return is_connected(G) and is_connected(triangle_graph(G))


# ---------------------------------------------------------------- isomorphism


def _refined_colours(G: Graph, rounds: int = 3) -> list[int]:
    """Colour refinement started from degrees; isomorphism-invariant labels."""
    colours = [G.degree(v) for v in range(G.n)]
    for _ in range(rounds):
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in G.adjacency[v]))) for v in range(G.n)
        ]
        palette = {sig: k for k, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[s] for s in signatures]
        if len(set(refined)) == len(set(colours)):
            colours = refined
            break
        colours = refined
    return colours


def is_isomorphic(G: Graph, H: Graph) -> list[int] | None:
    """An isomorphism G -> H as a list (vertex v of G maps to result[v]), or None.

    Plain backtracking over G's vertices in index order, candidates in
    ascending order, pruned by refined colour classes and by adjacency to
    the vertices already mapped, so the witness returned is the first one in
    lexicographic order among colour-compatible maps.
    """
    if G.n != H.n or G.num_edges != H.num_edges:
        return None
    if G.degree_sequence() != H.degree_sequence():
        return None
    # refine both graphs jointly so colour numbers are comparable
    joint = disjoint_union(G, H)
    colours = _refined_colours(joint, rounds=G.n)
    cg, ch = colours[: G.n], colours[G.n :]
    if sorted(cg) != sorted(ch):
        return None

    n = G.n
    gadj, hadj = G.adjacency, H.adjacency
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or ch[w] != cg[v]:
                continue
            ok = True
            for u in range(v):
                if (u in gadj[v]) != (mapping[u] in hadj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
        mapping[v] = -1
        return False

    return list(mapping) if extend(0) else None


def is_isomorphism(G: Graph, H: Graph, mapping: Sequence[int]) -> bool:
    """Check that mapping is a bijection carrying G's edges exactly onto H's."""
    if G.n != H.n or len(mapping) != G.n or sorted(mapping) != list(range(H.n)):
        return False
    return G.relabel(mapping).edges == H.edges


def invariant_key(G: Graph) -> tuple:
    """Cheap isomorphism invariant: order, size and refined colour histogram."""
    colours = _refined_colours(G, rounds=G.n)
    return (G.n, G.num_edges, tuple(G.degree_sequence()), tuple(sorted(colours)))


def all_graphs(n: int) -> Iterator[Graph]:
    """One representative of every isomorphism class of graphs on n vertices.

    Built by adding a vertex with every possible neighbourhood to each class
    on n-1 vertices, bucketing candidates by ``invariant_key`` and keeping
    one per isomorphism class.  Practical for n <= 7.
    """
    if n < 0:
        raise InvalidOrder(f"negative order {n}")
    if n == 0:
        yield Graph(0)
        return
    buckets: dict[tuple, list[Graph]] = {}
    for smaller in list(all_graphs(n - 1)):
        for mask in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = Graph(n, smaller.edges | frozenset(extra))
            bucket = buckets.setdefault(invariant_key(g), [])
            if all(is_isomorphic(g, h) is None for h in bucket):
                bucket.append(g)
    found = [g for bucket in buckets.values() for g in bucket]
    found.sort(key=lambda g: (g.num_edges, g.edge_list()))
    yield from found
