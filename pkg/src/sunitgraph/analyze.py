"""Representability verdicts for a graph and a prime set, plus a brute-force oracle.

``classify`` only reports conclusions whose hypotheses it has checked on
the graph itself.  ``brute_force_search`` and ``census_equivalence_classes``
scan integer windows and are meant for small instances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .diophantine import bounds, has_exceptional_units
from .graphcore import (
    Graph,
    bipartition,
    complement,
    components,
    h_graph,
    has_triangle,
    is_bipartite,
    is_connected,
    is_delta_connected,
    is_doubly_connected,
    is_forest,
)
from .sintring import PrimeSet, format_rational, is_s_unit_int
from .synthesis import hypercube_embed
from .unitgraph import Representation, canonical_values


class Status(str, enum.Enum):
    REPRESENTABLE_ALL_S = "REPRESENTABLE_ALL_S"
    INFINITELY_REPRESENTABLE = "INFINITELY_REPRESENTABLE"
    FINITELY_REPRESENTABLE = "FINITELY_REPRESENTABLE"
    NOT_REPRESENTABLE = "NOT_REPRESENTABLE"
    CONDITIONAL = "CONDITIONAL"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    """Outcome of ``classify``.

    ``infinitely`` accompanies REPRESENTABLE_ALL_S when G is also infinitely
    representable with every S.  FINITELY_REPRESENTABLE means at most
    finitely many classes, possibly none.
    """

    status: Status
    citations: tuple[str, ...] = ()
    notes: str = ""
    infinitely: bool = False

    def __post_init__(self) -> None:
        if self.status is not Status.UNKNOWN and not self.citations:
            raise ValueError(f"{self.status.value} verdict needs a citation")

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "citations": list(self.citations),
            "notes": self.notes,
            "infinitely": self.infinitely,
        }


# citation tags
FOREST = "forest-construction"
CUBICAL = "cubical-iff-every-S"
EVERY_S_INFINITE = "every-S-implies-infinite"
NO_EXCEPTIONAL_UNITS = "no-exceptional-units"
ODD_CYCLE_PARITY = "odd-cycle-parity"
DELTA_CONNECTED = "delta-connected-finite"
H_GRAPH_CONNECTED = "h-graph-connected-finite"
SMALL_DOUBLY_CONNECTED = "cycles-and-bipartite-finite"
COMPLEMENT_SPLIT = "split-complement-bound"
BIPARTITE_SIZE = "bipartite-size-bound"
BRIDGE = "bridge-implies-infinite"


def complement_is_split(component_orders: list[int]) -> bool:
    """Complement has at least three components, or two of order >= 2."""
    if len(component_orders) >= 3:
        return True
    return len(component_orders) == 2 and min(component_orders) >= 2


def _complete_bipartite_sides(G: Graph) -> tuple[int, int] | None:
    colours = bipartition(G) if is_connected(G) else None
    if colours is None:
        return None
    m = colours.count(0)
    n = G.n - m
    return (m, n) if G.num_edges == m * n else None


def obstruction_verdict(
    order: int, complement_orders: list[int], s: int, bipartite_sides: tuple[int, int] | None = None
) -> Verdict | None:
    """Size-based non-representability, evaluated with exact integers.

    Separated from ``classify`` so that the branch can be exercised with
    fabricated orders; no graph that fits in memory comes near the bounds.
    """
    threshold = bounds("not_representable_threshold", s=s)
    if complement_is_split(complement_orders) and order > threshold:
        return Verdict(
            Status.NOT_REPRESENTABLE,
            (COMPLEMENT_SPLIT,),
            f"order {order} exceeds 3*2^(16(|S|+1)) = {threshold} with a split complement; "
            "the threshold is applied to the given S only",
        )
    if bipartite_sides is not None:
        m, n = bipartite_sides
        threshold = bounds("complement_components_threshold", s=s)
        if m > 1 and n > 1 and m + n > threshold:
            return Verdict(
                Status.NOT_REPRESENTABLE,
                (BIPARTITE_SIZE,),
                f"K_{{{m},{n}}} has m+n > 3*2^(16(|S|+2)) = {threshold}",
            )
    return None


def _small_doubly_connected_finite(G: Graph) -> str | None:
    """C_3, C_5 and K_{m,n} with m > n > 1 or m = n >= 3."""
    if G.n in (3, 5) and G.num_edges == G.n and is_connected(G) and all(
        G.degree(v) == 2 for v in range(G.n)
    ):
        return f"C_{G.n}"
    sides = _complete_bipartite_sides(G)
    if sides is not None:
        m, n = max(sides), min(sides)
        if (m > n > 1) or (m == n >= 3):
            return f"K_{{{m},{n}}}"
    return None


def classify(G: Graph, S: PrimeSet, max_dimension: int = 10) -> Verdict:
    """Strongest verdict the checked criteria give for G and S.

    Constructive verdicts come first, then obstructions, then finiteness,
    then the bridge criterion.  A graph that is not cubical up to
    ``max_dimension`` may still be cubical in a higher dimension.
    """
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    n = G.n
    infinite = n >= 3

    if is_forest(G):
        cites = (FOREST, EVERY_S_INFINITE) if infinite else (FOREST,)
        return Verdict(Status.REPRESENTABLE_ALL_S, cites, "forests are representable with every S", infinite)
    if hypercube_embed(G, max_dimension) is not None:
        cites = (CUBICAL, EVERY_S_INFINITE) if infinite else (CUBICAL,)
        return Verdict(Status.REPRESENTABLE_ALL_S, cites, "induced subgraph of a hypercube", infinite)

    if not has_exceptional_units(S):
        if has_triangle(G):
            return Verdict(
                Status.NOT_REPRESENTABLE,
                (NO_EXCEPTIONAL_UNITS,),
                "a triangle needs an S-unit u with 1-u an S-unit, which requires 2 in S",
            )
        if not is_bipartite(G):
            return Verdict(
                Status.NOT_REPRESENTABLE,
                (ODD_CYCLE_PARITY,),
                "without 2 in S every S-unit is 1 mod 2, so no odd cycle of units sums to 0",
            )

    orders = [len(c) for c in components(complement(G))]
    sides = _complete_bipartite_sides(G)
    blocked = obstruction_verdict(n, orders, len(S), sides)
    if blocked is not None:
        return blocked

    finite_note = "at most finitely many equivalence classes, possibly none"
    if n >= 3 and is_connected(G):
        if is_delta_connected(G):
            return Verdict(Status.FINITELY_REPRESENTABLE, (DELTA_CONNECTED,), finite_note)
        H, _ = h_graph(G)
        if is_connected(H):
            return Verdict(Status.FINITELY_REPRESENTABLE, (H_GRAPH_CONNECTED,), finite_note)
    small = _small_doubly_connected_finite(G)
    if small is not None:
        return Verdict(Status.FINITELY_REPRESENTABLE, (SMALL_DOUBLY_CONNECTED,), f"{small}: {finite_note}")

    if n >= 3 and not is_doubly_connected(G):
        return Verdict(
            Status.CONDITIONAL,
            (BRIDGE,),
            "at most simply connected: if representable with S then infinitely representable with S",
        )
    return Verdict(Status.UNKNOWN, (), "no criterion applies")


def _unit_table(S: PrimeSet, limit: int) -> list[bool]:
    return [d > 0 and is_s_unit_int(d, S.primes) for d in range(limit + 1)]


def _windowed_embeddings(G: Graph, S: PrimeSet, range_limit: int) -> Iterator[tuple[list[int], tuple[int, ...]]]:
    """Subsets of {0..range_limit} inducing G, in lexicographic order, with a vertex map.

    Each subset is extended in increasing order while keeping every
    partial injection into G that respects adjacency and non-adjacency.
    Only subsets containing 0 are produced: any other subset in the
    window has a translate that does, in the same equivalence class.
    """
    unit = _unit_table(S, range_limit)
    adj = G.adjacency
    n = G.n
    if n == 0:
        return

    def extend(points: list[int], maps: list[tuple[int, ...]]) -> Iterator[tuple[list[int], tuple[int, ...]]]:
        k = len(points)
        if k == n:
            yield list(points), maps[0]
            return
        for x in range(points[-1] + 1, range_limit - (n - k - 1) + 1):
            links = [unit[x - a] for a in points]
            grown = []
            for m in maps:
                used = set(m)
                for v in range(n):
                    if v in used:
                        continue
                    if all((m[i] in adj[v]) == links[i] for i in range(k)):
                        grown.append(m + (v,))
            if grown:
                points.append(x)
                yield from extend(points, grown)
                points.pop()

    if range_limit + 1 < n:
        return
    yield from extend([0], [(v,) for v in range(n)])


def brute_force_search(G: Graph, S: PrimeSet, range_limit: int) -> Representation | None:
    """Lexicographically first A in {0..range_limit} with G_S(A) isomorphic to G, or None."""
    if G.n > 8 or range_limit > 64:
        raise ValueError("brute force is limited to 8 vertices and a window of 64")
    for points, mapping in _windowed_embeddings(G, S, range_limit):
        return Representation.from_values(S, points, G, mapping).verify()
    return None


@dataclass(frozen=True)
class Census:
    count: int
    classes: tuple[tuple[Fraction, ...], ...] = field(default=())

    def to_json(self) -> dict:
        return {"count": self.count, "classes": [[format_rational(v) for v in c] for c in self.classes]}


def census_equivalence_classes(G: Graph, S: PrimeSet, range_limit: int) -> Census:
    """Distinct equivalence classes among the representations of G found in the window."""
    if G.n > 8 or range_limit > 64:
        raise ValueError("census is limited to 8 vertices and a window of 64")
    seen = {tuple(canonical_values(S, points)) for points, _ in _windowed_embeddings(G, S, range_limit)}
    classes = tuple(sorted(seen))
    return Census(len(classes), classes)
