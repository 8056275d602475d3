"""Constructions of point sets A with a prescribed unit graph G_S(A).

Every public constructor verifies its output against the target graph
before returning it; a construction that fails its own check raises
``VerificationFailed`` instead of handing back a wrong answer.

All free choices are made deterministically: the smallest admissible prime,
the least non-negative CRT solution, the first unit in the documented
enumeration order.  Where infinitely many answers exist, a ``variant``
argument selects among them.

Point sets are handled as plain integers internally; every equivalence
class of point sets contains an integral member, so nothing is lost.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .config import search_budget
from .errors import (
    CoefficientOverflow,
    DimensionTooLarge,
    LabelNotPowerOfP,
    NoCycle,
    NotAForest,
    NotConnected,
    PTooSmall,
    SearchBudgetExceeded,
    VerificationFailed,
)
from .graphcore import (
    Graph,
    complete_bipartite,
    components,
    disjoint_union,
    is_bipartite,
    is_connected,
    is_forest,
)
from .sintring import (
    PrimeSet,
    SInteger,
    crt_system,
    integer_s_units,
    is_prime,
    is_s_unit_fraction,
    is_s_unit_int,
    prime_factors,
    primes_below,
    primes_outside,
    s_units_by_height,
)
from .unitgraph import Representation, build_graph

MAX_CUBE_DIMENSION = 16


# ---------------------------------------------------------------- helpers


def _smallest_prime_above(bound: int) -> int:
    p = bound + 1
    while not is_prime(p):
        p += 1
    return p


def _least_solution_outside(x0: int, modulus: int, taken: set[int], skip: int = 0) -> int:
    """Least x = x0 (mod modulus), x >= 0, not in ``taken``, skipping ``skip`` candidates."""
    x = x0
    while True:
        if x not in taken:
            if skip == 0:
                return x
            skip -= 1
        x += modulus


def _bfs_tree(G: Graph, root: int) -> list[tuple[int, int | None]]:
    """(vertex, parent) pairs in BFS order over root's component."""
    order: list[tuple[int, int | None]] = [(root, None)]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(G.adjacency[v]):
            if w not in seen:
                seen.add(w)
                order.append((w, v))
                queue.append(w)
    return order


def _require_integral(rep: Representation) -> list[int]:
    try:
        return rep.integers
    except ValueError as exc:
        raise ValueError("construction needs an integral point set; canonicalize first") from exc


# ---------------------------------------------------------------- any graph, suitable S


@dataclass
class _InductionState:
    primes: set[int]
    points: list[int]
    # separating prime outside `primes` for each non-adjacent pair (i, j), i < j
    witness: dict[tuple[int, int], int]
    # full_d mode only: prime factors of points[j] - points[i] for i < j
    diff_primes: dict[tuple[int, int], list[int]]

    def copy(self) -> _InductionState:
        return _InductionState(
            set(self.primes), list(self.points), dict(self.witness), dict(self.diff_primes)
        )


def _fresh_primes(state: _InductionState, avoid: set[int], count: int) -> list[int]:
    """Smallest primes outside S and ``avoid`` dividing no difference of the current points."""
    A = state.points
    diffs = [b - a for i, a in enumerate(A) for b in A[i + 1 :]]
    out: list[int] = []
    candidate = 1
    while len(out) < count:
        candidate += 1
        if candidate in state.primes or candidate in avoid or not is_prime(candidate):
            continue
        if any(d % candidate == 0 for d in diffs):
            continue
        out.append(candidate)
    return out


def _induction_step(
    state: _InductionState,
    non_neighbours: list[int],
    extra_congruences: Sequence[tuple[int, int]] = (),
    full_d: bool = False,
) -> tuple[int, set[int], list[int]]:
    """Add one point adjacent exactly to the points not listed in ``non_neighbours``.

    The separating primes D are either every prime outside S dividing some
    old difference (``full_d``) or only the recorded witness primes of the
    non-adjacent pairs.  ``extra_congruences`` are (point index, prime)
    pairs forcing the prime into the difference to that point.  Mutates
    ``state`` and returns the new point, the new prime set and the moduli
    of the congruence system.
    """
    A = state.points
    k = len(A)
    S_prev = state.primes
    if full_d:
        D = sorted({d for fs in state.diff_primes.values() for d in fs if d not in S_prev})
    else:
        D = sorted(set(state.witness.values()))
    # every d in D lies outside S_0 = {p < n'} with n' > k
    assert all(d > k for d in D), f"prime in D not above {k}: {D}"
    fresh = _fresh_primes(state, set(D), len(non_neighbours)) if non_neighbours else []

    system: list[tuple[int, int]] = []
    for d in D:
        forbidden = {a % d for a in A}
        system.append((next(x for x in range(d) if x not in forbidden), d))
    for t, q in zip(non_neighbours, fresh):
        system.append((A[t] % q, q))
    for idx, q in extra_congruences:
        system.append((A[idx] % q, q))

    x0, modulus = crt_system(system)
    a_new = _least_solution_outside(x0, modulus, set(A))

    non_nb = set(non_neighbours)
    new_primes = set(S_prev)
    for i in range(k):
        if full_d:
            fs = prime_factors(a_new - A[i])
            state.diff_primes[(i, k)] = fs
            if i not in non_nb:
                new_primes.update(fs)
        elif i not in non_nb:
            new_primes.update(prime_factors(a_new - A[i]))
    for t, q in zip(non_neighbours, fresh):
        state.witness[(t, k)] = q
    if any(d in new_primes for d in state.witness.values()):
        raise VerificationFailed("a separating prime entered S")
    state.points.append(a_new)
    state.primes = new_primes
    return a_new, new_primes, [m for _, m in system]


def represent_any(G: Graph, variant: int = 0, full_d: bool = False) -> Representation:
    """Find a prime set S and integers A with G_S(A) isomorphic to G.

    Vertices are added one at a time.  The new point is pinned by a CRT
    system: modulo each separating prime it avoids the residues of all old
    points, and modulo a fresh prime per intended non-neighbour it agrees
    with that non-neighbour.  The primes of its differences to the intended
    neighbours are then added to S, starting from S_0 = {p < max(n, 3)}.

    By default the separating primes are the fresh primes recorded for the
    non-adjacent pairs, which keeps the numbers small.  ``full_d`` uses every
    prime outside S dividing an old difference instead; that needs complete
    factorizations and is only practical for about five vertices.

    ``variant`` > 0 returns a representation over a different prime set:
    each further variant forces one new prime, outside all previously
    produced sets and moduli, into the last difference.
    """
    n = G.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    order = list(range(n))
    if variant and G.num_edges:
        last = max(v for v in range(n) if G.degree(v) > 0)
        order = [v for v in order if v != last] + [last]
    position = {v: k for k, v in enumerate(order)}

    state = _InductionState(set(primes_below(max(n, 3))), [0], {}, {})
    before_last: _InductionState | None = None
    moduli: list[int] = []
    non_nb: list[int] = []
    for k in range(1, n):
        v = order[k]
        non_nb = sorted(position[u] for u in order[:k] if not G.has_edge(u, v))
        if k == n - 1:
            before_last = state.copy()
        _, _, moduli = _induction_step(state, non_nb, full_d=full_d)

    points, primes = state.points, state.primes
    if variant and G.num_edges:
        assert before_last is not None
        neighbour = min(i for i in range(n - 1) if i not in set(non_nb))
        forbidden = set(primes) | set(moduli)
        for _ in range(variant):
            extra = primes_outside(forbidden, 1)[0]
            trial = before_last.copy()
            _, new_primes, new_moduli = _induction_step(
                trial, non_nb, [(neighbour, extra)], full_d=full_d
            )
            forbidden |= new_primes | set(new_moduli)
            points, primes = trial.points, new_primes
    elif variant:
        # no edges: add primes that divide no difference
        avoid = set(primes)
        for i in range(n):
            for j in range(i + 1, n):
                avoid.update(prime_factors(points[j] - points[i]))
        primes = primes | set(primes_outside(avoid, variant))

    values = [0] * n
    for k, v in enumerate(order):
        values[v] = points[k]
    return Representation.from_values(PrimeSet.of(primes), values, G).verify()


# ---------------------------------------------------------------- fixed S: forests and gluing


def _isolated_point(A: Sequence[int], S: PrimeSet, variant: int = 0) -> int:
    moduli = primes_outside(S.primes, max(len(A), 1))
    x0, modulus = crt_system([(a % q, q) for a, q in zip(A, moduli)])
    x = _least_solution_outside(x0, modulus, set(A), skip=variant)
    if any(is_s_unit_int(x - a, S.primes) for a in A):
        raise VerificationFailed(f"{x} is not isolated from {list(A)}")
    return x


def _pendant_point(
    A: Sequence[int], S: PrimeSet, anchor: int, variant: int = 0, budget: int | None = None
) -> int:
    budget = search_budget() if budget is None else budget
    D = {s * (a - b) for a in A for b in A if a != b for s in (1, -1)}
    skip = variant
    for examined, u in enumerate(integer_s_units(S.primes)):
        if examined >= budget:
            break
        if u in D or any(is_s_unit_int(d - u, S.primes) for d in D):
            continue
        if skip:
            skip -= 1
            continue
        x = A[anchor] + u
        for i, a in enumerate(A):
            if (i == anchor) != is_s_unit_int(x - a, S.primes):
                raise VerificationFailed(f"{x} is not a pendant of {A[anchor]} in {list(A)}")
        return x
    raise SearchBudgetExceeded(f"no pendant unit found among the first {budget} integer S-units")


def add_isolated(rep: Representation, variant: int = 0) -> SInteger:
    """A new integer adjacent to no point of ``rep``.

    It is congruent to the i-th point modulo the i-th smallest prime outside
    S, so every difference has a prime factor outside S.
    """
    A = _require_integral(rep)
    return SInteger.of(_isolated_point(A, rep.primes, variant), rep.primes)


def add_pendant(
    rep: Representation, anchor: int, variant: int = 0, budget: int | None = None
) -> SInteger:
    """A new integer adjacent to ``points[anchor]`` only.

    The step u = new - anchor is the first integer S-unit outside
    D = {+-(a - b)} such that no d - u (d in D) is an S-unit.
    """
    A = _require_integral(rep)
    if not 0 <= anchor < len(A):
        raise IndexError(f"anchor {anchor} out of range")
    return SInteger.of(_pendant_point(A, rep.primes, anchor, variant, budget), rep.primes)


def represent_forest(G: Graph, S: PrimeSet, budget: int | None = None) -> Representation:
    """Represent a forest with the given S.

    Each tree is grown from its smallest vertex in BFS order by pendant
    steps; every tree after the first starts from an isolated point.
    """
    if not is_forest(G):
        raise NotAForest("graph contains a cycle")
    points: list[int] = []
    mapping: list[int] = []
    index: dict[int, int] = {}
    for comp in components(G):
        for v, parent in _bfs_tree(G, comp[0]):
            if parent is None:
                x = _isolated_point(points, S) if points else 0
            else:
                x = _pendant_point(points, S, index[parent], budget=budget)
            index[v] = len(points)
            points.append(x)
            mapping.append(v)
    return Representation.from_values(S, points, G, mapping).verify()


def glue_components(
    rep1: Representation, rep2: Representation, budget: int | None = None
) -> Representation:
    """Disjoint union of two representations over the same S.

    The first point set is shifted by t = q, 2q, 3q, ... (q the least prime
    outside S) until no shifted point meets or is adjacent to a point of the
    second set.
    """
    if rep1.primes != rep2.primes:
        raise ValueError(f"prime sets differ: {rep1.primes} vs {rep2.primes}")
    S = rep1.primes
    A1, A2 = _require_integral(rep1), _require_integral(rep2)
    budget = search_budget() if budget is None else budget
    q = primes_outside(S.primes, 1)[0]
    for step in range(1, budget + 1):
        t = step * q
        if all(a + t != b and not is_s_unit_int(a + t - b, S.primes) for a in A1 for b in A2):
            break
    else:
        raise SearchBudgetExceeded(f"no separating shift among the first {budget} multiples of {q}")

    G1 = rep1.target if rep1.target is not None else build_graph(S, A1)
    G2 = rep2.target if rep2.target is not None else build_graph(S, A2)
    m1 = rep1.mapping if rep1.mapping is not None else range(len(A1))
    m2 = rep2.mapping if rep2.mapping is not None else range(len(A2))
    mapping = list(m1) + [G1.n + m for m in m2]
    return Representation.from_values(
        S, [a + t for a in A1] + A2, disjoint_union(G1, G2), mapping
    ).verify()


# ---------------------------------------------------------------- edge labels and rescaling


@dataclass(frozen=True)
class EdgeLabeling:
    """Signed S-unit labels on the edges of a graph.

    ``labels[(i, j)]`` with i < j is value(j) - value(i); reading the edge
    the other way negates the label.
    """

    labels: dict[tuple[int, int], Fraction]

    def label(self, i: int, j: int) -> Fraction:
        if i < j:
            return self.labels[(i, j)]
        return -self.labels[(j, i)]

    @classmethod
    def of(cls, S: PrimeSet, values: Sequence[Fraction | int]) -> EdgeLabeling:
        G = build_graph(S, [Fraction(v) for v in values])
        labels = {(i, j): Fraction(values[j]) - Fraction(values[i]) for i, j in G.edge_list()}
        for lab in labels.values():
            if not is_s_unit_fraction(lab, S.primes):  # pragma: no cover - edges are units
                raise ValueError(f"label {lab} is not an S-unit")
        return cls(labels)


def _root_and_shift(values: Sequence[int]) -> tuple[int, list[int]]:
    root = values.index(0) if 0 in values else 0
    base = values[root]
    return root, [v - base for v in values]


def relabel_edges(
    rep0: Representation, S: PrimeSet, weights: Sequence[int | Fraction]
) -> Representation:
    """Replace the label +-u_i (u_1 < ... < u_k the distinct label sizes) by +-weights[i].

    Vertex values are summed along BFS-tree paths from the point 0.  The
    result is checked for consistency on non-tree edges, distinct values and
    an exactly matching unit graph; ``VerificationFailed`` reports the first
    failed check.
    """
    values = [Fraction(v) for v in rep0.values]
    root, values = _root_and_shift(values)
    G0 = build_graph(rep0.primes, values)
    labeling = EdgeLabeling.of(rep0.primes, values)
    sizes = sorted({abs(lab) for lab in labeling.labels.values()})
    if len(weights) != len(sizes):
        raise ValueError(f"need {len(sizes)} weights, got {len(weights)}")
    weight_of = {u: Fraction(w) for u, w in zip(sizes, weights)}

    def image(i: int, j: int) -> Fraction:
        lab = labeling.label(i, j)
        return weight_of[abs(lab)] * (1 if lab > 0 else -1)

    if not is_connected(G0):
        raise NotConnected("relabeling needs a connected graph")
    new: list[Fraction] = [Fraction(0)] * G0.n
    for v, parent in _bfs_tree(G0, root):
        if parent is not None:
            new[v] = new[parent] + image(parent, v)
    for i, j in G0.edge_list():
        if new[j] - new[i] != image(i, j):
            raise VerificationFailed(f"walk sums disagree on edge {(i, j)}")
    if len(set(new)) != len(new):
        raise VerificationFailed("relabeled vertex values collide")
    if build_graph(S, new).edges != G0.edges:
        raise VerificationFailed(f"weights {list(weights)} create extra unit differences over {S}")
    target = rep0.target if rep0.target is not None else G0
    mapping = rep0.mapping if rep0.mapping is not None else range(G0.n)
    return Representation.from_values(S, new, target, mapping).verify()


def exponent_profiles(S: PrimeSet, num_labels: int, num_edges: int, variant: int = 0) -> Iterator[list[int]]:
    """Weight profiles w_i = q^e_i (q the largest prime of S) with q^gap > 2*edges.

    Profile L uses gap * q^L between consecutive exponents; ``variant`` is
    added to the last exponent only.
    """
    q = S.primes[-1]
    gap = 1
    while q**gap <= 2 * num_edges:
        gap += 1
    level = 0
    while True:
        step = gap * q**level
        exps = [i * step for i in range(num_labels)]
        exps[-1] += variant
        yield [q**e for e in exps]
        level += 1


def rescale_representation(
    rep0: Representation, S: PrimeSet, variant: int = 0, max_profiles: int = 8
) -> Representation:
    """Move a representation over a single prime p to an arbitrary S.

    Needs a connected graph with a cycle and p > 2 * edges.  Distinct
    ``variant`` values give pairwise non-equivalent results.  Each weight
    profile is verified; on failure the next, more widely spaced, profile is
    tried.
    """
    if len(rep0.primes) != 1:
        raise ValueError(f"source representation must use a single prime, got {rep0.primes}")
    if not S.primes:
        raise ValueError("target prime set must be non-empty")
    p = rep0.primes.primes[0]
    values = _require_integral(rep0)
    G0 = build_graph(rep0.primes, values)
    if not is_connected(G0):
        raise NotConnected("rescaling needs a connected graph")
    if G0.num_edges < G0.n:
        raise NoCycle("graph is a tree; use represent_forest")
    if p <= 2 * G0.num_edges:
        raise PTooSmall(f"p={p} must exceed twice the number of edges ({G0.num_edges})")
    sizes = {abs(values[j] - values[i]) for i, j in G0.edges}
    failures = []
    for level, weights in enumerate(exponent_profiles(S, len(sizes), G0.num_edges, variant)):
        if level >= max_profiles:
            break
        try:
            return relabel_edges(rep0, S, weights)
        except VerificationFailed as exc:
            failures.append(f"{weights}: {exc}")
    raise SearchBudgetExceeded(f"no weight profile verified; tried {failures}")


# ---------------------------------------------------------------- hypercube embeddings


@dataclass(frozen=True)
class CubeEmbedding:
    """Coordinates of each vertex in {0,1}^dimension; bit i of a word is coordinate i."""

    dimension: int
    coordinates: tuple[int, ...]

    def word(self, v: int) -> str:
        return "".join("1" if self.coordinates[v] >> i & 1 else "0" for i in range(self.dimension))

    def is_valid(self, G: Graph, induced: bool = True) -> bool:
        """Injective, edges go to hypercube edges; if ``induced``, non-edges do not."""
        c = self.coordinates
        if len(c) != G.n or len(set(c)) != G.n:
            return False
        if any(w >> self.dimension for w in c):
            return False
        for i in range(G.n):
            for j in range(i + 1, G.n):
                adjacent_in_cube = (c[i] ^ c[j]).bit_count() == 1
                if G.has_edge(i, j) and not adjacent_in_cube:
                    return False
                if induced and not G.has_edge(i, j) and adjacent_in_cube:
                    return False
        return True

    def to_json(self) -> dict:
        return {"dim": self.dimension, "coords": [self.word(v) for v in range(len(self.coordinates))]}

    @classmethod
    def from_json(cls, data: dict) -> CubeEmbedding:
        dim = int(data["dim"])
        coords = []
        for text in data["coords"]:
            if len(text) != dim:
                raise ValueError(f"coordinate word {text!r} has wrong length")
            coords.append(sum(1 << i for i, ch in enumerate(text) if ch == "1"))
        return cls(dim, tuple(coords))


def _embed_in_dimension(G: Graph, dim: int, induced: bool) -> list[int] | None:
    order: list[tuple[int, int | None]] = []
    for comp in sorted(components(G), key=lambda c: (-len(c), c[0])):
        order.extend(_bfs_tree(G, comp[0]))
    words = [-1] * G.n
    placed: list[int] = []
    taken: set[int] = set()
    adjacency = G.adjacency

    def fits(v: int, w: int) -> bool:
        if w in taken:
            return False
        for u in placed:
            close = (w ^ words[u]).bit_count() == 1
            if u in adjacency[v]:
                if not close:
                    return False
            elif induced and close:
                return False
        return True

    def candidates(v: int, parent: int | None, used: int) -> Iterator[int]:
        free = [i for i in range(dim) if not used >> i & 1]
        if parent is None:
            if not placed:
                yield 0
                return
            # coordinates outside `used` are interchangeable: fill the lowest first
            sub = used
            subsets = []
            while True:
                subsets.append(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & used
            out = set()
            for s in subsets:
                tail = 0
                for j in range(len(free) + 1):
                    out.add(s | tail)
                    if j < len(free):
                        tail |= 1 << free[j]
            yield from sorted(out)
            return
        dirs = [i for i in range(dim) if used >> i & 1]
        if free:
            dirs.append(free[0])
        for i in sorted(dirs):
            yield words[parent] ^ (1 << i)

    def search(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v, parent = order[k]
        for w in candidates(v, parent, used):
            if not fits(v, w):
                continue
            words[v] = w
            placed.append(v)
            taken.add(w)
            if search(k + 1, used | w):
                return True
            taken.discard(w)
            placed.pop()
            words[v] = -1
        return False

    return list(words) if search(0, 0) else None


def hypercube_embed(
    G: Graph, max_dimension: int = 10, induced: bool = True
) -> CubeEmbedding | None:
    """First embedding of G into Q_d for the smallest feasible d <= max_dimension.

    With ``induced`` (the default) non-adjacent vertices must also be
    non-adjacent in the cube; that is the form the number-theoretic
    construction needs.  ``None`` only says no embedding exists up to
    ``max_dimension``.
    """
    if max_dimension > MAX_CUBE_DIMENSION:
        raise DimensionTooLarge(f"max_dimension {max_dimension} exceeds {MAX_CUBE_DIMENSION}")
    if G.n == 0:
        return CubeEmbedding(0, ())
    if not is_bipartite(G):
        return None
    start = max(0, math.ceil(math.log2(G.n)))
    max_degree = max(G.degree(v) for v in range(G.n))
    for dim in range(max(start, max_degree), max_dimension + 1):
        words = _embed_in_dimension(G, dim, induced)
        if words is not None:
            emb = CubeEmbedding(dim, tuple(words))
            assert emb.is_valid(G, induced)
            return emb
    return None


def cubical_to_representation(
    G: Graph, embedding: CubeEmbedding, S: PrimeSet, p: int | None = None
) -> Representation:
    """Represent a cubical graph with any S.

    The vertex at (a_1, ..., a_n) gets sum a_i p^i over the single prime p,
    by default the smallest prime above 2 * edges.  For other S each
    component is moved over by rescaling (or rebuilt as a tree) and the
    components are glued.
    """
    if not embedding.is_valid(G, induced=True):
        raise ValueError("embedding is not an induced hypercube embedding of G")
    if p is None:
        p = _smallest_prime_above(2 * G.num_edges)
    elif not is_prime(p):
        raise ValueError(f"{p} is not prime")
    Sp = PrimeSet((p,))
    values = [
        sum(p ** (i + 1) for i in range(embedding.dimension) if w >> i & 1)
        for w in embedding.coordinates
    ]
    direct = Representation.from_values(Sp, values, G).verify()
    if S == Sp:
        return direct

    glued: Representation | None = None
    order: list[int] = []
    for comp in components(G):
        H = G.induced(comp)
        if is_forest(H):
            part = represent_forest(H, S)
        else:
            sub = Representation.from_values(Sp, [values[v] for v in comp], H)
            part = rescale_representation(sub, S)
        glued = part if glued is None else glue_components(glued, part)
        order.extend(comp)
    assert glued is not None and glued.mapping is not None
    # glued.mapping indexes the disjoint union of components in `order`
    mapping = [order[m] for m in glued.mapping]
    return Representation.from_values(S, glued.points, G, mapping).verify()


def cube_from_representation(rep: Representation) -> CubeEmbedding:
    """Hypercube embedding read off a representation over a single prime p.

    Each value is written as sum a_i p^m_i over the label exponents
    m_1 < ... < m_r by summing labels along tree paths; coordinate i is then
    spread over 2p unary bits, giving dimension 2pr.
    """
    if len(rep.primes) != 1:
        raise LabelNotPowerOfP(f"need a single prime, got {rep.primes}")
    p = rep.primes.primes[0]
    values = _require_integral(rep)
    G = build_graph(rep.primes, values)
    if G.n == 0:
        return CubeEmbedding(0, ())
    if not is_connected(G):
        raise NotConnected("cube extraction needs a connected graph")
    if p <= G.num_edges:
        raise PTooSmall(f"p={p} must exceed the number of edges ({G.num_edges})")

    exponent_of: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j in G.edge_list():
        lab = values[j] - values[i]
        m, rest = 0, abs(lab)
        while rest % p == 0:
            rest //= p
            m += 1
        if rest != 1:
            raise LabelNotPowerOfP(f"label {lab} on edge {(i, j)} is not +-{p}^m")
        exponent_of[(i, j)] = (m, 1 if lab > 0 else -1)
    exps = sorted({m for m, _ in exponent_of.values()})
    slot = {m: k for k, m in enumerate(exps)}
    r = len(exps)

    def step(i: int, j: int) -> tuple[int, int]:
        m, sign = exponent_of[(min(i, j), max(i, j))]
        return slot[m], sign if i < j else -sign

    coeffs: list[list[int] | None] = [None] * G.n
    coeffs[0] = [0] * r
    for v, parent in _bfs_tree(G, 0):
        if parent is not None:
            k, sign = step(parent, v)
            c = list(coeffs[parent])
            c[k] += sign
            coeffs[v] = c
    for i, j in G.edge_list():
        k, sign = step(i, j)
        diff = [b - a for a, b in zip(coeffs[i], coeffs[j])]
        if diff != [sign if t == k else 0 for t in range(r)]:
            raise VerificationFailed(f"labels around edge {(i, j)} do not balance")
    for v in range(G.n):
        if any(abs(a) >= p for a in coeffs[v]):
            raise CoefficientOverflow(f"vertex {v} has coefficients {coeffs[v]} with |a_i| >= {p}")
        if sum(a * p**m for a, m in zip(coeffs[v], exps)) != values[v] - values[0]:
            raise VerificationFailed(f"coefficients of vertex {v} do not reproduce its value")

    width = 2 * p

    def word(c: Sequence[int]) -> int:
        w = 0
        for k, a in enumerate(c):
            # bit (k, j) for j in [-p, p) is set iff j lies between 0 and a
            lo, hi = (0, a) if a > 0 else (a, 0)
            for j in range(lo, hi):
                w |= 1 << (k * width + j + p)
        return w

    words = [word(c) for c in coeffs]
    if rep.mapping is not None and rep.target is not None:
        ordered = [0] * G.n
        for k, v in enumerate(rep.mapping):
            ordered[v] = words[k]
        graph = rep.target
    else:
        ordered, graph = words, G
    emb = CubeEmbedding(width * r, tuple(ordered))
    if not emb.is_valid(graph, induced=True):
        raise VerificationFailed("extracted cube coordinates do not embed the graph")
    return emb


# ---------------------------------------------------------------- K_{2,2}


def k22_representations(
    S: PrimeSet, count: int, max_height: int = 12
) -> list[Representation]:
    """``count`` pairwise non-equivalent representations (0, 1, w, 1+w) of K_{2,2}.

    w runs over the S-units by height (largest absolute exponent), and within
    a height in ``s_units_by_height`` order; it is kept when 1+w and 1-w are
    not S-units and its point set is new up to equivalence.
    """
    if count < 1:
        raise ValueError("count must be positive")
    target = complete_bipartite(2, 2)
    # K_{2,2} sides are {0, 1+w} and {1, w}
    mapping = (0, 2, 3, 1)
    found: list[Representation] = []
    seen: set[tuple[Fraction, ...]] = set()
    for height in range(max_height + 1):
        for w in s_units_by_height(S, height):
            if w.height != height:
                continue
            wv = w.value
            points = [Fraction(0), Fraction(1), wv, 1 + wv]
            if len(set(points)) != 4:
                continue
            if is_s_unit_fraction(1 + wv, S.primes) or is_s_unit_fraction(1 - wv, S.primes):
                continue
            rep = Representation.from_values(S, points, target, mapping)
            key = tuple(rep.canonical())
            if key in seen:
                continue
            seen.add(key)
            found.append(rep.verify())
            if len(found) == count:
                return found
    raise SearchBudgetExceeded(f"only {len(found)} classes found up to height {max_height}")
