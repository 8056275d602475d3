"""The S-unit difference graph G_S(A) and S-equivalence of point sets.

Two finite sets A, A' of S-integers are S-equivalent when A' = uA + b for an
S-unit u and an S-integer b.  ``canonicalize`` picks one representative per
class so that equivalence becomes equality of canonical forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicatePoints, EmptySet, VerificationFailed
from .graphcore import Graph, is_isomorphism
from .sintring import (
    PrimeSet,
    SInteger,
    _strip,
    format_rational,
    from_fraction,
    is_s_unit_fraction,
    is_s_unit_int,
    parse_rational,
)

Point = SInteger | int | Fraction


def _values(A: Iterable[Point]) -> list[Fraction]:
    return [a.value if isinstance(a, SInteger) else Fraction(a) for a in A]


def build_graph(S: PrimeSet, A: Sequence[Point]) -> Graph:
    """G_S(A): vertex k is A[k]; {i, j} is an edge iff A[i] - A[j] is an S-unit."""
    values = _values(A)
    if len(set(values)) != len(values):
        raise DuplicatePoints("points of A must be pairwise distinct")
    primes = S.primes
    if all(v.denominator == 1 for v in values):
        ints = [v.numerator for v in values]
        test = lambda i, j: is_s_unit_int(ints[i] - ints[j], primes)  # noqa: E731
    else:
        for v in values:
            from_fraction(v, S)  # rejects denominators outside S
        test = lambda i, j: is_s_unit_fraction(values[i] - values[j], primes)  # noqa: E731
    return Graph.from_edges(
        len(values), ((i, j) for i, j in itertools.combinations(range(len(values)), 2) if test(i, j))
    )


def _s_content(values: Iterable[Fraction], S: PrimeSet) -> Fraction:
    """prod p^(min valuation) over the non-zero values."""
    content = Fraction(1)
    nonzero = [v for v in values if v != 0]
    if not nonzero:
        return content
    for p in S.primes:
        low = min(_strip(abs(v.numerator), p)[0] - _strip(v.denominator, p)[0] for v in nonzero)
        content *= Fraction(p) ** low
    return content


def _normalize(values: Sequence[Fraction], S: PrimeSet) -> list[Fraction]:
    ordered = sorted(values)
    shifted = [v - ordered[0] for v in ordered]
    content = _s_content(shifted, S)
    return [v / content for v in shifted]


def canonical_values(S: PrimeSet, A: Iterable[Point]) -> list[Fraction]:
    """Canonical representative of the S-equivalence class of A, as Fractions.

    Translating the minimum to 0 absorbs b and dividing by the S-content
    absorbs |u|; the sign of u is absorbed by taking the lexicographically
    smaller of the normal forms of A and -A.
    """
    values = _values(A)
    if not values:
        raise EmptySet("cannot canonicalize the empty set")
    if len(set(values)) != len(values):
        raise DuplicatePoints("points of A must be pairwise distinct")
    return min(_normalize(values, S), _normalize([-v for v in values], S))


def canonicalize(S: PrimeSet, A: Iterable[Point]) -> list[SInteger]:
    return [from_fraction(v, S) for v in canonical_values(S, A)]


def are_equivalent(S: PrimeSet, A: Iterable[Point], B: Iterable[Point]) -> bool:
    A, B = list(A), list(B)
    if len(A) != len(B):
        return False
    return canonical_values(S, A) == canonical_values(S, B)


@dataclass(frozen=True)
class Representation:
    """Points of Z_S whose unit graph is meant to be a given target graph.

    ``mapping[k]`` is the target vertex represented by ``points[k]``.
    """

    primes: PrimeSet
    points: tuple[SInteger, ...]
    target: Graph | None = None
    mapping: tuple[int, ...] | None = None

    @classmethod
    def from_values(
        cls,
        S: PrimeSet,
        values: Iterable[Point],
        target: Graph | None = None,
        mapping: Sequence[int] | None = None,
    ) -> Representation:
        points = tuple(SInteger.of(v, S) if not isinstance(v, SInteger) else v for v in values)
        if mapping is None and target is not None:
            mapping = range(len(points))
        return cls(S, points, target, tuple(mapping) if mapping is not None else None)

    @property
    def values(self) -> list[Fraction]:
        return [p.value for p in self.points]

    @property
    def integers(self) -> list[int]:
        """Point values as ints; raises if some point is not integral."""
        out = []
        for v in self.values:
            if v.denominator != 1:
                raise ValueError(f"point {v} is not an integer")
            out.append(v.numerator)
        return out

    def graph(self) -> Graph:
        return build_graph(self.primes, self.points)

    def is_valid(self) -> bool:
        if self.target is None or self.mapping is None:
            return False
        try:
            built = self.graph()
        except DuplicatePoints:
            return False
        return is_isomorphism(built, self.target, self.mapping)

    def verify(self) -> Representation:
        """Return self, or raise VerificationFailed if the target is not induced exactly."""
        if not self.is_valid():
            raise VerificationFailed(
                f"points {[format_rational(v) for v in self.values]} over {self.primes} "
                f"do not induce the target graph"
            )
        return self

    def canonical(self) -> list[Fraction]:
        return canonical_values(self.primes, self.points)

    def to_json(self) -> dict:
        data: dict = {
            "primes": list(self.primes.primes),
            "points": [format_rational(v) for v in self.values],
        }
        if self.target is not None:
            data["graph"] = self.target.to_json()
        if self.mapping is not None:
            data["map"] = list(self.mapping)
        return data

    @classmethod
    def from_json(cls, data: dict) -> Representation:
        S = PrimeSet.of(data["primes"])
        values = [parse_rational(str(v)) for v in data["points"]]
        target = Graph.from_json(data["graph"]) if data.get("graph") is not None else None
        mapping = data.get("map")
        return cls.from_values(S, values, target, mapping)
