"""Bounded S-unit equations, zero subsums of cycle labels, and explicit bounds.

The finiteness theorems for a_1 x_1 + ... + a_n x_n = 1 are ineffective in
general, so solutions are only enumerated inside an exponent box
|e_p| <= B.  An empty result means "none inside the box", nothing more.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    ArityUnsupported,
    BadParameters,
    LabelsDoNotSumToZero,
    TooLong,
    UnknownBound,
)
from .sintring import PrimeSet, SInteger


@dataclass(frozen=True)
class UnitEquation:
    """coefficients[0]*x_1 + ... + coefficients[n-1]*x_n = 1 in S-units, |exponents| <= bound."""

    coefficients: tuple[Fraction, ...]
    primes: PrimeSet
    exponent_bound: int

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) < 2:
            raise BadParameters("a unit equation needs at least two terms")
        if any(c == 0 for c in coeffs):
            raise BadParameters("coefficients must be non-zero")
        if self.exponent_bound < 0:
            raise BadParameters("exponent bound must be non-negative")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def ones(cls, primes: PrimeSet, bound: int, arity: int = 2) -> UnitEquation:
        return cls(tuple([Fraction(1)] * arity), primes, bound)

    @property
    def arity(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Solution:
    values: tuple[Fraction, ...]
    degenerate: bool


def _box_pairs(primes: Sequence[int], bound: int) -> list[tuple[int, int]]:
    """(numerator, denominator) of all +-prod p^e_p with every |e_p| <= bound."""
    out = []
    for exps in itertools.product(range(-bound, bound + 1), repeat=len(primes)):
        num = den = 1
        for p, e in zip(primes, exps):
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        out += [(num, den), (-num, den)]
    return out


def _in_box(x: Fraction, primes: Sequence[int], bound: int) -> bool:
    return x != 0 and _ratio_in_box(x.numerator, x.denominator, primes, bound)


def _ratio_in_box(num: int, den: int, primes: Sequence[int], bound: int) -> bool:
    """Whether num/den (den > 0, not necessarily reduced) is an S-unit inside the box."""
    g = math.gcd(num, den)
    num, den = abs(num) // g, den // g
    for p in primes:
        e = 0
        while num % p == 0:
            num //= p
            e += 1
        while den % p == 0:
            den //= p
            e += 1  # numerator and denominator are coprime, so one of the loops is idle
        if e > bound:
            return False
    return num == 1 and den == 1


def is_degenerate(coefficients: Sequence[Fraction], values: Sequence[Fraction]) -> bool:
    """True when some non-empty proper sub-sum of the terms a_i x_i vanishes."""
    terms = [a * x for a, x in zip(coefficients, values)]
    n = len(terms)
    return any(
        sum(terms[i] for i in subset) == 0
        for m in range(1, n)
        for subset in itertools.combinations(range(n), m)
    )


def solve_bounded(eq: UnitEquation) -> list[Solution]:
    """Every solution with all exponents in [-B, B], sorted.

    The first n-1 unknowns run over the exponent box and the last one is
    solved for and checked, so the work is (2(2B+1)^|S|)^(n-1).
    """
    if eq.arity not in (2, 3):
        raise ArityUnsupported(f"exhaustive search supports 2 or 3 unknowns, not {eq.arity}")
    primes, B = eq.primes.primes, eq.exponent_bound
    units = _box_pairs(primes, B)
    found = []
    if eq.arity == 2:
        # y = (1 - a x) / b with x = n/d, in integers: (qa*d - pa*n) * qb / (qa*d*pb)
        a, b = eq.coefficients
        pa, qa, pb, qb = a.numerator, a.denominator, b.numerator, b.denominator
        sign = -1 if pb < 0 else 1
        for n, d in units:
            num = (qa * d - pa * n) * qb * sign
            if num and _ratio_in_box(num, qa * d * abs(pb), primes, B):
                values = (Fraction(n, d), Fraction(num, qa * d * abs(pb)))
                found.append(Solution(values, is_degenerate(eq.coefficients, values)))
    else:
        *head, last = eq.coefficients
        box = [Fraction(n, d) for n, d in units]
        for xs in itertools.product(box, repeat=len(head)):
            y = (1 - sum(c * x for c, x in zip(head, xs))) / last
            if _in_box(y, primes, B):
                values = (*xs, y)
                found.append(Solution(values, is_degenerate(eq.coefficients, values)))
    found.sort(key=lambda s: s.values)
    return found


def has_exceptional_units(S: PrimeSet) -> bool:
    """Whether some S-unit u has 1 - u an S-unit too.

    With 2 in S, u = 2 works.  Without it every S-unit is a quotient of odd
    integers, and two such numbers never sum to 1.
    """
    return 2 in S


def check_nondegenerate(labels: Sequence[SInteger | Fraction | int]) -> bool:
    """True iff the cycle labels (which must sum to 0) have no vanishing proper sub-sum."""
    values = [x.value if isinstance(x, SInteger) else Fraction(x) for x in labels]
    if sum(values) != 0:
        raise LabelsDoNotSumToZero(f"labels sum to {sum(values)}")
    if len(values) > 24:
        raise TooLong(f"{len(values)} labels; at most 24 supported")
    # a vanishing proper sub-sum or its complement avoids the last label
    sums: set[Fraction] = set()
    for x in values[:-1]:
        if x == 0 or -x in sums:
            return False
        sums |= {s + x for s in sums}
        sums.add(x)
    return True


def _need(params: dict, *names: str) -> list[int]:
    try:
        values = [int(params[n]) for n in names]
    except KeyError as exc:
        raise BadParameters(f"missing parameter {exc.args[0]!r}") from None
    return values


def _bound_unit_equation(p: dict) -> int:
    (s,) = _need(p, "s")
    return 3 * 7 ** (2 * s + 3)


def _bound_nondegenerate(p: dict) -> int:
    n, s = _need(p, "n", "s")
    if n < 2:
        raise BadParameters("n must be at least 2")
    return (8 * n) ** (4 * n**4 * (n * s + n + 1))


def _bound_complement_threshold(p: dict) -> int:
    (s,) = _need(p, "s")
    return 3 * 2 ** (16 * (s + 2))


def _bound_not_representable_threshold(p: dict) -> int:
    (s,) = _need(p, "s")
    return 3 * 2 ** (16 * (s + 1))


def _bound_exceptional_classes(p: dict) -> int:
    k, s = _need(p, "k", "s")
    if k < 3:
        raise BadParameters("k must be at least 3")
    return (k * 5 ** (162 * (3 * s + 4))) ** (4 * (k - 1))


def _bound_many_solution_constants(p: dict) -> int:
    (s,) = _need(p, "s")
    return 24 ** (324 * (3 * s + 4))


def _bound_two_component_classes(p: dict) -> int:
    k, s = _need(p, "k", "s")
    if k < 5:
        raise BadParameters("k must be at least 5")
    return (k * 5 ** (648 * (3 * s + 4))) ** (k - 1)


def _bound_complement_classes(p: dict) -> int:
    k, s = _need(p, "k", "s")
    if k < 3:
        raise BadParameters("k must be at least 3")
    return ((k + 1) ** 4 * 2 ** (16 * (s + 2))) ** (k - 2)


BOUNDS = {
    # solutions of a x + b y = 1: 3 * 7^(2|S|+3)
    "unit_equation_solutions": _bound_unit_equation,
    # non-degenerate solutions in n unknowns: (8n)^(4 n^4 (n|S| + n + 1))
    "nondegenerate_solutions": _bound_nondegenerate,
    # order beyond which the complement of G_S(A) has <= 2 components, one of order <= 1
    "complement_components_threshold": _bound_complement_threshold,
    # order beyond which a graph with a badly split complement is not representable
    "not_representable_threshold": _bound_not_representable_threshold,
    # exceptional equivalence classes of k-point sets
    "exceptional_classes": _bound_exceptional_classes,
    # constants c (up to units) for which x + y = c has more than two solutions
    "many_solution_constants": _bound_many_solution_constants,
    # classes whose complement splits into parts of order >= 3 and >= 2
    "two_component_classes": _bound_two_component_classes,
    # classes outside the three complement patterns (older, weaker count)
    "complement_classes": _bound_complement_classes,
}


def bounds(name: str, **params: int) -> int:
    """Exact value of a named bound; parameters are ``s`` (= |S|), ``n`` and ``k``."""
    try:
        fn = BOUNDS[name]
    except KeyError:
        raise UnknownBound(name) from None
    if "s" in params and int(params["s"]) < 1:
        raise BadParameters("|S| must be at least 1")
    return fn(params)


@dataclass(frozen=True)
class BoundReport:
    primes: PrimeSet
    exponent_bound: int
    count: int
    bound: int

    @property
    def within(self) -> bool:
        return self.count <= self.bound


def count_solutions_vs_bound(S: PrimeSet, B: int) -> BoundReport:
    """Count solutions of x + y = 1 inside the box and compare with the solution bound."""
    if len(S) > 3 or B > 12:
        raise BadParameters("desk-scale only: |S| <= 3 and B <= 12")
    count = len(solve_bounded(UnitEquation.ones(S, B)))
    report = BoundReport(S, B, count, bounds("unit_equation_solutions", s=len(S)))
    assert report.within, f"{count} solutions exceed the bound {report.bound}"
    return report
