"""Exact arithmetic in the ring of S-integers and its unit group.

An S-integer is a rational whose denominator only contains primes from a
fixed finite set S.  Values are stored factored over S: a sign, an exponent
per prime of S (negative exponents allowed) and a positive cofactor coprime
to S.  The S-units are exactly the non-zero values with cofactor 1.

Besides the ring itself the module carries the small number-theoretic
toolkit the constructions need: deterministic primality, prime factor
lists, a Chinese Remainder solver and ordered enumerations of S-units.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import DenominatorNotSOnly, InvalidPrimeSet, ModuliNotCoprime, PrimeSetMismatch

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| in ascending order (empty for 0 and +-1)."""
    n = abs(n)
    if n < 2:
        return []
    from sympy import factorint  # slow import; only the synthesis paths need it

    return sorted(factorint(n))


def primes_below(bound: int) -> list[int]:
    return [p for p in range(2, bound) if is_prime(p)]


def primes_outside(excluded: Iterable[int], count: int) -> list[int]:
    """The `count` smallest primes not in `excluded`, ascending."""
    if count < 1:
        raise ValueError("count must be positive")
    skip = set(excluded)
    found: list[int] = []
    candidate = 2
    while len(found) < count:
        if candidate not in skip and is_prime(candidate):
            found.append(candidate)
        candidate += 1
    return found


@dataclass(frozen=True)
class PrimeSet:
    """A finite strictly ascending tuple of distinct primes."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        primes = tuple(int(p) for p in self.primes)
        for p in primes:
            if not is_prime(p):
                raise InvalidPrimeSet(f"{p} is not prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise InvalidPrimeSet(f"primes must be strictly ascending: {primes}")
        object.__setattr__(self, "primes", primes)

    @classmethod
    def of(cls, primes: Iterable[int]) -> PrimeSet:
        """Build from any iterable, sorting and de-duplicating."""
        return cls(tuple(sorted(set(int(p) for p in primes))))

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """Parse "2,3,7".  The list must already be ascending."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise InvalidPrimeSet(f"malformed prime list {text!r}") from exc
        return cls(values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def union(self, other: Iterable[int]) -> PrimeSet:
        return PrimeSet.of(itertools.chain(self.primes, other))

    def format(self) -> str:
        return ",".join(str(p) for p in self.primes)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.primes) + "}"


def _strip(n: int, p: int) -> tuple[int, int]:
    """Return (e, m) with n = p**e * m and p not dividing m; n must be non-zero."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def split_s_part(n: int, S: PrimeSet | Iterable[int]) -> tuple[int, int]:
    """Split |n| into (s_part, cofactor) with s_part supported on S."""
    if n == 0:
        raise ValueError("split_s_part needs a non-zero integer")
    rest = abs(n)
    s_part = 1
    for p in S:
        e, rest = _strip(rest, p)
        s_part *= p**e
    return s_part, rest


def is_s_unit_int(n: int, primes: Iterable[int]) -> bool:
    """Fast unit test for plain integers."""
    if n == 0:
        return False
    n = abs(n)
    for p in primes:
        while n % p == 0:
            n //= p
        if n == 1:
            return True
    return n == 1


def is_s_unit_fraction(x: Fraction, primes: Iterable[int]) -> bool:
    primes = tuple(primes)
    return x != 0 and is_s_unit_int(x.numerator, primes) and is_s_unit_int(x.denominator, primes)


@dataclass(frozen=True)
class SInteger:
    """An element of Z_S, kept in the factored normal form.

    ``exponents`` is aligned with ``primes.primes`` and is empty exactly for
    zero.  Equality is structural, which coincides with equality of values
    because the form is canonical.
    """

    primes: PrimeSet
    sign: int
    exponents: tuple[int, ...]
    cofactor: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {self.sign}")
        if self.sign == 0:
            if self.exponents or self.cofactor != 1:
                raise ValueError("zero must have no exponents and cofactor 1")
            return
        if len(self.exponents) != len(self.primes):
            raise ValueError("exponent vector does not match the prime set")
        if self.cofactor < 1 or any(self.cofactor % p == 0 for p in self.primes):
            raise ValueError(f"cofactor {self.cofactor} is not coprime to {self.primes}")

    @classmethod
    def zero(cls, S: PrimeSet) -> SInteger:
        return cls(S, 0, (), 1)

    @classmethod
    def of(cls, value: int | Fraction | str | SInteger, S: PrimeSet) -> SInteger:
        if isinstance(value, SInteger):
            if value.primes != S:
                raise PrimeSetMismatch(f"{value} lives over {value.primes}, not {S}")
            return value
        if isinstance(value, str):
            value = parse_rational(value)
        q = Fraction(value)
        return from_rational(q.numerator, q.denominator, S)

    @classmethod
    def unit(cls, S: PrimeSet, exponents: Sequence[int], sign: int = 1) -> SInteger:
        return cls(S, sign, tuple(int(e) for e in exponents), 1)

    @property
    def exps(self) -> dict[int, int]:
        return dict(zip(self.primes.primes, self.exponents))

    @property
    def value(self) -> Fraction:
        if self.sign == 0:
            return Fraction(0)
        num, den = self.cofactor, 1
        for p, e in zip(self.primes.primes, self.exponents):
            if e >= 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(self.sign * num, den)

    @property
    def is_unit(self) -> bool:
        return self.sign != 0 and self.cofactor == 1

    @property
    def is_integral(self) -> bool:
        return all(e >= 0 for e in self.exponents)

    @property
    def height(self) -> int:
        """Largest absolute exponent; 0 for zero and for pure cofactors."""
        return max((abs(e) for e in self.exponents), default=0)

    def _check(self, other: SInteger) -> None:
        if not isinstance(other, SInteger):
            raise TypeError(f"expected SInteger, got {type(other).__name__}")
        if other.primes != self.primes:
            raise PrimeSetMismatch(f"{self.primes} vs {other.primes}")

    def _lift(self, other: object) -> SInteger:
        if isinstance(other, SInteger):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SInteger.of(other, self.primes)
        return NotImplemented

    def __add__(self, other: object) -> SInteger:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return from_fraction(self.value + other.value, self.primes)

    __radd__ = __add__

    def __sub__(self, other: object) -> SInteger:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return from_fraction(self.value - other.value, self.primes)

    def __rsub__(self, other: object) -> SInteger:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return from_fraction(other.value - self.value, self.primes)

    def __mul__(self, other: object) -> SInteger:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.sign == 0 or other.sign == 0:
            return SInteger.zero(self.primes)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        return SInteger(self.primes, self.sign * other.sign, exps, self.cofactor * other.cofactor)

    __rmul__ = __mul__

    def __neg__(self) -> SInteger:
        return SInteger(self.primes, -self.sign, self.exponents, self.cofactor)

    def inverse(self) -> SInteger:
        """Multiplicative inverse; only units are invertible in Z_S."""
        if not self.is_unit:
            raise ValueError(f"{self} is not an S-unit")
        return SInteger(self.primes, self.sign, tuple(-e for e in self.exponents), 1)

    def __lt__(self, other: SInteger) -> bool:
        return self.value < other.value

    def __le__(self, other: SInteger) -> bool:
        return self.value <= other.value

    def __str__(self) -> str:
        return format_rational(self.value)

    def __repr__(self) -> str:
        return f"SInteger({self}, S={self.primes})"


def from_rational(numerator: int, denominator: int, S: PrimeSet) -> SInteger:
    """Inject numerator/denominator into Z_S in reduced, factored form."""
    if denominator == 0:
        raise ZeroDivisionError("denominator must be non-zero")
    return from_fraction(Fraction(numerator, denominator), S)


def from_fraction(q: Fraction, S: PrimeSet) -> SInteger:
    if q == 0:
        return SInteger.zero(S)
    num, den = abs(q.numerator), q.denominator
    exps = []
    for p in S.primes:
        e_num, num = _strip(num, p)
        e_den, den = _strip(den, p)
        exps.append(e_num - e_den)
    if den != 1:
        raise DenominatorNotSOnly(f"{q} has denominator factor {den} outside {S}")
    return SInteger(S, 1 if q > 0 else -1, tuple(exps), num)


def add(x: SInteger, y: SInteger) -> SInteger:
    x._check(y)
    return x + y


def sub(x: SInteger, y: SInteger) -> SInteger:
    x._check(y)
    return x - y


def mul(x: SInteger, y: SInteger) -> SInteger:
    x._check(y)
    return x * y


def neg(x: SInteger) -> SInteger:
    return -x


def is_s_unit(x: SInteger) -> bool:
    return x.is_unit


def crt_system(congruences: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Returns (x, M) with 0 <= x < M, M the product of the moduli; every
    solution is x + k*M.  The empty system gives (0, 1).
    """
    x, modulus = 0, 1
    for residue, m in congruences:
        if m < 2:
            raise ValueError(f"modulus must be at least 2, got {m}")
        if math.gcd(modulus, m) != 1:
            raise ModuliNotCoprime(f"modulus {m} shares a factor with {modulus}")
        # x + modulus*t = residue (mod m)
        t = (residue - x) * pow(modulus, -1, m) % m
        x += modulus * t
        modulus *= m
    return x % modulus, modulus


def crt_solve(congruences: Sequence[tuple[int, int]]) -> int:
    """Least non-negative solution of a pairwise coprime congruence system."""
    return crt_system(congruences)[0]


def s_units_by_height(S: PrimeSet, max_exponent: int) -> Iterator[SInteger]:
    """All +-prod p^e_p with |e_p| <= max_exponent.

    Order: ascending absolute value, positive before negative.  Distinct
    exponent vectors never share an absolute value, so the order is total.
    """
    if max_exponent < 0:
        raise ValueError("max_exponent must be non-negative")
    rng = range(-max_exponent, max_exponent + 1)
    vectors = list(itertools.product(rng, repeat=len(S)))
    keyed = []
    for vec in vectors:
        v = reduce(lambda acc, pe: acc * Fraction(pe[0]) ** pe[1], zip(S.primes, vec), Fraction(1))
        keyed.append((v, vec))
    keyed.sort()
    for _, vec in keyed:
        yield SInteger(S, 1, vec, 1)
        yield SInteger(S, -1, vec, 1)


def positive_integer_s_units(S: Iterable[int]) -> Iterator[int]:
    """1, then every positive integer supported on S, ascending, without end.

    For the empty set only 1 is produced.
    """
    primes = tuple(S)
    heap = [1]
    seen = {1}
    while heap:
        n = heapq.heappop(heap)
        yield n
        for p in primes:
            m = n * p
            if m not in seen:
                seen.add(m)
                heapq.heappush(heap, m)


def integer_s_units(S: Iterable[int]) -> Iterator[int]:
    """Integer S-units by absolute value, positive before negative: 1, -1, 2, -2, ..."""
    for n in positive_integer_s_units(S):
        yield n
        yield -n


def parse_rational(text: str) -> Fraction:
    """Parse "n/d" or "n" (base 10, optional leading '-')."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
