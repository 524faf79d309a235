"""Quadratic fields Q(sqrt(d)) and the behaviour of rational primes in them."""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

from .arith import (
    INF,
    Place,
    factor,
    hilbert_local,
    is_prime,
    is_squarefree,
    kronecker,
    primes,
    squarefree_part,
)
from .errors import DegenerateRadicand, NotPrime, NotSquarefree, ZeroArgument


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    @property
    def is_split(self) -> bool:
        return self is SplitType.SPLIT


class Signature(enum.Enum):
    TOTALLY_REAL = "totally real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt(d)) for a squarefree radicand d not in {0, 1}."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise DegenerateRadicand(f"radicand {self.d} does not give a quadratic field")
        if not is_squarefree(self.d):
            raise NotSquarefree(f"radicand {self.d} is not squarefree")

    @property
    def disc(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def signature(self) -> Signature:
        return Signature.IMAGINARY if self.d < 0 else Signature.TOTALLY_REAL

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    def ramified_primes(self) -> list[int]:
        return factor(self.disc).primes()

    def __str__(self):
        if self.d == -1:
            return "Q(i)"
        return f"Q(sqrt({self.d}))"


def make_field(d: int) -> QuadField:
    return QuadField(d)


def splitting(K: QuadField, p: int) -> SplitType:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    s = kronecker(K.disc, p)
    if s == 0:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if s == 1 else SplitType.INERT


def is_nonsplit(K: QuadField, p: int) -> bool:
    return not splitting(K, p).is_split


def nonsplit_primes(K: QuadField):
    """Ascending, unbounded stream of primes that are inert or ramified in K."""
    D = K.disc
    return (p for p in primes() if kronecker(D, p) != 1)


def first_nonsplit_primes(K: QuadField, count: int) -> list[int]:
    return list(islice(nonsplit_primes(K), count))


def is_norm(K: QuadField, x) -> bool:
    """Whether the nonzero rational x is a norm from K.

    Uses Hasse's norm theorem: x is a norm iff (x, d)_v = 1 everywhere, and
    only the real place and primes dividing 2 * x * disc can obstruct.
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("0 is not in the multiplicative group")
    # x and num * den differ by the square den^2; drop squares before multiplying
    t = squarefree_part(x.numerator) * squarefree_part(x.denominator)
    places = [INF] + [Place(p) for p in sorted(set(factor(2 * t).primes()) | set(K.ramified_primes()))]
    return all(hilbert_local(t, K.d, v) == 1 for v in places)


@dataclass(frozen=True)
class KElement:
    """u + v * s with s^2 = ``sq``; rational u, v.

    ``sq`` is the square of the chosen generator, which need not be the
    squarefree radicand (a quaternion symbol (n, D) generates K by j with
    j^2 = D).
    """

    u: Fraction
    v: Fraction
    sq: int

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    @classmethod
    def rational(cls, x, sq: int) -> KElement:
        return cls(Fraction(x), Fraction(0), sq)

    def _check(self, other: KElement):
        if self.sq != other.sq:
            raise ValueError(f"elements of different fields (s^2 = {self.sq} vs {other.sq})")

    def _coerce(self, other) -> KElement:
        if isinstance(other, KElement):
            self._check(other)
            return other
        return KElement.rational(other, self.sq)

    def __add__(self, other):
        o = self._coerce(other)
        return KElement(self.u + o.u, self.v + o.v, self.sq)

    __radd__ = __add__

    def __neg__(self):
        return KElement(-self.u, -self.v, self.sq)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return KElement(
            self.u * o.u + self.sq * self.v * o.v, self.u * o.v + self.v * o.u, self.sq
        )

    __rmul__ = __mul__

    def conj(self) -> KElement:
        return KElement(self.u, -self.v, self.sq)

    def norm(self) -> Fraction:
        return self.u * self.u - self.sq * self.v * self.v

    def trace(self) -> Fraction:
        return 2 * self.u

    def inverse(self) -> KElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element has zero norm")
        c = self.conj()
        return KElement(c.u / n, c.v / n, self.sq)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        return f"{self.u} + {self.v}*sqrt({self.sq})"


def nonsplit_prime_sets(K: QuadField, parity: int):
    """Finite sets of non-split primes of K with size = parity (mod 2),
    ascending by product.  Distinct sets have distinct products.

    Sets form a tree rooted at {}: a set whose largest prime is the i-th
    non-split prime has the children "append prime i+1" and "replace prime
    i by prime i+1", both with larger product, so a heap yields every set
    once in increasing order.
    """
    stream = nonsplit_primes(K)
    ps: list[int] = []

    def prime(i):
        while len(ps) <= i:
            ps.append(next(stream))
        return ps[i]

    heap = [(1, ())]  # (product, indices into ps)
    while True:
        prod, idx = heapq.heappop(heap)
        if len(idx) % 2 == parity:
            yield tuple(prime(i) for i in idx)
        nxt = idx[-1] + 1 if idx else 0
        heapq.heappush(heap, (prod * prime(nxt), idx + (nxt,)))
        if idx:
            heapq.heappush(heap, (prod // prime(idx[-1]) * prime(nxt), idx[:-1] + (nxt,)))
