"""Quaternion algebras over Q.

An algebra is stored canonically by its ramification set; a Hilbert symbol
(a, b) is only a representative.  Explicit elements of (a, b) and the
2x2 matrix realisation over a quadratic subfield live here as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from .arith import INF, Place, factor, hilbert_local, squarefree_part
from .errors import (
    BasisMismatch,
    OddRamification,
    SearchBoundExceeded,
    SymbolMismatch,
    ZeroArgument,
)
from .qfields import KElement, QuadField, SplitType, splitting

SYMBOL_SEARCH_BOUND = 100_000


@dataclass(frozen=True)
class QuatAlg:
    """A quaternion algebra over Q, given by its (even) ramification set."""

    ram: tuple[Place, ...] = ()

    def __post_init__(self):
        places = tuple(sorted(set(self.ram)))
        if len(places) % 2:
            raise OddRamification(
                f"ramification set {{{', '.join(map(str, places))}}} has odd size; "
                "a quaternion algebra over Q ramifies at an even number of places"
            )
        object.__setattr__(self, "ram", places)

    @classmethod
    def from_places(cls, places: Iterable[Place | int | str]) -> QuatAlg:
        out = []
        for v in places:
            if isinstance(v, Place):
                out.append(v)
            elif isinstance(v, str):
                out.append(Place.parse(v))
            else:
                out.append(Place(v))
        return cls(tuple(out))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(v.p for v in self.ram if not v.is_infinite)

    @property
    def is_definite(self) -> bool:
        return INF in self.ram

    def labels(self) -> list[str]:
        return [str(v) for v in self.ram]

    def __str__(self):
        return "{" + ", ".join(self.labels()) + "}"


M2Q = QuatAlg()


@dataclass(frozen=True)
class HilbertSymbolRep:
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ZeroArgument("Hilbert symbol entries must be nonzero")

    def algebra(self) -> QuatAlg:
        return ram_from_symbol(self.a, self.b)

    def as_list(self) -> list[int]:
        return [self.a, self.b]


def ram_from_symbol(a: int, b: int) -> QuatAlg:
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol entries must be nonzero")
    candidates = [INF] + [Place(p) for p in factor(2 * a * b).primes()]
    return QuatAlg(tuple(v for v in candidates if hilbert_local(a, b, v) == -1))


def _symbol_key(ab: tuple[int, int]):
    # |a| + |b|, then |a|, positive before negative in each slot
    a, b = ab
    return (abs(a) + abs(b), abs(a), a < 0, b < 0)


def symbol_from_ram(S: QuatAlg, bound: int = SYMBOL_SEARCH_BOUND) -> HilbertSymbolRep:
    """First (a, b) with ramification S, in the order of ``_symbol_key``.

    Only squarefree a, b with every odd prime of S dividing ab can come
    first (any other pair has an earlier pair with the same algebra, or the
    wrong ramification), so candidates are generated from that shape.
    """
    odd = 1
    for p in S.primes:
        if p != 2:
            odd *= p
    definite = S.is_definite
    done = 1  # every pair with |a| + |b| <= done has been tested
    limit = 16
    while done < bound:
        limit = min(2 * limit, bound)
        sqfree = _squarefree_sieve(limit)
        batch = []
        for an in range(1, limit):
            if not sqfree[an]:
                continue
            step = odd // gcd(an, odd)  # ab must be divisible by odd
            lo = max(1, done + 1 - an)
            first = -(-lo // step) * step
            for bn in range(first, limit - an + 1, step):
                if not sqfree[bn]:
                    continue
                for a in (an, -an):
                    for b in (bn, -bn):
                        if (a < 0 and b < 0) == definite:
                            batch.append((a, b))
        batch.sort(key=_symbol_key)
        for a, b in batch:
            if all(hilbert_local(a, b, v) == -1 for v in S.ram) and ram_from_symbol(a, b) == S:
                return HilbertSymbolRep(a, b)
        done = limit
    raise SearchBoundExceeded(f"no Hilbert symbol for {S} with |a| + |b| <= {bound}")


def _squarefree_sieve(n: int) -> bytearray:
    flags = bytearray([1]) * (n + 1)
    flags[0] = 0
    q = 2
    while q * q <= n:
        flags[q * q :: q * q] = bytearray(len(range(q * q, n + 1, q * q)))
        q += 1
    return flags


def is_isomorphic(B1: QuatAlg, B2: QuatAlg) -> bool:
    return B1.ram == B2.ram


def is_division(B: QuatAlg) -> bool:
    return bool(B.ram)


def embeds(K: QuadField, B: QuatAlg) -> bool:
    """Whether K is isomorphic to a subfield of B (K splits B locally everywhere)."""
    for v in B.ram:
        if v.is_infinite:
            if not K.is_imaginary:
                return False
        elif splitting(K, v.p) is SplitType.SPLIT:
            return False
    return True


@dataclass(frozen=True, order=True)
class KPlace:
    """A place of a quadratic field K over the rational place ``p``
    (``p == 0`` for the real places of a real quadratic K)."""

    p: int
    tag: int
    split_type: SplitType = field(compare=False)

    def __post_init__(self):
        if self.tag not in (0, 1):
            raise ValueError("place tag must be 0 or 1")
        if self.tag == 1 and self.split_type is not SplitType.SPLIT:
            raise ValueError(f"place tag 1 over {self.p} requires a split prime")

    @property
    def is_infinite(self) -> bool:
        return self.p == 0

    def __str__(self):
        base = "inf" if self.p == 0 else str(self.p)
        if self.split_type is SplitType.SPLIT:
            return f"{base}:{self.tag}"
        return base


def tensor_ram(B: QuatAlg, K: QuadField) -> frozenset[KPlace]:
    """Ramification of K (x) B, as places of K."""
    out = set()
    for v in B.ram:
        if v.is_infinite:
            if not K.is_imaginary:
                out.update(KPlace(0, t, SplitType.SPLIT) for t in (0, 1))
            continue
        if splitting(K, v.p) is SplitType.SPLIT:
            out.update(KPlace(v.p, t, SplitType.SPLIT) for t in (0, 1))
    return frozenset(out)


# -- explicit quaternions ---------------------------------------------------


@dataclass(frozen=True)
class QuatElement:
    """x0 + x1 i + x2 j + x3 ij in (a, b): i^2 = a, j^2 = b, ij = -ji."""

    a: int
    b: int
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise ValueError("a quaternion has four coordinates")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def make(cls, a: int, b: int, x0=0, x1=0, x2=0, x3=0) -> QuatElement:
        return cls(a, b, (x0, x1, x2, x3))

    @property
    def symbol(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __mul__(self, other):
        if isinstance(other, QuatElement):
            return quat_mul(self, other)
        c = Fraction(other)
        return QuatElement(self.a, self.b, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __add__(self, other: QuatElement):
        _same_symbol(self, other)
        return QuatElement(self.a, self.b, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return QuatElement(self.a, self.b, tuple(-x for x in self.coeffs))

    def __sub__(self, other: QuatElement):
        return self + (-other)


def _same_symbol(x: QuatElement, y: QuatElement):
    if x.symbol != y.symbol:
        raise SymbolMismatch(f"elements of ({x.a}, {x.b}) and ({y.a}, {y.b})")


def quat_mul(x: QuatElement, y: QuatElement) -> QuatElement:
    _same_symbol(x, y)
    a, b = x.a, x.b
    x0, x1, x2, x3 = x.coeffs
    y0, y1, y2, y3 = y.coeffs
    return QuatElement(
        a,
        b,
        (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ),
    )


def quat_conj(x: QuatElement) -> QuatElement:
    x0, x1, x2, x3 = x.coeffs
    return QuatElement(x.a, x.b, (x0, -x1, -x2, -x3))


def reduced_trace(x: QuatElement) -> Fraction:
    return 2 * x.coeffs[0]


def reduced_norm(x: QuatElement) -> Fraction:
    x0, x1, x2, x3 = x.coeffs
    return x0 * x0 - x.a * x1 * x1 - x.b * x2 * x2 + x.a * x.b * x3 * x3


# -- 2x2 matrices over K ----------------------------------------------------


@dataclass(frozen=True)
class KMatrix2:
    rows: tuple[tuple[KElement, KElement], tuple[KElement, KElement]]

    @property
    def sq(self) -> int:
        return self.rows[0][0].sq

    @classmethod
    def identity(cls, sq: int) -> KMatrix2:
        one, zero = KElement.rational(1, sq), KElement.rational(0, sq)
        return cls(((one, zero), (zero, one)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: KMatrix2) -> KMatrix2:
        r = self.rows
        s = other.rows
        return KMatrix2(
            tuple(
                tuple(r[i][0] * s[0][j] + r[i][1] * s[1][j] for j in range(2))
                for i in range(2)
            )
        )

    def __add__(self, other: KMatrix2) -> KMatrix2:
        return KMatrix2(
            tuple(tuple(self.rows[i][j] + other.rows[i][j] for j in range(2)) for i in range(2))
        )

    def trace(self) -> KElement:
        return self.rows[0][0] + self.rows[1][1]

    def det(self) -> KElement:
        r = self.rows
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]

    def conj(self) -> KMatrix2:
        return KMatrix2(tuple(tuple(e.conj() for e in row) for row in self.rows))


def k_coordinates(z: QuatElement) -> tuple[KElement, KElement]:
    """(alpha, beta) in K = Q(j) with z = alpha + beta i."""
    x0, x1, x2, x3 = z.coeffs
    # x3 ij = -x3 j i
    return KElement(x0, x2, z.b), KElement(x1, -x3, z.b)


def matrix_embedding(z: QuatElement, K: QuadField | None = None) -> KMatrix2:
    """Matrix of the left K-linear map w -> w * conj(z) on B = K + K i.

    For z = alpha + beta i this is [[conj(alpha), -a conj(beta)], [-beta, alpha]]
    acting on coordinate columns (u, v) of w = u + v i.
    """
    if K is not None and squarefree_part(z.b) != K.d:
        raise BasisMismatch(f"j^2 = {z.b} does not generate {K}")
    if squarefree_part(z.b) == 1:
        raise BasisMismatch(f"j^2 = {z.b} is a square, so Q(j) is not a field")
    alpha, beta = k_coordinates(z)
    return KMatrix2(((alpha.conj(), -z.a * beta.conj()), (-beta, alpha)))
