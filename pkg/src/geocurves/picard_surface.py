"""Geodesic curves on Picard-type ball quotients.

A simple-type lattice in SU(2,1) with base field Q is determined up to
commensurability by an imaginary quadratic field K.  Its classes of
geodesic curves correspond to indefinite quaternion algebras over Q that
ramify only at primes not split in K, and each such algebra is
(n, disc K) for a positive squarefree n.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .arith import is_squarefree
from .errors import (
    InternalInconsistency,
    NotImaginary,
    NotRepresentable,
    PreconditionViolation,
    UnsupportedDeskScale,
)
from .qfields import QuadField, SplitType, nonsplit_prime_sets, splitting
from .quatalg import HilbertSymbolRep, QuatAlg, embeds, is_division, ram_from_symbol

NORMAL_FORM_BOUND = 10**9

NOT_SIMPLE_TYPE_REASON = (
    "only lattices of simple type (defined by a hermitian form over a CM field) "
    "contain totally geodesic curves; this lattice has no geodesic curves"
)


@dataclass(frozen=True)
class BallSurface:
    K: QuadField
    cocompact: bool = False
    simple_type: bool = True


@dataclass(frozen=True)
class BallCurveClass:
    B: QuatAlg
    n: int
    cuspidal: bool

    def symbol(self, S: BallSurface) -> HilbertSymbolRep:
        return HilbertSymbolRep(self.n, S.K.disc)


class GateVerdict(enum.Enum):
    PROCEED = "proceed"
    NO_CURVES = "no curves"


def make_ball_surface(d: int, base_degree: int = 1) -> BallSurface:
    if base_degree != 1:
        raise UnsupportedDeskScale(
            f"totally real base field of degree {base_degree}: only base field Q is "
            "computed; the general classification ranges over quaternion algebras over "
            "the base field ramified at all but one infinite place"
        )
    if d >= 0:
        raise NotImaginary(f"d = {d} does not give an imaginary quadratic field")
    return BallSurface(QuadField(d))


def simple_type_gate(is_simple_type: bool = True) -> tuple[GateVerdict, str]:
    if is_simple_type:
        return GateVerdict.PROCEED, "simple type"
    return GateVerdict.NO_CURVES, NOT_SIMPLE_TYPE_REASON


def _check_admissible(S: BallSurface, B: QuatAlg):
    if B.is_definite:
        raise PreconditionViolation(f"{B} is ramified at the real place")
    for p in B.primes:
        if splitting(S.K, p) is SplitType.SPLIT:
            raise PreconditionViolation(f"{B} is ramified at {p}, which splits in {S.K}")


def normal_form(S: BallSurface, B: QuatAlg) -> int:
    """Smallest positive squarefree n with (n, disc K) isomorphic to B."""
    _check_admissible(S, B)
    D = S.K.disc
    # an odd prime ramifies in (n, D) only if it divides nD, and 2 must divide n
    # when 2 ramifies but D is odd
    forced = 1
    for p in B.primes:
        if D % p:
            forced *= p
    for n in range(forced, NORMAL_FORM_BOUND, forced):
        if is_squarefree(n) and ram_from_symbol(n, D) == B:
            return n
    raise NotRepresentable(f"no squarefree n < {NORMAL_FORM_BOUND} with ({B}) = (n, {D})")


def iter_classes(S: BallSurface) -> Iterator[BallCurveClass]:
    for primes in nonsplit_prime_sets(S.K, 0):
        B = QuatAlg.from_places(primes)
        if not embeds(S.K, B):
            raise InternalInconsistency(f"{S.K} does not embed in {B}")
        yield BallCurveClass(B, normal_form(S, B), cuspidal=not is_division(B))


def enumerate_classes(S: BallSurface, limit: int) -> list[BallCurveClass]:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return list(islice(iter_classes(S), limit))
