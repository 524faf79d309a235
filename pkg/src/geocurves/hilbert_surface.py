"""Geodesic curves on quaternionic Shimura surfaces covered by H^2 x H^2.

The surface is given by a real quadratic field K and the finite
ramification of a quaternion algebra A over K that is split at both real
places.  Classes of arithmetic Fuchsian subgroups correspond to
indefinite quaternion algebras B over Q with K (x) B = A; over Q the
automorphism group acting on such B is trivial, so classes are just
isomorphism classes of B.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import islice
from typing import Iterable, Iterator

from .arith import Place
from .errors import (
    InfiniteRamification,
    InternalInconsistency,
    NotAdmissible,
    NotTotallyReal,
    OddRamification,
    PlaceInconsistentWithSplitting,
)
from .qfields import QuadField, SplitType, nonsplit_prime_sets, splitting
from .quatalg import (
    HilbertSymbolRep,
    KPlace,
    QuatAlg,
    is_division,
    is_isomorphic,
    symbol_from_ram,
    tensor_ram,
)

__all__ = [
    "KPlace",
    "QuaternionSurface",
    "CurveClass",
    "Admissibility",
    "Obstruction",
    "validate_surface",
    "parse_ram",
    "admits_fuchsian",
    "enumerate_classes",
    "iter_classes",
    "same_class",
    "no_quadratic_subfield",
]


@dataclass(frozen=True)
class QuaternionSurface:
    K: QuadField
    ramA: frozenset[KPlace]

    def labels(self) -> list[str]:
        return [str(v) for v in sorted(self.ramA)]


@dataclass(frozen=True)
class CurveClass:
    B: QuatAlg
    cocompact: bool

    @cached_property
    def symbol(self) -> HilbertSymbolRep:
        return symbol_from_ram(self.B)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    base: tuple[int, ...]
    reason: str

    def __bool__(self):
        return self.admissible


class Obstruction(enum.Enum):
    OBSTRUCTED = "obstructed"
    POSSIBLE = "possible"


def parse_ram(K: QuadField, spec: str) -> list[KPlace]:
    """Parse ``"11:both, 2, 19:0"`` into places of K.

    ``p:both`` names both places over a split prime, ``p:0``/``p:1`` one
    of them, and a bare ``p`` the unique place over a non-split prime.
    ``p:0``, ``p:1`` and ``p:both`` record a split place whatever p does in
    K; :func:`validate_surface` rejects the ones that are inconsistent.
    """
    places: list[KPlace] = []
    for raw in spec.replace(" ", "").split(","):
        if not raw:
            continue
        head, _, tail = raw.partition(":")
        if head.lower() in ("inf", "oo"):
            raise InfiniteRamification(
                "A must be split at both real places of K to act on H^2 x H^2"
            )
        try:
            p = int(head)
        except ValueError:
            raise PlaceInconsistentWithSplitting(f"cannot parse place token {raw!r}") from None
        Place.finite(p)
        if tail == "":
            actual = splitting(K, p)
            if actual is SplitType.SPLIT:
                raise PlaceInconsistentWithSplitting(
                    f"token {raw!r} names the unique place over {p}, but {p} splits in {K}; "
                    f"use {p}:0, {p}:1 or {p}:both"
                )
            places.append(KPlace(p, 0, actual))
        elif tail == "both":
            places += [KPlace(p, 0, SplitType.SPLIT), KPlace(p, 1, SplitType.SPLIT)]
        elif tail in ("0", "1"):
            places.append(KPlace(p, int(tail), SplitType.SPLIT))
        else:
            raise PlaceInconsistentWithSplitting(f"cannot parse place token {raw!r}")
    return places


def validate_surface(K: QuadField, ramA: Iterable[KPlace]) -> QuaternionSurface:
    if K.is_imaginary:
        raise NotTotallyReal(f"{K} is imaginary; H^2 x H^2 quotients need a real quadratic field")
    ramA = list(ramA)
    for v in ramA:
        if v.is_infinite:
            raise InfiniteRamification(
                "A must be split at both real places of K to act on H^2 x H^2"
            )
        actual = splitting(K, v.p)
        if (v.split_type is SplitType.SPLIT) != (actual is SplitType.SPLIT):
            raise PlaceInconsistentWithSplitting(
                f"place {v} is given as {v.split_type.value}, but {v.p} is "
                f"{actual.value} in {K}"
            )
    places = frozenset(ramA)
    if len(places) % 2:
        raise OddRamification(
            f"A ramifies at an odd number ({len(places)}) of places of {K}; the number must be even"
        )
    return QuaternionSurface(K, places)


def admits_fuchsian(S: QuaternionSurface) -> Admissibility:
    """A = K (x) B for some B iff ramA consists of full pairs over split primes."""
    for v in sorted(S.ramA):
        if v.split_type is not SplitType.SPLIT:
            return Admissibility(
                False,
                (),
                f"A ramifies at the place over {v.p}, which does not split in {S.K}; "
                "K (x) B is unramified there for every B",
            )
        partner = KPlace(v.p, 1 - v.tag, SplitType.SPLIT)
        if partner not in S.ramA:
            return Admissibility(
                False,
                (),
                f"A ramifies at {v} but not at {partner}; K (x) B ramifies at both "
                "places over a split prime or at neither",
            )
    base = tuple(sorted({v.p for v in S.ramA}))
    return Admissibility(
        True,
        base,
        "A is ramified exactly at full pairs of places over split primes, so it "
        "descends to indefinite quaternion algebras over Q",
    )


def iter_classes(S: QuaternionSurface) -> Iterator[CurveClass]:
    verdict = admits_fuchsian(S)
    if not verdict:
        raise NotAdmissible(verdict.reason)
    base = verdict.base
    for T in nonsplit_prime_sets(S.K, len(base) % 2):
        B = QuatAlg.from_places(base + T)
        if tensor_ram(B, S.K) != S.ramA:
            raise InternalInconsistency(f"{B} does not extend to A over {S.K}")
        yield CurveClass(B, is_division(B))


def enumerate_classes(S: QuaternionSurface, limit: int) -> list[CurveClass]:
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return list(islice(iter_classes(S), limit))


def same_class(B1: QuatAlg, B2: QuatAlg, K: QuadField) -> bool:
    if tensor_ram(B1, K) == tensor_ram(B2, K):
        diff = set(B1.ram) ^ set(B2.ram)
        for v in diff:
            if v.is_infinite or splitting(K, v.p) is SplitType.SPLIT:
                raise InternalInconsistency(
                    f"{B1} and {B2} give the same algebra over {K} but differ at {v}"
                )
    return is_isomorphic(B1, B2)


def no_quadratic_subfield(degree: int) -> Obstruction:
    """Fields of odd degree have no quadratic subfield (tower law)."""
    if degree < 1:
        raise ValueError("degree must be positive")
    return Obstruction.OBSTRUCTED if degree % 2 else Obstruction.POSSIBLE
