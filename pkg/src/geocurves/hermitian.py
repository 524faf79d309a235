"""Hermitian forms over an imaginary quadratic field, kept in diagonal form.

Over an imaginary quadratic K a nondegenerate hermitian space is determined
by its rank, its signature and its determinant modulo norms from K.  This
module also builds, for B = (n, disc K) containing K = Q(j), the trace form
of B viewed as a hermitian plane over K, and extends it to a ternary form
equivalent to a given ambient form of signature (2, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import is_squarefree
from .errors import (
    FieldMismatch,
    NotTotallyPositive,
    PreconditionViolation,
)
from .picard_surface import BallSurface, normal_form
from .qfields import KElement, QuadField, is_norm
from .quatalg import QuatAlg, QuatElement, embeds, matrix_embedding, quat_conj, quat_mul, ram_from_symbol

Gram = Sequence[Sequence[KElement]]


@dataclass(frozen=True)
class Signature:
    pos: int
    neg: int

    def __iter__(self):
        return iter((self.pos, self.neg))


@dataclass(frozen=True)
class HermForm:
    K: QuadField
    diag: tuple[Fraction, ...]

    def __post_init__(self):
        diag = tuple(Fraction(x) for x in self.diag)
        if any(x == 0 for x in diag):
            raise ValueError("diagonal entries of a nondegenerate form are nonzero")
        object.__setattr__(self, "diag", diag)

    @property
    def rank(self) -> int:
        return len(self.diag)

    def __str__(self):
        return "diag(" + ", ".join(str(x) for x in self.diag) + ")"


def default_form(K: QuadField) -> HermForm:
    return HermForm(K, (1, 1, -1))


def signature(h: HermForm) -> Signature:
    pos = sum(1 for x in h.diag if x > 0)
    return Signature(pos, h.rank - pos)


def det(h: HermForm) -> Fraction:
    out = Fraction(1)
    for x in h.diag:
        out *= x
    return out


def is_equivalent(h1: HermForm, h2: HermForm) -> bool:
    if h1.K != h2.K:
        raise FieldMismatch(f"forms over {h1.K} and {h2.K}")
    if not h1.K.is_imaginary:
        raise FieldMismatch(f"equivalence is only decided over imaginary quadratic fields, not {h1.K}")
    if h1.rank != h2.rank or signature(h1) != signature(h2):
        return False
    return is_norm(h1.K, det(h1) / det(h2))


def is_hermitian(G: Gram) -> bool:
    r = len(G)
    return all(G[k][l] == G[l][k].conj() for k in range(r) for l in range(r))


def diagonalize(K: QuadField, G: Gram) -> HermForm:
    """Orthogonal basis for the hermitian Gram matrix ``G`` by Gram-Schmidt.

    ``G[k][l] = h(e_k, e_l)``, linear in the first slot.
    """
    if not is_hermitian(G):
        raise ValueError("Gram matrix is not hermitian")
    r = len(G)
    sq = G[0][0].sq
    zero = KElement.rational(0, sq)

    def h(x, y):
        out = zero
        for k in range(r):
            for l in range(r):
                out = out + x[k] * G[k][l] * y[l].conj()
        return out

    def std(k):
        return [KElement.rational(1 if t == k else 0, sq) for t in range(r)]

    todo = [std(k) for k in range(r)]
    diag = []
    gen = KElement(0, 1, sq)
    while todo:
        pivot = next((i for i, w in enumerate(todo) if not h(w, w).is_zero()), None)
        if pivot is None:
            # every remaining vector is isotropic; w0 + c w_k is not for c = 1 or c = sqrt
            w0 = todo[0]
            for wk in todo[1:]:
                for c in (KElement.rational(1, sq), gen):
                    cand = [a + c * b for a, b in zip(w0, wk)]
                    if not h(cand, cand).is_zero():
                        todo[0] = cand
                        break
                else:
                    continue
                break
            else:
                raise ValueError("degenerate hermitian form")
            pivot = 0
        w = todo.pop(pivot)
        hw = h(w, w)
        if not hw.is_rational():
            raise ValueError("hermitian norm is not rational")
        diag.append(hw.u)
        todo = [[a - (h(v, w) / hw) * b for a, b in zip(v, w)] for v in todo]
    return HermForm(K, tuple(diag))


def _check_symbol(n: int, K: QuadField) -> QuatAlg:
    if n <= 0 or not is_squarefree(n):
        raise PreconditionViolation(f"n = {n} must be a positive squarefree integer")
    if not K.is_imaginary:
        raise PreconditionViolation(f"{K} is not imaginary quadratic")
    B = ram_from_symbol(n, K.disc)
    if B.is_definite or not embeds(K, B):
        raise PreconditionViolation(f"({n}, {K.disc}) is not an indefinite algebra containing {K}")
    return B


def trace_gram(n: int, K: QuadField) -> list[list[KElement]]:
    """Raw Gram matrix of (x, y) -> Tr(x conj(y)) on the K-basis {1, i} of
    B = (n, disc K), Tr being the trace of the right-conjugate action."""
    _check_symbol(n, K)
    D = K.disc
    basis = [QuatElement.make(n, D, 1), QuatElement.make(n, D, 0, 1)]
    return [
        [matrix_embedding(quat_mul(x, quat_conj(y)), K).trace() for y in basis]
        for x in basis
    ]


def trace_form(n: int, K: QuadField) -> HermForm:
    return diagonalize(K, trace_gram(n, K))


def extend_form(h: HermForm, hB: HermForm) -> HermForm:
    """hB plus an orthogonal line of norm det(h) / det(hB); same determinant as h."""
    if h.K != hB.K:
        raise FieldMismatch(f"forms over {h.K} and {hB.K}")
    if h.rank != hB.rank + 1:
        raise PreconditionViolation(f"cannot extend a rank {hB.rank} form to rank {h.rank}")
    ratio = det(h) / det(hB)
    if ratio <= 0:
        raise NotTotallyPositive(
            f"det(h)/det(hB) = {ratio} is not positive; hB has signature "
            f"{tuple(signature(hB))}, incompatible with {tuple(signature(h))}"
        )
    return HermForm(h.K, hB.diag + (ratio,))


def verify_curve(S: BallSurface, B: QuatAlg, h: HermForm | None = None) -> bool:
    """Rebuild the ambient hermitian space from B and compare it with h."""
    if h is None:
        h = default_form(S.K)
    if h.K != S.K:
        raise FieldMismatch(f"form over {h.K}, surface over {S.K}")
    if h.rank != 3 or tuple(signature(h)) != (2, 1):
        raise PreconditionViolation(f"{h} does not have signature (2, 1)")
    hB = trace_form(normal_form(S, B), S.K)
    return is_equivalent(extend_form(h, hB), h)
