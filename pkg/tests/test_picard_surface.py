from math import prod

import pytest

from geocurves.arith import is_squarefree, primes_up_to
from geocurves.errors import NotImaginary, NotRepresentable, PreconditionViolation, UnsupportedDeskScale
from geocurves.picard_surface import (
    GateVerdict,
    enumerate_classes,
    iter_classes,
    make_ball_surface,
    normal_form,
    simple_type_gate,
)
from geocurves.qfields import SplitType, splitting
from geocurves.quatalg import QuatAlg, embeds, is_division, ram_from_symbol, symbol_from_ram
from oracles import even_subsets

Q = QuatAlg.from_places
IMAGINARY = [d for d in range(-20, 0) if is_squarefree(d)]


def scan(S, B, top=10_000):
    # independent of the stride used by normal_form
    for n in range(1, top):
        if is_squarefree(n) and ram_from_symbol(n, S.K.disc) == B:
            return n
    return None


def test_make_ball_surface():
    S = make_ball_surface(-1)
    assert S.K.disc == -4 and not S.cocompact and S.simple_type
    with pytest.raises(NotImaginary):
        make_ball_surface(5)
    with pytest.raises(UnsupportedDeskScale, match="degree 2"):
        make_ball_surface(-1, base_degree=2)


def test_simple_type_gate():
    assert simple_type_gate(True)[0] is GateVerdict.PROCEED
    verdict, reason = simple_type_gate(False)
    assert verdict is GateVerdict.NO_CURVES and "simple type" in reason


def test_gaussian_classes():
    S = make_ball_surface(-1)
    got = enumerate_classes(S, 4)
    assert [c.B for c in got] == [QuatAlg(), Q([2, 3]), Q([2, 7]), Q([3, 7])]
    assert [c.n for c in got] == [1, 3, 7, 21]
    assert [c.cuspidal for c in got] == [True, False, False, False]
    for c in got:
        assert c.n == scan(S, c.B)
        assert c.symbol(S).as_list() == [c.n, -4]


def test_eisenstein_classes():
    # non-split primes of Q(sqrt -3): 2, 3, 5, 11, 17, ...
    S = make_ball_surface(-3)
    got = enumerate_classes(S, 5)
    assert [c.B for c in got] == [QuatAlg(), Q([2, 3]), Q([2, 5]), Q([3, 5]), Q([2, 11])]
    assert [c.n for c in got] == [1, 2, 10, 5, 22]


def test_normal_form_with_split_divisor():
    # 3 splits in Q(sqrt -14) yet divides the normal form of {2, 7}
    S = make_ball_surface(-14)
    assert splitting(S.K, 3) is SplitType.SPLIT
    assert normal_form(S, Q([2, 7])) == 3 == scan(S, Q([2, 7]))


def test_normal_form_preconditions():
    S = make_ball_surface(-1)
    with pytest.raises(PreconditionViolation, match="real place"):
        normal_form(S, Q(["inf", 2]))
    with pytest.raises(PreconditionViolation, match="splits"):
        normal_form(S, Q([2, 5]))
    assert not issubclass(NotRepresentable, ValueError)


@pytest.mark.parametrize("d", IMAGINARY)
def test_fifty_classes(d):
    S = make_ball_surface(d)
    got = enumerate_classes(S, 50)
    assert len({c.B for c in got}) == 50
    for c in got:
        assert not c.B.is_definite and embeds(S.K, c.B)
        assert c.cuspidal == (not is_division(c.B))
        assert ram_from_symbol(c.n, S.K.disc) == c.B
        assert c.n > 0 and is_squarefree(c.n)


@pytest.mark.parametrize("d", [-1, -2, -3, -7, -14, -15])
def test_normal_form_matches_scan(d):
    S = make_ball_surface(d)
    for c in enumerate_classes(S, 15):
        assert c.n == scan(S, c.B)


@pytest.mark.parametrize("d", [-1, -5, -7])
def test_completeness_small_scale(d):
    S = make_ball_surface(d)
    bound = 30
    brute = {
        Q(T)
        for T in even_subsets(primes_up_to(bound))
        if all(splitting(S.K, p) is not SplitType.SPLIT for p in T)
    }
    support = [p for p in primes_up_to(bound) if splitting(S.K, p) is not SplitType.SPLIT]
    got = set()
    for c in iter_classes(S):
        if prod(c.B.primes) > prod(support):
            break
        if max(c.B.primes, default=0) <= bound:
            got.add(c.B)
    assert got == brute
    assert all(embeds(S.K, B) for B in brute)


def test_normal_form_symbol_roundtrip():
    S = make_ball_surface(-7)
    for c in enumerate_classes(S, 10):
        rep = symbol_from_ram(c.B)
        assert ram_from_symbol(rep.a, rep.b) == ram_from_symbol(c.n, -7)
