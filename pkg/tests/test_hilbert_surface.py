from math import prod

import pytest

from geocurves.arith import INF, primes_up_to
from geocurves.errors import (
    InfiniteRamification,
    NotAdmissible,
    NotTotallyReal,
    OddRamification,
    PlaceInconsistentWithSplitting,
)
from geocurves.hilbert_surface import (
    Obstruction,
    admits_fuchsian,
    enumerate_classes,
    iter_classes,
    no_quadratic_subfield,
    parse_ram,
    same_class,
    validate_surface,
)
from geocurves.qfields import SplitType, make_field, splitting
from geocurves.quatalg import KPlace, QuatAlg, is_division, ram_from_symbol, tensor_ram
from oracles import even_subsets

Q = QuatAlg.from_places
SQRT5 = make_field(5)
S11 = KPlace(11, 0, SplitType.SPLIT), KPlace(11, 1, SplitType.SPLIT)


def surface(d, spec):
    K = make_field(d)
    return validate_surface(K, parse_ram(K, spec))


def test_validate_examples():
    S = validate_surface(SQRT5, [])
    assert S.ramA == frozenset()
    with pytest.raises(OddRamification):
        validate_surface(SQRT5, [S11[0]])
    with pytest.raises(PlaceInconsistentWithSplitting):
        validate_surface(SQRT5, [KPlace(2, 0, SplitType.SPLIT), S11[0]])
    with pytest.raises(PlaceInconsistentWithSplitting):
        validate_surface(SQRT5, [KPlace(11, 0, SplitType.INERT), KPlace(2, 0, SplitType.INERT)])
    with pytest.raises(NotTotallyReal):
        validate_surface(make_field(-1), [])
    with pytest.raises(InfiniteRamification):
        validate_surface(SQRT5, [KPlace(0, 0, SplitType.SPLIT), KPlace(0, 1, SplitType.SPLIT)])


def test_parse_ram():
    assert parse_ram(SQRT5, "11:both") == list(S11)
    assert parse_ram(SQRT5, "") == []
    assert parse_ram(SQRT5, "2, 3") == [KPlace(2, 0, SplitType.INERT), KPlace(3, 0, SplitType.INERT)]
    assert parse_ram(SQRT5, "5") == [KPlace(5, 0, SplitType.RAMIFIED)]
    with pytest.raises(PlaceInconsistentWithSplitting):
        parse_ram(SQRT5, "11")
    with pytest.raises(InfiniteRamification):
        parse_ram(SQRT5, "inf")
    with pytest.raises(PlaceInconsistentWithSplitting):
        parse_ram(SQRT5, "11:x")


def test_admits_examples():
    v = admits_fuchsian(validate_surface(SQRT5, []))
    assert v.admissible and v.base == ()
    v = admits_fuchsian(validate_surface(SQRT5, S11))
    assert v.admissible and v.base == (11,)
    assert tensor_ram(Q([11, 2]), SQRT5) == frozenset(S11)
    v = admits_fuchsian(surface(5, "11:0,19:0"))
    assert not v.admissible and "11:1" in v.reason


def test_admits_rejects_nonsplit_places():
    v = admits_fuchsian(surface(5, "2,3"))
    assert not v.admissible and "does not split" in v.reason
    with pytest.raises(NotAdmissible):
        enumerate_classes(surface(5, "2,3"), 3)


def test_enumerate_trivial_ramification():
    # non-split primes of Q(sqrt 5): 2, 3, 5, 7, 13, 17, 23, ...; pair products 6, 10, 14, 15, 21
    got = [c.B for c in enumerate_classes(validate_surface(SQRT5, []), 6)]
    assert got == [QuatAlg(), Q([2, 3]), Q([2, 5]), Q([2, 7]), Q([3, 5]), Q([3, 7])]


def test_enumerate_over_11():
    got = [c.B for c in enumerate_classes(validate_surface(SQRT5, S11), 4)]
    assert got == [Q([11, 2]), Q([11, 3]), Q([11, 5]), Q([11, 7])]


def test_enumerate_limit_zero():
    assert enumerate_classes(validate_surface(SQRT5, []), 0) == []


def test_symbols_represent_classes():
    for c in enumerate_classes(validate_surface(SQRT5, S11), 8):
        assert ram_from_symbol(c.symbol.a, c.symbol.b) == c.B


SURFACES = [(5, ""), (5, "11:both"), (2, ""), (13, "3:both"), (3, ""), (5, "11:both,19:both")]


@pytest.mark.parametrize("d, spec", SURFACES)
def test_soundness_distinctness_coherence(d, spec):
    S = surface(d, spec)
    classes = enumerate_classes(S, 50)
    assert len(classes) == 50
    assert len({c.B for c in classes}) == 50
    for c in classes:
        assert tensor_ram(c.B, S.K) == S.ramA
        assert INF not in c.B.ram
        assert c.cocompact == is_division(c.B)
        if S.ramA:
            assert c.cocompact
    assert (QuatAlg() in {c.B for c in classes}) == (not S.ramA)


def _restricted(S, bound):
    # no class supported on primes <= bound has a larger product than cap
    base = {v.p for v in S.ramA}
    cap = prod(p for p in primes_up_to(bound) if p in base or splitting(S.K, p) is not SplitType.SPLIT)
    out = []
    for c in iter_classes(S):
        if prod(c.B.primes) > cap:
            break
        if all(p <= bound for p in c.B.primes):
            out.append(c.B)
    return out


@pytest.mark.parametrize("d, spec", [(5, ""), (5, "11:both"), (13, "3:both")])
def test_completeness_small_scale(d, spec):
    S = surface(d, spec)
    brute = {
        Q(T)
        for T in even_subsets(["inf"] + primes_up_to(19))
        if "inf" not in T and tensor_ram(Q(T), S.K) == S.ramA
    }
    got = _restricted(S, 19)
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_same_class_examples():
    B = Q([2, 3])
    assert same_class(B, B, SQRT5)
    assert not same_class(Q([2, 3]), Q([2, 7]), SQRT5)
    assert not same_class(Q([11, 2]), Q([11, 3]), SQRT5)
    assert not same_class(Q([11, 2]), Q([2, 3]), SQRT5)


@pytest.mark.parametrize("degree, verdict", [(1, Obstruction.OBSTRUCTED), (2, Obstruction.POSSIBLE), (3, Obstruction.OBSTRUCTED), (5, Obstruction.OBSTRUCTED), (6, Obstruction.POSSIBLE)])
def test_no_quadratic_subfield(degree, verdict):
    assert no_quadratic_subfield(degree) is verdict
