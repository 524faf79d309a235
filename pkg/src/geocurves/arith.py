"""Exact integer arithmetic: primes, factorization, residue symbols and
local Hilbert symbols over the rationals.

Every function here is a pure function of its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from math import isqrt

import numpy as np

from .errors import (
    BoundExceeded,
    NotOddPrime,
    NotPrime,
    OracleBoundExceeded,
    ZeroArgument,
    ZeroInput,
    ZeroModulus,
)

FACTOR_BOUND = 10**12
ORACLE_PRIME_BOUND = 100
ORACLE_ARG_BOUND = 1000
# largest modulus p^k the brute-force oracle will scan
ORACLE_MODULUS_BOUND = 1 << 24

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
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


def primes():
    """Ascending stream of all primes (segmented sieve)."""
    lo, hi = 2, 1 << 12
    while True:
        base = primes_up_to(isqrt(hi))
        seg = bytearray([1]) * (hi - lo)
        for q in base:
            start = max(q * q, -(-lo // q) * q)
            seg[start - lo :: q] = bytearray(len(range(start, hi, q)))
        for i, flag in enumerate(seg):
            if flag:
                yield lo + i
        lo, hi = hi, 2 * hi


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@total_ordering
@dataclass(frozen=True)
class Place:
    """A place of Q: the real place (``p == 0``) or the prime ``p``.

    Sorting puts the real place first, then primes in increasing order.
    """

    p: int

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime, so it does not define a place")

    @classmethod
    def finite(cls, p: int) -> Place:
        if p == 0:
            raise NotPrime("0 is not prime")
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.p == 0

    def __lt__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self.p < other.p

    def __str__(self):
        return "inf" if self.p == 0 else str(self.p)

    def __repr__(self):
        return f"Place({self})"

    @classmethod
    def parse(cls, token: str) -> Place:
        token = token.strip().lower()
        if token in ("inf", "infinity", "oo"):
            return INF
        return cls.finite(int(token))


INF = Place(0)


@dataclass(frozen=True)
class Factorization:
    sign: int
    exponents: dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        out = self.sign
        for p, e in self.exponents.items():
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return list(self.exponents)


def factor(n: int, bound: int = FACTOR_BOUND) -> Factorization:
    """Prime factorization by trial division.

    >>> factor(-12)
    Factorization(sign=-1, exponents={2: 2, 3: 1})
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    if abs(n) > bound:
        raise BoundExceeded(f"|{n}| exceeds the factorization bound {bound}")
    sign = -1 if n < 0 else 1
    m = abs(n)
    exps: dict[int, int] = {}
    q = 2
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            exps[q] = e
            if is_prime(m):
                break
        q += 1 if q == 2 else 2
    if m > 1:
        exps[m] = exps.get(m, 0) + 1
    return Factorization(sign, dict(sorted(exps.items())))


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ZeroArgument("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factor(n).exponents.values())


def squarefree_part(n: int) -> int:
    """The squarefree integer in the square class of ``n``."""
    f = factor(n)
    out = f.sign
    for p, e in f.exponents.items():
        if e % 2:
            out *= p
    return out


def legendre(a: int, p: int) -> int:
    if p < 3 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extending the Jacobi symbol to all n != 0."""
    if n == 0:
        raise ZeroModulus("Kronecker symbol needs a nonzero modulus")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd positive n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _split_off(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_local(a: int, b: int, v: Place) -> int:
    """Hilbert symbol (a, b)_v for nonzero integers a, b."""
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol arguments must be nonzero")
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    alpha, u = _split_off(a, p)
    beta, w = _split_off(b, p)
    if p == 2:
        eps_u, eps_w = ((u - 1) // 2) % 2, ((w - 1) // 2) % 2
        om_u, om_w = ((u * u - 1) // 8) % 2, ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(w, p)
    return s


def _reduced_ternary(coeffs: list[int], p: int) -> list[int]:
    """Rescale variables of sum c_i x_i^2 = 0 until at most one coefficient
    is divisible by p, and only once."""
    coeffs = list(coeffs)
    while True:
        for i, c in enumerate(coeffs):
            while c % (p * p) == 0:
                c //= p * p  # x_i -> x_i / p
            coeffs[i] = c
        hit = [c % p == 0 for c in coeffs]
        if sum(hit) < 2:
            return coeffs
        # two coefficients share p: x_l -> p x_l on the third, divide by p
        coeffs = [c // p if h else c * p for c, h in zip(coeffs, hit)]


def _has_primitive_zero(coeffs: list[int], mod: int) -> bool:
    r = np.arange(mod, dtype=np.int64)
    sq = r * r % mod
    for i in range(3):
        j, l = [t for t in range(3) if t != i]
        # primitive solutions rescale so that a unit coordinate x_i is 1
        lhs = (coeffs[i] + coeffs[j] * sq) % mod
        reachable = np.zeros(mod, dtype=bool)
        reachable[(-coeffs[l] * sq) % mod] = True
        if reachable[lhs].any():
            return True
    return False


def hilbert_oracle(a: int, b: int, v: Place, extra_precision: int = 0) -> int:
    """Hilbert symbol by exhaustive search for a primitive solution of
    z^2 = a x^2 + b y^2 modulo p^k.

    The form is first rescaled (x -> x/p and similar substitutions) so at
    most one coefficient carries p, with valuation 1.  Hensel lifting then
    needs k = 1 + 2s for odd p and k = 3 + 2s at 2, where s is the sum of
    the remaining valuations.  Shares no code with :func:`hilbert_local`.
    """
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol arguments must be nonzero")
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    if p > ORACLE_PRIME_BOUND or max(abs(a), abs(b)) > ORACLE_ARG_BOUND:
        raise OracleBoundExceeded(
            f"({a}, {b})_{p} is outside the oracle domain p <= {ORACLE_PRIME_BOUND}, |a|,|b| <= {ORACLE_ARG_BOUND}"
        )
    coeffs = _reduced_ternary([a, b, -1], p)
    k = (3 if p == 2 else 1) + 2 * sum(valuation(c, p) for c in coeffs)
    k += extra_precision
    mod = p**k
    if mod > ORACLE_MODULUS_BOUND:
        raise OracleBoundExceeded(f"modulus {p}^{k} exceeds {ORACLE_MODULUS_BOUND}")
    return 1 if _has_primitive_zero(coeffs, mod) else -1
