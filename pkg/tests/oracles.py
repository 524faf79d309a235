"""Brute-force reference computations, independent of the package code paths."""
from fractions import Fraction
from itertools import combinations

import sympy


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def legendre_oracle(a, p):
    if a % p == 0:
        return 0
    return 1 if a % p in squares_mod(p) else -1


def trial_factor(n):
    n = abs(n)
    out = {}
    q = 2
    while n > 1:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1
    return out


def naive_primes(bound):
    return [p for p in range(2, bound + 1) if all(p % q for q in range(2, p))]


def is_norm_by_search(d, x, height=30):
    """x = u^2 - d v^2 with rationals u, v of denominator <= height."""
    x = Fraction(x)
    for c in range(1, height + 1):
        for s in range(-height, height + 1):
            for t in range(0, height + 1):
                if Fraction(s * s - d * t * t, c * c) == x:
                    return True
    return False


def even_subsets(places, max_size=None):
    top = len(places) if max_size is None else max_size
    for k in range(0, top + 1, 2):
        yield from combinations(places, k)


# -- quaternions as 2x2 complex matrices ---------------------------------------


def quat_matrix(a, b, coeffs):
    """x0 + x1 i + x2 j + x3 ij with i -> diag(s, -s), s^2 = a, j -> [[0, b], [1, 0]]."""
    s = sympy.sqrt(a)
    one = sympy.eye(2)
    i = sympy.Matrix([[s, 0], [0, -s]])
    j = sympy.Matrix([[0, b], [1, 0]])
    x0, x1, x2, x3 = (sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, coeffs))
    return x0 * one + x1 * i + x2 * j + x3 * i * j


def matrix_coords(a, b, M):
    """Coordinates of M in the basis 1, i, j, ij (orthogonal for the trace pairing)."""
    basis = [quat_matrix(a, b, e) for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]
    out = []
    for e in basis:
        num = sympy.simplify((M * e).trace())
        den = sympy.simplify((e * e).trace())
        out.append(Fraction(str(sympy.nsimplify(num / den))))
    return tuple(out)


def right_conj_trace(a, b, coeffs):
    """Half the Q-trace of w -> w * conj(q) on the 4-dim algebra (a, b).

    For a K-linear map whose K-trace is rational this equals the K-trace.
    """
    x0, x1, x2, x3 = coeffs
    qbar = quat_matrix(a, b, (x0, -x1, -x2, -x3))
    total = Fraction(0)
    for k, e in enumerate(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))):
        total += matrix_coords(a, b, quat_matrix(a, b, e) * qbar)[k]
    return total / 2
