"""Univariate polynomial arithmetic modulo a 61-bit prime.

Feasibility layer for the eliminations too large to expand symbolically:
multivariate inputs are specialized at random points, leaving univariate
images whose resultants are computed twice (Euclidean remainder sequence
and fraction-free Bareiss on the Sylvester matrix) and cross-checked.

Polynomials are little-endian coefficient lists of residues.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .poly import FIELD_BITS, _FIELD_MASK, Polynomial, PolyError, SIGN_NAMES

# Fixed probe primes (> 2**60).  PRIME_A is the Mersenne prime 2**61 - 1;
# PRIME_B is the next prime above it congruent to 1 mod 4.
PRIME_A = (1 << 61) - 1
PRIME_B = 2305843009213693973

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Sequence[int]) -> int:
    return len(f) - 1


def rem(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of f by g over GF(p); g must be nonzero."""
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        q = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, c in enumerate(g):
            f[i + shift] = (f[i + shift] - q * c) % p
        trim(f)
    return f


def resultant_euclid(f: Sequence[int], g: Sequence[int], p: int) -> int:
    """Resultant over GF(p) via the Euclidean remainder sequence."""
    f = trim(list(f))
    g = trim(list(g))
    if not f or not g:
        return 0
    res = 1
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * pow(g[0], df, p) % p
        r = rem(f, g, p)
        if not r:
            return 0
        dr = len(r) - 1
        res = res * pow(g[-1], df - dr, p) % p
        if (df * dg) % 2:
            res = (-res) % p
        f, g = g, r


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix for little-endian coefficient lists (deg >= 1 each)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return rows


def det_bareiss_mod(matrix: list[list[int]], p: int) -> int:
    """Fraction-free Bareiss determinant over GF(p) (exact division by the
    previous pivot becomes multiplication by its inverse)."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] % p == 0:
            for i in range(k + 1, n):
                if m[i][k] % p:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        inv_prev = pow(prev, p - 2, p)
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            cik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - cik * row_k[j]) * inv_prev % p
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] % p


def resultant_bareiss(f: Sequence[int], g: Sequence[int], p: int) -> int:
    return det_bareiss_mod(sylvester_matrix(f, g), p)


def coeff_mod(c, p: int) -> int:
    if isinstance(c, int):
        return c % p
    f = Fraction(c)
    return f.numerator % p * pow(f.denominator % p, p - 2, p) % p


def specialize_univariate(
    poly: Polynomial,
    var: str,
    assignment: Mapping[str, int],
    signs: Mapping[str, int],
    p: int,
) -> list[int]:
    """Image of a multivariate polynomial in GF(p)[var] under an assignment
    of residues to every other variable and +-1 to the sign symbols."""
    table = poly.table
    keep = table.index(var)
    nvars = len(table)
    values = [0] * nvars
    for i, name in enumerate(table.names):
        if i == keep:
            continue
        if name in assignment:
            values[i] = assignment[name] % p
    sign_vals = [1] * len(SIGN_NAMES)
    for i, name in enumerate(SIGN_NAMES):
        if name in signs:
            sign_vals[i] = signs[name]
    out: dict[int, int] = {}
    for (bits, packed), c in poly.terms.items():
        acc = coeff_mod(c, p)
        for i in range(len(SIGN_NAMES)):
            if bits & (1 << i) and sign_vals[i] < 0:
                acc = (-acc) % p
        rest = packed
        idx = 0
        e_var = 0
        while rest:
            e = rest & _FIELD_MASK
            if e:
                if idx == keep:
                    e_var = e
                else:
                    name = table.names[idx]
                    if name not in assignment:
                        raise PolyError(f"probe assignment missing {name!r}")
                    acc = acc * pow(values[idx], e, p) % p
            rest >>= FIELD_BITS
            idx += 1
        if acc:
            out[e_var] = (out.get(e_var, 0) + acc) % p
    if not out:
        return []
    coeffs = [0] * (max(out) + 1)
    for e, c in out.items():
        coeffs[e] = c
    return trim(coeffs)
