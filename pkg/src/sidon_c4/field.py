"""Finite fields GF(p^k) with a fixed primitive element and a full log table.

Elements are plain ints: the canonical index of a polynomial
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` is ``sum(c_i * p**i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from .errors import LogOfZero, NotPrime, NotPrimePower, check_budget


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**k, raising NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p = factors[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))


def smallest_primitive_root(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return 1
    return next(g for g in range(2, p) if is_primitive_root(g, p))


# -- polynomials over GF(p), coefficient lists low-to-high -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree in base-p lexicographic order."""
    for tail in product(range(p), repeat=degree):
        yield list(reversed(tail)) + [1]


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    k = len(m) - 1
    if k <= 1:
        return k == 1
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


@lru_cache(maxsize=None)
def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for m in _monic_polys(p, k):
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError(f"no irreducible of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class FieldGF:
    """GF(p**k) with modulus, primitive element ``theta`` and log/exp tables.

    Build instances with :func:`make_field`.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    primitive: int
    exp_table: np.ndarray = dc_field(repr=False)
    log_table: np.ndarray = dc_field(repr=False)

    @property
    def order(self) -> int:
        return self.p ** self.k

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def index(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.k or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {list(coeffs)!r}")
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.index([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.index([(-x) % self.p for x in self.coeffs(a)])

    def mul(self, a: int, b: int) -> int:
        """Schoolbook product reduced by the modulus; does not use the tables."""
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        r = _poly_mod(prod, self.modulus, self.p)
        return self.index(r + [0] * (self.k - len(r)))

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def log(self, a: int) -> int:
        """Discrete log of a nonzero element to base ``primitive``."""
        if a == 0:
            raise LogOfZero("log of zero")
        return int(self.log_table[a])

    def exp(self, m: int) -> int:
        return int(self.exp_table[m % (self.order - 1)])

    def frobenius_fixed(self, q: int) -> list[int]:
        """All elements x with x**q == x, by exhaustive check."""
        n = self.order - 1
        nonzero = np.arange(1, self.order)
        images = self.exp_table[(self.log_table[nonzero] * (q % n)) % n]
        return [0] + [int(x) for x in nonzero[images == nonzero]]


def _times_map(p: int, k: int, modulus: tuple[int, ...], g: int) -> np.ndarray:
    """Permutation array x -> x * g on all indices, as a GF(p)-linear map."""
    q = p ** k
    probe = FieldGF(p, k, modulus, g, np.empty(0), np.empty(0))
    # row i holds the coefficients of x**i * g
    mat = np.array([probe.coeffs(probe.mul(p ** i, g)) for i in range(k)], dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    out = np.empty(q, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, q, chunk):
        idx = np.arange(start, min(q, start + chunk), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % p
        out[start:start + len(idx)] = ((digits @ mat) % p) @ weights
    return out


def make_field(p: int, k: int = 1) -> FieldGF:
    """Build GF(p**k) with the first irreducible modulus and least primitive element."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    q = p ** k
    check_budget("field", q)
    modulus = first_irreducible(p, k)
    probe = FieldGF(p, k, modulus, 0, np.empty(0), np.empty(0))
    factors = prime_factors(q - 1)
    theta = next(
        g for g in range(1, q)
        if all(probe.pow(g, (q - 1) // r) != 1 for r in factors)
    )
    step = _times_map(p, k, modulus, theta).tolist()
    exp_table = np.empty(q - 1, dtype=np.int64)
    log_table = np.full(q, -1, dtype=np.int64)
    x = 1
    for m in range(q - 1):
        exp_table[m] = x
        log_table[x] = m
        x = step[x]
    if x != 1 or (log_table[1:] < 0).any():
        raise AssertionError("primitive element does not generate the field")
    exp_table.setflags(write=False)
    log_table.setflags(write=False)
    return FieldGF(p, k, modulus, theta, exp_table, log_table)
