"""Exact arithmetic in the prime field F_p and its characters.

Everything modular is done on exact integers; a character value becomes a
complex float only at the very end, through a single lookup into a
precomputed table of p-th (or (p-1)-th) roots of unity.  This keeps every
exponential-sum term exact up to one rounding.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


class ZeroInverse(ZeroDivisionError):
    """Attempted to invert 0 in F_p."""


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
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


def check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime >= 3, got {p}")


def inv_mod(a: int, p: int) -> int:
    """Multiplicative inverse of a mod p.  Raises ZeroInverse for a = 0."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p): 1 for nonzero squares, -1 for nonsquares, 0 at 0."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=128)
def legendre_table(p: int) -> np.ndarray:
    """sigma[a] = legendre(a, p) for a in range(p), as an int8 array."""
    tab = np.zeros(p, dtype=np.int8)
    for a in range(1, p):
        tab[a] = legendre(a, p)
    tab.flags.writeable = False
    return tab


@lru_cache(maxsize=128)
def inverse_table(p: int) -> np.ndarray:
    """inv[a] = a^-1 mod p for a in range(1, p); entry 0 is unused (set to 0)."""
    tab = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        tab[a] = pow(a, -1, p)
    tab.flags.writeable = False
    return tab


@lru_cache(maxsize=128)
def unit_roots(p: int) -> np.ndarray:
    """exp(2*pi*i*k/p) for k in range(p)."""
    roots = np.exp(2j * np.pi * np.arange(p) / p)
    roots.flags.writeable = False
    return roots


def psi(t: int, p: int) -> complex:
    """Additive character psi(t) = exp(2*pi*i*t/p)."""
    return complex(unit_roots(p)[t % p])


def psi_array(t: np.ndarray, p: int) -> np.ndarray:
    """psi applied to an integer array of residues (reduced mod p here)."""
    return unit_roots(p)[np.asarray(t) % p]


def _factorize(n: int) -> list[int]:
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


@lru_cache(maxsize=128)
def primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group F_p^x."""
    check_odd_prime(p)
    qs = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("no primitive root found; p is not prime")


@lru_cache(maxsize=128)
def dlog_table(p: int) -> np.ndarray:
    """Discrete logs base primitive_root(p): table[g^m mod p] = m, table[0] = -1."""
    g = primitive_root(p)
    tab = np.full(p, -1, dtype=np.int64)
    acc = 1
    for m in range(p - 1):
        tab[acc] = m
        acc = acc * g % p
    tab.flags.writeable = False
    return tab


def mult_char(k: int, a: int, p: int) -> complex:
    """Value at a of the k-th multiplicative character of F_p^x.

    Characters are indexed against the fixed primitive root g:
    chi_k(g^m) = exp(2*pi*i*k*m/(p-1)).  Returns 0.0 at a = 0.
    """
    a %= p
    if a == 0:
        return 0.0
    m = int(dlog_table(p)[a])
    return complex(unit_roots(p - 1)[(k * m) % (p - 1)])


@lru_cache(maxsize=128)
def gauss_sum(p: int) -> complex:
    """Quadratic Gauss sum G = sum_t psi(t^2); |G|^2 = p, G^2 = legendre(-1,p)*p."""
    t = np.arange(p, dtype=np.int64)
    return complex(np.sum(unit_roots(p)[(t * t) % p]))


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod p, or None if a is a nonsquare.

    Deterministic linear scan; fine for the moduli this library targets.
    """
    a %= p
    for x in range((p + 1) // 2 + 1):
        if x * x % p == a:
            return x
    return None
