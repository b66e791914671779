"""The classical side: SL2 matrices, hyperbolicity, and Hecke tori over F_p.

Matrices are plain row-major 4-tuples (a, b, c, d).  The Hecke torus of a
hyperbolic A is the centralizer of A mod p inside SL2(F_p); it is cyclic of
order p - 1 (split) or p + 1 (nonsplit), and degenerates to a non-torus
group exactly when tr(A)^2 - 4 vanishes mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import ffield

Mat2 = tuple[int, int, int, int]
Vec2 = tuple[int, int]


class SplitType(Enum):
    SPLIT = "split"
    NONSPLIT = "nonsplit"
    DEGENERATE = "degenerate"


class DegenerateTorus(ValueError):
    """The centralizer of A mod p is not a torus (tr(A)^2 = 4 mod p)."""


class NotSplit(ValueError):
    """Operation requires a split torus (eigenvalues of A in F_p)."""


def det(m: Mat2) -> int:
    a, b, c, d = m
    return a * d - b * c


def trace(m: Mat2) -> int:
    return m[0] + m[3]


def mat_mod(m: Mat2, p: int) -> Mat2:
    return (m[0] % p, m[1] % p, m[2] % p, m[3] % p)


def mat_mul(m: Mat2, n: Mat2, p: int | None = None) -> Mat2:
    a1, b1, c1, d1 = m
    a2, b2, c2, d2 = n
    out = (a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
           c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)
    return out if p is None else mat_mod(out, p)


def mat_inv(m: Mat2, p: int) -> Mat2:
    """Inverse in SL2(F_p): adjugate, since det = 1."""
    a, b, c, d = m
    return (d % p, -b % p, -c % p, a % p)


def mat_vec(m: Mat2, v: Vec2, p: int | None = None) -> Vec2:
    a, b, c, d = m
    out = (a * v[0] + b * v[1], c * v[0] + d * v[1])
    return out if p is None else (out[0] % p, out[1] % p)


IDENTITY: Mat2 = (1, 0, 0, 1)


def is_hyperbolic(m: Mat2) -> bool:
    """|tr| > 2 for a determinant-1 integer matrix."""
    if det(m) != 1:
        raise ValueError(f"matrix must have determinant 1, got det = {det(m)}")
    return abs(trace(m)) > 2


def symplectic_form(xi: Vec2, eta: Vec2) -> int:
    """omega(xi, eta) = xi_lambda * eta_mu - xi_mu * eta_lambda."""
    return xi[0] * eta[1] - xi[1] * eta[0]


def splitting_type(A: Mat2, p: int) -> SplitType:
    """Classify p by the Legendre symbol of the discriminant tr(A)^2 - 4."""
    disc = trace(A) ** 2 - 4
    s = ffield.legendre(disc, p)
    if s == 1:
        return SplitType.SPLIT
    if s == -1:
        return SplitType.NONSPLIT
    return SplitType.DEGENERATE


def element_order(m: Mat2, p: int, bound: int) -> int:
    """Multiplicative order of m in SL2(F_p); raises if it exceeds bound."""
    acc = m
    for k in range(1, bound + 1):
        if acc == IDENTITY:
            return k
        acc = mat_mul(acc, m, p)
    raise ValueError(f"element order exceeds {bound}")


@dataclass(frozen=True)
class HeckeTorus:
    """The centralizer of a hyperbolic A inside SL2(F_p).

    elements are listed in lexicographic (x, y) order of the parametrization
    B = x*I + y*A mod p; dlog maps each element to its exponent with respect
    to the chosen cyclic generator, which fixes the character indexing.
    """

    p: int
    A: Mat2                       # the integer matrix, unreduced
    split_type: SplitType
    order: int
    elements: tuple[Mat2, ...]
    generator: Mat2
    dlog: dict[Mat2, int]

    def character_value(self, k: int, B: Mat2) -> complex:
        """chi_k(B) = exp(2*pi*i * k * dlog(B) / N)."""
        return complex(ffield.unit_roots(self.order)[(k * self.dlog[B]) % self.order])

    def character_matrix(self) -> "np.ndarray":
        """chi[k, j] = chi_k(elements[j]) as an (N, N) complex array."""
        import numpy as np

        n = self.order
        m = np.array([self.dlog[B] for B in self.elements], dtype=np.int64)
        k = np.arange(n, dtype=np.int64)
        return ffield.unit_roots(n)[(k[:, None] * m[None, :]) % n]


def hecke_torus(A: Mat2, p: int) -> HeckeTorus:
    """Enumerate the centralizer of A in SL2(F_p) and pick a cyclic generator.

    Every commuting element is of the form x*I + y*A; the determinant-1
    condition is the conic x^2 + t*x*y + y^2 = 1 with t = tr(A).  The
    generator is the first element, in lexicographic (x, y) order, whose
    order equals |T_A|.
    """
    ffield.check_odd_prime(p)
    stype = splitting_type(A, p)
    if stype is SplitType.DEGENERATE:
        raise DegenerateTorus(
            f"tr(A)^2 - 4 = {trace(A)**2 - 4} vanishes mod {p}; centralizer is not a torus")
    n = p - 1 if stype is SplitType.SPLIT else p + 1

    Ap = mat_mod(A, p)
    t = trace(Ap) % p
    elements = []
    for x in range(p):
        for y in range(p):
            if (x * x + t * x * y + y * y) % p == 1:
                elements.append(((x + y * Ap[0]) % p, (y * Ap[1]) % p,
                                 (y * Ap[2]) % p, (x + y * Ap[3]) % p))
    if len(elements) != n:
        raise AssertionError(
            f"centralizer size {len(elements)} != expected {n} at p = {p}")

    generator = None
    for B in elements:
        if element_order(B, p, n) == n:
            generator = B
            break
    if generator is None:
        raise AssertionError(f"no cyclic generator of order {n} found at p = {p}")

    dlog = {}
    acc = IDENTITY
    for m in range(n):
        dlog[acc] = m
        acc = mat_mul(acc, generator, p)
    if set(dlog) != set(elements):
        raise AssertionError("generator powers do not exhaust the centralizer")

    return HeckeTorus(p=p, A=A, split_type=stype, order=n,
                      elements=tuple(elements), generator=generator, dlog=dlog)


def torus_characters(T: HeckeTorus):
    """The N characters of T as callables chi_k: element -> complex."""

    def make(k: int):
        def chi(B: Mat2) -> complex:
            return T.character_value(k, B)

        chi.index = k
        return chi

    return [make(k) for k in range(T.order)]


def torus_eigenvalues(A: Mat2, p: int) -> tuple[int, int]:
    """The two eigenvalues of A mod p (split case): roots of t^2 - tr*t + 1."""
    if splitting_type(A, p) is not SplitType.SPLIT:
        raise NotSplit(f"A has no eigenvalues in F_{p}")
    t = trace(A) % p
    disc = (t * t - 4) % p
    r = ffield.sqrt_mod(disc, p)
    half = ffield.inv_mod(2, p)
    a1 = (t + r) * half % p
    a2 = (t - r) * half % p
    return a1, a2


def _eigenvector(Ap: Mat2, lam: int, p: int) -> Vec2:
    a, b, c, d = Ap
    if b % p != 0:
        v = (b % p, (lam - a) % p)
    elif c % p != 0:
        v = ((lam - d) % p, c % p)
    else:
        # A already diagonal mod p
        v = (1, 0) if a % p == lam else (0, 1)
    # normalize first nonzero coordinate to 1
    s = ffield.inv_mod(v[0] if v[0] != 0 else v[1], p)
    return (v[0] * s % p, v[1] * s % p)


def conjugator_to_standard(A: Mat2, p: int) -> Mat2:
    """S in SL2(F_p) with S B S^-1 diagonal for every B in the torus of A.

    Built from a matrix M whose columns are eigenvectors of A mod p (first
    column normalized to leading coordinate 1, second scaled so det M = 1);
    S = M^-1.  S A S^-1 = diag(a1, a1^-1) with a1 the eigenvalue of the
    first column.
    """
    a1, a2 = torus_eigenvalues(A, p)
    if a1 == a2:
        raise NotSplit(f"repeated eigenvalue {a1} mod {p}; torus is degenerate")
    Ap = mat_mod(A, p)
    v1 = _eigenvector(Ap, a1, p)
    v2 = _eigenvector(Ap, a2, p)
    m = (v1[0], v2[0], v1[1], v2[1])
    scale = ffield.inv_mod(det(m) % p, p)
    m = (m[0], m[1] * scale % p, m[2], m[3] * scale % p)
    return mat_inv(m, p)


def standard_parameter(S: Mat2, B: Mat2, p: int) -> int:
    """The a with S B S^-1 = diag(a, a^-1); raises if the conjugate is not diagonal."""
    C = mat_mul(mat_mul(S, B, p), mat_inv(S, p), p)
    if C[1] % p != 0 or C[2] % p != 0:
        raise ValueError(f"S B S^-1 = {C} is not diagonal")
    return C[0] % p
