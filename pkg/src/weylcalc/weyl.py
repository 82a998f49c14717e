"""Weyl group elements as exact matrices, and reflection-word utilities.

Composition convention
----------------------
A word ``(r_1, ..., r_k)`` denotes the product of reflection matrices

    m(r_1) @ m(r_2) @ ... @ m(r_k)

acting on column vectors, i.e. the *rightmost* reflection is applied to
a vector first.  Every matrix in this package follows that convention;
it matches the way the bicolored words in the diagram layer are read.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import lcm
from typing import Sequence

from .exactla import (
    Matrix,
    Vector,
    charpoly,
    cyclotomic_factors,
    dot,
    identity,
    mat_mul,
    mat_pow,
    rank,
)
from .rootsys import RootSystem

Word = tuple[Vector, ...]


def reflection(system: RootSystem, root: Vector) -> Matrix:
    """Ambient matrix of the reflection in the hyperplane of ``root``."""
    if not system.is_root(tuple(root)):
        raise ValueError(f"{root} is not a root of {system.name()}")
    return _reflection_matrix(tuple(root), system.dim)


def _reflection_matrix(root: Vector, dim: int) -> Matrix:
    norm = dot(root, root)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            base = Q(1) if i == j else Q(0)
            row.append(base - 2 * root[i] * root[j] / norm)
        rows.append(tuple(row))
    return tuple(rows)


def evaluate(system: RootSystem, word: Sequence[Vector]) -> Matrix:
    """Ambient matrix of the word (see the composition convention above)."""
    n = system.dim
    work = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    for root in word:
        r = tuple(root)
        if not system.is_root(r):
            raise ValueError(f"{r} is not a root of {system.name()}")
        c = 2 / dot(r, r)
        # A @ refl(r) = A - c * (A r) outer r
        for p in range(n):
            ar = sum((work[p][q] * r[q] for q in range(n)), Q(0))
            if ar == 0:
                continue
            car = c * ar
            row = work[p]
            for q in range(n):
                if r[q]:
                    row[q] -= car * r[q]
    return tuple(tuple(row) for row in work)


def apply_word(system: RootSystem, word: Sequence[Vector], v: Vector) -> Vector:
    """Apply the word to a vector without forming the full matrix."""
    out = tuple(v)
    for root in reversed(word):
        out = system.reflect(tuple(root), out)
    return out


def conjugate(system: RootSystem, word: Sequence[Vector], u: Sequence[Vector]) -> Word:
    """Word for ``u w u^{-1}``: every root of ``w`` mapped through ``u``."""
    return tuple(apply_word(system, u, tuple(r)) for r in word)


def word_matrix_from_gram(gram: Matrix, order: Sequence[int]) -> Matrix:
    """Matrix of a reflection word over the basis the Gram matrix indexes.

    ``order`` lists basis indices in word order; index ``i`` stands for the
    reflection in basis vector ``i``.  Works for any symmetric bilinear
    form with nonzero diagonal, so abstract diagrams (no ambient
    realization) are handled too.
    """
    n = len(gram)
    work = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    for i in order:
        # s_i = I + e_i w^T, so A @ s_i = A + (column i of A) outer w.
        w = [-2 * gram[q][i] / gram[i][i] for q in range(n)]
        for p in range(n):
            api = work[p][i]
            if api == 0:
                continue
            row = work[p]
            for q in range(n):
                row[q] += api * w[q]
    return tuple(tuple(row) for row in work)


def word_matrix(system: RootSystem, word: Sequence[Vector]) -> Matrix:
    """Matrix of the word over the basis formed by its own roots.

    Requires the word's roots to be linearly independent (true for any
    reduced decomposition); the resulting matrix has size ``len(word)``,
    so its characteristic polynomial has the word's length as degree.
    """
    roots = [tuple(r) for r in word]
    if rank(roots) != len(roots):
        raise ValueError("word roots are linearly dependent")
    gram = tuple(tuple(dot(a, b) for b in roots) for a in roots)
    return word_matrix_from_gram(gram, range(len(roots)))


def is_involution(system: RootSystem, word: Sequence[Vector]) -> str:
    """Classify the element: ``identity``, ``involution`` or ``not-involution``."""
    m = evaluate(system, word)
    n = system.dim
    if m == identity(n):
        return "identity"
    if mat_mul(m, m) == identity(n):
        return "involution"
    return "not-involution"


def verify_bicolored(
    system: RootSystem,
    word: Sequence[Vector],
    alpha_set: Sequence[Vector],
    beta_set: Sequence[Vector],
) -> tuple[bool, str | None]:
    """Check that ``word`` equals the bicolored product.

    The product is read alpha block first:
    ``s_{a_1} ... s_{a_k} s_{b_1} ... s_{b_h}``.  Reason codes on failure:
    ``non-orthogonal-alpha``, ``non-orthogonal-beta``, ``dependent``,
    ``product-mismatch``.
    """
    alpha = [tuple(r) for r in alpha_set]
    beta = [tuple(r) for r in beta_set]
    for i in range(len(alpha)):
        for j in range(i + 1, len(alpha)):
            if dot(alpha[i], alpha[j]) != 0:
                return False, "non-orthogonal-alpha"
    for i in range(len(beta)):
        for j in range(i + 1, len(beta)):
            if dot(beta[i], beta[j]) != 0:
                return False, "non-orthogonal-beta"
    combined = alpha + beta
    if rank(combined) != len(combined):
        return False, "dependent"
    if evaluate(system, word) != evaluate(system, combined):
        return False, "product-mismatch"
    return True, None


def order_or_infinite(m: Matrix, power_cap: int = 10_000) -> int | str:
    """Multiplicative order of a matrix, or the string ``"infinite"``.

    Finite order forces the characteristic polynomial to be a product of
    cyclotomic polynomials; when it is, the lcm of their indices bounds
    the order, and one exact power computation settles semisimplicity.
    """
    n = len(m)
    if m == identity(n):
        return 1
    factors = cyclotomic_factors(charpoly(m))
    if factors is None:
        return "infinite"
    bound = lcm(*factors)
    if bound > power_cap:
        raise ValueError(f"order bound {bound} exceeds cap {power_cap}")
    if mat_pow(m, bound) != identity(n):
        return "infinite"  # cyclotomic spectrum but a nontrivial Jordan block
    order = bound
    for p in _prime_factors(bound):
        while order % p == 0 and mat_pow(m, order // p) == identity(n):
            order //= p
    return order


def _prime_factors(n: int) -> list[int]:
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
