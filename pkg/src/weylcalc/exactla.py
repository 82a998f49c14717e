"""Exact linear algebra over the rationals.

Everything in this package runs on ``fractions.Fraction``; no floats
anywhere.  Vectors are tuples of Fractions, matrices are tuples of row
tuples, and polynomials are tuples of coefficients in *ascending* degree
order (``poly[i]`` is the coefficient of ``x**i``).
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Q, ...]
Matrix = Tuple[Tuple[Q, ...], ...]
Poly = Tuple[Q, ...]

ZERO = Q(0)
ONE = Q(1)


def vec(*entries) -> Vector:
    return tuple(Q(e) for e in entries)


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in x)


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def dot(x: Vector, y: Vector) -> Q:
    return sum((a * b for a, b in zip(x, y)), ZERO)


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Q(e) for e in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Product ``a @ b`` (entries of ``b`` read column-wise)."""
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def mat_vec(a: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(p + q for p, q in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = Q(c)
    return tuple(tuple(c * e for e in row) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def trace(a: Matrix) -> Q:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def charpoly(a: Matrix) -> Poly:
    """Characteristic polynomial ``det(x*I - a)`` by Faddeev-LeVerrier.

    Returned monic, ascending coefficient order.  The recursion runs on a
    common-denominator integer scaling of the matrix: plain machine
    integers skip the gcd bookkeeping every Fraction operation pays for,
    and the result maps back exactly.
    """
    n = len(a)
    if n == 0:
        return (ONE,)
    den = 1
    for row in a:
        for e in row:
            den = den * e.denominator // gcd(den, e.denominator)
    ai = [[int(e * den) for e in row] for row in a]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        cols = list(zip(*m))
        m = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in ai]
        tr = sum(m[i][i] for i in range(n))
        assert tr % k == 0
        c = -(tr // k)
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                m[i][i] += c
    # char of a = den**-n * char_{den*a}(den*x)
    return tuple(Q(coeffs[k], den ** (n - k)) for k in range(n + 1))


def rank(rows: Sequence[Vector]) -> int:
    """Rank of the span of the given vectors (Gaussian elimination)."""
    work = [list(r) for r in rows]
    r = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                factor = work[i][col] / prow[col]
                work[i] = [e - factor * p for e, p in zip(work[i], prow)]
        r += 1
        if r == len(work):
            break
    return r


def solve(a: Matrix, b: Vector) -> Vector | None:
    """Solve ``a x = b``; None when the system is inconsistent.

    ``a`` may be rectangular (rows >= cols); a particular solution is
    returned when one exists (unique in our uses: independent columns).
    """
    nrows, ncols = len(a), len(a[0])
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        prow = aug[r]
        inv = ONE / prow[col]
        aug[r] = [e * inv for e in prow]
        for i in range(nrows):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [e - factor * p for e, p in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [ZERO] * ncols
    for row_idx, col in enumerate(pivots):
        x[col] = aug[row_idx][ncols]
    return tuple(x)


def det(a: Matrix) -> Q:
    """Determinant via fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return ONE
    work = [list(row) for row in a]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if pivot is None:
                return ZERO
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / prev
            work[i][k] = ZERO
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def gram_positive_definite(g: Matrix) -> bool:
    """Sylvester's criterion: all leading principal minors positive."""
    n = len(g)
    for k in range(1, n + 1):
        minor = tuple(tuple(g[i][j] for j in range(k)) for i in range(k))
        if det(minor) <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial helpers


def poly_trim(p: Sequence[Q]) -> Poly:
    coeffs = list(p)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Q(c) for c in coeffs)


def poly_degree(p: Poly) -> int:
    p = poly_trim(p)
    return len(p) - 1


def poly_mul(p: Poly, q: Poly) -> Poly:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p = list(poly_trim(p))
    q = poly_trim(q)
    if q == (ZERO,):
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(1, len(p) - len(q) + 1)
    while len(p) >= len(q) and any(c != 0 for c in p):
        shift = len(p) - len(q)
        factor = p[-1] / q[-1]
        quot[shift] = factor
        for i, c in enumerate(q):
            p[shift + i] -= factor * c
        while len(p) > 1 and p[-1] == 0:
            p.pop()
    return poly_trim(quot), poly_trim(p)


def poly_eval(p: Poly, x) -> Q:
    x = Q(x)
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    if len(p) <= 1:
        return (ZERO,)
    return poly_trim(tuple(Q(i) * c for i, c in enumerate(p) if i >= 1))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = poly_trim(p), poly_trim(q)
    while b != (ZERO,):
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a[-1] != 0:
        a = tuple(c / a[-1] for c in a)
    return a


def poly_str(p: Poly, var: str = "x") -> str:
    """Human form, highest degree first, e.g. ``x^4 + 2*x^2 + 1``."""
    p = poly_trim(p)
    if p == (ZERO,):
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = abs(c)
            base = var if i == 1 else f"{var}^{i}"
            term = base if mag == 1 else f"{mag}*{base}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [poly_trim(p), poly_derivative(p)]
    while seq[-1] != (ZERO,) and poly_degree(seq[-1]) > 0:
        _, r = poly_divmod(seq[-2], seq[-1])
        if r == (ZERO,):
            break
        seq.append(tuple(-c for c in r))
    return seq


def _sign_changes(seq: list[Poly], x: Q) -> int:
    signs = []
    for p in seq:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_in_interval(p: Poly, lo, hi) -> int:
    """Distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    lo, hi = Q(lo), Q(hi)
    if lo >= hi:
        return 0
    square_free = poly_divmod(p, poly_gcd(p, poly_derivative(p)))[0]
    seq = sturm_sequence(square_free)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def real_root_in_interval(p: Poly, lo, hi) -> bool:
    return count_real_roots_in_interval(p, lo, hi) > 0


# ---------------------------------------------------------------------------
# cyclotomic machinery


_CYCLOTOMIC_CACHE: dict[int, Poly] = {}


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, exact coefficients."""
    if n < 1:
        raise ValueError("n must be positive")
    cached = _CYCLOTOMIC_CACHE.get(n)
    if cached is not None:
        return cached
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num: Poly = tuple([-ONE] + [ZERO] * (n - 1) + [ONE])
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic(d))
            assert rem == (ZERO,)
    _CYCLOTOMIC_CACHE[n] = num
    return num


def _euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def is_product_of_cyclotomics(p: Poly) -> bool:
    """True when the monic polynomial factors completely into cyclotomics."""
    p = poly_trim(p)
    if p[-1] != 1:
        return False
    deg = poly_degree(p)
    if deg == 0:
        return True
    # phi(n) >= sqrt(n/2), so phi(n) <= deg forces n <= 2*deg^2
    candidates = [n for n in range(1, 2 * deg * deg + 3) if _euler_phi(n) <= deg]
    remaining = p
    for n in candidates:
        phi_n = cyclotomic(n)
        while poly_degree(remaining) >= poly_degree(phi_n):
            quot, rem = poly_divmod(remaining, phi_n)
            if rem != (ZERO,):
                break
            remaining = quot
        if poly_degree(remaining) == 0:
            break
    return poly_degree(remaining) == 0 and remaining[-1] == 1


def cyclotomic_factors(p: Poly) -> list[int] | None:
    """Indices n with multiplicity such that p = prod Phi_n, else None."""
    p = poly_trim(p)
    if p[-1] != 1:
        return None
    deg = poly_degree(p)
    factors: list[int] = []
    remaining = p
    candidates = [n for n in range(1, 2 * deg * deg + 3) if _euler_phi(n) <= deg]
    for n in candidates:
        phi_n = cyclotomic(n)
        while poly_degree(remaining) >= poly_degree(phi_n):
            quot, rem = poly_divmod(remaining, phi_n)
            if rem != (ZERO,):
                break
            remaining = quot
            factors.append(n)
    if poly_degree(remaining) == 0 and remaining[-1] == 1:
        return sorted(factors)
    return None
