"""Finite crystallographic root systems in exact coordinates.

Roots live in an ambient rational space (dimension may exceed the rank,
e.g. A_n sits in R^{n+1} and E_6, E_7 sit in R^8).  Inner products are
reported in the normalization where short roots have squared length 1;
the squared length of a long root is then the integer ``t`` (1 for the
simply-laced families, 2 for B/C/F, 3 for G_2).  With that convention
two connected short roots have inner product +-1/2 and a pair involving
a long root has inner product +-t/2, which is the bookkeeping the
diagram layer relies on.
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from typing import Tuple

from .exactla import Vector, dot, solve, vec_neg, vec_scale, vec_sub

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, 16),
    "B": (2, 16),
    "C": (2, 16),
    "D": (3, 16),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def _basis_vector(i: int, dim: int) -> Vector:
    return tuple(Q(1) if j == i else Q(0) for j in range(dim))


def _half(v: Vector) -> Vector:
    return vec_scale(Q(1, 2), v)


def _simple_roots(family: str, rank: int) -> tuple[Vector, ...]:
    e = _basis_vector
    if family == "A":
        dim = rank + 1
        return tuple(vec_sub(e(i, dim), e(i + 1, dim)) for i in range(rank))
    if family == "B":
        dim = rank
        chain = [vec_sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        return tuple(chain + [e(rank - 1, dim)])
    if family == "C":
        dim = rank
        chain = [vec_sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        return tuple(chain + [vec_scale(2, e(rank - 1, dim))])
    if family == "D":
        dim = rank
        chain = [vec_sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        last = tuple(
            Q(1) if j in (rank - 2, rank - 1) else Q(0) for j in range(dim)
        )
        return tuple(chain + [last])
    if family == "E":
        dim = 8
        first = tuple(
            Q(1, 2) if j in (0, 7) else Q(-1, 2) for j in range(8)
        )
        second = tuple(Q(1) if j in (0, 1) else Q(0) for j in range(8))
        chain = [vec_sub(e(i + 1, dim), e(i, dim)) for i in range(6)]
        return tuple([first, second] + chain)[:rank]
    if family == "F":
        dim = 4
        return (
            vec_sub(e(1, dim), e(2, dim)),
            vec_sub(e(2, dim), e(3, dim)),
            e(3, dim),
            _half(
                tuple(Q(1) if j == 0 else Q(-1) for j in range(4))
            ),
        )
    if family == "G":
        dim = 3
        return (
            vec_sub(e(0, dim), e(1, dim)),
            (Q(-2), Q(1), Q(1)),
        )
    raise ValueError(f"unknown family {family!r}")


class RootSystem:
    """An irreducible root system with exact rational coordinates."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        lo, hi = _RANK_RANGE[family]
        if not lo <= rank <= hi:
            raise ValueError(f"rank {rank} out of range for {family} ({lo}..{hi})")
        self.family = family
        self.rank = rank
        self.simple_roots = _simple_roots(family, rank)
        self.dim = len(self.simple_roots[0])
        self.roots = self._close_under_reflections()
        expected = _ROOT_COUNT[family](rank)
        if len(self.roots) != expected:
            raise AssertionError(
                f"{family}{rank}: built {len(self.roots)} roots, expected {expected}"
            )
        self.short_norm = min(dot(r, r) for r in self.roots)
        self.long_norm = max(dot(r, r) for r in self.roots)
        self.ratio = self.long_norm / self.short_norm  # the integer t
        self._root_set = frozenset(self.roots)
        self.index = {r: i for i, r in enumerate(self.roots)}

    # -- construction -----------------------------------------------------

    def _close_under_reflections(self) -> tuple[Vector, ...]:
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.simple_roots:
                    image = _reflect_raw(s, r)
                    if image not in roots:
                        roots.add(image)
                        nxt.append(image)
            frontier = nxt
        return tuple(sorted(roots))

    # -- queries -----------------------------------------------------------

    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def is_root(self, v: Vector) -> bool:
        return tuple(v) in self._root_set

    def normalized_inner(self, x: Vector, y: Vector) -> Q:
        return dot(x, y) / self.short_norm

    def normalized_norm(self, x: Vector) -> Q:
        return dot(x, x) / self.short_norm

    def is_long(self, root: Vector) -> bool:
        return dot(root, root) == self.long_norm and self.long_norm != self.short_norm

    def reflect(self, root: Vector, v: Vector) -> Vector:
        """Image of ``v`` under the reflection in the hyperplane of ``root``."""
        return _reflect_raw(root, v)

    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(r for r in self.roots if _lex_positive(r))

    def sign_class_reps(self) -> tuple[Vector, ...]:
        """One representative per {r, -r} pair, the lex-positive one."""
        return self.positive_roots()

    def max_root(self) -> Vector:
        """The highest root: the unique root dominant against all simples."""
        best = None
        best_height = None
        for r in self.roots:
            coeffs = self.simple_coefficients(r)
            height = sum(coeffs)
            if best_height is None or height > best_height:
                best, best_height = r, height
        assert best is not None
        dominant = [
            r
            for r in self.roots
            if all(dot(r, s) >= 0 for s in self.simple_roots)
            and sum(self.simple_coefficients(r)) == best_height
        ]
        assert dominant == [best], "highest root must be the unique dominant root"
        return best

    def simple_coefficients(self, v: Vector) -> Tuple[Q, ...]:
        """Coordinates of ``v`` in the simple-root basis."""
        matrix = tuple(
            tuple(self.simple_roots[j][i] for j in range(self.rank))
            for i in range(self.dim)
        )
        coeffs = solve(matrix, tuple(v))
        if coeffs is None:
            raise ValueError("vector is not in the root lattice span")
        return coeffs

    def parse_root(self, text: str) -> Vector:
        v = parse_vector(text, self.dim)
        if not self.is_root(v):
            raise ValueError(f"{text!r} is not a root of {self.name()}")
        return v

    def format_root(self, v: Vector) -> str:
        return format_vector(v)

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.family!r}, {self.rank})"


def _reflect_raw(root: Vector, v: Vector) -> Vector:
    c = 2 * dot(v, root) / dot(root, root)
    return vec_sub(v, vec_scale(c, root))


def _lex_positive(v: Vector) -> bool:
    for a in v:
        if a != 0:
            return a > 0
    return False


def lex_positive_rep(v: Vector) -> Vector:
    return tuple(v) if _lex_positive(v) else vec_neg(v)


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given family and rank."""
    return RootSystem(family, rank)


def build_by_name(name: str) -> RootSystem:
    """Parse compact names like ``D4`` or ``E8``."""
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in FAMILIES:
        raise ValueError(f"bad root system name {name!r}")
    try:
        rank = int(name[1:])
    except ValueError as exc:
        raise ValueError(f"bad root system name {name!r}") from exc
    return build(name[0].upper(), rank)


# ---------------------------------------------------------------------------
# root literals: "e1-e2", "e2+e3", "e1-e2-e3-e4-e5-e6-e7+e8/2"


def parse_vector(text: str, dim: int) -> Vector:
    raw = text.strip().replace(" ", "")
    if not raw:
        raise ValueError("empty root literal")
    halved = raw.endswith("/2")
    if halved:
        raw = raw[:-2]
    out = [Q(0)] * dim
    token = ""
    sign = 1
    i = 0
    if raw[0] in "+-":
        sign = -1 if raw[0] == "-" else 1
        i = 1
    while i < len(raw):
        ch = raw[i]
        if ch in "+-":
            _apply_term(out, token, sign, dim)
            sign = -1 if ch == "-" else 1
            token = ""
        else:
            token += ch
        i += 1
    _apply_term(out, token, sign, dim)
    if halved:
        out = [c / 2 for c in out]
    return tuple(out)


def _apply_term_coeff(out: list[Q], token: str, sign: int, dim: int) -> None:
    k = 0
    while k < len(token) and token[k].isdigit():
        k += 1
    coeff = int(token[:k]) if k else 1
    unit = token[k:]
    if not unit.startswith("e") or not unit[1:].isdigit():
        raise ValueError(f"bad term {token!r} in root literal")
    idx = int(unit[1:]) - 1
    if not 0 <= idx < dim:
        raise ValueError(f"coordinate {unit} out of range for dimension {dim}")
    out[idx] += sign * coeff


def _apply_term(out: list[Q], token: str, sign: int, dim: int) -> None:
    if token[:1].isdigit():
        _apply_term_coeff(out, token, sign, dim)
        return
    if not token.startswith("e") or not token[1:].isdigit():
        raise ValueError(f"bad root term {token!r}")
    idx = int(token[1:])
    if not 1 <= idx <= dim:
        raise ValueError(f"coordinate e{idx} out of range for dimension {dim}")
    out[idx - 1] += sign


def format_vector(v: Vector) -> str:
    halves = any(c.denominator == 2 for c in v)
    if halves:
        doubled = [c * 2 for c in v]
        return _format_unit_combo(doubled) + "/2"
    return _format_unit_combo(list(v))


def _format_unit_combo(coords: list[Q]) -> str:
    parts = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        if c.denominator != 1:
            raise ValueError(f"vector has a non-half fractional part: {coords}")
        mag = abs(c)
        term = f"e{i + 1}" if mag == 1 else f"{mag}e{i + 1}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    if not parts:
        return "0"
    return "".join(parts)
