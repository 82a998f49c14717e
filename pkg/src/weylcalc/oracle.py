"""Brute-force verification engine over small Weyl groups.

Everything here is exhaustive and exact: groups are enumerated as
permutations of their (finitely many) roots, conjugacy is settled by a
breadth-first orbit walk that either produces an explicit witness or
exhausts the class, and diagram-realization questions are settled by a
backtracking search over root subsets that either lists every match or
certifies that none exists.  The module is deliberately slow-and-sure;
it is the referee against which the algebraic shortcuts elsewhere in
the package are checked.

A Weyl group acts faithfully on its root set, so an element is stored
as the permutation it induces on the sorted tuple ``system.roots``.
Permutations over at most 256 roots are packed into ``bytes`` and
composed with ``bytes.translate``; larger systems fall back to integer
tuples.  Ambient matrices are reconstructed on demand (the group fixes
the orthogonal complement of the root span pointwise, which pins the
matrix down), so no exactness is lost at the API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Iterator, Sequence

from . import diagram as dg
from . import weyl
from .exactla import (
    Matrix,
    Vector,
    dot,
    mat_mul,
    mat_vec,
    solve,
    vec_sub,
)
from .rootsys import RootSystem, lex_positive_rep

DEFAULT_GROUP_CAP = 400_000
DEFAULT_CONJUGACY_CAP = 1_000_000

#: |W| for each family, from the standard order formulas.
_EXCEPTIONAL_ORDER = {
    "E6": 51_840,
    "E7": 2_903_040,
    "E8": 696_729_600,
    "F4": 1_152,
    "G2": 12,
}


def weyl_group_order(system: RootSystem) -> int:
    """Order of W(system) from the product formula (not by enumeration)."""
    n = system.rank
    fam = system.family
    if fam == "A":
        out = 1
        for i in range(2, n + 2):
            out *= i
        return out
    if fam in ("B", "C"):
        out = 2**n
        for i in range(2, n + 1):
            out *= i
        return out
    if fam == "D":
        out = 2 ** (n - 1)
        for i in range(2, n + 1):
            out *= i
        return out
    return _EXCEPTIONAL_ORDER[system.name()]


# ---------------------------------------------------------------------------
# Permutation encoding


def _transpose(m: Matrix) -> Matrix:
    return tuple(tuple(col) for col in zip(*m))


class _PermSpace:
    """Encodes W-elements as permutations of the root list."""

    def __init__(self, system: RootSystem):
        self.system = system
        self.roots = system.roots
        self.n = len(self.roots)
        self.index = system.index
        self.packed = self.n <= 256
        if self.packed:
            self.ident = bytes(range(self.n))
        else:
            self.ident = tuple(range(self.n))
        self._gen_tables = None
        self._basis = None

    def _wrap(self, images: list[int]):
        return bytes(images) if self.packed else tuple(images)

    def perm_of_matrix(self, m: Matrix):
        images = []
        for r in self.roots:
            image = mat_vec(m, r)
            idx = self.index.get(image)
            if idx is None:
                raise ValueError(
                    f"matrix does not permute the roots of {self.system.name()}"
                )
            images.append(idx)
        return self._wrap(images)

    def reflection_perm(self, root: Vector):
        images = [self.index[self.system.reflect(root, r)] for r in self.roots]
        return self._wrap(images)

    def table(self, p):
        """Left-composition table for ``mul``: pad to 256 when packed."""
        if self.packed:
            return p + bytes(range(self.n, 256))
        return p

    def mul(self, table_a, b):
        """Permutation of the matrix product a @ b (b applied first).

        ``table_a`` must come from :meth:`table`; ``b`` is a raw perm.
        """
        if self.packed:
            return b.translate(table_a)
        return tuple(table_a[i] for i in b)

    def inverse(self, p):
        images = [0] * self.n
        for i, j in enumerate(p):
            images[j] = i
        return self._wrap(images)

    def _ambient_basis(self):
        """(S, S_inv) where the columns of S are the simples + a fixed basis
        of their orthogonal complement."""
        if self._basis is not None:
            return self._basis
        sys = self.system
        cols = [tuple(r) for r in sys.simple_roots]
        cols.extend(_orthogonal_complement(cols, sys.dim))
        if len(cols) != sys.dim:
            raise AssertionError("root span + complement must fill the ambient space")
        s = _transpose(tuple(cols))
        s_inv = _matrix_inverse(s)
        self._basis = (s, s_inv, tuple(cols))
        return self._basis

    def matrix_of_perm(self, p) -> Matrix:
        sys = self.system
        _, s_inv, cols = self._ambient_basis()
        target_cols = []
        for j, simple in enumerate(sys.simple_roots):
            target_cols.append(self.roots[p[self.index[tuple(simple)]]])
        target_cols.extend(cols[sys.rank :])
        t = _transpose(tuple(target_cols))
        return mat_mul(t, s_inv)


def _orthogonal_complement(vectors: Sequence[Vector], dim: int) -> list[Vector]:
    """A basis of the subspace orthogonal to every given vector."""
    rows = [list(v) for v in vectors]
    # Row-reduce, tracking pivot columns.
    pivots = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Q(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    out = []
    for c in free:
        v = [Q(0)] * dim
        v[c] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][c]
        out.append(tuple(v))
    return out


def _matrix_inverse(m: Matrix) -> Matrix:
    n = len(m)
    cols = []
    for i in range(n):
        e = tuple(Q(1) if j == i else Q(0) for j in range(n))
        x = solve(m, e)
        if x is None:
            raise ValueError("matrix is singular")
        cols.append(x)
    return _transpose(tuple(cols))


_SPACES: dict[str, _PermSpace] = {}


def _perm_space(system: RootSystem) -> _PermSpace:
    key = system.name()
    space = _SPACES.get(key)
    if space is None or space.system is not system:
        space = _PermSpace(system)
        _SPACES[key] = space
    return space


# ---------------------------------------------------------------------------
# Group enumeration


class GroupTable:
    """Every element of a small Weyl group, in discovery (BFS) order.

    Elements are held as root permutations; ``matrix`` / ``elements``
    rebuild exact ambient matrices on demand, so the table stays small
    even for W(E6).
    """

    def __init__(self, system: RootSystem, space: _PermSpace, perms: tuple):
        self.system = system
        self._space = space
        self._perms = perms
        self._perm_set = frozenset(perms)
        self.size = len(perms)
        self.generators = tuple(
            weyl.reflection(system, r) for r in system.simple_roots
        )

    def __len__(self) -> int:
        return self.size

    def matrix(self, i: int) -> Matrix:
        return self._space.matrix_of_perm(self._perms[i])

    def elements(self) -> Iterator[Matrix]:
        """Yield every group element as an exact ambient matrix."""
        for p in self._perms:
            yield self._space.matrix_of_perm(p)

    def contains_matrix(self, m: Matrix) -> bool:
        try:
            p = self._space.perm_of_matrix(m)
        except ValueError:
            return False
        return p in self._perm_set


def enumerate_group(system: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> GroupTable:
    """Breadth-first closure of the simple reflections.

    Deterministic: elements appear in BFS discovery order, generators in
    simple-root order.  Refuses groups whose order formula already
    exceeds ``cap`` (W(E7) and W(E8) at the default).
    """
    order = weyl_group_order(system)
    if order > cap:
        raise ValueError(
            f"W({system.name()}) has {order} elements, beyond the cap of {cap}; "
            "this oracle only enumerates small groups"
        )
    space = _perm_space(system)
    gen_tables = [space.table(space.reflection_perm(r)) for r in system.simple_roots]
    seen = {space.ident}
    found = [space.ident]
    frontier = [space.ident]
    while frontier:
        nxt = []
        for p in frontier:
            tp = space.table(p)
            for gt in gen_tables:
                # p·g: walk the Cayley graph by right multiplication.
                q = space.mul(tp, _gen_raw(space, gt))
                if q not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError(
                            f"enumeration of W({system.name()}) passed {cap} elements "
                            f"with {len(frontier)} words still in the frontier"
                        )
                    seen.add(q)
                    found.append(q)
                    nxt.append(q)
        frontier = nxt
    return GroupTable(system, space, tuple(found))


def _gen_raw(space: _PermSpace, table):
    return table[: space.n] if space.packed else table


# ---------------------------------------------------------------------------
# Conjugacy


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of a conjugacy search.

    ``status`` is ``"conjugate"`` (with a verified ``witness`` u such
    that u w1 u^-1 = w2), ``"not-conjugate"`` (the full class of w1 was
    walked without meeting w2), or ``"unresolved"`` (cap hit first).
    """

    status: str
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.status == "conjugate"


def are_conjugate(
    system: RootSystem,
    w1: Matrix,
    w2: Matrix,
    cap: int = DEFAULT_CONJUGACY_CAP,
) -> ConjugacyResult:
    """Decide whether w1 and w2 are conjugate in W(system).

    Walks the conjugacy class of w1 under conjugation by simple
    reflections (which generates conjugation by the whole group).  The
    witness is rebuilt as an exact matrix and re-verified before it is
    returned.
    """
    space = _perm_space(system)
    p1 = space.perm_of_matrix(w1)
    p2 = space.perm_of_matrix(w2)
    if p1 == p2:
        ident = tuple(
            tuple(Q(1) if i == j else Q(0) for j in range(system.dim))
            for i in range(system.dim)
        )
        return ConjugacyResult("conjugate", ident)
    gens = [space.reflection_perm(r) for r in system.simple_roots]
    gen_tables = [space.table(g) for g in gens]
    parent: dict = {p1: None}
    frontier = [p1]
    while frontier:
        nxt = []
        for p in frontier:
            for gi, gt in enumerate(gen_tables):
                half = space.mul(gt, p)  # g·p
                q = space.mul(space.table(half), gens[gi])  # (g·p)·g = g p g^-1
                if q not in parent:
                    if len(parent) >= cap:
                        return ConjugacyResult("unresolved")
                    parent[q] = (p, gi)
                    if q == p2:
                        witness = _witness_matrix(system, parent, p2)
                        _check_witness(witness, w1, w2)
                        return ConjugacyResult("conjugate", witness)
                    nxt.append(q)
        frontier = nxt
    return ConjugacyResult("not-conjugate")


def _witness_matrix(system: RootSystem, parent: dict, end) -> Matrix:
    chain = []
    node = end
    while parent[node] is not None:
        node, gi = parent[node]
        chain.append(gi)
    # chain holds generator indices from last conjugation to first;
    # u = g_last @ ... @ g_first.
    u = tuple(
        tuple(Q(1) if i == j else Q(0) for j in range(system.dim))
        for i in range(system.dim)
    )
    for gi in reversed(chain):
        u = mat_mul(weyl.reflection(system, system.simple_roots[gi]), u)
    return u


def _check_witness(u: Matrix, w1: Matrix, w2: Matrix) -> None:
    if mat_mul(mat_mul(u, w1), _transpose(u)) != w2:
        raise AssertionError("conjugacy witness failed exact verification")


# ---------------------------------------------------------------------------
# Diagram realization search


@dataclass(frozen=True)
class LabeledDiagram:
    """A realization: roots aligned to the target's vertices."""

    roots: tuple[Vector, ...]
    diagram: dg.Diagram


class _SubsetIndex:
    """Pairwise inner-product tables over sign-class reps, as bitmasks."""

    def __init__(self, system: RootSystem):
        reps = system.sign_class_reps()
        m = len(reps)
        self.reps = reps
        self.inner = [[dot(a, b) for b in reps] for a in reps]
        short = system.short_norm
        self.orth_mask = [0] * m
        self.mag_masks: dict[Q, list[int]] = {}
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                x = self.inner[i][j] / short
                if x == 0:
                    self.orth_mask[i] |= 1 << j
                else:
                    masks = self.mag_masks.setdefault(abs(x), [0] * m)
                    masks[i] |= 1 << j
        self.long_mask = 0
        for i, r in enumerate(reps):
            if system.is_long(r):
                self.long_mask |= 1 << i
        self.short_mask = ((1 << m) - 1) ^ self.long_mask


_SUBSET_INDEXES: dict[str, _SubsetIndex] = {}


def _subset_index(system: RootSystem) -> _SubsetIndex:
    key = system.name()
    idx = _SUBSET_INDEXES.get(key)
    if idx is None:
        idx = _SubsetIndex(system)
        _SUBSET_INDEXES[key] = idx
    return idx


def find_subsets(
    system: RootSystem,
    target: dg.Diagram,
    limit: int | None = None,
) -> list[LabeledDiagram]:
    """All root subsets realizing ``target`` up to sign-flip equivalence.

    Backtracking over sign-class representatives in lexicographic
    order.  A candidate assignment must reproduce the target's
    adjacency (edge where and only where the target has one, with the
    inner-product magnitude the edge demands) and keep the running Gram
    matrix positive definite — which is exactly linear independence for
    root sets, and is what makes an empty result a certificate of
    non-existence.  Edge styles are compared only at the end, up to
    sign flips (style differences must form a cut of the target graph).

    Matches are reported once per root set, in the order the search
    finds them; ``limit`` stops early (the result is then not
    exhaustive).
    """
    k = target.n
    if k == 0:
        return []
    if k > system.rank:
        return []  # more vertices than independent roots can exist
    ratio = system.ratio
    idx = _subset_index(system)
    reps = idx.reps
    m = len(reps)

    # Visit high-degree vertices early so edge constraints bind sooner.
    visit: list[int] = []
    remaining = set(range(k))
    adj = {i: set(target.neighbors(i)) for i in range(k)}
    while remaining:
        best = max(
            remaining,
            key=lambda v: (len(adj[v] & set(visit)), len(adj[v]), -v),
        )
        visit.append(best)
        remaining.discard(best)

    def edge_magnitude(a: int, b: int) -> Q:
        if target.longs[a] or target.longs[b]:
            return ratio / 2
        return Q(1, 2)

    empty = [0] * m
    all_mask = (1 << m) - 1
    base_mask = [
        idx.long_mask if target.longs[v] else idx.short_mask for v in range(k)
    ]
    # constraint_masks[v] = for each earlier-placed u adjacent/non-adjacent
    # to v, the mask family its chosen root will index into.
    placement: list[tuple[int, list[list[int]]]] = []
    for depth, v in enumerate(visit):
        fams = []
        for u in visit[:depth]:
            if u in adj[v]:
                fams.append(idx.mag_masks.get(edge_magnitude(u, v), empty))
            else:
                fams.append(idx.orth_mask)
        placement.append((v, fams))

    results: list[LabeledDiagram] = []
    seen_sets: set[frozenset] = set()
    chosen_pos: list[int] = []  # rep indices, in visit order
    chosen: list[Vector | None] = [None] * k  # indexed by target vertex
    # LDL^T state for the positive-definiteness of the running Gram.
    lrows: list[list[Q]] = []
    pivots: list[Q] = []

    def pd_extend(pos: int) -> bool:
        inner = idx.inner
        row: list[Q] = []
        for i, p in enumerate(chosen_pos):
            val = inner[pos][p]
            for j in range(i):
                val -= row[j] * lrows[i][j] * pivots[j]
            row.append(val / pivots[i])
        piv = inner[pos][pos]
        for j in range(len(row)):
            piv -= row[j] * row[j] * pivots[j]
        if piv <= 0:
            return False
        lrows.append(row)
        pivots.append(piv)
        return True

    def styles_match() -> bool:
        """Realized styles must differ from the target on a cut."""
        color: dict[int, int] = {}
        for start in range(k):
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                a = queue.pop()
                for b in adj[a]:
                    x = dot(chosen[a], chosen[b])
                    realized = dg.DOTTED if x > 0 else dg.SOLID
                    want = 0 if realized == target.edge_style(a, b) else 1
                    if b in color:
                        if color[a] ^ color[b] != want:
                            return False
                    else:
                        color[b] = color[a] ^ want
                        queue.append(b)
        return True

    def descend(depth: int, used: int) -> bool:
        """Returns True when the limit is reached."""
        if depth == k:
            key = frozenset(chosen)
            if key not in seen_sets and styles_match():
                seen_sets.add(key)
                roots = tuple(chosen)
                results.append(
                    LabeledDiagram(roots, dg.from_roots(system, roots))
                )
                if limit is not None and len(results) >= limit:
                    return True
            return False
        v, fams = placement[depth]
        cand = base_mask[v] & ~used & all_mask
        for i, fam in enumerate(fams):
            cand &= fam[chosen_pos[i]]
            if not cand:
                return False
        while cand:
            bit = cand & -cand
            cand ^= bit
            pos = bit.bit_length() - 1
            if pd_extend(pos):
                chosen_pos.append(pos)
                chosen[v] = reps[pos]
                if descend(depth + 1, used | bit):
                    return True
                chosen[v] = None
                chosen_pos.pop()
                lrows.pop()
                pivots.pop()
        return False

    descend(0, 0)
    return results


def verify_unique_class(
    system: RootSystem,
    name: str,
    cap: int = DEFAULT_CONJUGACY_CAP,
) -> bool:
    """True iff every realization of the named diagram gives one class.

    Finds every root subset realizing the catalog diagram ``name``,
    forms the bicolored element of each, and checks that they all lie
    in the conjugacy class of the first (walked once, exhaustively).
    """
    entry = dg.catalog(name)
    found = find_subsets(system, entry.diagram)
    if not found:
        raise ValueError(f"{name} has no realization in {system.name()}")
    space = _perm_space(system)
    refl_cache: dict[Vector, object] = {}
    elements = []
    for item in found:
        parts = dg.bipartition(item.diagram)
        if parts is None:
            raise AssertionError(f"realization of {name} is not bicolorable")
        order = parts[0] + parts[1]
        p = space.ident
        for i in order:
            root = item.roots[i]
            t = refl_cache.get(root)
            if t is None:
                t = space.reflection_perm(root)
                refl_cache[root] = t
            p = space.mul(space.table(p), t)
        elements.append(p)
    first = elements[0]
    gens = [space.reflection_perm(r) for r in system.simple_roots]
    gen_tables = [space.table(g) for g in gens]
    seen = {first}
    frontier = [first]
    while frontier:
        nxt = []
        for p in frontier:
            for gi, gt in enumerate(gen_tables):
                half = space.mul(gt, p)
                q = space.mul(space.table(half), gens[gi])
                if q not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError(
                            f"conjugacy class of {name} in W({system.name()}) "
                            f"exceeded the cap of {cap}; inconclusive"
                        )
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return all(p in seen for p in elements[1:])


# ---------------------------------------------------------------------------
# Orbit counting and complements


def orthogonal_tuple_orbits(system: RootSystem, k: int) -> int:
    """Number of W-orbits of unordered k-tuples of orthogonal root pairs.

    A tuple is a sorted k-subset of sign-class representatives, mutually
    orthogonal; W acts through its generators, with images reduced back
    to representatives.  Counted by union-find over the full tuple set,
    so no group enumeration is needed.
    """
    if k not in (2, 3):
        raise ValueError("only pairs and triples are supported")
    reps = system.sign_class_reps()
    m = len(reps)
    rep_index = {r: i for i, r in enumerate(reps)}
    ortho = [
        frozenset(j for j in range(m) if j != i and dot(reps[i], reps[j]) == 0)
        for i in range(m)
    ]

    tuples: list[tuple[int, ...]] = []
    tuple_index: dict[tuple[int, ...], int] = {}

    def grow(prefix: tuple[int, ...], start: int) -> None:
        if len(prefix) == k:
            tuple_index[prefix] = len(tuples)
            tuples.append(prefix)
            return
        for j in range(start, m):
            if all(j in ortho[i] for i in prefix):
                grow(prefix + (j,), j + 1)

    grow((), 0)

    uf = list(range(len(tuples)))

    def root_of(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for t_idx, t in enumerate(tuples):
        for s in system.simple_roots:
            image = tuple(
                sorted(rep_index[lex_positive_rep(system.reflect(s, reps[i]))] for i in t)
            )
            a, b = root_of(t_idx), root_of(tuple_index[image])
            if a != b:
                uf[a] = b
    return len({root_of(i) for i in range(len(tuples))})


def max_root_complement(system: RootSystem) -> list[str]:
    """Component names of the subsystem orthogonal to the highest root.

    The roots orthogonal to the highest root form a root subsystem; its
    positive part's indecomposable elements are a simple system, whose
    components are classified by shape and length pattern.  Names use
    the smallest-rank convention (a path of three is ``A3``, never
    ``D3``).
    """
    delta = system.max_root()
    members = [r for r in system.roots if dot(r, delta) == 0]
    positives = [r for r in members if lex_positive_rep(r) == r]
    pos_set = set(positives)
    base = [
        p
        for p in positives
        if not any(vec_sub(p, q) in pos_set for q in positives if q != p)
    ]
    if not base:
        return []
    return sorted(
        (_classify_component(system, comp) for comp in _split_components(base)),
        key=lambda s: (-int(s[1:]), s),
    )


def _split_components(base: list[Vector]) -> list[list[Vector]]:
    comps = []
    unvisited = list(base)
    while unvisited:
        comp = [unvisited.pop(0)]
        changed = True
        while changed:
            changed = False
            for r in list(unvisited):
                if any(dot(r, c) != 0 for c in comp):
                    comp.append(r)
                    unvisited.remove(r)
                    changed = True
        comps.append(comp)
    return comps


def _classify_component(system: RootSystem, comp: list[Vector]) -> str:
    n = len(comp)
    if n == 1:
        return "A1"
    degrees = [sum(1 for other in comp if other != r and dot(r, other) != 0) for r in comp]
    edge_count = sum(degrees) // 2
    if edge_count != n - 1:
        raise AssertionError("complement base must be a tree")
    norms = [dot(r, r) for r in comp]
    mixed = len(set(norms)) > 1
    if not mixed:
        if max(degrees) <= 2:
            return f"A{n}"
        if max(degrees) > 3 or degrees.count(3) != 1:
            raise AssertionError("unrecognized branching in complement base")
        branches = sorted(_branch_lengths(comp, degrees))
        if branches[:2] == [1, 1]:
            return f"D{n}"
        if branches[:2] == [1, 2]:
            return f"E{n}"
        raise AssertionError(f"unrecognized simply-laced tree {branches}")
    if max(degrees) > 2:
        raise AssertionError("mixed-length complement base must be a path")
    low = min(norms)
    shorts = norms.count(low)
    if n == 2:
        return "G2" if max(norms) // low == 3 else "B2"
    if shorts == 2 and n == 4:
        return "F4"
    if shorts == 1:
        return f"B{n}"
    if shorts == n - 1:
        return f"C{n}"
    raise AssertionError("unrecognized mixed-length path")


def _branch_lengths(comp: list[Vector], degrees: list[int]) -> list[int]:
    hub = comp[degrees.index(3)]
    lengths = []
    for start in comp:
        if start == hub or dot(start, hub) == 0:
            continue
        length = 1
        prev, node = hub, start
        while True:
            nxt = [
                r
                for r in comp
                if r != prev and r != node and dot(r, node) != 0
            ]
            if not nxt:
                break
            (node, prev), length = (nxt[0], node), length + 1
        lengths.append(length)
    return lengths


# ---------------------------------------------------------------------------
# Corrector reflections


def corrector_conjugator(system: RootSystem, wrong: Vector, right: Vector) -> Matrix:
    """The reflection product T = s_wrong s_right s_wrong.

    When the two roots are adjacent (inner product ±1/2 after
    normalization), T carries s_right to s_wrong under conjugation —
    the standard repair when a relation was written with the wrong
    root.  Roots orthogonal to both are fixed by T.
    """
    wrong = tuple(wrong)
    right = tuple(right)
    for v in (wrong, right):
        if not system.is_root(v):
            raise ValueError(f"{v} is not a root of {system.name()}")
    if wrong == right or wrong == tuple(-x for x in right):
        raise ValueError("degenerate corrector: the roots coincide up to sign")
    sw = weyl.reflection(system, wrong)
    sr = weyl.reflection(system, right)
    return mat_mul(mat_mul(sw, sr), sw)
