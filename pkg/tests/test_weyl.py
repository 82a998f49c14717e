"""Reflections, word evaluation, and element orders."""

import pytest
from fractions import Fraction as Q

from weylcalc.exactla import charpoly, identity, mat, mat_mul, mat_vec
from weylcalc.rootsys import build_by_name
from weylcalc.weyl import (
    apply_word,
    conjugate,
    evaluate,
    is_involution,
    order_or_infinite,
    reflection,
    verify_bicolored,
    word_matrix,
    word_matrix_from_gram,
)


def test_reflection_properties():
    s = build_by_name("D4")
    r = s.parse_root("e1-e2")
    m = reflection(s, r)
    assert mat_mul(m, m) == identity(s.dim)
    assert mat_vec(m, r) == tuple(-c for c in r)
    orthogonal = s.parse_root("e3-e4")
    assert mat_vec(m, orthogonal) == orthogonal


def test_reflection_preserves_roots():
    for name in ("A3", "B3", "G2"):
        s = build_by_name(name)
        for r in s.roots[:4]:
            m = reflection(s, r)
            for other in s.roots:
                assert s.is_root(mat_vec(m, other))


def test_evaluate_composition_order():
    """A word (r1, ..., rk) acts as s_{r1} after s_{r2} after ... after s_{rk}:
    the rightmost reflection is applied to a vector first."""
    s = build_by_name("A3")
    a = s.parse_root("e1-e2")
    b = s.parse_root("e2-e3")
    ab = evaluate(s, (a, b))
    assert ab == mat_mul(reflection(s, a), reflection(s, b))
    v = s.parse_root("e3-e4")
    assert apply_word(s, (a, b), v) == mat_vec(
        reflection(s, a), mat_vec(reflection(s, b), v)
    )
    assert ab != evaluate(s, (b, a))  # the two reflections do not commute


def test_word_matrix_is_word_basis_view():
    """word_matrix expresses the product in the basis of the word's own
    roots, so its charpoly has degree len(word)."""
    s = build_by_name("D4")
    word = tuple(s.parse_root(t) for t in ("e1-e2", "e3-e4", "e2-e3", "e2+e3"))
    m = word_matrix(s, word)
    assert len(m) == 4
    assert charpoly(m) == (1, 0, 2, 0, 1)


def test_word_matrix_from_gram_small():
    # two reflections at 120 degrees: a rotation of order three
    g = mat([[1, Q(-1, 2)], [Q(-1, 2), 1]])
    c = word_matrix_from_gram(g, (0, 1))
    assert charpoly(c) == (1, 1, 1)
    assert mat_mul(mat_mul(c, c), c) == identity(2)


def test_is_involution():
    s = build_by_name("A3")
    a = s.parse_root("e1-e2")
    b = s.parse_root("e3-e4")
    assert is_involution(s, (a, a)) == "identity"
    assert is_involution(s, (a, b)) == "involution"
    assert is_involution(s, (a, s.parse_root("e2-e3"))) == "not-involution"


def test_conjugate_word():
    s = build_by_name("D4")
    word = tuple(s.parse_root(t) for t in ("e1-e2", "e3-e4", "e2-e3", "e2+e3"))
    u = (s.parse_root("e1-e3"),)
    moved = conjugate(s, word, u)
    assert all(s.is_root(r) for r in moved)
    um = evaluate(s, u)
    assert evaluate(s, moved) == mat_mul(mat_mul(um, evaluate(s, word)), um)


def test_verify_bicolored():
    s = build_by_name("D4")
    a1 = s.parse_root("e1-e2")
    a2 = s.parse_root("e3-e4")
    b1 = s.parse_root("e2-e3")
    b2 = s.parse_root("e2+e3")
    word = (a1, a2, b1, b2)
    ok, reason = verify_bicolored(s, word, (a1, a2), (b1, b2))
    assert ok and reason is None
    bad, why = verify_bicolored(s, word, (a1, b1), (a2, b2))
    assert not bad and why == "non-orthogonal-alpha"
    flipped, why = verify_bicolored(s, (a2, a1, b1, b2), (a1, a2), (b2, b1))
    assert flipped and why is None  # orthogonal letters commute inside a block


def test_order_or_infinite_finite():
    s = build_by_name("A2")
    a, b = s.simple_roots
    coxeter = evaluate(s, (a, b))
    assert order_or_infinite(coxeter) == 3
    s4 = build_by_name("D4")
    word = tuple(s4.parse_root(t) for t in ("e1-e2", "e3-e4", "e2-e3", "e2+e3"))
    assert order_or_infinite(evaluate(s4, word)) == 4
    assert order_or_infinite(identity(3)) == 1
    assert order_or_infinite(mat([[-1]])) == 2


def test_order_or_infinite_infinite():
    shear = mat([[1, 1], [0, 1]])
    assert order_or_infinite(shear) == "infinite"
    stretch = mat([[2, 0], [0, 1]])
    assert order_or_infinite(stretch) == "infinite"


def test_word_rejects_non_roots():
    s = build_by_name("A3")
    with pytest.raises(ValueError):
        evaluate(s, ((Q(1), Q(0), Q(0), Q(0)),))
