"""Root system models: construction, membership, parsing, formatting."""

import pytest
from fractions import Fraction as Q

from weylcalc.exactla import dot, vec_add, vec_neg, vec_scale
from weylcalc.rootsys import (
    build,
    build_by_name,
    format_vector,
    lex_positive_rep,
    parse_vector,
)

ROOT_COUNTS = {
    "A4": 20,
    "B3": 18,
    "C3": 18,
    "D4": 24,
    "G2": 12,
    "F4": 48,
    "E6": 72,
    "E7": 126,
    "E8": 240,
}


def test_root_counts():
    for name, expected in ROOT_COUNTS.items():
        assert len(build_by_name(name).roots) == expected, name


def test_length_ratios():
    assert build_by_name("D4").ratio == 1
    assert build_by_name("A5").ratio == 1
    assert build_by_name("B3").ratio == 2
    assert build_by_name("C3").ratio == 2
    assert build_by_name("F4").ratio == 2
    assert build_by_name("G2").ratio == 3


def test_rank_ranges_rejected():
    for family, rank in (("A", 0), ("A", 17), ("B", 1), ("D", 2), ("E", 9),
                         ("E", 5), ("F", 3), ("G", 3)):
        with pytest.raises(ValueError):
            build(family, rank)
    with pytest.raises(ValueError):
        build("H", 3)


def test_build_by_name():
    s = build_by_name("D4")
    assert (s.family, s.rank) == ("D", 4)
    assert s.name() == "D4"
    with pytest.raises((ValueError, KeyError)):
        build_by_name("Q7")


def test_membership_and_closure():
    s = build_by_name("D4")
    assert s.is_root(s.parse_root("e1-e2"))
    assert s.is_root(s.parse_root("e1+e2"))
    assert not s.is_root((Q(1), Q(0), Q(0), Q(0)))  # that one lives in B4
    # closed under negation and reflection
    for r in s.roots:
        assert s.is_root(vec_neg(r))
        assert s.is_root(s.reflect(s.roots[0], r))


def test_parse_format_round_trip_simply_laced():
    s = build_by_name("D5")
    for r in s.roots:
        assert parse_vector(format_vector(r), s.dim) == r


def test_parse_format_round_trip_mixed_lengths():
    for name in ("B3", "G2", "F4", "E8"):
        s = build_by_name(name)
        for r in s.roots:
            assert parse_vector(format_vector(r), s.dim) == r, format_vector(r)


def test_half_integer_roots():
    s = build_by_name("E8")
    r = s.parse_root("e1-e2-e3-e4-e5-e6-e7+e8/2")
    assert dot(r, r) == 2
    assert r == vec_scale(Q(1, 2), parse_vector("e1-e2-e3-e4-e5-e6-e7+e8", 8))


def test_parse_vector_grammar():
    assert parse_vector("e1-e2", 4) == (1, -1, 0, 0)
    assert parse_vector("2e3", 4) == (0, 0, 2, 0)
    assert parse_vector(" e1 + e2 ", 4) == (1, 1, 0, 0)
    assert parse_vector("-e1+2e2-e3", 3) == (-1, 2, -1)
    for bad in ("", "e0", "e5", "1+e2", "e1++e2", "x1", "e1/3"):
        with pytest.raises(ValueError):
            parse_vector(bad, 4)


def test_format_vector_shapes():
    assert format_vector((1, -1, 0, 0)) == "e1-e2"
    assert format_vector((0, 0, 2, 0)) == "2e3"
    assert format_vector((0, 0, 0, 0)) == "0"
    half = tuple(Q(1, 2) if i != 1 else Q(-1, 2) for i in range(8))
    assert format_vector(half).endswith("/2")


def test_parse_root_validates_membership():
    s = build_by_name("A3")
    with pytest.raises(ValueError):
        s.parse_root("e1+e2")  # a vector, but not a root of A3


def test_lex_positive_rep():
    s = build_by_name("D4")
    for r in s.roots:
        rep = lex_positive_rep(r)
        assert rep == lex_positive_rep(vec_neg(r))
        assert rep in (r, vec_neg(r))
    reps = s.sign_class_reps()
    assert len(reps) == len(s.roots) // 2
    assert set(reps) == {lex_positive_rep(r) for r in s.roots}


def test_max_root_is_dominant_and_long():
    for name in ("A4", "D4", "B3", "G2", "E6"):
        s = build_by_name(name)
        high = s.max_root()
        assert s.is_root(high)
        assert dot(high, high) == s.long_norm
        for simple in s.simple_roots:
            assert dot(high, simple) >= 0


def test_simple_coefficients_reconstruct():
    s = build_by_name("D4")
    for r in (s.max_root(), s.roots[0], s.roots[-1]):
        coeffs = s.simple_coefficients(r)
        total = (Q(0),) * s.dim
        for c, simple in zip(coeffs, s.simple_roots):
            total = vec_add(total, vec_scale(c, simple))
        assert total == r


def test_normalized_inner():
    s = build_by_name("B3")
    long_root = s.parse_root("e1-e2")
    short_root = s.parse_root("e3")
    assert s.normalized_norm(short_root) == 1
    assert s.normalized_norm(long_root) == 2
    assert s.is_long(long_root)
    assert not s.is_long(short_root)
