"""Exact linear algebra and polynomial arithmetic."""

from fractions import Fraction as Q

from weylcalc.exactla import (
    charpoly,
    count_real_roots_in_interval,
    cyclotomic,
    cyclotomic_factors,
    det,
    dot,
    gram_positive_definite,
    identity,
    is_product_of_cyclotomics,
    mat,
    mat_mul,
    mat_pow,
    mat_vec,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_str,
    poly_trim,
    rank,
    real_root_in_interval,
    solve,
    trace,
    vec,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)


def test_vector_arithmetic():
    x = vec(1, 2, 3)
    y = vec(4, 5, 6)
    assert vec_add(x, y) == (5, 7, 9)
    assert vec_sub(y, x) == (3, 3, 3)
    assert vec_scale(Q(1, 2), x) == (Q(1, 2), 1, Q(3, 2))
    assert vec_neg(x) == (-1, -2, -3)
    assert dot(x, y) == 32


def test_matrix_products():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert mat_mul(a, b) == ((2, 1), (4, 3))
    assert mat_mul(a, identity(2)) == a
    assert mat_vec(a, vec(1, 1)) == (3, 7)
    assert mat_pow(b, 2) == identity(2)
    assert mat_pow(a, 0) == identity(2)
    assert trace(a) == 5


def test_charpoly_is_monic_ascending():
    """charpoly returns det(xI - A), coefficients in ascending degree."""
    assert charpoly(identity(3)) == (-1, 3, -3, 1)
    d = mat([[2, 0], [0, 5]])
    assert charpoly(d) == (10, -7, 1)
    # companion matrix of x^2 + x + 1 (a rotation by a third of a turn)
    c = mat([[0, -1], [1, -1]])
    assert charpoly(c) == (1, 1, 1)


def test_charpoly_multiplicative_on_block_diagonal():
    a = mat([[0, -1, 0], [1, -1, 0], [0, 0, 7]])
    assert charpoly(a) == poly_mul((Q(1), Q(1), Q(1)), (Q(-7), Q(1)))


def test_rank_solve_det():
    rows = [vec(1, 0, 0), vec(0, 1, 0), vec(1, 1, 0)]
    assert rank(rows) == 2
    assert rank([vec(1, 2), vec(3, 4)]) == 2
    a = mat([[2, 0], [0, 3]])
    assert solve(a, vec(4, 9)) == (2, 3)
    singular = mat([[1, 1], [1, 1]])
    assert solve(singular, vec(1, 2)) is None
    assert det(mat([[1, 2], [3, 4]])) == -2
    assert det(identity(4)) == 1


def test_gram_positive_definite():
    assert gram_positive_definite(identity(3))
    assert gram_positive_definite(mat([[1, Q(-1, 2)], [Q(-1, 2), 1]]))
    assert not gram_positive_definite(mat([[1, 2], [2, 1]]))
    # singular but non-negative: the nil-root Gram of a solid triangle
    g = mat([[1, Q(-1, 2), Q(-1, 2)],
             [Q(-1, 2), 1, Q(-1, 2)],
             [Q(-1, 2), Q(-1, 2), 1]])
    assert not gram_positive_definite(g)


def test_poly_basics():
    p = (Q(-1), Q(0), Q(1))  # t^2 - 1, constant term first
    q = (Q(1), Q(1))         # t + 1
    assert poly_mul(p, q) == (-1, -1, 1, 1)
    quo, rem = poly_divmod(p, q)
    assert quo == (-1, 1) and rem == (0,)
    assert poly_degree(p) == 2
    assert poly_trim((Q(1), Q(2), Q(0), Q(0))) == (1, 2)
    assert poly_eval(p, Q(3)) == 8
    assert poly_gcd(poly_mul(p, q), q) == q


def test_poly_str():
    assert poly_str((Q(1), Q(-1), Q(1)), "t") == "t^2 - t + 1"
    assert poly_str((Q(1), Q(0), Q(2), Q(0), Q(1))) == "x^4 + 2*x^2 + 1"
    assert poly_str((Q(1), Q(1), Q(0), Q(1), Q(1)), "t") == "t^4 + t^3 + t + 1"
    assert poly_str((Q(5),)) == "5"


def test_cyclotomic_values():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)
    assert poly_degree(cyclotomic(15)) == 8
    assert cyclotomic(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_cyclotomic_product_is_t_power_minus_one():
    """The product of the d-th cyclotomics over divisors d of n is t^n - 1."""
    for n in (1, 2, 6, 12):
        prod = (Q(1),)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic(d))
        assert prod == (Q(-1),) + (Q(0),) * (n - 1) + (Q(1),)


def test_cyclotomic_recognition():
    squared = poly_mul((Q(1), Q(0), Q(1)), (Q(1), Q(0), Q(1)))
    assert squared == (1, 0, 2, 0, 1)
    assert is_product_of_cyclotomics(squared)
    assert sorted(cyclotomic_factors(squared)) == [4, 4]
    assert sorted(cyclotomic_factors((Q(1), Q(0), Q(0), Q(1)))) == [2, 6]
    # x^4 - 4x^3 - x^2 - 4x + 1 has a real root near 4.42, so it cannot
    # be a product of cyclotomics
    p = (Q(1), Q(-4), Q(-1), Q(-4), Q(1))
    assert not is_product_of_cyclotomics(p)
    assert cyclotomic_factors(p) is None


def test_real_root_counting():
    p = poly_mul(poly_mul((Q(-1), Q(1)), (Q(-2), Q(1))), (Q(-3), Q(1)))
    assert count_real_roots_in_interval(p, Q(0), Q(4)) == 3
    assert count_real_roots_in_interval(p, Q(3, 2), Q(4)) == 2
    two = (Q(-2), Q(0), Q(1))
    assert real_root_in_interval(two, Q(7, 5), Q(3, 2))
    assert not real_root_in_interval(two, Q(0), Q(1))
