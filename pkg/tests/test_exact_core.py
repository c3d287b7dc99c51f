import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke_lab.exact.matrix import ExactMatrix
from hecke_lab.exact.poly import Poly, apply_matrix, demazure, random_poly
from hecke_lab.exact.scalar import I, ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar
from hecke_lab.roots import build_root_datum

A1 = [[-1]]   # s_alpha on the adjoint A1 lattice


def test_i_squared():
    assert I * I == -ONE
    z = Scalar(Fraction(1, 2), Fraction(-3, 4))
    assert z.real == as_scalar(Fraction(1, 2))
    assert z.imag == as_scalar(Fraction(-3, 4))
    assert z.conjugate() == Scalar(Fraction(1, 2), Fraction(3, 4))


def test_scalar_strings():
    assert format_scalar(as_scalar(Fraction(6, 4))) == "3/2"
    assert format_scalar(Scalar(Fraction(-3, 4), Fraction(2, 3))) == "-3/4+2/3*i"
    assert format_scalar(ZERO) == "0"
    assert parse_scalar("2-1*i") == Scalar(2, -1)
    assert parse_scalar("i") == I
    with pytest.raises(ValueError):
        parse_scalar("1.5.2")


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_scalar_round_trip(a, b):
    s = Scalar(a, b)
    assert parse_scalar(format_scalar(s)) == s


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20),
       st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_gaussian_field_axioms(a, b, c, d):
    x, y = Scalar(a, b), Scalar(c, d)
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x


def test_demazure_examples():
    alpha = Poly.linear([1])
    assert demazure(alpha, alpha, A1) == Poly.constant(1, 2)
    assert demazure(alpha * alpha, alpha, A1) == Poly.zero(1)
    # A2 with <beta, alpha^vee> = -1: s_alpha(beta) = beta + alpha
    d = build_root_datum("A2", "adjoint")
    a, b = (Poly.linear(r) for r in d.simple_roots)
    assert demazure(b, a, d.simple_reflection(0)) == Poly.constant(d.rank, -1)


def test_demazure_inexact_division_raises():
    # a swap of coordinates is not the reflection for x0
    x0 = Poly.linear([1, 0])
    with pytest.raises(ArithmeticError):
        demazure(x0, x0, [[0, 1], [1, 0]])


def test_kernel_examples():
    assert ExactMatrix.identity(2).kernel() == []
    assert len(ExactMatrix.zeros(2, 2).kernel()) == 2
    K = ExactMatrix([[1, 1], [1, 1]]).kernel()
    assert len(K) == 1
    v = K[0]
    assert v[0] == -v[1] and v[0] != 0


def test_kernel_deterministic_pivots():
    M = ExactMatrix([[1, 2, 3], [2, 4, 6]])
    assert M.kernel() == M.kernel()
    assert [tuple(map(format_scalar, v)) for v in M.kernel()] == [("-2", "1", "0"), ("-3", "0", "1")]


def test_apply_weyl_examples():
    f = Poly.linear([1])
    assert apply_matrix([[1]], f) == f
    assert apply_matrix(A1, f) == -f
    d = build_root_datum("A2", "adjoint")
    a, b = (Poly.linear(r) for r in d.simple_roots)
    assert apply_matrix(d.simple_reflection(1), a) == a + b


def test_apply_weyl_is_an_action():
    rng = random.Random(3)
    d = build_root_datum("B2")
    s0, s1 = d.simple_reflection(0), d.simple_reflection(1)
    prod = [[sum(s0[i][k] * s1[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    for _ in range(20):
        f = random_poly(rng, 2, 3, 4)
        assert apply_matrix(s0, apply_matrix(s1, f)) == apply_matrix(prod, f)


def test_apply_weyl_dimension_mismatch():
    with pytest.raises(ValueError):
        apply_matrix([[1, 0], [0, 1]], Poly.linear([1]))


def test_demazure_property_random():
    rng = random.Random(0)
    for label in ("A2", "B2", "G2"):
        d = build_root_datum(label)
        for _ in range(70):
            i = rng.randrange(2)
            alpha, s = Poly.linear(d.simple_roots[i]), d.simple_reflection(i)
            f = random_poly(rng, d.rank, 4, 5)
            q = demazure(f, alpha, s)
            assert alpha * q == f - apply_matrix(s, f)
            assert (not q) == (apply_matrix(s, f) == f)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 12), st.randoms(use_true_random=False))
def test_rank_nullity(m, n, k, rnd):
    k = min(k, m, n)
    if k:
        A = ExactMatrix([[rnd.randint(-3, 3) for _ in range(k)] for _ in range(m)])
        B = ExactMatrix([[rnd.randint(-3, 3) for _ in range(n)] for _ in range(k)])
        M = A @ B
    else:
        M = ExactMatrix.zeros(m, n)
    K = M.kernel()
    assert len(K) + M.rank() == n
    for v in K:
        assert all(x == 0 for x in M.apply(v))


def test_gaussian_kernel():
    M = ExactMatrix([[1, I], [I, -1]])
    K = M.kernel()
    assert len(K) == 1 and M.rank() == 1
    assert all(x == 0 for x in M.apply(K[0]))


def test_flint_and_pure_paths_agree():
    # large rational matrices take the flint path; a tiny imaginary part forces pure Python
    rng = random.Random(5)
    rows = [[rng.randint(-2, 2) for _ in range(9)] for _ in range(8)]
    rows[7] = [a + b for a, b in zip(rows[0], rows[1])]
    M = ExactMatrix(rows)
    shifted = M + ExactMatrix([[Scalar(0, 0) for _ in range(9)] for _ in range(8)])
    assert M.rref() == shifted.rref()
    assert M.kernel() == shifted.kernel()
    Mi = ExactMatrix([[v + (I if (i, j) == (0, 0) else ZERO) for j, v in enumerate(row)]
                      for i, row in enumerate(M.rows)])
    Mi = Mi - ExactMatrix([[I if (i, j) == (0, 0) else ZERO for j in range(9)] for i in range(8)])
    assert Mi.kernel() == M.kernel()


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_poly_ring_laws(a, b, c):
    f = Poly(2, {(0, 0): a[0], (1, 0): a[1], (0, 1): a[2], (1, 1): a[3]})
    g = Poly(2, {(0, 0): b[0], (2, 0): b[1], (0, 1): b[2], (1, 2): b[3]})
    h = Poly(2, {(0, 0): c[0], (1, 0): c[1], (0, 3): c[2], (1, 1): c[3]})
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert all(v != 0 for v in (f * g).terms.values())


def test_inverse_and_det():
    M = ExactMatrix([[2, 1], [1, 1]])
    assert M @ M.inverse() == ExactMatrix.identity(2)
    assert M.det() == 1
    assert ExactMatrix.from_json(M.to_json()) == M
