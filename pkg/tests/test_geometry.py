import random
from fractions import Fraction

import pytest

from hecke_lab.exact.matrix import ExactMatrix
from hecke_lab.exact.scalar import Scalar
from hecke_lab.geometry import (BOUNDED, ESSENTIALLY_BOUNDED, NEITHER, NilpotentElement,
                                ParameterError, RankInvariant, SemisimpleElement, boundedness_class,
                                check_parameter, closure_leq, graded_space, is_distinguished,
                                is_open, jm_triple, lemma112_criterion, multisegments, open_orbit_rep,
                                orbit_classes, orbit_dim, parameter_from_json, parameter_to_json,
                                rank_invariants)
from hecke_lab.suites import jordan_rep, partitions, random_parameter


def E(n, *units):
    """Sum of matrix units, 1-based (i, j) pairs."""
    return NilpotentElement.from_units(n, [(i - 1, j - 1) for i, j in units])


S11 = SemisimpleElement([1, -1])
S3 = SemisimpleElement([2, 0, -2])


def test_graded_space_examples():
    G = graded_space(S11, 1)
    assert G.dim == 1 and G.basis == [(0, 1)]
    G = graded_space(S3, 1)
    assert G.dim == 2 and sorted(G.basis) == [(0, 1), (1, 2)]
    assert graded_space(SemisimpleElement([0, 0]), 1).dim == 0


def test_graded_space_elements_are_eigenvectors():
    sig = SemisimpleElement([3, 1, 1, -1, 5])
    for (i, j) in graded_space(sig, 1).basis:
        X = ExactMatrix.unit(5, i, j)
        assert sig.matrix().commutator(X) == X.scale(2)


def test_graded_space_r0_is_nilpotent_cone():
    # Z(sigma) = gl2 x gl1: nilpotent cone of dimension 2
    assert graded_space(SemisimpleElement([0, 0, 1]), 0).dim == 2


def test_jm_examples():
    T = jm_triple(NilpotentElement.zero(2))
    assert T.h.is_zero() and T.f.is_zero()
    T = jm_triple(E(2, (1, 2)))
    assert T.h == ExactMatrix.diagonal([1, -1])
    assert T.f == ExactMatrix.unit(2, 1, 0)
    T = jm_triple(E(3, (1, 2), (2, 3)))
    assert T.h == ExactMatrix.diagonal([2, 0, -2])
    assert T.f == ExactMatrix([[0, 0, 0], [2, 0, 0], [0, 2, 0]])
    assert T.check()


def test_jm_triples_relations_random():
    rng = random.Random(1)
    for _ in range(80):
        y, sig, r = random_parameter(rng, 5)
        T = jm_triple(y, sig, r)
        assert T.check()
        assert T.e == y.matrix


def test_jm_deterministic():
    y = E(4, (1, 2), (3, 4))
    assert jm_triple(y).to_json() == jm_triple(y).to_json()


def test_is_open_examples():
    assert is_open(E(2, (1, 2)), S11, 1)
    assert not is_open(NilpotentElement.zero(2), S11, 1)
    assert is_open(E(3, (1, 2), (2, 3)), S3, 1)
    assert not is_open(E(3, (1, 2)), S3, 1)
    assert orbit_dim(E(3, (1, 2), (2, 3)), S3) == 2
    assert orbit_dim(E(3, (1, 2)), S3) == 1
    Z3 = SemisimpleElement([0, 0, 0])
    assert is_open(E(3, (1, 2), (2, 3)), Z3, 0)
    assert not is_open(E(3, (1, 2)), Z3, 0)


def test_parameter_checks():
    with pytest.raises(ParameterError):
        check_parameter(E(2, (2, 1)), S11, 1)
    with pytest.raises(ValueError):
        NilpotentElement([[1, 0], [0, 0]])


def test_centralizer_criterion_examples():
    assert lemma112_criterion(E(2, (1, 2)), S11, 1)
    assert not lemma112_criterion(NilpotentElement.zero(2), S11, 1)
    assert not lemma112_criterion(E(3, (1, 2)), S3, 1)
    assert jm_triple(E(3, (1, 2)), S3, 1).sigma0 == SemisimpleElement([1, 1, -2])


def test_centralizer_criterion_requires_nonzero_r():
    with pytest.raises(ParameterError):
        lemma112_criterion(E(2, (1, 2)), SemisimpleElement([0, 0]), 0)


def test_open_orbit_fails_centralizer_criterion():
    # sigma = diag(-1, 1, 1): the space is C^2 under GL1 x GL2 and y = E21 is open,
    # but the criterion's right side is only span{E21}
    sig = SemisimpleElement([-1, 1, 1])
    y = E(3, (2, 1))
    assert is_open(y, sig, 1)
    assert jm_triple(y, sig, 1).sigma0 == SemisimpleElement([0, 0, 1])
    assert not lemma112_criterion(y, sig, 1)


def test_centralizer_criterion_implies_open():
    rng = random.Random(2)
    for _ in range(200):
        y, sig, r = random_parameter(rng, 5)
        if lemma112_criterion(y, sig, r):
            assert is_open(y, sig, r)


def test_boundedness_examples():
    assert boundedness_class(SemisimpleElement(["i", "-1*i"])) == BOUNDED
    assert boundedness_class(SemisimpleElement(["1+i", "1-i"])) == ESSENTIALLY_BOUNDED
    assert boundedness_class(SemisimpleElement([1, 0])) == NEITHER


def test_distinguished_examples():
    assert is_distinguished(E(3, (1, 2), (2, 3)))
    assert not is_distinguished(E(3, (1, 2)))
    assert is_distinguished(NilpotentElement.zero(1))


def test_rank_invariant_examples():
    assert str(rank_invariants(E(3, (1, 2), (2, 3)), S3, 1)) == "(1,1;1)"
    assert str(rank_invariants(E(3, (1, 2)), S3, 1)) == "(1,0;0)"
    assert set(rank_invariants(NilpotentElement.zero(3), S3, 1).flat()) == {0}


def test_closure_examples():
    zero = rank_invariants(NilpotentElement.zero(3), S3, 1)
    a = rank_invariants(E(3, (1, 2)), S3, 1)
    b = rank_invariants(E(3, (1, 2), (2, 3)), S3, 1)
    assert closure_leq(zero, b) and closure_leq(zero, a)
    assert closure_leq(a, b)
    assert not closure_leq(b, a)


def test_closure_shape_mismatch():
    a = rank_invariants(NilpotentElement.zero(2), S11, 1)
    b = rank_invariants(NilpotentElement.zero(3), S3, 1)
    with pytest.raises(ValueError):
        closure_leq(a, b)


def test_open_orbit_rep_examples():
    assert open_orbit_rep(S3, 1) == E(3, (1, 2), (2, 3))
    assert open_orbit_rep(S11, 1) == E(2, (1, 2))
    assert open_orbit_rep(SemisimpleElement([0, 0]), 1).is_zero()


def test_multisegments_a2_block():
    # [-2,2], [-2,0][2], [-2][0,2], [-2][0][2]
    labels = sorted(" ".join(map(str, ms)) for ms in multisegments(S3, 1))
    assert len(labels) == 4
    assert "[-2,2]" in labels


def test_unique_open_orbit_small_sweep():
    from itertools import combinations_with_replacement
    for n in range(1, 5):
        for sig in combinations_with_replacement(range(-3, 4), n):
            s = SemisimpleElement(sig)
            D = graded_space(s, 1).dim
            cls = orbit_classes(s, 1)
            assert sum(1 for c in cls if c[3] == D) == 1
            assert is_open(open_orbit_rep(s, 1), s, 1)


def test_closure_partial_order_and_dimensions():
    for sig in ([4, 2, 2, 0], [2, 2, 0, 0], [6, 4, 2, 0], [2, 0, 0, -2]):
        s = SemisimpleElement(sig)
        cls = orbit_classes(s, 1)
        for _, ya, a, da in cls:
            assert closure_leq(a, a)
            for _, yb, b, db in cls:
                if closure_leq(a, b) and a != b:
                    assert not closure_leq(b, a)
                    assert da < db
                for _, _, c, _ in cls:
                    if closure_leq(a, b) and closure_leq(b, c):
                        assert closure_leq(a, c)


def test_essentially_bounded_is_open():
    rng = random.Random(4)
    for n in range(1, 5):
        for lam in partitions(n):
            y = jordan_rep(lam)
            h = jm_triple(y).h
            for _ in range(12):
                r = rng.choice([1, 2, Fraction(1, 2)])
                c = Fraction(rng.randint(-3, 3), 2)
                s0 = []
                for m in lam:
                    s0 += [Scalar(c, rng.randint(-2, 2))] * m
                sig = SemisimpleElement([s0[i] + r * h[i, i] for i in range(n)])
                assert is_open(y, sig, r)


def test_distinguished_sigma0_scalar():
    for n in range(1, 6):
        y = jordan_rep((n,))
        sig = SemisimpleElement([Scalar(1, 1) + 2 * (n - 1 - 2 * i) for i in range(n)])
        s0 = jm_triple(y, sig, 2).sigma0
        assert len(set(s0.eigenvalues)) == 1


def test_parameter_json_round_trip():
    data = parameter_to_json(E(3, (1, 2), (2, 3)), S3, 1)
    y, sig, r = parameter_from_json(data)
    assert y == E(3, (1, 2), (2, 3)) and sig == S3 and r == 1
    with pytest.raises(ParameterError):
        parameter_from_json({"n": 2, "sigma": [1, -1], "y": [[0, 1, 0], [0, 0]]})


def test_rank_invariant_json():
    inv = rank_invariants(E(3, (1, 2), (2, 3)), S3, 1)
    assert isinstance(inv, RankInvariant)
    assert inv.to_json() == rank_invariants(E(3, (1, 2), (2, 3)), S3, 1).to_json()
