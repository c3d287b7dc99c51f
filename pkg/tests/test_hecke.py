import random
from fractions import Fraction

import pytest

from hecke_lab.exact.poly import Poly, random_poly
from hecke_lab.hecke import (GradedHeckeAlgebraSpec, ParameterRatioError, normalize_equal_parameters,
                             random_element, sgn_map)
from hecke_lab.module import induce_character, pushforward_normalized
from hecke_lab.suites import random_parabolic_module


def a1(k=2, r=1):
    H = GradedHeckeAlgebraSpec.build("A1", "adjoint", k=k, r=r)
    return H, H.N(H.group.simple[0]), H.poly(Poly.linear([1]))


def test_cross_relation_a1():
    H, N, alpha = a1()
    k, r = 2, 1
    assert N * alpha == -alpha * N + 2 * k * r
    assert N * N == H.one()
    assert N * alpha * N == -alpha + (2 * k * r) * N


def test_cross_relation_fractional_parameters():
    H, N, alpha = a1(k=Fraction(1, 3), r=Fraction(3, 2))
    assert N * alpha == -alpha * N + 1


def test_normal_form_is_unique():
    H, N, alpha = a1()
    x = alpha * N + 3
    y = H.poly(Poly.linear([1])) * N + H.poly(Poly.constant(1, 3))
    assert x == y and hash(x) == hash(y)
    assert (x - y).is_zero()


@pytest.mark.parametrize("label,lattice,k", [("A1", "gl", 2), ("A2", "gl", 2),
                                             ("B2", None, {"long": 4, "short": 2})])
def test_associativity(label, lattice, k):
    rng = random.Random(0)
    H = GradedHeckeAlgebraSpec.build(label, lattice, k=k, r=Fraction(1, 2))
    for _ in range(34):
        a, b, c = (random_element(H, rng, 2, 2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_reduced_word_independence_b2():
    H = GradedHeckeAlgebraSpec.build("B2", k={"long": 4, "short": 2})
    G = H.group
    for w in range(G.order):
        words = G.reduced_words(w)
        assert words
        for word in words:
            p = H.one()
            for i in word:
                p = p * H.N(G.simple[i])
            assert p == H.N(w)


@pytest.mark.parametrize("label,lattice,k", [("A1", "gl", 2), ("A2", "gl", 6), ("G2", None, 2),
                                             ("B2", None, {"long": 4, "short": 2})])
def test_defining_relations(label, lattice, k):
    rng = random.Random(1)
    H = GradedHeckeAlgebraSpec.build(label, lattice, k=k, r=Fraction(3, 2))
    for i, s in enumerate(H.group.simple):
        for _ in range(10):
            f = random_poly(rng, H.nvars, 3, 4)
            lhs = H.N(s) * H.poly(f) - H.poly(H.act(s, f)) * H.N(s)
            assert lhs == H.poly(H.demazure(i, f) * (H.simple_k[i] * H.r))


def test_sgn_examples():
    H, N, alpha = a1()
    Hm = H.with_r(-1)
    assert sgn_map(N, Hm) == -Hm.N(H.group.simple[0])
    assert sgn_map(alpha, Hm) == Hm.poly(Poly.linear([1]))
    with pytest.raises(ValueError):
        sgn_map(N, H)


@pytest.mark.parametrize("label,lattice", [("A1", "gl"), ("A2", "gl"), ("B2", None)])
def test_sgn_involutive_homomorphism(label, lattice):
    rng = random.Random(2)
    H = GradedHeckeAlgebraSpec.build(label, lattice, k=2, r=1)
    Hm = H.with_r(-1)
    for _ in range(15):
        a, b = random_element(H, rng, 2, 2), random_element(H, rng, 2, 2)
        assert sgn_map(sgn_map(a, Hm), H) == a
        assert sgn_map(a * b, Hm) == sgn_map(a, Hm) * sgn_map(b, Hm)


def test_normalize_examples():
    H = GradedHeckeAlgebraSpec.build("A2", k=6)
    H2, scale = normalize_equal_parameters(H)
    assert set(scale.values()) == {Fraction(1, 3)}
    assert {H2.k(a) for a in H.datum.roots} == {2}

    B = GradedHeckeAlgebraSpec.build("B2", k={"long": 4, "short": 2})
    B2, scale = normalize_equal_parameters(B)
    d = B.datum
    for a in d.roots:
        assert scale[a] == (Fraction(1, 2) if d.is_long(a) else 1)

    for label in ("A1", "A2", "B2", "G2"):
        _, scale = normalize_equal_parameters(GradedHeckeAlgebraSpec.build(label, k=2))
        assert set(scale.values()) == {1}


def test_normalize_is_idempotent():
    B = GradedHeckeAlgebraSpec.build("G2", k={"long": 6, "short": 2})
    B2, _ = normalize_equal_parameters(B)
    B3, scale = normalize_equal_parameters(B2)
    assert set(scale.values()) == {1} and B3.same_algebra(B2)


def test_normalize_rejects_bad_ratio():
    B = GradedHeckeAlgebraSpec.build("B2", k={"long": 3, "short": 2})
    with pytest.raises(ParameterRatioError):
        normalize_equal_parameters(B)


def test_rescaled_modules_keep_relations():
    rng = random.Random(3)
    for label, k in (("A2", 6), ("B2", {"long": 4, "short": 2}), ("G2", {"long": 6, "short": 2})):
        H = GradedHeckeAlgebraSpec.build(label, k=k)
        H2, _ = normalize_equal_parameters(H)
        for _ in range(3):
            M = induce_character(H, [rng.randint(-3, 3) for _ in range(H.nvars)])
            M2 = pushforward_normalized(M, H2)
            assert M2.verify()
            N = random_parabolic_module(H, (0,), rng)
            assert pushforward_normalized(N, H2).verify()


def test_relations_text():
    H, _, _ = a1()
    text = H.relations_text()
    assert "N" in text and "r" in text
