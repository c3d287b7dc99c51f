import random
from fractions import Fraction

import pytest

from hecke_lab.bridge import (AdditiveParameter, AffineReductionInput, MultiplicativeParameter,
                              expu_transfer, mult_is_open, reduce_affine, steinberg_char,
                              to_multiplicative)
from hecke_lab.exact.matrix import ExactMatrix
from hecke_lab.exact.scalar import Scalar
from hecke_lab.geometry import NilpotentElement, ParameterError, SemisimpleElement, is_open, jm_triple
from hecke_lab.roots import build_root_datum, enumerate_group
from hecke_lab.suites import jordan_rep, partitions, random_parameter


def E(n, *units):
    return NilpotentElement.from_units(n, [(i - 1, j - 1) for i, j in units])


def add(y, sig, r):
    return AdditiveParameter(y, SemisimpleElement(sig), r)


def test_to_multiplicative_examples():
    m = to_multiplicative(add(E(2, (1, 2)), [1, -1], 1))
    assert m.s_exp == (1, -1) and m.N == E(2, (1, 2)) and m.q_exp == 2
    assert to_multiplicative(add(NilpotentElement.zero(2), [3, 1], 1)).N.is_zero()
    m = to_multiplicative(add(E(3, (1, 2), (2, 3)), [2, 0, -2], 1))
    assert m.to_json() == {"s_exp": ["2", "0", "-2"], "q_exp": "2",
                           "N": E(3, (1, 2), (2, 3)).to_json()}


def test_multiplicative_json_round_trip():
    m = to_multiplicative(add(E(3, (1, 2)), [3, 1, "i"], 1))
    assert MultiplicativeParameter.from_json(m.to_json()) == m


def test_multiplicative_invariant_enforced():
    with pytest.raises(ParameterError):
        MultiplicativeParameter((1, 0), E(2, (1, 2)), 2)


def test_mult_is_open_examples():
    assert mult_is_open(to_multiplicative(add(E(2, (1, 2)), [1, -1], 1)))
    assert not mult_is_open(to_multiplicative(add(NilpotentElement.zero(2), [1, -1], 1)))
    assert not mult_is_open(to_multiplicative(add(E(3, (1, 2)), [2, 0, -2], 1)))


def test_openness_transported():
    rng = random.Random(0)
    for _ in range(200):
        y, sig, r = random_parameter(rng, 4, rs=(1, 2))
        p = AdditiveParameter(y, sig, r)
        assert p.is_open() == mult_is_open(to_multiplicative(p))


def test_bounded_sigma0_gives_open_multiplicative():
    rng = random.Random(1)
    for n in range(1, 5):
        for lam in partitions(n):
            y = jordan_rep(lam)
            h = jm_triple(y).h
            for _ in range(8):
                r = rng.choice([1, 2])
                real = Fraction(rng.randint(-4, 4), 3) if rng.random() < 0.5 else 0
                s0 = []
                for m in lam:
                    s0 += [Scalar(real, Fraction(rng.randint(-3, 3), 2))] * m
                sig = [s0[i] + r * h[i, i] for i in range(n)]
                assert mult_is_open(to_multiplicative(add(y, sig, r)))


def test_reduce_affine_trivial_u():
    for label in ("A1", "A2", "B2", "G2"):
        d = build_root_datum(label)
        k = {"long": 2, "short": 1} if label in ("B2", "G2") else 3
        inp = AffineReductionInput(d, k, k, [1] * d.semisimple_rank)
        out = reduce_affine(inp)
        assert set(out.roots) == set(d.roots)
        assert set(out.simple) == set(d.simple_roots)
        assert all(out.k[a] == inp.lam(a) for a in d.roots)


def test_reduce_affine_minus_one():
    d = build_root_datum("A1", "adjoint")
    out = reduce_affine(AffineReductionInput(d, 2, {"all": 0}, [-1]))
    assert set(out.roots) == {(1,), (-1,)}
    assert out.k[(1,)] == 1
    out = reduce_affine(AffineReductionInput(d, 1, 1, [-1]))
    assert out.k[(1,)] == 0


def test_reduce_affine_drops_roots():
    # G2 with u = -1 on the short simple root: R_u is of type A1 x A1
    d = build_root_datum("G2")
    out = reduce_affine(AffineReductionInput(d, {"long": 2, "short": 1}, {"long": 2, "short": 1},
                                             [1, -1]))
    assert len(out.roots) == 4 and len(out.simple) == 2


def test_reduce_affine_rejects_bad_u():
    d = build_root_datum("A2")
    with pytest.raises(ParameterError):
        AffineReductionInput(d, 1, 1, [2, 1])
    with pytest.raises(ParameterError):
        AffineReductionInput(d, 1, 1, [1])


def _reductions():
    for label, lat, vals in [("A1", "adjoint", [-1]), ("A2", "adjoint", [-1, -1]),
                             ("A2", "adjoint", ["i", "-1*i"]), ("B2", None, [1, -1]),
                             ("B2", None, [-1, 1]), ("G2", None, [1, -1]), ("G2", None, [-1, -1])]:
        d = build_root_datum(label, lat)
        k = {"long": 3, "short": 1} if label in ("B2", "G2") else 2
        ks = {"long": 1, "short": 2} if label in ("B2", "G2") else 2
        yield AffineReductionInput(d, k, ks, vals)


def test_reduced_parameters_invariant():
    for inp in _reductions():
        out = reduce_affine(inp)
        G = inp.group
        for w in out.stabilizer:
            for a in out.roots:
                b = G.act_on_X(w, a)
                assert b in out.roots
                assert out.k[b] == out.k[a]


def test_reduced_roots_closed_and_based():
    for inp in _reductions():
        out = reduce_affine(inp)
        d = inp.datum
        R = set(out.roots)
        for a in out.roots:
            s = d.reflection(a)
            for b in out.roots:
                assert tuple(sum(s[i][j] * b[j] for j in range(d.rank)) for i in range(d.rank)) in R
        S = list(out.simple)
        for a in out.roots:
            # every root of R_u is an integral combination of Delta_u of one sign
            K = ExactMatrix.from_columns([list(b) for b in S] + [list(a)], d.rank).kernel()
            assert len(K) == 1 and K[0][-1] != 0
            sol = [-c / K[0][-1] for c in K[0][:-1]]
            assert all(c.im == 0 and c.re.denominator == 1 for c in sol)
            assert all(c.re >= 0 for c in sol) or all(c.re <= 0 for c in sol)


def test_expu_examples():
    w = expu_transfer([0], 0)
    assert all(v == 0 for v in w.sigma) and w.r == 0 and w.u == (Scalar(1),)
    assert str(expu_transfer([2], 1)) == "(1; 2; 1)"
    with pytest.raises(ParameterError):
        expu_transfer([1], 1, [2])


def test_expu_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        sig = [Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                      Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(3)]
        assert list(expu_transfer(sig, 1).log()) == sig


def test_steinberg_examples():
    G = enumerate_group(build_root_datum("A2"))
    s0, s1 = G.simple
    St = steinberg_char(G, 2, q_exp=1)
    assert St(s0) == -1 and St(s1) == -1
    assert St(G.mul(s0, s1)) == 1
    assert St.relations_ok and not St.failures


@pytest.mark.parametrize("label,gamma", [("A2", "flip"), ("B2", "none"), ("G2", "none")])
def test_steinberg_relations_any_lambda(label, gamma):
    G = enumerate_group(build_root_datum(label), gamma)
    for lam in (1, 3, "1/2"):
        St = steinberg_char(G, lam)
        assert St.relations_ok
        for g in range(G.order):
            for h in range(G.order):
                assert St(G.mul(g, h)) == St(g) * St(h)


def test_additive_parameter_validated():
    with pytest.raises(ParameterError):
        add(E(2, (1, 2)), [0, 0], 1)
    assert add(E(2, (1, 2)), [1, -1], 1).is_open() == is_open(E(2, (1, 2)), SemisimpleElement([1, -1]), 1)
