import pytest

from hecke_lab.exact.matrix import ExactMatrix
from hecke_lab.roots import (ParameterFunction, RootDatumError, build_root_datum, det_character,
                             enumerate_group, is_positive_position, pairing, root_datum_from_json)

PRESETS = [("A1", "gl"), ("A1", "adjoint"), ("A2", "gl"), ("A2", "adjoint"), ("A3", "gl"),
           ("B2", None), ("G2", None)]


def test_root_counts():
    assert len(build_root_datum("A1").roots) == 2
    assert len(build_root_datum("A2").roots) == 6
    b2 = build_root_datum("B2")
    assert len(b2.roots) == 8
    assert len({b2.root_length_sq(a) for a in b2.roots}) == 2


def test_unsupported_labels():
    with pytest.raises(RootDatumError):
        build_root_datum("E8")
    with pytest.raises(RootDatumError):
        build_root_datum("B2", "sc")


@pytest.mark.parametrize("label,lattice", PRESETS)
def test_datum_invariants(label, lattice):
    d = build_root_datum(label, lattice)
    d.check()
    R = set(d.roots)
    for a in d.roots:
        assert pairing(a, d.coroot(a)) == 2
        s = d.reflection(a)
        image = {tuple(sum(s[i][j] * b[j] for j in range(d.rank)) for i in range(d.rank)) for b in R}
        assert image == R
        s2 = [[sum(s[i][k] * s[k][j] for k in range(d.rank)) for j in range(d.rank)]
              for i in range(d.rank)]
        assert s2 == [[int(i == j) for j in range(d.rank)] for i in range(d.rank)]
        c = d.simple_coordinates(a)
        assert all(x.denominator == 1 for x in c)
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)
    S = ExactMatrix([list(a) for a in d.simple_roots])
    assert S.rank() == d.semisimple_rank


def test_group_orders():
    assert enumerate_group(build_root_datum("A1")).order == 2
    assert enumerate_group(build_root_datum("A2"), "flip").order == 12
    assert enumerate_group(build_root_datum("B2")).order == 8
    assert enumerate_group(build_root_datum("G2")).order == 12
    assert enumerate_group(build_root_datum("A3")).order == 24


def test_gamma_must_stabilize_delta():
    d = build_root_datum("A2", "gl")
    swap01 = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    with pytest.raises(RootDatumError):
        enumerate_group(d, [swap01])


def test_det_examples():
    G = enumerate_group(build_root_datum("A2"))
    s0, s1 = G.simple
    assert det_character(G, 0) == 1
    assert det_character(G, s0) == -1
    assert det_character(G, G.mul(s0, s1)) == 1


@pytest.mark.parametrize("label,gamma", [("A1", "none"), ("A2", "none"), ("A2", "flip"), ("B2", "none")])
def test_det_homomorphism(label, gamma):
    G = enumerate_group(build_root_datum(label), gamma)
    assert G.order <= 16
    for g in range(G.order):
        assert G.det(g) == ExactMatrix(G.matrix(g)).det()
        if G.is_in_W(g):
            assert G.det(g) == (-1) ** G.length(g)
        for h in range(G.order):
            assert G.det(G.mul(g, h)) == G.det(g) * G.det(h)


def test_group_generated_by_simple_reflections():
    G = enumerate_group(build_root_datum("B2"))
    assert set(G.subgroup(G.simple)) == set(range(G.order))
    for g in range(G.order):
        word, gam = G.word(g)
        assert G.from_word(word, gam) == g
        assert len(word) == G.length(g)


def test_flip_normalizes_w():
    G = enumerate_group(build_root_datum("A2"), "flip")
    flips = [g for g in range(G.order) if not G.is_in_W(g)]
    W = [g for g in range(G.order) if G.is_in_W(g)]
    for f in flips:
        assert {G.mul(G.mul(f, w), G.inverse(f)) for w in W} == set(W)
    gammas = [g for g in flips if G.length(g) == 0]
    assert len(gammas) == 1
    for f in gammas:
        assert {G.act_on_X(f, a) for a in G.datum.simple_roots} == set(G.datum.simple_roots)


def test_positive_position_examples():
    a1 = build_root_datum("A1", "adjoint")
    assert is_positive_position(a1, (2,), ())
    assert not is_positive_position(a1, (0,), ())
    a2 = build_root_datum("A2", "gl")
    # alpha(t) = 0, beta(t) = 1
    assert is_positive_position(a2, (1, 1, 0), (0,))
    assert not is_positive_position(a2, (1, 1, 0), (1,))
    # only the real part matters
    assert is_positive_position(a1, ("2+5*i",), ())


@pytest.mark.parametrize("label,lattice", PRESETS)
def test_parameter_function_invariance(label, lattice):
    G = enumerate_group(build_root_datum(label, lattice))
    specs = [2, {"long": 4, "short": 2}, {0: 1, 1: 3}] if label in ("B2", "G2") else [2, "1/2"]
    for spec in specs:
        k = ParameterFunction.from_spec(G, spec)
        k.check()
        for g in range(G.order):
            for a in G.datum.roots:
                assert k(G.act_on_X(g, a)) == k(a)


def test_parameter_function_must_cover_roots():
    G = enumerate_group(build_root_datum("B2"))
    with pytest.raises(RootDatumError):
        ParameterFunction.from_spec(G, {"long": 2})


def test_datum_json():
    d = root_datum_from_json({"type": "A2", "lattice": "gl", "gamma": "none"})
    assert d == build_root_datum("A2", "gl")
