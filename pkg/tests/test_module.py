import random

import pytest

from hecke_lab.exact.matrix import ExactMatrix
from hecke_lab.exact.poly import Poly
from hecke_lab.exact.scalar import Scalar
from hecke_lab.hecke import GradedHeckeAlgebraSpec
from hecke_lab.langlands import (ESSENTIALLY_DISCRETE, NEITHER, TEMPERED, LanglandsDatum,
                                 is_tempered, langlands_standard, standard_modules,
                                 temperedness_class)
from hecke_lab.module import (ModuleError, NotScalarError, central_evaluate, character_module,
                              det_multiplicity, induce, induce_character, induce_parabolic,
                              sgn_pullback, weights_and_central_character)
from hecke_lab.structure import (composition_factors, head, hom_dim, hom_space, is_isomorphic,
                                 is_simple, socle, socle_and_factors)
from hecke_lab.suites import random_parabolic_module

# independent oracle for A1 adjoint, k = 2, r = 1, basis (1 x 1, N_s x 1):
# alpha N_s = -N_s alpha + 2kr, so alpha acts by [[c, 4], [0, -c]]
ORACLE_NS = [[0, 1], [1, 0]]


def oracle_alpha(c):
    return [[c, 4], [0, -c]]


@pytest.fixture(scope="module")
def A1():
    return GradedHeckeAlgebraSpec.build("A1", "adjoint", k=2, r=1)


@pytest.fixture(scope="module")
def A2():
    return GradedHeckeAlgebraSpec.build("A2", "gl", k=2, r=1)


def s(H):
    return H.group.simple[0]


def test_induce_character_oracle(A1):
    for c in (2, 0, 3, -1):
        M = induce_character(A1, (c,))
        assert M.coords[0] == ExactMatrix(oracle_alpha(c))
        assert M.N(s(A1)) == ExactMatrix(ORACLE_NS)


def test_induce_character_dimension(A2):
    assert induce_character(A2, (1, 0, -2)).dim == 6


def test_irreducible_at_zero(A1):
    M = induce_character(A1, (0,))
    assert is_simple(M)
    assert hom_dim(M, M) == 1


def test_induce_from_full_parabolic_is_identity(A1):
    M = induce_character(A1, (1,))
    N = induce_parabolic(M)
    assert N.coords == M.coords and N.gens == M.gens


def test_induce_parabolic_from_empty_equals_induce_character(A2):
    x = (2, 0, -1)
    a = induce_parabolic(character_module(A2, x))
    b = induce_character(A2, x)
    assert a.coords == b.coords and a.gens == b.gens


def test_induce_parabolic_index(A2):
    tau = character_module(A2, (-1, 1, 5), (0,), signs={0: -1})
    assert induce_parabolic(tau).dim == 3


def test_induce_to_smaller_parabolic_fails(A2):
    tau = character_module(A2, (-1, 1, 5), (0,), signs={0: -1})
    with pytest.raises(ModuleError):
        induce(tau, ())


def test_langlands_standard_examples(A1, A2):
    E = langlands_standard(A1, LanglandsDatum((), character_module(A1, (0,)), (2,)))
    assert E.coords == induce_character(A1, (2,)).coords
    tau = induce_character(A1, (0,))
    E = langlands_standard(A1, LanglandsDatum((0,), tau, (0,)))
    assert E.coords == tau.coords and E.gens == tau.gens
    tau = character_module(A2, (-1, 1, 0), (0,), signs={0: -1})
    E = langlands_standard(A2, LanglandsDatum((0,), tau, (1, 1, 0)), check_head=True)
    assert E.dim == 3
    assert is_simple(head(E))


def test_langlands_standard_rejects_bad_data(A2):
    tau = character_module(A2, (-1, 1, 0), (0,), signs={0: -1})
    with pytest.raises(ModuleError):
        langlands_standard(A2, LanglandsDatum((0,), tau, (0, 0, 1)))   # beta(t) < 0
    triv = character_module(A2, (1, -1, 0), (0,), signs={0: 1})
    with pytest.raises(ModuleError):
        langlands_standard(A2, LanglandsDatum((0,), triv, (1, 1, 0)))  # not tempered


def test_weights_examples(A1):
    M = induce_character(A1, (2,))
    wts, cc = weights_and_central_character(M)
    assert set(wts) == {(Scalar(2),), (Scalar(-2),)}
    assert cc == ((Scalar(-2),), (Scalar(2),))
    L = character_module(A1, (0,))
    assert set(weights_and_central_character(L)[0]) == {(Scalar(0),)}
    D = M.direct_sum(induce_character(A1, (4,)))
    assert weights_and_central_character(D)[1] is None
    assert sum(wts.values()) == M.dim


def test_det_multiplicity_examples(A1, A2):
    for c in (0, 1, 2, 5):
        assert det_multiplicity(induce_character(A1, (c,))) == 1
    assert det_multiplicity(induce_character(A2, (3, 1, -1))) == 1
    triv = character_module(A1, (2,), (0,), signs={0: 1})
    assert det_multiplicity(triv) == 0


def test_temperedness_examples(A1):
    M = induce_character(A1, ("2*i",))
    assert temperedness_class(M) == TEMPERED
    assert temperedness_class(induce_character(A1, (2,))) == NEITHER
    St = character_module(A1, (-2,), (0,), signs={0: -1})
    assert temperedness_class(St) == ESSENTIALLY_DISCRETE


def test_hom_examples(A1):
    E = induce_character(A1, (2,))
    det_line = character_module(A1, (-2,), (0,), signs={0: -1})
    assert hom_dim(det_line, E) == 1
    assert hom_dim(E, det_line) == 0
    for T in hom_space(det_line, E):
        for g in (s(A1),):
            assert T @ det_line.N(g) == E.N(g) @ T
        assert T @ det_line.coords[0] == E.coords[0] @ T


def test_socle_examples(A1):
    L = induce_character(A1, (0,))
    data = socle_and_factors(L)
    assert len(data.socle_basis) == L.dim and len(data.factors) == 1
    E = induce_character(A1, (2,))
    soc = socle(E)
    assert len(soc) == 1
    S = E.submodule(soc)
    assert S.N(s(A1)) == ExactMatrix([[-1]])
    facs = composition_factors(E)
    signs = sorted(int(F.N(s(A1))[0, 0].re) for F, _ in facs)
    assert signs == [-1, 1]
    D = L.direct_sum(induce_character(A1, (4,)))
    assert len(socle(D)) == D.dim


def test_sgn_pullback_examples(A1):
    E = induce_character(A1, (2,))
    back = sgn_pullback(sgn_pullback(E))
    assert back.coords == E.coords and back.gens == E.gens and back.spec.same_algebra(E.spec)
    triv = character_module(A1, (2,), (0,), signs={0: 1})
    flipped = sgn_pullback(triv)
    assert flipped.N(s(A1)) == ExactMatrix([[-1]])
    assert flipped.spec.r == -1


def test_sgn_pullback_swaps_det_and_trivial(A2):
    rng = random.Random(2)
    G = A2.group
    for _ in range(5):
        M = induce(random_parabolic_module(A2, (0,), rng))
        trivial = sum((M.N(g).trace() for g in range(G.order)), Scalar(0)) / G.order
        assert det_multiplicity(sgn_pullback(M)) == trivial


def test_central_evaluate_examples(A1):
    E = induce_character(A1, (2,))
    alpha = Poly.linear([1])
    assert central_evaluate(alpha * alpha, E) == 4
    assert central_evaluate(Poly.constant(1, 1), E) == 1
    with pytest.raises(ModuleError):
        central_evaluate(alpha, E)
    with pytest.raises(NotScalarError):
        central_evaluate(alpha * alpha, E.direct_sum(induce_character(A1, (4,))))


def test_modules_verify_relations():
    rng = random.Random(0)
    for label, lat in (("A1", "gl"), ("A2", "gl"), ("B2", None)):
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        for P in ((), (0,), (0, 1) if H.datum.semisimple_rank > 1 else (0,)):
            M = random_parabolic_module(H, P, rng)
            assert M.verify()
            assert induce(M).verify()


def test_bad_module_rejected(A1):
    with pytest.raises(ModuleError):
        character_module(A1, (0,), (0,), signs={0: 1})   # alpha must be kr = 2


@pytest.mark.parametrize("label,lat", [("A2", "gl"), ("B2", None)])
def test_det_multiplicity_preserved_by_induction(label, lat):
    rng = random.Random(9)
    H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
    for P in ((), (0,), (1,), (0, 1)):
        for _ in range(20):
            M = random_parabolic_module(H, P, rng)
            assert det_multiplicity(induce(M)) == det_multiplicity(M)


@pytest.mark.parametrize("label,lat,point", [("A1", "gl", (1, -1)), ("A2", "gl", (2, 0, -2)),
                                             ("A2", "gl", (1, 1, -1)), ("B2", None, (1, 2))])
def test_standard_modules_multiplicity_one(label, lat, point):
    H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
    for sm in standard_modules(H, point):
        E = sm.module
        d = det_multiplicity(E)
        assert d <= 1
        gens = [F for F, m in composition_factors(E) if det_multiplicity(F)]
        assert len(gens) == d
        if d:
            assert hom_dim(gens[0], E) == 1
        assert is_simple(head(E))


def test_standard_modules_head_classes_distinct(A2):
    stds = standard_modules(A2, (2, 0, -2))
    heads = [head(sm.module) for sm in stds]
    for i in range(len(heads)):
        for j in range(i + 1, len(heads)):
            assert not is_isomorphic(heads[i], heads[j])


def test_imaginary_central_character_gives_tempered_standards(A1):
    for sm in standard_modules(A1, ("3*i",)):
        assert is_tempered(sm.module)


def test_tempered_line_not_embedded_b2():
    # B2 at (-2, 0): the standard module induced from the short root Levi with
    # twist (2, 0) has a tempered one dimensional factor that is not a submodule
    H = GradedHeckeAlgebraSpec.build("B2", k=2, r=1)
    [sm] = [sm for sm in standard_modules(H, (-2, 0)) if sm.datum.P == (1,)]
    assert sm.datum.tau.dim == 2 and sm.datum.t == (2, 0)
    E = sm.module
    lines = [F for F, _ in composition_factors(E) if F.dim == 1 and is_tempered(F)]
    assert len(lines) == 1
    L = lines[0]
    assert hom_dim(L, E) == 0
    # direct check: joint eigenvectors with the weight and the signs of L
    G = H.group
    n = E.dim
    rows = []
    for j in range(H.nvars):
        rows += (E.coords[j] - ExactMatrix.identity(n).scale(L.coords[j][0, 0])).rows
    weight_vectors = ExactMatrix(rows).kernel()
    assert len(weight_vectors) == 1
    for s in G.simple:
        rows += (E.N(s) - ExactMatrix.identity(n).scale(L.N(s)[0, 0])).rows
    assert ExactMatrix(rows).kernel() == []


def test_r0_principal_series_is_semisimple():
    H = GradedHeckeAlgebraSpec.build("A1", "adjoint", k=2, r=0)
    M = induce_character(H, (0,))
    assert head(M).dim == M.dim == len(socle(M))
    assert len(composition_factors(M)) == 2
