"""Temperedness, Langlands data and the enumeration of standard modules.

Points of t are given by their coordinates t_j = x_j(t); a root alpha takes the
value alpha(t) = sum_j alpha_j t_j.  Temperedness is tested relative to the
root system of the parabolic subalgebra a module lives over.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .exact.matrix import ExactMatrix
from .exact.scalar import ZERO, Scalar, as_scalar
from .hecke import GradedHeckeAlgebraSpec
from .module import FiniteModule, ModuleError, character_module, induce
from .roots import is_positive_position, point_sort_key
from .structure import composition_factors, head, is_simple

TEMPERED = "tempered"
ESSENTIALLY_DISCRETE = "essentially_discrete"
NEITHER = "neither"


def root_value(alpha: Sequence[int], t: Sequence) -> Scalar:
    return sum((as_scalar(t[k]) * a for k, a in enumerate(alpha)), ZERO)


def cone_decomposition(spec: GradedHeckeAlgebraSpec, point: Sequence, P: Sequence[int]):
    """Re(point) = sum_{i in P} c_i alpha_i^vee + z with alpha(z) = 0 on P.

    Returns (c, z).
    """
    d = spec.datum
    P = list(P)
    re = [as_scalar(v).real for v in point]
    if not P:
        return [], re
    C = ExactMatrix([[sum(d.simple_roots[a][k] * d.simple_coroots[b][k] for k in range(d.rank))
                      for b in P] for a in P])
    vals = [root_value(d.simple_roots[a], re) for a in P]
    c = C.inverse().apply(vals)
    z = list(re)
    for ci, b in zip(c, P):
        for k in range(d.rank):
            z[k] = z[k] - ci * d.simple_coroots[b][k]
    return list(c), z


def temperedness_class(M: FiniteModule) -> str:
    """Classification of M relative to the root system of its subalgebra.

    essentially_discrete: every weight has all coroot coefficients < 0;
    tempered: all coefficients <= 0 and no real central part;
    an essentially discrete module with zero real central part is also tempered.
    """
    strict = True
    closed = True
    for w in M.weights():
        c, z = cone_decomposition(M.spec, w, M.P)
        if not all(x < 0 for x in c):
            strict = False
        if not (all(x <= 0 for x in c) and all(v == 0 for v in z)):
            closed = False
    if strict:
        return ESSENTIALLY_DISCRETE
    if closed:
        return TEMPERED
    return NEITHER


def is_tempered(M: FiniteModule) -> bool:
    for w in M.weights():
        c, z = cone_decomposition(M.spec, w, M.P)
        if not (all(x <= 0 for x in c) and all(v == 0 for v in z)):
            return False
    return True


def is_essentially_tempered(M: FiniteModule) -> bool:
    """Tempered up to a real central twist: all coroot coefficients <= 0."""
    return all(all(x <= 0 for x in cone_decomposition(M.spec, w, M.P)[0]) for w in M.weights())


def is_essentially_discrete(M: FiniteModule) -> bool:
    return temperedness_class(M) == ESSENTIALLY_DISCRETE


def central_part(spec: GradedHeckeAlgebraSpec, point: Sequence, P: Sequence[int]) -> tuple:
    """Projection of Re(point) to the real span of the points killed by the roots of P."""
    return tuple(cone_decomposition(spec, point, P)[1])


@dataclass
class LanglandsDatum:
    P: tuple
    tau: FiniteModule
    t: tuple
    label: str = ""


def _gamma_part(spec: GradedHeckeAlgebraSpec, P, t) -> tuple:
    return spec.group.gamma_stabilizer(P, t)


def langlands_standard(spec: GradedHeckeAlgebraSpec, datum: LanglandsDatum,
                       check_head: bool = False) -> FiniteModule:
    """ind from H_P (with its Gamma_{P,t} part) of tau' twisted by t."""
    P = tuple(sorted(datum.P))
    t = tuple(as_scalar(v) for v in datum.t)
    if not is_positive_position(spec.datum, t, P):
        raise ModuleError("twist is not in positive position for P")
    tau = datum.tau
    if tau.P != P:
        raise ModuleError("tempered module lives over a different parabolic")
    if not is_tempered(tau):
        raise ModuleError("inducing module is not tempered")
    gam = tuple(g for g in tau.gens if spec.group.length(g) == 0)
    allowed = set(_gamma_part(spec, P, t))
    if not set(gam) <= allowed:
        raise ModuleError("Gamma part of the inducing module does not fix (P, t)")
    E = induce(tau.twist(t), label=datum.label)
    if check_head and spec.r != 0 and not is_simple(head(E)):
        raise ModuleError("standard module does not have a unique irreducible quotient")
    return E


# ---------------------------------------------------------------------------------
# enumeration of all Langlands data with a given real central character


@dataclass
class StandardModule:
    datum: LanglandsDatum
    module: FiniteModule


def _subsets(n: int):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            yield c


def tempered_modules(spec: GradedHeckeAlgebraSpec, P: Sequence[int], x: Sequence,
                     gamma: Sequence[int] = ()) -> list:
    """Tempered irreducibles of H_P (x| gamma) with weights in the orbit of x.

    ``x`` must have no real central part for P.  They are found among the
    composition factors of the module induced from the character at x.
    """
    I = induce(character_module(spec, x), P, gamma)
    out = []
    for S, _ in composition_factors(I):
        if is_tempered(S):
            out.append(S)
    return out


def standard_modules(spec: GradedHeckeAlgebraSpec, sigma0: Sequence) -> list:
    """All Langlands standard modules with central character W.sigma0 (sigma0 real)."""
    G = spec.group
    d = spec.datum
    orbit = sorted(G.orbit_of_point(sigma0), key=point_sort_key)
    seen = set()
    out = []
    for P in _subsets(d.semisimple_rank):
        for x in orbit:
            t = central_part(spec, x, P)
            if not is_positive_position(d, t, P):
                continue
            xp = tuple(a - b for a, b in zip(x, t))
            gam = tuple(g for g in _gamma_part(spec, P, t) if g != 0)
            H = G.parabolic(P, gam)
            key = (P, t, frozenset(G.act_on_t(h, xp) for h in H))
            if key in seen:
                continue
            seen.add(key)
            for tau in tempered_modules(spec, P, xp, gam):
                label = f"P={list(P)} t=({', '.join(map(str, t))})"
                datum = LanglandsDatum(P, tau, t, label)
                out.append(StandardModule(datum, langlands_standard(spec, datum)))
    return out


def irreducibles(spec: GradedHeckeAlgebraSpec, sigma0: Sequence) -> list:
    """Iso-classes of irreducibles with central character W.sigma0."""
    from .module import induce_character
    return [S for S, _ in composition_factors(induce_character(spec, sigma0))]


def integral_grid(spec: GradedHeckeAlgebraSpec, count: int, bound: int = 3) -> list:
    """Distinct integral central characters (orbit-minimal representatives), nearest first."""
    from itertools import product
    G = spec.group
    seen = set()
    pts = []
    for p in product(range(-bound, bound + 1), repeat=spec.nvars):
        orb = G.orbit_of_point(p)
        rep = min(orb, key=point_sort_key)
        if rep in seen:
            continue
        seen.add(rep)
        pts.append(rep)
    pts.sort(key=lambda p: (sum(abs(v.re) for v in p), point_sort_key(p)))
    return pts[:count]
