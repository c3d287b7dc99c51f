"""Additive and multiplicative parameters, and the reduction from affine data at a unitary point.

Exponentials are never evaluated: a multiplicative semisimple element is
carried by its exponents, q by the exponent 2r.  Comparisons of exponents are
exact, which is the same as comparing exp values for real exponent data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Sequence

from .exact.matrix import ExactMatrix
from .exact.scalar import ONE, Scalar, as_scalar, format_scalar, parse_scalar
from .geometry import (NilpotentElement, ParameterError, SemisimpleElement, check_parameter,
                       is_open, jm_triple)
from .roots import BasedRootDatum, ExtendedWeylGroup, ParameterFunction, enumerate_group


def _read(v) -> Scalar:
    return parse_scalar(v) if isinstance(v, str) else as_scalar(v)


@dataclass
class AdditiveParameter:
    y: NilpotentElement
    sigma: SemisimpleElement
    r: Scalar

    def __post_init__(self):
        self.r = as_scalar(self.r)
        check_parameter(self.y, self.sigma, self.r)

    @property
    def sigma0(self):
        return jm_triple(self.y, self.sigma, self.r).sigma0

    def is_open(self) -> bool:
        return is_open(self.y, self.sigma, self.r)


@dataclass
class MultiplicativeParameter:
    """s = diag(exp e_i), q = exp(q_exp); Ad(s)N = qN means e_i - e_j = q_exp on the support of N."""
    s_exp: tuple
    N: NilpotentElement
    q_exp: Scalar

    def __post_init__(self):
        self.s_exp = tuple(_read(e) for e in self.s_exp)
        self.q_exp = _read(self.q_exp)
        n = len(self.s_exp)
        if self.N.n != n:
            raise ParameterError("N and s have different sizes")
        for i in range(n):
            for j in range(n):
                if self.N.matrix[i, j] and self.s_exp[i] - self.s_exp[j] != self.q_exp:
                    raise ParameterError("Ad(s) N != q N")

    def to_json(self) -> dict:
        return {"s_exp": [format_scalar(e) for e in self.s_exp],
                "q_exp": format_scalar(self.q_exp), "N": self.N.to_json()}

    @classmethod
    def from_json(cls, data) -> "MultiplicativeParameter":
        return cls(tuple(data["s_exp"]), NilpotentElement(data["N"]), data["q_exp"])


def to_multiplicative(p: AdditiveParameter) -> MultiplicativeParameter:
    return MultiplicativeParameter(p.sigma.eigenvalues, p.y, 2 * p.r)


def mult_is_open(m: MultiplicativeParameter) -> bool:
    """Is Ad(Z(s)) N open in {X : Ad(s) X = q X}?"""
    e = m.s_exp
    n = len(e)
    space = [(i, j) for i in range(n) for j in range(n) if e[i] - e[j] == m.q_exp]
    cent = [(i, j) for i in range(n) for j in range(n) if e[i] == e[j]]
    # tangent map of the orbit: X -> [X, N] on Z(s)
    N = m.N.matrix
    cols = []
    for (i, j) in cent:
        E = ExactMatrix.unit(n, i, j)
        C = E @ N - N @ E
        cols.append([C[a, b] for (a, b) in space])
    if not space:
        return True
    rank = ExactMatrix.from_columns(cols, len(space)).rank() if cols else 0
    return rank == len(space)


# ---------------------------------------------------------------------------------
# reduction at a unitary point


@dataclass
class AffineReductionInput:
    """u is given by alpha(u) for the simple roots (extended multiplicatively)."""
    datum: BasedRootDatum
    lam: Mapping
    lam_star: Mapping
    simple_values: tuple
    group: ExtendedWeylGroup | None = None

    def __post_init__(self):
        if self.group is None:
            self.group = enumerate_group(self.datum)
        self.simple_values = tuple(_read(v) for v in self.simple_values)
        if len(self.simple_values) != self.datum.semisimple_rank:
            raise ParameterError("need one value alpha(u) per simple root")
        for v in self.simple_values:
            if v * v.conjugate() != ONE:
                raise ParameterError(f"alpha(u) = {v} is not unitary")
        if not isinstance(self.lam, ParameterFunction):
            self.lam = ParameterFunction.from_spec(self.group, self.lam)
        if not isinstance(self.lam_star, ParameterFunction):
            self.lam_star = ParameterFunction.from_spec(self.group, self.lam_star)

    def value(self, vec: Sequence) -> Scalar:
        """u evaluated on an element of the root lattice."""
        coeffs = self.datum.simple_coordinates(vec)
        out = ONE
        for c, v in zip(coeffs, self.simple_values):
            if c.denominator != 1:
                raise ParameterError(f"{vec} is not in the root lattice")
            out = out * v ** int(c) if c >= 0 else out / v ** int(-c)
        return out


@dataclass
class AffineReductionOutput:
    roots: tuple                     # R_u
    simple: tuple                    # Delta_u
    gamma: tuple                     # Gamma_u, group element ids
    k: dict                          # alpha -> k_{u,alpha}
    stabilizer: tuple = field(default=())   # (W Gamma)_u

    def to_json(self) -> dict:
        return {"R_u": [list(a) for a in self.roots], "Delta_u": [list(a) for a in self.simple],
                "Gamma_u": list(self.gamma),
                "k_u": {",".join(map(str, a)): format_scalar(v) for a, v in sorted(self.k.items())}}


def _fixes_u(inp: AffineReductionInput, alpha) -> bool:
    # s_alpha(u)(x) = u(x) alpha(u)^{-<x, alpha^vee>}, so s_alpha fixes u iff alpha(u)^g = 1
    g = 0
    for c in inp.datum.coroot(alpha):
        g = gcd(g, abs(c))
    return inp.value(alpha) ** g == ONE


def _group_fixes_u(inp: AffineReductionInput, w: int) -> bool:
    G = inp.group
    winv = G.inverse(w)
    for j in range(inp.datum.rank):
        e = tuple(int(i == j) for i in range(inp.datum.rank))
        diff = tuple(a - b for a, b in zip(G.act_on_X(winv, e), e))
        if any(diff):
            try:
                if inp.value(diff) != ONE:
                    return False
            except ParameterError:
                raise ParameterError("u is only known on the root lattice; "
                                     "this group element moves X off it") from None
    return True


def reduce_affine(inp: AffineReductionInput) -> AffineReductionOutput:
    d = inp.datum
    Ru = tuple(a for a in d.roots if _fixes_u(inp, a))
    pos = [a for a in Ru if d.is_positive(a)]
    pos_set = set(pos)
    simple = []
    for a in pos:
        # indecomposable: not a sum of two positive roots of R_u
        if not any(tuple(x - y for x, y in zip(a, b)) in pos_set for b in pos if b != a):
            simple.append(a)
    simple.sort(key=lambda a: d.simple_coordinates(a))
    k = {a: (inp.lam(a) + inp.value(a) * inp.lam_star(a)) / 2 for a in Ru}
    G = inp.group
    stab = tuple(w for w in range(G.order) if _group_fixes_u(inp, w))
    simple_set = set(simple)
    gamma = tuple(w for w in stab
                  if {G.act_on_X(w, a) for a in simple} == simple_set)
    return AffineReductionOutput(Ru, tuple(simple), gamma, k, stab)


# ---------------------------------------------------------------------------------
# exp_u and the Steinberg character


@dataclass(frozen=True)
class ExpUWeight:
    """Formal (u exp(sigma), exp(r)): unitary part, exponents, r-exponent."""
    u: tuple
    sigma: tuple
    r: Scalar

    def __str__(self):
        def fmt(vals):
            return ",".join(format_scalar(v) for v in vals)
        return f"({fmt(self.u)}; {fmt(self.sigma)}; {format_scalar(self.r)})"

    def log(self) -> tuple:
        return self.sigma


def expu_transfer(sigma: Sequence, r, u: Sequence = ()) -> ExpUWeight:
    sigma = tuple(_read(v) for v in sigma)
    u = tuple(_read(v) for v in u) if u else (ONE,)
    for v in u:
        if v * v.conjugate() != ONE:
            raise ParameterError(f"{v} is not unitary")
    return ExpUWeight(u, sigma, _read(r))


@dataclass
class SteinbergCharacter:
    values: dict        # group element -> det
    relations_ok: bool
    failures: list
    q_powers: dict = field(default_factory=dict)   # simple index -> exponent of q in the relation

    def __call__(self, g: int) -> int:
        return self.values[g]


def steinberg_char(group: ExtendedWeylGroup, lam=None, q_exp=1) -> SteinbergCharacter:
    """T_wg -> det(wg), checked against the quadratic and braid-type relations.

    The quadratic relation (T_s + 1)(T_s - q^{2 lam(alpha)}) = 0 holds since the
    first factor vanishes; we check that factor exactly, so no value of q is needed.
    """
    vals = {g: group.det(g) for g in range(group.order)}
    if lam is not None and not isinstance(lam, ParameterFunction):
        lam = ParameterFunction.from_spec(group, lam)
    failures = []
    q_powers = {}
    for i, s in enumerate(group.simple):
        alpha = group.datum.simple_roots[i]
        q_powers[i] = 2 * (lam(alpha) if lam is not None else ONE) * _read(q_exp)
        if vals[s] + 1 != 0:
            failures.append(f"quadratic relation fails at s{i}")
    for g in range(group.order):
        for h in range(group.order):
            gh = group.mul(g, h)
            if group.length(gh) == group.length(g) + group.length(h) and vals[g] * vals[h] != vals[gh]:
                failures.append(f"T_g T_h != T_gh for g={g}, h={h}")
    return SteinbergCharacter(vals, not failures, failures, q_powers)
