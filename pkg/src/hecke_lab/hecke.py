"""Graded Hecke algebras H(t, W x| Gamma, k, r) with trivial cocycle.

Elements are kept in the normal form ``sum_g f_g N_g`` with polynomials on the
left.  Moving a polynomial across a simple reflection uses

    N_s f = s(f) N_s + k_alpha r (f - s(f)) / alpha,
    f N_s = N_s s(f) + k_alpha r (f - s(f)) / alpha,

and across a Gamma element ``N_gamma f = gamma(f) N_gamma``.
"""

from __future__ import annotations

import json
from typing import Mapping

from .exact.poly import Poly, apply_matrix
from .exact.scalar import ONE, as_scalar
from .roots import (BasedRootDatum, ExtendedWeylGroup, ParameterFunction,
                    build_root_datum, enumerate_group)


class GradedHeckeAlgebraSpec:
    """Presentation data of a graded Hecke algebra with r specialized.

    ``root_scale`` multiplies each root (as a linear form) by a factor c_alpha;
    the cross relations then read ``k_alpha r (f - s f) / (c_alpha alpha)``.
    This is how the equal-parameter rescaling is recorded.
    """

    def __init__(self, datum: BasedRootDatum, group: ExtendedWeylGroup, k: ParameterFunction,
                 r=1, root_scale: Mapping | None = None, gamma_label: str = "none"):
        if group.datum is not datum:
            raise ValueError("group was built for a different root datum")
        self.datum = datum
        self.group = group
        self.k = k
        self.r = as_scalar(r)
        self.gamma_label = gamma_label
        self.root_scale = {tuple(a): as_scalar(root_scale.get(tuple(a), 1)) if root_scale else ONE
                           for a in datum.roots}
        self.nvars = datum.rank
        n = self.nvars
        self.coords = tuple(Poly.var(n, j) for j in range(n))
        self.simple_alpha = tuple(Poly.linear([self.root_scale[a] * c for c in a])
                                  for a in datum.simple_roots)
        self.simple_k = tuple(k(a) for a in datum.simple_roots)
        self._act_cache = {}
        self._left = {}
        self._right = {}
        self._dem = {}

    # construction helpers ------------------------------------------------------
    @classmethod
    def build(cls, label: str, lattice: str | None = None, k=2, r=1, gamma: str = "none"):
        datum = build_root_datum(label, lattice)
        group = enumerate_group(datum, gamma)
        return cls(datum, group, ParameterFunction.from_spec(group, k), r, gamma_label=gamma)

    @classmethod
    def from_json(cls, data) -> "GradedHeckeAlgebraSpec":
        if isinstance(data, str):
            data = json.loads(data)
        d = data.get("datum", {})
        gamma = data.get("gamma", d.get("gamma", "none"))
        return cls.build(d["type"], d.get("lattice"), data.get("k", 2), data.get("r", "1"), gamma)

    def to_json(self) -> dict:
        return {"datum": self.datum.describe(), "k": self.k.to_json(),
                "r": str(self.r), "gamma": self.gamma_label}

    def with_r(self, r) -> "GradedHeckeAlgebraSpec":
        out = GradedHeckeAlgebraSpec(self.datum, self.group, self.k, r, self.root_scale,
                                     self.gamma_label)
        return out

    def same_algebra(self, other: "GradedHeckeAlgebraSpec") -> bool:
        return (self.datum == other.datum and self.group.matrices == other.group.matrices
                and self.k.values == other.k.values and self.r == other.r
                and self.root_scale == other.root_scale)

    def __repr__(self):
        return (f"GradedHeckeAlgebraSpec({self.datum.label}/{self.datum.lattice}, "
                f"|G|={self.group.order}, k={self.k.to_json()}, r={self.r})")

    # polynomial actions ----------------------------------------------------------
    def act(self, g: int, f: Poly) -> Poly:
        """Natural action g(f) (= f o g^{-1})."""
        if g == 0:
            return f
        key = (g, f)
        out = self._act_cache.get(key)
        if out is None:
            out = apply_matrix(self.group.matrix(g), f)
            self._act_cache[key] = out
        return out

    def demazure(self, i: int, f: Poly) -> Poly:
        """(f - s_i f) / alpha_i, with alpha_i the (possibly rescaled) simple form."""
        key = (i, f)
        out = self._dem.get(key)
        if out is None:
            s = self.group.simple[i]
            out = (f - self.act(s, f)).divide_exact(self.simple_alpha[i])
            self._dem[key] = out
        return out

    def correction(self, i: int, f: Poly) -> Poly:
        """k_alpha r (f - s f)/alpha."""
        return self.demazure(i, f) * (self.simple_k[i] * self.r)

    def _split(self, g: int):
        """g = s_i * g' with l(g') = l(g) - 1, or None when g is in Gamma."""
        word, _ = self.group.word(g)
        if not word:
            return None
        i = word[0]
        return i, self.group.mul(self.group.simple[i], g)

    def left_move(self, g: int, f: Poly) -> dict:
        """N_g f as {h: p_h} meaning sum p_h N_h."""
        key = (g, f)
        out = self._left.get(key)
        if out is not None:
            return out
        if not f:
            out = {}
        elif g == 0:
            out = {0: f}
        else:
            sp = self._split(g)
            if sp is None:
                out = {g: self.act(g, f)}
            else:
                i, rest = sp
                s = self.group.simple[i]
                out = {}
                for h, p in self.left_move(rest, f).items():
                    _acc(out, self.group.mul(s, h), self.act(s, p))
                    _acc(out, h, self.correction(i, p))
        self._left[key] = out
        return out

    def right_move(self, f: Poly, g: int) -> dict:
        """f N_g as {h: p_h} meaning sum N_h p_h."""
        key = (f, g)
        out = self._right.get(key)
        if out is not None:
            return out
        if not f:
            out = {}
        elif g == 0:
            out = {0: f}
        else:
            sp = self._split(g)
            if sp is None:
                out = {g: self.act(self.group.inverse(g), f)}
            else:
                i, rest = sp
                s = self.group.simple[i]
                out = {}
                for h, p in self.right_move(self.act(s, f), rest).items():
                    _acc(out, self.group.mul(s, h), p)
                for h, p in self.right_move(self.correction(i, f), rest).items():
                    _acc(out, h, p)
        self._right[key] = out
        return out

    # elements ------------------------------------------------------------------
    def element(self, terms: Mapping[int, object]) -> "AlgebraElement":
        return AlgebraElement(self, {g: _as_poly(self, p) for g, p in terms.items()})

    def N(self, g: int) -> "AlgebraElement":
        return AlgebraElement(self, {g: Poly.constant(self.nvars, 1)})

    def poly(self, f) -> "AlgebraElement":
        return AlgebraElement(self, {0: _as_poly(self, f)})

    def one(self) -> "AlgebraElement":
        return self.poly(1)

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        if a.spec is not self or b.spec is not self:
            raise ValueError("elements belong to a different algebra")
        out: dict = {}
        G = self.group
        for g, fa in a.terms.items():
            for h, fb in b.terms.items():
                for x, p in self.left_move(g, fb).items():
                    _acc(out, G.mul(x, h), fa * p)
        return AlgebraElement(self, out)

    def relations_text(self, formal: bool = True) -> str:
        """Human-readable defining cross relations."""
        rvar = "r" if formal else str(self.r)
        lines = []
        for i, a in enumerate(self.simple_alpha):
            lines.append(f"N_s{i} f - (f o s{i}) N_s{i} = {self.simple_k[i]}*{rvar}*(f - f o s{i})/({a})")
        for g in self.group.gamma[1:]:
            lines.append(f"N_g{g} f = (f o g{g}^-1) N_g{g}")
        return "\n".join(lines)


def _acc(d: dict, key, p: Poly):
    if not p:
        return
    q = d.get(key)
    q = p if q is None else q + p
    if q:
        d[key] = q
    else:
        d.pop(key, None)


def _as_poly(spec, f) -> Poly:
    if isinstance(f, Poly):
        if f.nvars != spec.nvars:
            raise ValueError("polynomial ring mismatch")
        return f
    return Poly.constant(spec.nvars, f)


class AlgebraElement:
    """sum_g f_g N_g, polynomials on the left."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: GradedHeckeAlgebraSpec, terms: Mapping[int, Poly]):
        self.spec = spec
        self.terms = {g: p for g, p in terms.items() if p}

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for g, p in other.terms.items():
            _acc(out, g, p)
        return AlgebraElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.spec, {g: -p for g, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.spec.multiply(self, other)
        if isinstance(other, Poly):
            return self.spec.multiply(self, self.spec.poly(other))
        c = as_scalar(other)
        return AlgebraElement(self.spec, {g: p * c for g, p in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return self.spec.multiply(self.spec.poly(other), self)
        return self * other

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.spec is not self.spec:
                raise ValueError("elements belong to a different algebra")
            return other
        return self.spec.poly(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.spec is other.spec and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        G = self.spec.group
        parts = []
        for g in sorted(self.terms, key=lambda g: (G.length(g), G.word(g))):
            word, gam = G.word(g)
            label = " ".join(f"s{i}" for i in word)
            if gam:
                label = (label + " " if label else "") + f"g{gam}"
            f = self.terms[g]
            parts.append(f"({f})" if not label else f"({f}) * N[{label}]")
        return " + ".join(parts)

    __repr__ = __str__


def sgn_map(a: AlgebraElement, target: GradedHeckeAlgebraSpec | None = None) -> AlgebraElement:
    """N_w -> det(w) N_w, r -> -r, polynomials fixed.

    The image lives in the algebra specialized at -r; pass ``target`` to reuse an
    existing spec object for it.
    """
    spec = a.spec
    if target is None:
        target = spec.with_r(-spec.r)
    elif target.r != -spec.r:
        raise ValueError("sgn maps the r-specialization to the (-r)-specialization")
    G = spec.group
    return AlgebraElement(target, {g: p * G.det(g) for g, p in a.terms.items()})


def random_element(spec: GradedHeckeAlgebraSpec, rng, nterms: int = 3, degree: int = 2,
                   coeff: int = 3) -> AlgebraElement:
    from .exact.poly import random_poly
    terms = {}
    for _ in range(nterms):
        g = rng.randrange(spec.group.order)
        terms[g] = random_poly(rng, spec.nvars, degree, 3, coeff)
    return spec.element(terms)


class ParameterRatioError(ValueError):
    pass


def _components(datum: BasedRootDatum) -> list:
    """Simple-root index sets of the irreducible components."""
    C = datum.cartan_matrix()
    n = len(C)
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        comp, stack = set(), [i]
        while stack:
            a = stack.pop()
            if a in comp:
                continue
            comp.add(a)
            stack.extend(b for b in range(n) if C[a][b] and b not in comp)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def normalize_equal_parameters(spec: GradedHeckeAlgebraSpec):
    """Rescale roots so that every parameter becomes 2.

    Per irreducible component, long roots are first divided by
    kappa = k_long / k_short, then every root is multiplied by 2 / k_short.
    Returns the new spec (same t, same group, same module category) and the
    per-root scaling factors.
    """
    datum = spec.datum
    orbit_of = datum._root_orbits()
    scaling = {}
    for comp in _components(datum):
        comp_roots = [a for a in datum.roots if orbit_of[a] in comp]
        kvals = {a: spec.k(a) / spec.root_scale[a] for a in comp_roots}  # w.r.t. the unscaled roots
        if any(not v.is_real() or not v > 0 for v in kvals.values()):
            raise ParameterRatioError("parameters must be positive rationals")
        lens = {a: datum.root_length_sq(a) for a in comp_roots}
        lmax, lmin = max(lens.values()), min(lens.values())
        if lmax == lmin:
            vals = set(kvals.values())
            if len(vals) != 1:
                raise ParameterRatioError("unequal parameters on a simply-laced component")
            kshort = next(iter(vals))
            kappa = ONE
        else:
            klong = {kvals[a] for a in comp_roots if lens[a] == lmax}
            kshort_set = {kvals[a] for a in comp_roots if lens[a] == lmin}
            if len(klong) != 1 or len(kshort_set) != 1:
                raise ParameterRatioError("parameter function not constant on root lengths")
            kl, kshort = klong.pop(), kshort_set.pop()
            kappa = kl / kshort
            if kappa != 1 and kappa != as_scalar(lmax / lmin):
                raise ParameterRatioError(
                    f"k_long/k_short = {kappa} is neither 1 nor the squared length ratio {lmax / lmin}")
        for a in comp_roots:
            first = ONE / kappa if lens[a] == lmax and lmax != lmin else ONE
            scaling[a] = first * (as_scalar(2) / kshort)
    # scaling is measured against the unscaled roots; report it relative to spec
    new_k = ParameterFunction(spec.group, {a: 2 for a in datum.roots})
    relative = {a: scaling[a] / spec.root_scale[a] for a in datum.roots}
    return (GradedHeckeAlgebraSpec(datum, spec.group, new_k, spec.r, scaling, spec.gamma_label),
            relative)
