"""Multivariate polynomials with Q(i) coefficients.

Variables are the coordinates ``x_0, ..., x_{n-1}`` of a lattice basis, so a
character of the lattice is the linear polynomial with the same coordinates.
Monomials are exponent tuples; zero coefficients are never stored.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = as_scalar(c)
                if c:
                    if len(mono) != nvars:
                        raise ValueError("monomial length does not match nvars")
                    clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        c = as_scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, j: int) -> "Poly":
        mono = [0] * nvars
        mono[j] = 1
        return cls._raw(nvars, {tuple(mono): ONE})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Poly":
        """The linear form ``sum coeffs[j] * x_j``."""
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            c = as_scalar(c)
            if c:
                mono = [0] * n
                mono[j] = 1
                terms[tuple(mono)] = c
        return cls._raw(n, terms)

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, ZERO) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_scalar(other)
            if not c:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, ZERO) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == Poly.constant(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries ----------------------------------------------------------------
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, ZERO)

    def linear_coeffs(self) -> list:
        """Coefficients of a homogeneous linear form (raises otherwise)."""
        out = [ZERO] * self.nvars
        for m, c in self.terms.items():
            if sum(m) != 1:
                raise ValueError("not a homogeneous linear form")
            out[m.index(1)] = c
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"x{j}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(m) if e)
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if "i" in cs else cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append((f"({cs})" if "i" in cs else cs) + "*" + mono)
        return " + ".join(parts).replace("+ -", "- ")

    # substitution and evaluation ---------------------------------------------
    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong dimension")
        pt = [as_scalar(v) for v in point]
        total = ZERO
        for m, c in self.terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring map sending ``x_j`` to ``images[j]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars if images else 0
        result = Poly.zero(nv)
        powers: dict = {}
        for m, c in self.terms.items():
            term = Poly.constant(nv, c)
            for j, e in enumerate(m):
                if e:
                    key = (j, e)
                    if key not in powers:
                        powers[key] = images[j] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact quotient by a nonzero linear form; raises if not divisible."""
        self._check(divisor)
        lin = divisor.linear_coeffs()
        k = next((j for j, c in enumerate(lin) if c), None)
        if k is None:
            raise ZeroDivisionError("division by the zero form")
        lead = lin[k]
        rest = {m: c for m, c in divisor.terms.items() if m[k] == 0}
        remainder = dict(self.terms)
        quotient = {}
        # lex order with x_k first: divisor leading term is lead * x_k
        keyf = lambda m: (m[k],) + m
        while remainder:
            m = max(remainder, key=keyf)
            c = remainder.pop(m)
            if m[k] == 0:
                raise ArithmeticError("polynomial is not divisible by the linear form")
            q = list(m)
            q[k] -= 1
            q = tuple(q)
            qc = c / lead
            quotient[q] = quotient.get(q, ZERO) + qc
            for rm, rc in rest.items():
                t = tuple(a + b for a, b in zip(q, rm))
                s = remainder.get(t, ZERO) - qc * rc
                if s:
                    remainder[t] = s
                else:
                    remainder.pop(t, None)
        return Poly(self.nvars, quotient)


def apply_matrix(g: Sequence[Sequence], f: Poly) -> Poly:
    """Natural action of a lattice automorphism on polynomials.

    ``g`` acts on coordinate vectors by left multiplication, so ``x_j`` goes to
    the linear form given by column ``j`` of ``g``.  For a linear ``f`` this is
    ``w(f)``; on functions of the torus it is ``f o w^{-1}``.
    """
    n = f.nvars
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError("dimension mismatch between matrix and polynomial ring")
    images = [Poly.linear([g[i][j] for i in range(n)]) for j in range(n)]
    return f.substitute(images)


def demazure(f: Poly, alpha: Poly, reflection: Sequence[Sequence]) -> Poly:
    """Divided difference ``(f - s(f)) / alpha``; the division is exact."""
    return (f - apply_matrix(reflection, f)).divide_exact(alpha)


def random_poly(rng, nvars: int, degree: int = 3, nterms: int = 4, coeff: int = 5) -> Poly:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, degree)
        mono = [0] * nvars
        for _ in range(d):
            mono[rng.randrange(nvars)] += 1
        terms[tuple(mono)] = as_scalar(rng.randint(-coeff, coeff))
    return Poly(nvars, terms)


def monomials_of_degree(nvars: int, d: int) -> Iterable[tuple]:
    if nvars == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            yield (a,) + rest
