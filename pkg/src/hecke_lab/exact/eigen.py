"""Characteristic polynomials and eigenvalues in Q(i)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

import flint

from .matrix import ExactMatrix
from .scalar import ONE, ZERO, Scalar, as_scalar


class NonGaussianEigenvalue(ArithmeticError):
    """An eigenvalue outside Q(i) was encountered."""


def charpoly(M: ExactMatrix) -> list:
    """Coefficients (constant term first) of det(x - M)."""
    n = M.nrows
    if M.is_real():
        return [Scalar._make(Fraction(int(c.p), int(c.q)), Fraction(0))
                for c in M._flint().charpoly().coeffs()] if n else [ONE]
    # Faddeev-LeVerrier, fine for the small complex matrices we meet
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = ExactMatrix.zeros(n, n)
    I = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(M @ Mk).trace() / k
    return coeffs


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _real_candidates(coeffs: Sequence[Fraction]) -> list:
    p = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])
    out = []
    for fac, _ in p.factor()[1]:
        c = [Fraction(int(x.p), int(x.q)) for x in fac.coeffs()]
        if len(c) == 2:
            out.append(Scalar._make(-c[0] / c[1], Fraction(0)))
        elif len(c) == 3:
            a, b, cc = c[2], c[1], c[0]
            disc = b * b - 4 * a * cc
            root = _rational_sqrt(-disc)
            if root is not None:
                out.append(Scalar._make(-b / (2 * a), root / (2 * a)))
                out.append(Scalar._make(-b / (2 * a), -root / (2 * a)))
    return out


def _divide_root(coeffs: list, lam: Scalar):
    """Synthetic division; returns (quotient, remainder)."""
    n = len(coeffs) - 1
    q = [ZERO] * n
    acc = ZERO
    for i in range(n, 0, -1):
        acc = acc * lam + coeffs[i]
        q[i - 1] = acc
    rem = acc * lam + coeffs[0]
    return q, rem


def gaussian_roots(coeffs: Sequence) -> dict:
    """All roots with multiplicity of a polynomial (constant term first).

    Raises :class:`NonGaussianEigenvalue` unless the polynomial splits over Q(i).
    """
    coeffs = [as_scalar(c) for c in coeffs]
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg <= 0:
        return {}
    if all(c.is_real() for c in coeffs):
        cands = _real_candidates([c.re for c in coeffs])
    else:
        conj = [c.conjugate() for c in coeffs]
        prod = [ZERO] * (2 * deg + 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(conj):
                prod[i + j] = prod[i + j] + a * b
        cands = _real_candidates([c.re for c in prod])
    roots = {}
    rest = coeffs
    for lam in dict.fromkeys(cands):
        while len(rest) > 1:
            q, rem = _divide_root(rest, lam)
            if rem:
                break
            roots[lam] = roots.get(lam, 0) + 1
            rest = q
    if sum(roots.values()) != deg:
        raise NonGaussianEigenvalue("characteristic polynomial does not split over Q(i)")
    return roots


def eigenvalues(M: ExactMatrix) -> dict:
    """Eigenvalue -> algebraic multiplicity."""
    return gaussian_roots(charpoly(M))
