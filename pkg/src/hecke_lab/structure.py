"""Hom spaces, socles and composition factors of finite modules.

The radical of the image algebra A of a module is the kernel of the trace form
tr(ab) (characteristic zero), the socle is the joint kernel of rad(A), and the
semisimple layers are split with non-scalar endomorphisms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .exact.eigen import NonGaussianEigenvalue, eigenvalues
from .exact.matrix import ExactMatrix
from .exact.scalar import ONE, ZERO
from .module import FiniteModule, ModuleError


def _compatible(M1: FiniteModule, M2: FiniteModule):
    if not M1.spec.same_algebra(M2.spec):
        raise ModuleError("modules over different algebras")
    if M1.P != M2.P or set(M1.gens) != set(M2.gens):
        raise ModuleError("modules over different subalgebras")


class _Adapted:
    """Module matrices in a basis adapted to the generalized weight spaces."""

    def __init__(self, M: FiniteModule):
        B, sizes = M.adapted_form()
        self.B = B
        self.Binv = B.inverse()
        self.mats = [self.Binv @ X @ B for X in M.generator_matrices()]
        self.block = []
        self.weights = []
        for w, n in sizes:
            self.weights.append(w)
            self.block.extend([len(self.weights) - 1] * n)


def _adapted(M: FiniteModule) -> _Adapted:
    a = M.__dict__.get("_adapted_cache")
    if a is None:
        a = _Adapted(M)
        M.__dict__["_adapted_cache"] = a
    return a


def hom_space(M1: FiniteModule, M2: FiniteModule) -> list:
    """Basis of Hom_H(M1, M2) as d2 x d1 matrices T with T M1(g) = M2(g) T."""
    _compatible(M1, M2)
    d1, d2 = M1.dim, M2.dim
    if not d1 or not d2:
        return []
    a1, a2 = _adapted(M1), _adapted(M2)
    # an intertwiner maps each generalized weight space into the same weight space
    wmap = {}
    for bi, w in enumerate(a2.weights):
        for bj, v in enumerate(a1.weights):
            if w == v:
                wmap[bj] = bi
    unknown = {}
    rows_by_col: dict = {}
    for c in range(d1):
        target = wmap.get(a1.block[c])
        if target is None:
            continue
        for a in range(d2):
            if a2.block[a] == target:
                unknown[(a, c)] = len(unknown)
                rows_by_col.setdefault(c, []).append(a)
    cols_by_row: dict = {}
    for (a, c) in unknown:
        cols_by_row.setdefault(a, []).append(c)
    if not unknown:
        return []
    nu = len(unknown)
    eqs = []
    for A1, A2 in zip(a1.mats, a2.mats):
        eq: dict = {}
        # (T A1)_{ab} = sum_c T_{ac} A1_{cb}
        for c, row in enumerate(A1.rows):
            alist = rows_by_col.get(c)
            if not alist:
                continue
            for b, v in enumerate(row):
                if v:
                    for a in alist:
                        e = eq.setdefault((a, b), {})
                        u = unknown[(a, c)]
                        e[u] = e.get(u, ZERO) + v
        # (A2 T)_{ab} = sum_c A2_{ac} T_{cb}
        for a, row in enumerate(A2.rows):
            for c, v in enumerate(row):
                if v:
                    blist = cols_by_row.get(c)
                    if not blist:
                        continue
                    for b in blist:
                        e = eq.setdefault((a, b), {})
                        u = unknown[(c, b)]
                        e[u] = e.get(u, ZERO) - v
        for e in eq.values():
            if any(e.values()):
                r = [ZERO] * nu
                for u, v in e.items():
                    r[u] = v
                eqs.append(r)
    if eqs:
        K = ExactMatrix(eqs).kernel()
    else:
        K = [tuple(ONE if i == j else ZERO for i in range(nu)) for j in range(nu)]
    out = []
    for vec in K:
        T = [[ZERO] * d1 for _ in range(d2)]
        for (a, c), u in unknown.items():
            T[a][c] = vec[u]
        out.append(a2.B @ ExactMatrix(T) @ a1.Binv)
    return out


def hom_dim(M1: FiniteModule, M2: FiniteModule) -> int:
    return len(hom_space(M1, M2))


def is_isomorphic(M1: FiniteModule, M2: FiniteModule, tries: int = 8) -> bool:
    """Exhibit an invertible intertwiner (random combinations; exact check)."""
    if M1.dim != M2.dim or M1.weights() != M2.weights():
        return False
    H = hom_space(M1, M2)
    if not H:
        return False
    rng = random.Random(0)
    for t in range(tries):
        coeffs = [1] * len(H) if t == 0 else [rng.randint(-5, 5) for _ in H]
        T = ExactMatrix.zeros(M2.dim, M1.dim)
        for c, h in zip(coeffs, H):
            T = T + h.scale(c)
        if T.rank() == M1.dim:
            return True
    for h in H:
        if h.rank() == M1.dim:
            return True
    return False


# ---------------------------------------------------------------------------------
# image algebra and radical


def _spin(start: list, gens: list, d: int) -> list:
    """Basis of the span of words in ``gens`` applied (on the left) to ``start``."""
    basis = list(start)
    frontier = list(start)
    while frontier and len(basis) < d * d:
        cands = [g @ b for b in frontier for g in gens]
        stack = ExactMatrix.stack_flat(basis + cands, d * d)
        _, piv = stack.transpose().rref()
        n0 = len(basis)
        new = [cands[j - n0] for j in piv if j >= n0]
        basis.extend(new)
        frontier = new
    return basis


def image_algebra(M: FiniteModule) -> list:
    """Basis of the image of the algebra in End(M).

    Every element is a sum of f N_g, so the image is spanned by products of the
    commutative algebra generated by the x_j with the matrices of N_g.
    """
    cached = M.__dict__.get("_image_cache")
    if cached is not None:
        return cached
    d = M.dim
    comm = _spin([ExactMatrix.identity(d)], list(M.coords), d)
    cands = [c @ Ng for Ng in M.group_matrices.values() for c in comm]
    stack = ExactMatrix.stack_flat(cands, d * d)
    _, piv = stack.transpose().rref()
    basis = [cands[j] for j in piv]
    M.__dict__["_image_cache"] = basis
    return basis


def _radical_rows(M: FiniteModule, transposed: bool = False):
    """Radical of the image algebra as a stacked (n_rad * d) x d matrix, or None."""
    d = M.dim
    basis = image_algebra(M)
    if len(basis) == d * d:
        return None
    V = ExactMatrix.stack_flat(basis, d * d)
    W = ExactMatrix.stack_flat([b.transpose() for b in basis], d * d)
    K = (V @ W.transpose()).kernel_matrix()
    if K.ncols == 0:
        return None
    R = K.transpose() @ (W if transposed else V)
    return R.reshape(K.ncols * d, d)


def algebra_radical(M: FiniteModule) -> list:
    """Basis of the Jacobson radical of the image algebra."""
    R = _radical_rows(M)
    if R is None:
        return []
    d = M.dim
    return [R.submatrix(range(i * d, (i + 1) * d), range(d)) for i in range(R.nrows // d)]


def socle(M: FiniteModule) -> list:
    """Basis vectors of the socle (sum of simple submodules)."""
    d = M.dim
    if d == 0:
        return []
    R = _radical_rows(M)
    if R is None:
        return [tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d)]
    K = R.kernel_matrix()
    return [K.column(j) for j in range(K.ncols)]


def radical(M: FiniteModule) -> list:
    """Basis vectors of rad(M) = rad(A) M."""
    R = _radical_rows(M, transposed=True)
    if R is None:
        return []
    return list(R.row_space().rows)


def head(M: FiniteModule) -> FiniteModule:
    rad = radical(M)
    return M.quotient(rad) if rad else M


def is_semisimple(M: FiniteModule) -> bool:
    return not algebra_radical(M)


def is_simple(M: FiniteModule) -> bool:
    if M.dim == 0:
        return False
    return len(image_algebra(M)) == M.dim ** 2


# ---------------------------------------------------------------------------------
# splitting and composition factors


def _candidate_endomorphisms(E: list, rng):
    for phi in E:
        yield phi
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            yield E[i] + E[j]
    for _ in range(20):
        T = ExactMatrix.zeros(E[0].nrows, E[0].ncols)
        for h in E:
            T = T + h.scale(rng.randint(-3, 3))
        yield T


def split_semisimple(L: FiniteModule) -> list:
    """Simple summands of a semisimple module (as sub/quotient modules)."""
    if L.dim == 0:
        return []
    E = hom_space(L, L)
    if len(E) == 1:
        return [L]
    rng = random.Random(len(E))
    for phi in _candidate_endomorphisms(E, rng):
        if phi.is_scalar_matrix() is not None:
            continue
        try:
            ev = eigenvalues(phi)
        except NonGaussianEigenvalue:
            continue
        lam = min(ev, key=lambda s: (s.re, s.im))
        K = (phi - ExactMatrix.identity(L.dim).scale(lam)).kernel()
        sub, quo = L.split(K)
        return split_semisimple(sub) + split_semisimple(quo)
    raise ModuleError("could not split a semisimple module over Q(i)")


@dataclass
class SocleData:
    socle_basis: list
    socle_summands: list
    layers: list = field(default_factory=list)   # layer -> simple modules
    factors: list = field(default_factory=list)  # [(simple module, multiplicity)]

    def factor_modules(self):
        return [S for S, _ in self.factors]


def socle_series(M: FiniteModule) -> list:
    """Layers soc^1, soc^2/soc^1, ... as lists of simple modules."""
    layers = []
    cur = M
    while cur.dim:
        S = socle(cur)
        sub, quo = cur.split(S)
        layers.append(split_semisimple(sub))
        cur = quo
    return layers


def group_isoclasses(simples: Sequence[FiniteModule]) -> list:
    """[(representative, multiplicity)] for a list of simple modules."""
    classes: list = []
    for S in simples:
        for entry in classes:
            R = entry[0]
            if R.dim == S.dim and R.weights() == S.weights() and hom_dim(R, S):
                entry[1] += 1
                break
        else:
            classes.append([S, 1])
    return [(R, m) for R, m in classes]


def socle_and_factors(M: FiniteModule) -> SocleData:
    layers = socle_series(M)
    soc_basis = socle(M)
    flat = [S for layer in layers for S in layer]
    return SocleData(soc_basis, layers[0] if layers else [], layers, group_isoclasses(flat))


def composition_factors(M: FiniteModule) -> list:
    return socle_and_factors(M).factors


def occurs_in(S: FiniteModule, factors: Sequence) -> int:
    """Multiplicity of the simple module S among grouped factors."""
    for R, m in factors:
        if R.dim == S.dim and R.weights() == S.weights() and hom_dim(R, S):
            return m
    return 0


def embeds(S: FiniteModule, M: FiniteModule) -> bool:
    """For simple S: is S isomorphic to a submodule of M."""
    return hom_dim(S, M) > 0
