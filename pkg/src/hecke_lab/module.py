"""Finite-dimensional modules over graded Hecke algebras and their parabolic subalgebras.

A module is stored by the matrices of the coordinate functions x_j and of the
generators N_s (s simple in P) and N_gamma (gamma in the Gamma part).  Matrices
act on column vectors.
"""

from __future__ import annotations

import os
from collections import deque
from typing import Mapping, Sequence

from .exact.eigen import eigenvalues
from .exact.matrix import ExactMatrix
from .exact.poly import Poly
from .exact.scalar import ONE, ZERO, Scalar, as_scalar
from .hecke import AlgebraElement, GradedHeckeAlgebraSpec
from .roots import point_sort_key

DEFAULT_MAX_DIM = 64
MAX_GROUP_ORDER = 48


class ModuleError(ValueError):
    """Relation check failed or inputs are inconsistent."""


class SizeLimitError(ModuleError):
    pass


def max_dim() -> int:
    return int(os.environ.get("HECKE_LAB_MAX_DIM", DEFAULT_MAX_DIM))


def _check_size(spec: GradedHeckeAlgebraSpec, dim: int):
    if spec.group.order > MAX_GROUP_ORDER:
        raise SizeLimitError(f"group order {spec.group.order} exceeds {MAX_GROUP_ORDER}")
    if dim > max_dim():
        raise SizeLimitError(f"module dimension {dim} exceeds {max_dim()} "
                             "(raise HECKE_LAB_MAX_DIM to override)")


class FiniteModule:
    """A module over H_P = H(t, W_P x| Gamma', k, r) inside ``spec``.

    ``gens`` maps group element ids (simple reflections of P and elements of
    Gamma') to matrices.  The full representation of W_P x| Gamma' is generated
    from them and every defining relation is checked exactly.
    """

    def __init__(self, spec: GradedHeckeAlgebraSpec, coords: Sequence[ExactMatrix],
                 gens: Mapping[int, ExactMatrix], P: Sequence[int] | None = None,
                 check: bool = True, label: str = ""):
        self.spec = spec
        n = spec.nvars
        if len(coords) != n:
            raise ModuleError(f"need {n} coordinate matrices, got {len(coords)}")
        self.dim = coords[0].nrows if coords else (next(iter(gens.values())).nrows if gens else 0)
        self.coords = tuple(coords)
        self.P = tuple(sorted(range(spec.datum.semisimple_rank))) if P is None else tuple(sorted(P))
        G = spec.group
        self.gens = {}
        for g, M in gens.items():
            if g == 0:
                continue
            word, gam = G.word(g)
            if gam == 0 and len(word) == 1:
                if word[0] not in self.P:
                    raise ModuleError(f"N_s{word[0]} is not in the parabolic subalgebra")
            elif len(word) != 0:
                raise ModuleError("generators must be simple reflections or Gamma elements")
            self.gens[g] = M
        for i in self.P:
            if G.simple[i] not in self.gens:
                raise ModuleError(f"missing matrix for simple reflection s{i}")
        self.label = label
        for M in list(self.coords) + list(self.gens.values()):
            if M.shape != (self.dim, self.dim):
                raise ModuleError("all matrices must be dim x dim")
        self._group_mats = None
        self._adapted = None
        self._x_cache = {}
        _check_size(spec, self.dim)
        if check:
            problems = self.relation_failures()
            if problems:
                raise ModuleError("; ".join(problems[:5]))

    # group representation -------------------------------------------------------
    @property
    def group_matrices(self) -> dict:
        """g -> M(N_g) for every g in the subgroup generated by ``gens``."""
        if self._group_mats is None:
            G = self.spec.group
            mats = {0: ExactMatrix.identity(self.dim)}
            queue = deque([0])
            while queue:
                h = queue.popleft()
                for g, M in self.gens.items():
                    gh = G.mul(g, h)
                    if gh not in mats:
                        mats[gh] = M @ mats[h]
                        queue.append(gh)
            self._group_mats = mats
        return self._group_mats

    @property
    def subgroup(self) -> tuple:
        return tuple(sorted(self.group_matrices))

    def N(self, g: int) -> ExactMatrix:
        try:
            return self.group_matrices[g]
        except KeyError:
            raise ModuleError(f"group element {g} does not act on this module") from None

    def generator_matrices(self) -> list:
        return list(self.coords) + [self.gens[g] for g in sorted(self.gens)]

    def x(self, f) -> ExactMatrix:
        """Matrix of a polynomial."""
        if not isinstance(f, Poly):
            return ExactMatrix.identity(self.dim).scale(as_scalar(f))
        out = self._x_cache.get(f)
        if out is not None:
            return out
        d = self.dim
        total = ExactMatrix.zeros(d, d)
        pw: dict = {}
        for mono, c in f.terms.items():
            term = ExactMatrix.identity(d)
            for j, e in enumerate(mono):
                if e:
                    key = (j, e)
                    if key not in pw:
                        pw[key] = self.coords[j] ** e
                    term = term @ pw[key]
            total = total + term.scale(c)
        self._x_cache[f] = total
        return total

    def act(self, h: AlgebraElement) -> ExactMatrix:
        d = self.dim
        total = ExactMatrix.zeros(d, d)
        for g, f in h.terms.items():
            total = total + self.x(f) @ self.N(g)
        return total

    # relations -------------------------------------------------------------------
    def relation_failures(self, spec: GradedHeckeAlgebraSpec | None = None) -> list:
        """Defining relations that fail, as readable strings (empty when valid)."""
        spec = spec or self.spec
        G = spec.group
        out = []
        X = self.coords
        for a in range(len(X)):
            for b in range(a + 1, len(X)):
                if not X[a].commutator(X[b]).is_zero():
                    out.append(f"x{a} and x{b} do not commute")
        for g, M in self.gens.items():
            word, gam = G.word(g)
            for j, xj in enumerate(spec.coords):
                lhs = M @ X[j] - self.x(spec.act(g, xj)) @ M
                if gam == 0 and len(word) == 1:
                    rhs = self.x(spec.correction(word[0], xj))
                else:
                    rhs = ExactMatrix.zeros(self.dim, self.dim)
                if lhs != rhs:
                    out.append(f"cross relation fails for generator {g} and x{j}")
        mats = self.group_matrices
        for g, M in self.gens.items():
            for h, Mh in mats.items():
                if M @ Mh != mats[G.mul(g, h)]:
                    out.append(f"group relation fails at N_{g} N_{h}")
                    break
        return out

    def verify(self, spec: GradedHeckeAlgebraSpec | None = None) -> bool:
        return not self.relation_failures(spec)

    # derived modules ---------------------------------------------------------------
    def _conjugate(self, B: ExactMatrix, Binv: ExactMatrix) -> tuple:
        return ([Binv @ X @ B for X in self.coords],
                {g: Binv @ M @ B for g, M in self.gens.items()})

    def change_basis(self, B: ExactMatrix, label: str = "") -> "FiniteModule":
        coords, gens = self._conjugate(B, B.inverse())
        return FiniteModule(self.spec, coords, gens, self.P, check=False, label=label or self.label)

    def is_invariant(self, basis: Sequence[Sequence]) -> bool:
        U = span_columns(basis, self.dim)
        for M in self.generator_matrices():
            MU = M @ U
            if ExactMatrix.hstack([U, MU], self.dim).rank() != U.ncols:
                return False
        return True

    def split(self, basis: Sequence[Sequence]):
        """(submodule, quotient) for an invariant subspace spanned by ``basis``."""
        U = span_columns(basis, self.dim)
        k = U.ncols
        B = complete_basis(U)
        coords, gens = self._conjugate(B, B.inverse())
        d = self.dim
        for M in coords + list(gens.values()):
            if any(M[i, j] for i in range(k, d) for j in range(k)):
                raise ModuleError("subspace is not invariant")
        top, bot = range(k), range(k, d)
        sub = FiniteModule(self.spec, [M.submatrix(top, top) for M in coords],
                           {g: M.submatrix(top, top) for g, M in gens.items()}, self.P, check=False)
        quo = FiniteModule(self.spec, [M.submatrix(bot, bot) for M in coords],
                           {g: M.submatrix(bot, bot) for g, M in gens.items()}, self.P, check=False)
        return sub, quo

    def submodule(self, basis) -> "FiniteModule":
        return self.split(basis)[0]

    def quotient(self, basis) -> "FiniteModule":
        return self.split(basis)[1]

    def direct_sum(self, other: "FiniteModule") -> "FiniteModule":
        if self.P != other.P or set(self.gens) != set(other.gens):
            raise ModuleError("direct sum of modules over different subalgebras")
        return FiniteModule(self.spec, [a.block_diag(b) for a, b in zip(self.coords, other.coords)],
                            {g: M.block_diag(other.gens[g]) for g, M in self.gens.items()},
                            self.P, check=False)

    def twist(self, t: Sequence) -> "FiniteModule":
        """Twist by a point fixed by W_P x| Gamma': x_j -> x_j + t_j."""
        t = [as_scalar(v) for v in t]
        G = self.spec.group
        for g in self.gens:
            if G.act_on_t(g, t) != tuple(t):
                raise ModuleError("twisting point is not fixed by the subalgebra's group")
        I = ExactMatrix.identity(self.dim)
        return FiniteModule(self.spec, [X + I.scale(c) for X, c in zip(self.coords, t)],
                            dict(self.gens), self.P, check=False)

    def with_spec(self, spec: GradedHeckeAlgebraSpec, gens=None, check: bool = True) -> "FiniteModule":
        """The same matrices read as a module over another presentation."""
        return FiniteModule(spec, self.coords, gens if gens is not None else dict(self.gens),
                            self.P, check=check, label=self.label)

    # weights -----------------------------------------------------------------------
    def weight_decomposition(self) -> list:
        """[(weight tuple, basis columns)] of joint generalized eigenspaces."""
        return [(w, cols) for w, cols, _ in self._weight_blocks()]

    def _weight_blocks(self):
        if self._adapted is None:
            d = self.dim
            pieces = [((), ExactMatrix.identity(d))]
            for X in self.coords:
                new = []
                for w, B in pieces:
                    A = restrict(X, B)
                    for lam, mult in sorted(eigenvalues(A).items(), key=lambda kv: _key(kv[0])):
                        N = A - ExactMatrix.identity(A.nrows).scale(lam)
                        K = (N ** A.nrows).kernel()
                        C = B @ ExactMatrix.from_columns(K, A.nrows)
                        new.append((w + (lam,), C))
                pieces = new
            self._adapted = [(w, [C.column(j) for j in range(C.ncols)], C) for w, C in pieces]
        return self._adapted

    def weights(self) -> dict:
        return {w: len(cols) for w, cols in self.weight_decomposition()}

    def adapted_form(self):
        """(B, blocks, module in the weight-adapted basis B)."""
        blocks = self._weight_blocks()
        B = ExactMatrix.hstack([C for _, _, C in blocks], self.dim)
        sizes = [(w, C.ncols) for w, _, C in blocks]
        return B, sizes

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"<FiniteModule{tag} dim={self.dim} P={self.P} over {self.spec!r}>"

    def to_json(self) -> dict:
        G = self.spec.group
        return {"dim": self.dim, "P": list(self.P),
                "coords": [X.to_json() for X in self.coords],
                "gens": {str(g): M.to_json() for g, M in sorted(self.gens.items())},
                "gen_words": {str(g): {"word": list(G.word(g)[0]), "gamma": G.word(g)[1]}
                              for g in sorted(self.gens)}}


def _key(s: Scalar):
    return (s.re, s.im)


def restrict(X: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Matrix of X on the invariant column span of B (full column rank)."""
    XB = X @ B
    _, piv = B.transpose().rref()
    rows = list(piv)
    Bs = B.submatrix(rows, range(B.ncols))
    return Bs.inverse() @ XB.submatrix(rows, range(XB.ncols))


def span_columns(basis, dim: int) -> ExactMatrix:
    """Matrix whose columns form a basis of the span of ``basis``."""
    if isinstance(basis, ExactMatrix):
        vecs = [basis.column(j) for j in range(basis.ncols)]
    else:
        vecs = [tuple(v) for v in basis]
    if not vecs:
        return ExactMatrix.zeros(dim, 0)
    R = ExactMatrix(vecs).row_space()
    return R.transpose()


def complete_basis(U: ExactMatrix) -> ExactMatrix:
    """[U | unit vectors] square and invertible."""
    d, k = U.shape
    _, piv = U.transpose().rref()
    extra = [j for j in range(d) if j not in set(piv)]
    # U's pivot rows are complemented by the remaining coordinate vectors
    cols = [U.column(j) for j in range(k)]
    cols += [tuple(ONE if i == j else ZERO for i in range(d)) for j in extra]
    return ExactMatrix.from_columns(cols, d)


# ---------------------------------------------------------------------------------
# constructions


def character_module(spec: GradedHeckeAlgebraSpec, weight: Sequence, P: Sequence[int] = (),
                     signs: Mapping[int, int] | None = None, gamma: Mapping[int, object] | None = None,
                     label: str = "") -> FiniteModule:
    """One-dimensional module of H_P: x_j -> weight_j, N_{s_i} -> signs[i]."""
    w = [as_scalar(v) for v in weight]
    sgn = signs or {}
    gens = {spec.group.simple[i]: ExactMatrix([[sgn.get(i, 1)]]) for i in P}
    for g, c in (gamma or {}).items():
        gens[g] = ExactMatrix([[c]])
    return FiniteModule(spec, [ExactMatrix([[c]]) for c in w], gens, P, label=label)


def induce(M: FiniteModule, P: Sequence[int] | None = None, gamma: Sequence[int] | None = None,
           label: str = "") -> FiniteModule:
    """Induction from M's subalgebra to H_{P} (default: the whole algebra).

    Basis N_rep (x) m over minimal-length coset representatives; the action of x_j
    is obtained by moving x_j to the right through N_rep.
    """
    spec = M.spec
    G = spec.group
    P = tuple(range(spec.datum.semisimple_rank)) if P is None else tuple(sorted(P))
    if not set(M.P) <= set(P):
        raise ModuleError("induction must go to a larger parabolic")
    if gamma is None:
        gamma = G.gamma if set(P) == set(range(spec.datum.semisimple_rank)) else \
            tuple(g for g in M.gens if G.length(g) == 0)
    Hsrc = M.subgroup
    Htgt = G.parabolic(P, gamma)
    if not set(Hsrc) <= set(Htgt):
        raise ModuleError("source subgroup is not contained in the target subgroup")
    reps = _reps_within(G, Htgt, Hsrc)
    _check_size(spec, len(reps) * M.dim)
    index = {r: i for i, r in enumerate(reps)}
    d = M.dim
    Hset = set(Hsrc)

    def decompose(h):
        for r in reps:
            u = G.mul(G.inverse(r), h)
            if u in Hset:
                return r, u
        raise ModuleError("coset decomposition failed")

    nr = len(reps)

    def assemble(blocks):
        rows = [[ZERO] * (nr * d) for _ in range(nr * d)]
        for (a, b), B in blocks.items():
            for i in range(d):
                Bi = B.rows[i]
                ri = rows[a * d + i]
                for j in range(d):
                    if Bi[j]:
                        ri[b * d + j] = Bi[j]
        return ExactMatrix(rows)

    coords = []
    for xj in spec.coords:
        blocks = {}
        for w in reps:
            for h, p in spec.right_move(xj, w).items():
                rep, u = decompose(h)
                B = M.N(u) @ M.x(p)
                key = (index[rep], index[w])
                blocks[key] = blocks[key] + B if key in blocks else B
        coords.append(assemble(blocks))
    gens = {}
    gen_ids = [G.simple[i] for i in P] + [g for g in gamma if g != 0]
    for g in gen_ids:
        blocks = {}
        for w in reps:
            rep, u = decompose(G.mul(g, w))
            blocks[(index[rep], index[w])] = M.N(u)
        gens[g] = assemble(blocks)
    return FiniteModule(spec, coords, gens, P, label=label)


def _reps_within(G, Htgt, Hsrc) -> tuple:
    """Minimal-length representatives of Htgt / Hsrc."""
    seen = set()
    reps = []
    for g in sorted(Htgt, key=lambda g: (G.length(g), g)):
        if g in seen:
            continue
        reps.append(g)
        for h in Hsrc:
            seen.add(G.mul(g, h))
    return tuple(reps)


def induce_character(spec: GradedHeckeAlgebraSpec, sigma0: Sequence, label: str = "") -> FiniteModule:
    """ind_{O(t)}^{H} C_{sigma0}, of dimension |W x| Gamma|."""
    return induce(character_module(spec, sigma0), label=label)


def induce_parabolic(M: FiniteModule, P: Sequence[int] | None = None, label: str = "") -> FiniteModule:
    return induce(M, P, label=label)


def sgn_pullback(M: FiniteModule, target: GradedHeckeAlgebraSpec | None = None) -> FiniteModule:
    """The module over the (-r)-algebra obtained through N_w -> det(w) N_w."""
    spec = M.spec
    if target is None:
        target = spec.with_r(-spec.r)
    G = spec.group
    gens = {g: Mg.scale(G.det(g)) for g, Mg in M.gens.items()}
    return FiniteModule(target, M.coords, gens, M.P, label=M.label)


def pushforward_normalized(M: FiniteModule, target: GradedHeckeAlgebraSpec) -> FiniteModule:
    """Read M over a rescaled presentation of the same algebra (relations rechecked)."""
    if target.group is not M.spec.group:
        raise ModuleError("rescaling must keep the group")
    return M.with_spec(target)


def weights_and_central_character(M: FiniteModule):
    """(weights with multiplicities, central character or None).

    The central character is reported as the sorted orbit of a weight under the
    group of the algebra M lives over; None if the weights span several orbits.
    """
    wts = M.weights()
    G = M.spec.group
    H = M.subgroup if M.P != tuple(range(M.spec.datum.semisimple_rank)) else range(G.order)
    orbits = set()
    for w in wts:
        orbits.add(tuple(sorted({G.act_on_t(g, w) for g in H}, key=point_sort_key)))
    cc = next(iter(orbits)) if len(orbits) == 1 else None
    return wts, cc


def det_multiplicity(M: FiniteModule) -> int:
    """Multiplicity of det in the restriction to W_P x| Gamma'."""
    G = M.spec.group
    mats = M.group_matrices
    total = sum((M_g.trace() * G.det(g) for g, M_g in mats.items()), ZERO)
    m = total / len(mats)
    if not m.is_integer():
        raise ModuleError("character inner product is not an integer")
    return int(m.re)


def is_generic(M: FiniteModule) -> bool:
    return det_multiplicity(M) >= 1


class NotScalarError(ModuleError):
    """A central element does not act by a scalar (several central characters)."""


def central_evaluate(z, M: FiniteModule) -> Scalar:
    """Scalar by which an invariant polynomial z acts on M.

    z must be invariant under the whole group of the algebra; if M mixes
    central characters the matrix is not scalar and NotScalarError is raised.
    """
    spec = M.spec
    if isinstance(z, Poly):
        for g in range(spec.group.order):
            if spec.act(g, z) != z:
                raise ModuleError(f"{z} is not invariant under the group")
    c = M.x(z).is_scalar_matrix()
    if c is None:
        raise NotScalarError("not scalar: the module mixes central characters")
    return c
