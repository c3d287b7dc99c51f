"""Graded nilpotent geometry for gl_n.

sigma is always diagonal, so the graded piece g_N^{sigma,r} is spanned by
matrix units E_ij with a_i - a_j = 2r.  A nilpotent y in it raises the
sigma-eigenvalue by 2r; orbits of Z_G(sigma) are classified by the ranks of
the composite maps along each chain of eigenvalues (an equioriented type A
quiver), equivalently by multisegments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact.matrix import ExactMatrix
from .exact.scalar import ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar

BOUNDED = "bounded"
ESSENTIALLY_BOUNDED = "essentially_bounded"
NEITHER = "neither"


class ParameterError(ValueError):
    """A parameter violates a precondition (shape, nilpotency, [sigma,y] = 2ry)."""


def _skey(s: Scalar):
    return (s.re, s.im)


def _read_scalar(v) -> Scalar:
    return parse_scalar(v) if isinstance(v, str) else as_scalar(v)


@dataclass(frozen=True)
class SemisimpleElement:
    eigenvalues: tuple

    def __init__(self, eigenvalues: Sequence):
        object.__setattr__(self, "eigenvalues", tuple(_read_scalar(a) for a in eigenvalues))

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal(self.eigenvalues)

    def __add__(self, other: "SemisimpleElement") -> "SemisimpleElement":
        return SemisimpleElement([a + b for a, b in zip(self.eigenvalues, other.eigenvalues)])

    def distinct(self) -> list:
        return sorted(set(self.eigenvalues), key=_skey)

    def indices(self, a) -> list:
        return [i for i, b in enumerate(self.eigenvalues) if b == a]

    def to_json(self) -> list:
        return [format_scalar(a) for a in self.eigenvalues]

    def __str__(self):
        return "diag(" + ", ".join(map(format_scalar, self.eigenvalues)) + ")"


class NilpotentElement:
    def __init__(self, matrix, check: bool = True):
        M = matrix if isinstance(matrix, ExactMatrix) else ExactMatrix(
            [[_read_scalar(v) for v in row] for row in matrix])
        if not M.is_square():
            raise ParameterError("y must be a square matrix")
        self.matrix = M
        if check and M.nrows and not (M ** M.nrows).is_zero():
            raise ParameterError("y is not nilpotent")

    @classmethod
    def zero(cls, n: int) -> "NilpotentElement":
        return cls(ExactMatrix.zeros(n, n), check=False)

    @classmethod
    def from_units(cls, n: int, units: Sequence) -> "NilpotentElement":
        """Sum of matrix units E_ij for (i, j) in ``units`` (0-based)."""
        rows = [[ZERO] * n for _ in range(n)]
        for i, j in units:
            rows[i][j] = rows[i][j] + ONE
        return cls(ExactMatrix(rows))

    @property
    def n(self) -> int:
        return self.matrix.nrows

    def __eq__(self, other):
        return isinstance(other, NilpotentElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def jordan_type(self) -> tuple:
        """Partition of n given by the Jordan block sizes."""
        n = self.n
        ranks = [n]
        P = ExactMatrix.identity(n)
        while ranks[-1]:
            P = P @ self.matrix
            ranks.append(P.rank())
        # number of blocks of size >= k is ranks[k-1] - ranks[k]
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        parts = []
        for k in range(len(at_least), 0, -1):
            exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
            parts.extend([k] * exact)
        return tuple(parts)

    def to_json(self) -> list:
        return self.matrix.to_json()

    def __repr__(self):
        return f"NilpotentElement({self.matrix.to_json()})"


# ---------------------------------------------------------------------------------
# graded pieces


@dataclass
class GradedSpace:
    sigma: SemisimpleElement
    r: Scalar
    basis: list = field(default_factory=list)    # (i, j) for E_ij, r != 0
    blocks: list = field(default_factory=list)   # index blocks of Z_g(sigma), r = 0

    @property
    def dim(self) -> int:
        if self.r:
            return len(self.basis)
        # the nilpotent cone of a product of gl_m has dimension sum m^2 - m
        return sum(len(b) ** 2 - len(b) for b in self.blocks)

    def contains(self, y: NilpotentElement) -> bool:
        n = self.sigma.n
        if self.r:
            allowed = set(self.basis)
            return all(not y.matrix[i, j] or (i, j) in allowed for i in range(n) for j in range(n))
        block_of = {i: b for b, idx in enumerate(self.blocks) for i in idx}
        return all(not y.matrix[i, j] or block_of[i] == block_of[j]
                   for i in range(n) for j in range(n))


def graded_space(sigma: SemisimpleElement, r) -> GradedSpace:
    r = as_scalar(r)
    a = sigma.eigenvalues
    if r:
        basis = [(i, j) for i in range(sigma.n) for j in range(sigma.n) if a[i] - a[j] == 2 * r]
        return GradedSpace(sigma, r, basis=basis)
    return GradedSpace(sigma, r, blocks=[sigma.indices(v) for v in sigma.distinct()])


def check_parameter(y: NilpotentElement, sigma: SemisimpleElement, r) -> None:
    if y.n != sigma.n:
        raise ParameterError(f"y is {y.n}x{y.n} but sigma has {sigma.n} eigenvalues")
    if not graded_space(sigma, r).contains(y):
        raise ParameterError("[sigma, y] != 2 r y")


def _solve(n: int, unknowns: Sequence, equations) -> int:
    """Dimension of the space of X supported on ``unknowns`` killed by ``equations``.

    Each equation is a linear map X -> matrix given as a callable on matrices.
    """
    if not unknowns:
        return 0
    cols = []
    for (i, j) in unknowns:
        E = ExactMatrix.unit(n, i, j)
        col = []
        for eq in equations:
            col.extend(v for row in eq(E).rows for v in row)
        cols.append(col)
    if not cols[0]:
        return len(unknowns)
    A = ExactMatrix.from_columns(cols)
    return len(unknowns) - A.rank()


def centralizer_dim(sigma: SemisimpleElement) -> int:
    return sum(len(sigma.indices(v)) ** 2 for v in sigma.distinct())


def joint_centralizer_dim(sigma: SemisimpleElement, y: NilpotentElement) -> int:
    """dim Z_g(sigma) cap Z_g(y)."""
    a = sigma.eigenvalues
    n = sigma.n
    unknowns = [(i, j) for i in range(n) for j in range(n) if a[i] == a[j]]
    Y = y.matrix
    return _solve(n, unknowns, [lambda X: X @ Y - Y @ X])


def orbit_dim(y: NilpotentElement, sigma: SemisimpleElement) -> int:
    return centralizer_dim(sigma) - joint_centralizer_dim(sigma, y)


def is_open(y: NilpotentElement, sigma: SemisimpleElement, r) -> bool:
    r = as_scalar(r)
    check_parameter(y, sigma, r)
    if r:
        return orbit_dim(y, sigma) == graded_space(sigma, r).dim
    # r = 0: y must be regular nilpotent in every eigenvalue block of sigma
    for idx in graded_space(sigma, r).blocks:
        sub = NilpotentElement(y.matrix.submatrix(idx, idx), check=False)
        if sub.jordan_type() != (len(idx),):
            return False
    return True


def boundedness_class(sigma0: SemisimpleElement) -> str:
    reals = {a.re for a in sigma0.eigenvalues}
    if reals <= {0}:
        return BOUNDED
    if len(reals) == 1:
        return ESSENTIALLY_BOUNDED
    return NEITHER


def is_distinguished(y: NilpotentElement) -> bool:
    return len(y.jordan_type()) <= 1


# ---------------------------------------------------------------------------------
# sl2-triples


@dataclass
class SL2Triple:
    e: ExactMatrix
    h: ExactMatrix
    f: ExactMatrix
    sigma0: SemisimpleElement | ExactMatrix | None = None

    def check(self) -> bool:
        e, h, f = self.e, self.h, self.f
        ok = h.commutator(e) == e.scale(2) and h.commutator(f) == f.scale(-2) and e.commutator(f) == h
        if ok and self.sigma0 is not None:
            s0 = self.sigma0_matrix()
            ok = all(s0.commutator(X).is_zero() for X in (e, h, f))
        return ok

    def sigma0_matrix(self) -> ExactMatrix:
        s0 = self.sigma0
        return s0.matrix() if isinstance(s0, SemisimpleElement) else s0

    def to_json(self) -> dict:
        out = {"e": self.e.to_json(), "h": self.h.to_json(), "f": self.f.to_json()}
        if self.sigma0 is not None:
            out["sigma0"] = self.sigma0_matrix().to_json()
        return out


def _graded_jordan_basis(Y: ExactMatrix, grading: Sequence) -> list:
    """Jordan chains [top, Y top, ..., Y^{m-1} top] with homogeneous tops.

    ``grading`` labels each standard basis vector; Y must map each graded piece
    into a single other one (true for y in g_N^{sigma,r}).  Deterministic:
    candidates are tried in the order of a reduced basis of each kernel.
    """
    n = Y.nrows
    powers = [ExactMatrix.identity(n)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ Y)
    m = len(powers) - 1
    labels = sorted(set(grading), key=_skey)
    chains = []
    for level in range(m, 0, -1):
        for lab in labels:
            idx = [i for i in range(n) if grading[i] == lab]
            # vectors of the piece killed by Y^level
            sub = powers[level].submatrix(range(n), idx)
            kern = sub.kernel()
            current = [v for ch in chains for v in ch[len(ch) - level:len(ch) - level + 1]
                       if len(ch) >= level]
            for kvec in kern:
                v = [ZERO] * n
                for c, i in zip(kvec, idx):
                    v[i] = c
                v = tuple(v)
                # independence modulo ker Y^{level-1} plus chain vectors already at this level
                test = [v] + current
                imgs = [powers[level - 1].apply(w) for w in test]
                if ExactMatrix(imgs).rank() == len(test):
                    chain = [v]
                    for _ in range(level - 1):
                        chain.append(Y.apply(chain[-1]))
                    chains.append(chain)
                    current.append(v)
    return chains


def jm_triple(y: NilpotentElement, sigma: SemisimpleElement | None = None, r=None) -> SL2Triple:
    """An sl2-triple (y, h, f), graded by sigma when it is given.

    With sigma and r the triple commutes with sigma0 = sigma - r h.
    """
    n = y.n
    Y = y.matrix
    if y.n and not (Y ** n).is_zero():
        raise ParameterError("y is not nilpotent")
    grading = sigma.eigenvalues if sigma is not None else [ZERO] * n
    chains = _graded_jordan_basis(Y, grading)
    cols, hdiag, fmap = [], [], []
    for chain in chains:
        m = len(chain)
        # chain[0] is the lowest weight vector; order columns highest weight first
        ordered = list(reversed(chain))
        base = len(cols)
        cols.extend(ordered)
        for p in range(m):
            hdiag.append(m - 1 - 2 * p)
            if p + 1 < m:
                fmap.append((base + p + 1, base + p, (p + 1) * (m - 1 - p)))
    if len(cols) != n:
        raise ParameterError("Jordan basis construction failed")
    B = ExactMatrix.from_columns(cols, n) if n else ExactMatrix.zeros(0, 0)
    Binv = B.inverse() if n else B
    Fj = [[ZERO] * n for _ in range(n)]
    for i, j, c in fmap:
        Fj[i][j] = as_scalar(c)
    h = B @ ExactMatrix.diagonal(hdiag) @ Binv if n else B
    f = B @ ExactMatrix(Fj) @ Binv if n else B
    s0 = None
    if sigma is not None and r is not None:
        s0 = sigma.matrix() - h.scale(as_scalar(r))
        diag_ok = all(not s0[i, j] for i in range(n) for j in range(n) if i != j)
        if diag_ok:
            s0 = SemisimpleElement([s0[i, i] for i in range(n)])
    return SL2Triple(Y, h, f, s0)


def sigma0_of(y: NilpotentElement, sigma: SemisimpleElement, r) -> ExactMatrix:
    return jm_triple(y, sigma, r).sigma0_matrix()


def lemma112_criterion(y: NilpotentElement, sigma: SemisimpleElement, r) -> bool:
    """Is g_N^{sigma,r} = {X in Z_g(sigma0) : [sigma - sigma0, X] = 2rX}?"""
    r = as_scalar(r)
    if not r:
        raise ParameterError("the criterion needs r != 0")
    check_parameter(y, sigma, r)
    T = jm_triple(y, sigma, r)
    n = sigma.n
    s0 = T.sigma0_matrix()
    rh = sigma.matrix() - s0
    rhs = _solve(n, [(i, j) for i in range(n) for j in range(n)],
                 [lambda X: s0 @ X - X @ s0, lambda X: rh @ X - X @ rh - X.scale(2 * r)])
    # the right side always sits inside the left one, so dimensions decide
    return rhs == graded_space(sigma, r).dim


# ---------------------------------------------------------------------------------
# chains, rank invariants and multisegments


def chains(sigma: SemisimpleElement, r) -> list:
    """Maximal runs a, a+2r, ..., of distinct eigenvalues, each listed by decreasing eigenvalue."""
    r = as_scalar(r)
    vals = set(sigma.eigenvalues)
    out = []
    for a in sorted(vals, key=_skey):
        if a - 2 * r in vals:
            continue
        run = [a]
        while run[-1] + 2 * r in vals:
            run.append(run[-1] + 2 * r)
        out.append(tuple(reversed(run)))
    out.sort(key=lambda c: [_skey(v) for v in c], reverse=True)
    return out


@dataclass(frozen=True)
class RankInvariant:
    """Ranks of y^(j-i): V_{c_j} -> V_{c_i} for every chain c (decreasing eigenvalues).

    ``ranks[c]`` lists single steps first, then composites of length two, and so on.
    """
    chains: tuple
    dims: tuple
    ranks: tuple

    def __str__(self):
        parts = []
        for rk in self.ranks:
            groups = []
            for length in sorted({ln for ln, _ in rk}):
                groups.append(",".join(str(v) for ln, v in rk if ln == length))
            parts.append("(" + ";".join(groups) + ")")
        return " ".join(parts) if parts else "()"

    def flat(self) -> tuple:
        return tuple(v for rk in self.ranks for _, v in rk)

    def to_json(self) -> dict:
        return {"chains": [[format_scalar(v) for v in c] for c in self.chains],
                "dims": [list(d) for d in self.dims],
                "ranks": [[v for _, v in rk] for rk in self.ranks]}


def rank_invariants(y: NilpotentElement, sigma: SemisimpleElement, r) -> RankInvariant:
    r = as_scalar(r)
    if not r:
        raise ParameterError("rank invariants need r != 0")
    check_parameter(y, sigma, r)
    Y = y.matrix
    cs = chains(sigma, r)
    dims, ranks = [], []
    powers = {1: Y}
    for c in cs:
        dims.append(tuple(len(sigma.indices(v)) for v in c))
        rk = []
        for length in range(1, len(c)):
            if length not in powers:
                powers[length] = powers[length - 1] @ Y
            for i in range(len(c) - length):
                top, bottom = c[i], c[i + length]
                sub = powers[length].submatrix(sigma.indices(top), sigma.indices(bottom))
                rk.append((length, sub.rank()))
        ranks.append(tuple(rk))
    return RankInvariant(tuple(cs), tuple(dims), tuple(ranks))


def closure_leq(a: RankInvariant, b: RankInvariant) -> bool:
    """Is the orbit of a contained in the closure of the orbit of b?"""
    if a.chains != b.chains or a.dims != b.dims:
        raise ParameterError("rank invariants of different blocks")
    return all(x <= y for x, y in zip(a.flat(), b.flat()))


def open_orbit_rep(sigma: SemisimpleElement, r) -> NilpotentElement:
    """Greedy full-rank representative: the p-th vector of each piece maps to the p-th of the next."""
    r = as_scalar(r)
    n = sigma.n
    units = []
    if r:
        for c in chains(sigma, r):
            for hi, lo in zip(c, c[1:]):
                for i, j in zip(sigma.indices(hi), sigma.indices(lo)):
                    units.append((i, j))
    return NilpotentElement.from_units(n, units)


@dataclass(frozen=True)
class Segment:
    """[start, start+2r, ..., start+2r(length-1)]."""
    start: Scalar
    length: int
    step: Scalar

    @property
    def end(self) -> Scalar:
        return self.start + self.step * (self.length - 1)

    def values(self) -> list:
        return [self.start + self.step * p for p in range(self.length)]

    @property
    def center(self) -> Scalar:
        return (self.start + self.end) / 2

    def precedes(self, other: "Segment") -> bool:
        """Linked with self on the left: neither contains the other and the union is a segment."""
        gap = (other.start - self.start) / self.step
        if not gap.is_integer() or gap.re <= 0:
            return False
        # other starts after self and no later than one step past its end
        return gap.re <= self.length and other.length + gap.re > self.length

    def __str__(self):
        vals = self.values()
        if len(vals) == 1:
            return f"[{format_scalar(vals[0])}]"
        return f"[{format_scalar(vals[0])},{format_scalar(vals[-1])}]"


def _seg_key(s: Segment):
    return (_skey(s.start), s.length)


def multisegments(sigma: SemisimpleElement, r) -> list:
    """All multisegments with support the eigenvalue multiset of sigma, canonically ordered."""
    r = as_scalar(r)
    step = 2 * r
    if not r:
        raise ParameterError("multisegments need r != 0")
    counts: dict = {}
    for a in sigma.eigenvalues:
        counts[a] = counts.get(a, 0) + 1
    results = set()

    def rec(counts, acc):
        live = [a for a, m in counts.items() if m]
        if not live:
            results.add(tuple(sorted(acc, key=_seg_key)))
            return
        # an eigenvalue with no predecessor left must start a segment
        a = min((v for v in live if not counts.get(v - step)), key=_skey)
        length = 0
        v = a
        while counts.get(v):
            length += 1
            new = dict(counts)
            for w in Segment(a, length, step).values():
                new[w] -= 1
            rec(new, acc + [Segment(a, length, step)])
            v = v + step

    rec(counts, [])
    return sorted(results, key=lambda ms: [_seg_key(s) for s in ms])


def multisegment_rep(sigma: SemisimpleElement, r, ms: Sequence[Segment]) -> NilpotentElement:
    """y with one Jordan chain per segment, using the lowest free indices of each piece."""
    free = {a: list(sigma.indices(a)) for a in sigma.distinct()}
    units = []
    for seg in ms:
        idx = [free[v].pop(0) for v in seg.values()]
        # y raises the eigenvalue: E_{i(v+2r), i(v)}
        units.extend((idx[p + 1], idx[p]) for p in range(len(idx) - 1))
    if any(free.values()):
        raise ParameterError("multisegment does not match the eigenvalues of sigma")
    return NilpotentElement.from_units(sigma.n, units)


def orbit_classes(sigma: SemisimpleElement, r) -> list:
    """[(multisegment, representative, rank invariant, orbit dimension)] for the block."""
    out = []
    for ms in multisegments(sigma, r):
        y = multisegment_rep(sigma, r, ms)
        out.append((ms, y, rank_invariants(y, sigma, r), orbit_dim(y, sigma)))
    return out


# ---------------------------------------------------------------------------------
# serialization


def parameter_from_json(data: dict):
    """(y, sigma, r) from {"n":..,"sigma":[..],"r":"1","y":[[..]]}."""
    try:
        sigma = SemisimpleElement(data["sigma"])
        r = _read_scalar(data.get("r", "1"))
        rows = data.get("y")
        n = int(data.get("n", sigma.n))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed parameter: {exc}") from None
    if sigma.n != n:
        raise ParameterError(f"sigma has {sigma.n} eigenvalues, expected n = {n}")
    if rows is None:
        y = NilpotentElement.zero(n)
    else:
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ParameterError(f"y must be a {n}x{n} matrix")
        y = NilpotentElement(rows)
    check_parameter(y, sigma, r)
    return y, sigma, r


def parameter_to_json(y: NilpotentElement, sigma: SemisimpleElement, r) -> dict:
    return {"n": sigma.n, "sigma": sigma.to_json(), "r": format_scalar(as_scalar(r)),
            "y": y.to_json()}
