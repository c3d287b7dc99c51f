"""Based root data, finite Weyl groups extended by diagram automorphisms, and
parameter functions.

Vectors of the character lattice X are integer coordinate tuples in a fixed
basis; cocharacters are coordinate tuples in the dual basis, so the pairing is
the dot product.  Group elements act on X by integer matrices (column ``j`` is
the image of basis vector ``j``) and are referred to by their index in a
deterministic enumeration.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact.scalar import Scalar, as_scalar

Vector = tuple
IntMatrix = tuple  # tuple of row tuples


class RootDatumError(ValueError):
    pass


def pairing(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p))
                 for i in range(n))


def mat_vec(a: IntMatrix, v: Sequence) -> Vector:
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in a)


def mat_transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def mat_identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_det(a: IntMatrix) -> int:
    m = [[Fraction(x) for x in r] for r in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            for j in range(c, n):
                m[i][j] -= f * m[c][j]
    return int(d)


def mat_inverse_int(a: IntMatrix) -> IntMatrix:
    n = len(a)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c])
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = tuple(tuple(m[i][n + j] for j in range(n)) for i in range(n))
    if any(x.denominator != 1 for r in out for x in r):
        raise RootDatumError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in r) for r in out)


CARTAN = {
    # entry [i][j] = <alpha_j, alpha_i^vee>
    "B2": ((2, -1), (-2, 2)),   # alpha_0 long, alpha_1 short
    "G2": ((2, -3), (-1, 2)),   # alpha_0 short, alpha_1 long
}


def cartan_A(n: int):
    return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
                 for i in range(n))


@dataclass(frozen=True)
class BasedRootDatum:
    """(X, R, Y, R^vee, Delta) with lattices given by coordinates."""

    label: str
    lattice: str
    rank: int                      # dim of X (= dim t)
    simple_roots: tuple            # vectors in X
    simple_coroots: tuple          # vectors in Y
    roots: tuple = field(default=(), compare=False)
    coroots: tuple = field(default=(), compare=False)  # aligned with roots

    def __post_init__(self):
        if not self.roots:
            roots, coroots = _close_roots(self.simple_roots, self.simple_coroots)
            object.__setattr__(self, "roots", roots)
            object.__setattr__(self, "coroots", coroots)
        object.__setattr__(self, "_coroot_of", dict(zip(self.roots, self.coroots)))

    # basic queries ------------------------------------------------------------
    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def coroot(self, alpha: Vector) -> Vector:
        return self._coroot_of[tuple(alpha)]

    def reflection(self, alpha: Vector) -> IntMatrix:
        """Matrix of s_alpha on X: x -> x - <x, alpha^vee> alpha."""
        av = self.coroot(alpha)
        n = self.rank
        return tuple(tuple(int(i == j) - alpha[i] * av[j] for j in range(n)) for i in range(n))

    def simple_reflection(self, i: int) -> IntMatrix:
        return self.reflection(self.simple_roots[i])

    def simple_coordinates(self, alpha: Vector) -> tuple:
        """Coefficients of a root in the simple roots."""
        from .exact.matrix import ExactMatrix
        A = ExactMatrix.from_columns([list(a) for a in self.simple_roots])
        aug = ExactMatrix([list(A.row(i)) + [alpha[i]] for i in range(self.rank)])
        R, piv = aug.rref("python")
        k = len(self.simple_roots)
        if k in piv:
            raise RootDatumError("vector is not in the span of the simple roots")
        coeffs = [Fraction(0)] * k
        for i, p in enumerate(piv):
            coeffs[p] = R[i, k].re
        return tuple(coeffs)

    def is_positive(self, alpha: Vector) -> bool:
        return all(c >= 0 for c in self.simple_coordinates(alpha))

    @property
    def positive_roots(self) -> tuple:
        return tuple(a for a in self.roots if self.is_positive(a))

    def cartan_matrix(self):
        return tuple(tuple(pairing(aj, ai_v) for aj in self.simple_roots)
                     for ai_v in self.simple_coroots)

    def root_length_sq(self, alpha: Vector) -> Fraction:
        """Squared length for a W-invariant form normalized so short roots have 1."""
        lengths = _simple_lengths(self.cartan_matrix())
        cls = self.length_class(alpha)
        return lengths[cls]

    def length_class(self, alpha: Vector) -> int:
        """Index of a simple root in the same W-orbit (smallest such index)."""
        orbits = self._root_orbits()
        return orbits[tuple(alpha)]

    def _root_orbits(self) -> dict:
        cache = self.__dict__.get("_orbits")
        if cache is None:
            cache = {}
            refl = [self.simple_reflection(i) for i in range(self.semisimple_rank)]
            for i, a in enumerate(self.simple_roots):
                if a in cache:
                    continue
                queue = deque([a])
                cache[a] = i
                while queue:
                    b = queue.popleft()
                    for s in refl:
                        c = mat_vec(s, b)
                        if c not in cache:
                            cache[c] = i
                            queue.append(c)
            object.__setattr__(self, "_orbits", cache)
        return cache

    def is_long(self, alpha: Vector) -> bool:
        lens = [self.root_length_sq(a) for a in self.roots]
        return self.root_length_sq(alpha) == max(lens) and min(lens) != max(lens)

    def describe(self) -> dict:
        return {"type": self.label, "lattice": self.lattice}

    def check(self) -> None:
        """Verify the root datum axioms; raises RootDatumError."""
        for a, av in zip(self.roots, self.coroots):
            if pairing(a, av) != 2:
                raise RootDatumError(f"<alpha, alpha^vee> != 2 for {a}")
            s = self.reflection(a)
            if set(mat_vec(s, b) for b in self.roots) != set(self.roots):
                raise RootDatumError(f"s_alpha does not permute R for {a}")
        from .exact.matrix import ExactMatrix
        if ExactMatrix([list(a) for a in self.simple_roots]).rank() != self.semisimple_rank:
            raise RootDatumError("simple roots are linearly dependent")
        for a in self.roots:
            c = self.simple_coordinates(a)
            if any(x.denominator != 1 for x in c):
                raise RootDatumError("root is not an integral combination of Delta")
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise RootDatumError("root coefficients of mixed sign")


def _simple_lengths(cartan) -> dict:
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if d[i] is not None and d[j] is None and cartan[i][j]:
                    # d_i A_ij = d_j A_ji
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    for i in range(n):
        if d[i] is None:
            d[i] = Fraction(1)
    m = min(d)
    return {i: d[i] / m for i in range(n)}


def _close_roots(simple_roots, simple_coroots):
    n = len(simple_roots[0]) if simple_roots else 0

    def refl(a, av, x):
        c = pairing(x, av)
        return tuple(xi - c * ai for xi, ai in zip(x, a))

    def corefl(a, av, y):
        c = pairing(a, y)
        return tuple(yi - c * ai for yi, ai in zip(y, av))

    seen = {}
    order = []
    queue = deque()
    for a, av in zip(simple_roots, simple_coroots):
        a, av = tuple(a), tuple(av)
        if a not in seen:
            seen[a] = av
            order.append(a)
            queue.append(a)
    while queue:
        b = queue.popleft()
        bv = seen[b]
        for a, av in zip(simple_roots, simple_coroots):
            c = refl(a, av, b)
            if c not in seen:
                seen[c] = corefl(a, av, bv)
                order.append(c)
                queue.append(c)
    del n
    return tuple(order), tuple(seen[r] for r in order)


_LABEL = re.compile(r"^([ABG])\(?(\d+)\)?$")


def build_root_datum(label: str, lattice: str | None = None) -> BasedRootDatum:
    """Preset based root data: A(n) with lattice 'gl' or 'adjoint'; B2, G2 adjoint."""
    m = _LABEL.match(label.strip())
    if not m:
        raise RootDatumError(f"unsupported root datum label {label!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        if n < 1:
            raise RootDatumError("type A needs rank >= 1")
        lattice = lattice or "gl"
        if lattice == "gl":
            N = n + 1
            simple = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(N)) for i in range(n))
            datum = BasedRootDatum(f"A{n}", "gl", N, simple, simple)
        elif lattice == "adjoint":
            simple = tuple(tuple(int(k == i) for k in range(n)) for i in range(n))
            datum = BasedRootDatum(f"A{n}", "adjoint", n, simple, cartan_A(n))
        else:
            raise RootDatumError(f"unsupported lattice {lattice!r} for type A")
    elif f"{kind}{n}" in CARTAN:
        if lattice not in (None, "adjoint"):
            raise RootDatumError(f"only the adjoint lattice is shipped for {kind}{n}")
        C = CARTAN[f"{kind}{n}"]
        simple = tuple(tuple(int(k == i) for k in range(2)) for i in range(2))
        datum = BasedRootDatum(f"{kind}{n}", "adjoint", 2, simple, C)
    else:
        raise RootDatumError(f"unsupported root datum label {label!r}")
    datum.check()
    return datum


def root_datum_from_json(data) -> BasedRootDatum:
    if isinstance(data, str):
        data = json.loads(data)
    return build_root_datum(data["type"], data.get("lattice"))


# ---------------------------------------------------------------------------
# extended Weyl groups


class ExtendedWeylGroup:
    """W(R) x| Gamma as a group of integer matrices on X.

    Elements are indexed 0..order-1 in a fixed order: by length, then Gamma
    part, then breadth-first discovery.  Index 0 is the identity.
    """

    def __init__(self, datum: BasedRootDatum, gamma_generators: Sequence[IntMatrix] = ()):
        self.datum = datum
        n = datum.rank
        simple_set = set(datum.simple_roots)
        gens = [tuple(tuple(int(x) for x in r) for r in g) for g in gamma_generators]
        for g in gens:
            if len(g) != n or any(len(r) != n for r in g):
                raise RootDatumError("Gamma generator has the wrong size")
            if set(mat_vec(g, a) for a in datum.simple_roots) != simple_set:
                raise RootDatumError("Gamma generator does not stabilize Delta")
            gt = mat_transpose(mat_inverse_int(g))
            if set(mat_vec(gt, av) for av in datum.simple_coroots) != set(datum.simple_coroots):
                raise RootDatumError("Gamma generator does not stabilize the simple coroots")
        # Gamma closure
        ident = mat_identity(n)
        gamma = [ident]
        seen = {ident}
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for h in gens:
                p = mat_mul(h, g)
                if p not in seen:
                    seen.add(p)
                    gamma.append(p)
                    queue.append(p)
        self.gamma_matrices = tuple(gamma)
        # W by breadth-first search: depth = length
        simple = [datum.simple_reflection(i) for i in range(datum.semisimple_rank)]
        self.simple_matrices = tuple(simple)
        w_elems = [ident]
        w_len = {ident: 0}
        w_word = {ident: ()}
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for i, s in enumerate(simple):
                p = mat_mul(s, w)
                if p not in w_len:
                    w_len[p] = w_len[w] + 1
                    w_word[p] = (i,) + w_word[w]
                    w_elems.append(p)
                    queue.append(p)
        elems = []
        for gi, g in enumerate(gamma):
            for w in w_elems:
                elems.append((w_len[w], gi, mat_mul(w, g), w, w_word[w]))
        elems.sort(key=lambda e: (e[0], e[1]))
        self.matrices = tuple(e[2] for e in elems)
        self.index = {m: k for k, m in enumerate(self.matrices)}
        if len(self.index) != len(self.matrices):
            raise RootDatumError("W and Gamma intersect nontrivially")
        self.lengths = tuple(e[0] for e in elems)
        self.gamma_part = tuple(e[1] for e in elems)
        self.w_words = tuple(e[4] for e in elems)
        self.order = len(self.matrices)
        self.dets = tuple(mat_det(m) for m in self.matrices)
        self.simple = tuple(self.index[s] for s in simple)
        self.gamma = tuple(self.index[g] for g in gamma)
        self.gamma_gens = tuple(self.index[g] for g in gens)
        self._mul = {}
        self._inv = {}

    # group structure ------------------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            r = self.index[mat_mul(self.matrices[a], self.matrices[b])]
            self._mul[key] = r
        return r

    def inverse(self, a: int) -> int:
        r = self._inv.get(a)
        if r is None:
            r = self.index[mat_inverse_int(self.matrices[a])]
            self._inv[a] = r
        return r

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def is_in_W(self, g: int) -> bool:
        return self.gamma_part[g] == 0

    def length(self, g: int) -> int:
        return self.lengths[g]

    def det(self, g: int) -> int:
        return self.dets[g]

    def matrix(self, g: int) -> IntMatrix:
        return self.matrices[g]

    def gamma_index(self, g: int) -> int:
        """Index of the Gamma factor of g = w * gamma."""
        return self.gamma[self.gamma_part[g]]

    def word(self, g: int) -> tuple:
        """A reduced word for the W part, then the Gamma element: g = s_i1...s_ik * gamma."""
        return self.w_words[g], self.gamma_index(g)

    def reduced_words(self, g: int) -> list:
        """All reduced words of a W element (used for cocycle-independence checks)."""
        if not self.is_in_W(g):
            raise ValueError("reduced words are defined for W elements only")
        if self.lengths[g] == 0:
            return [()]
        out = []
        for i, s in enumerate(self.simple):
            h = self.mul(s, g)
            if self.lengths[h] < self.lengths[g]:
                out.extend((i,) + w for w in self.reduced_words(h))
        return out

    def from_word(self, word: Sequence[int], gamma: int = 0) -> int:
        g = gamma
        for i in reversed(word):
            g = self.mul(self.simple[i], g)
        return g

    def act_on_X(self, g: int, x: Sequence) -> Vector:
        return mat_vec(self.matrices[g], x)

    def act_on_t(self, g: int, t: Sequence) -> tuple:
        """Action on points of t (coordinates = values of the basis characters)."""
        inv_t = mat_transpose(self.matrices[self.inverse(g)])
        t = [as_scalar(v) for v in t]
        return tuple(sum((row[k] * t[k] for k in range(len(t))), Scalar(0)) for row in inv_t)

    def orbit_of_point(self, t: Sequence) -> tuple:
        pts = {self.act_on_t(g, t) for g in range(self.order)}
        return tuple(sorted(pts, key=point_sort_key))

    def subgroup(self, generators: Sequence[int]) -> tuple:
        """Sorted element indices of the subgroup generated by the given elements."""
        elems = {0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for h in generators:
                p = self.mul(h, g)
                if p not in elems:
                    elems.add(p)
                    queue.append(p)
        return tuple(sorted(elems))

    def parabolic(self, P: Sequence[int], gamma_elems: Sequence[int] = ()) -> tuple:
        """Elements of W_P x| Gamma' for Gamma' given by group indices."""
        gens = [self.simple[i] for i in P] + list(gamma_elems)
        return self.subgroup(gens)

    def gamma_stabilizer(self, P: Sequence[int], t: Sequence | None = None) -> tuple:
        """Gamma elements stabilizing the simple-root subset P (and the point t)."""
        Pset = {self.datum.simple_roots[i] for i in P}
        out = []
        for g in self.gamma:
            if {self.act_on_X(g, a) for a in Pset} != Pset:
                continue
            if t is not None and tuple(self.act_on_t(g, t)) != tuple(as_scalar(v) for v in t):
                continue
            out.append(g)
        return tuple(out)

    def coset_representatives(self, H: Sequence[int]) -> tuple:
        """Minimal-length representatives of G/H, ties broken by index."""
        Hset = set(H)
        assigned = set()
        reps = []
        for g in sorted(range(self.order), key=lambda g: (self.lengths[g], g)):
            if g in assigned:
                continue
            reps.append(g)
            for h in Hset:
                assigned.add(self.mul(g, h))
        return tuple(reps)

    def coset_decompose(self, g: int, reps: Sequence[int], H: Sequence[int]):
        """Write g = rep * h with rep from ``reps`` and h in H."""
        Hset = set(H)
        for r in reps:
            h = self.mul(self.inverse(r), g)
            if h in Hset:
                return r, h
        raise ValueError("element not covered by the coset representatives")


def point_sort_key(t: Sequence):
    return tuple((as_scalar(v).re, as_scalar(v).im) for v in t)


def flip_automorphism(datum: BasedRootDatum) -> IntMatrix:
    """The diagram automorphism -w_0 as a matrix on X."""
    W = ExtendedWeylGroup(datum)
    w0 = max(range(W.order), key=lambda g: W.lengths[g])
    return tuple(tuple(-x for x in r) for r in W.matrices[w0])


def enumerate_group(datum: BasedRootDatum, gamma: str | Sequence = "none") -> ExtendedWeylGroup:
    if isinstance(gamma, str):
        if gamma == "none":
            gens = []
        elif gamma == "flip":
            f = flip_automorphism(datum)
            gens = [] if f == mat_identity(datum.rank) else [f]
        else:
            raise RootDatumError(f"unknown Gamma preset {gamma!r}")
    else:
        gens = list(gamma)
    return ExtendedWeylGroup(datum, gens)


def det_character(group: ExtendedWeylGroup, g: int) -> int:
    return group.det(g)


def is_positive_position(datum: BasedRootDatum, t: Sequence, P: Sequence[int]) -> bool:
    """alpha(Re t) = 0 for alpha in P and alpha(Re t) > 0 for the other simple roots.

    ``t`` is given by its coordinates t_j = x_j(t), so alpha(t) = sum alpha_j t_j.
    """
    t = [as_scalar(v) for v in t]
    for i, a in enumerate(datum.simple_roots):
        val = sum((a[k] * t[k].real for k in range(len(t))), Scalar(0))
        if i in P:
            if val != 0:
                return False
        elif not val > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# parameter functions


class ParameterFunction:
    """Root -> Q, constant on W x| Gamma orbits."""

    def __init__(self, group: ExtendedWeylGroup, values: dict):
        self.group = group
        self.values = {tuple(a): as_scalar(v) for a, v in values.items()}
        self.check()

    @classmethod
    def from_spec(cls, group: ExtendedWeylGroup, spec) -> "ParameterFunction":
        """Accepts a number (all roots), or a dict keyed by 'all', 'long', 'short'
        or simple-root indices (orbit representatives)."""
        datum = group.datum
        orbit = _group_root_orbits(group)
        if not isinstance(spec, dict):
            spec = {"all": spec}
        vals = {}
        for key, v in spec.items():
            v = as_scalar(v)
            if key == "all":
                targets = datum.roots
            elif key in ("long", "short"):
                lens = {a: datum.root_length_sq(a) for a in datum.roots}
                ext = max(lens.values()) if key == "long" else min(lens.values())
                targets = [a for a in datum.roots if lens[a] == ext]
            else:
                i = int(key)
                rep = datum.simple_roots[i]
                targets = [a for a in datum.roots if orbit[a] == orbit[rep]]
            for a in targets:
                vals[a] = v
        missing = [a for a in datum.roots if a not in vals]
        if missing:
            raise RootDatumError(f"parameter function undefined on {missing[0]}")
        return cls(group, vals)

    def __call__(self, alpha) -> Scalar:
        return self.values[tuple(alpha)]

    def check(self) -> None:
        G = self.group
        for a in G.datum.roots:
            if a not in self.values:
                raise RootDatumError(f"parameter function missing root {a}")
            for g in range(G.order):
                if self.values[G.act_on_X(g, a)] != self.values[a]:
                    raise RootDatumError("parameter function is not W x| Gamma-invariant")

    def is_constant(self):
        vals = set(self.values.values())
        return next(iter(vals)) if len(vals) == 1 else None

    def to_json(self) -> dict:
        d = self.group.datum
        out = {}
        for i, a in enumerate(d.simple_roots):
            out[str(i)] = str(self.values[a])
        return out


def _group_root_orbits(group: ExtendedWeylGroup) -> dict:
    orbit = {}
    for a in group.datum.roots:
        if a in orbit:
            continue
        for g in range(group.order):
            orbit[group.act_on_X(g, a)] = a
    return orbit
