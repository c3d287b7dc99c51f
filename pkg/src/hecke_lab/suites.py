"""Property suites per module and the acceptance criteria.

Every check is a function of a seed returning (number of cases, failure
messages).  ``run_suite`` times each one and wraps it in a CheckResult.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .blocks import PASS, FAIL, block_report, ms_label
from .bridge import (AdditiveParameter, AffineReductionInput, expu_transfer, mult_is_open,
                     reduce_affine, steinberg_char, to_multiplicative)
from .exact.matrix import ExactMatrix
from .exact.poly import Poly, apply_matrix, demazure, random_poly
from .exact.scalar import ONE, ZERO, I, Scalar, as_scalar
from .geometry import (BOUNDED, NEITHER as GEO_NEITHER, NilpotentElement,
                       SemisimpleElement, boundedness_class, closure_leq, graded_space, is_distinguished,
                       is_open, jm_triple, lemma112_criterion, open_orbit_rep, orbit_classes,
                       rank_invariants)
from .hecke import GradedHeckeAlgebraSpec, normalize_equal_parameters, random_element, sgn_map
from .langlands import (NEITHER, integral_grid, irreducibles, is_essentially_tempered, is_tempered,
                        standard_modules, temperedness_class)
from .module import (FiniteModule, central_evaluate, character_module, det_multiplicity, induce,
                     induce_character, pushforward_normalized)
from .roots import build_root_datum, enumerate_group
from .structure import composition_factors, hom_dim, is_simple, socle

ACCEPTANCE = "acceptance"
MODULES = ("exact-core", "root-data", "lie-geometry", "graded-hecke", "module-engine",
           "parameter-bridge")


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        s = f"{verdict} {self.name}: {self.cases} cases, {len(self.failures)} failures ({self.seconds:.1f} s)"
        if self.note:
            s += f"; {self.note}"
        return s

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures[:20], "seconds": round(self.seconds, 3), "note": self.note}


_REGISTRY: dict = {}


def check(suite: str, name: str):
    def deco(fn):
        _REGISTRY.setdefault(suite, []).append((name, fn))
        return fn
    return deco


def selectors() -> tuple:
    return MODULES + (ACCEPTANCE,)


def run_check(suite: str, name: str, fn, seed: int = 0) -> CheckResult:
    t = time.perf_counter()
    out = fn(seed)
    cases, failures = out[0], out[1]
    note = out[2] if len(out) > 2 else ""
    return CheckResult(suite, name, cases, list(failures), time.perf_counter() - t, note)


def run_suite(selector: str, seed: int = 0) -> list:
    """Run one module suite, the acceptance criteria, or everything ("all")."""
    if selector == "all":
        names = selectors()
    elif selector in selectors():
        names = (selector,)
    else:
        raise KeyError(f"unknown suite {selector!r}; choose from {', '.join(selectors())} or all")
    return [run_check(s, name, fn, seed) for s in names for name, fn in _REGISTRY.get(s, [])]


def suite_checks(suite: str) -> list:
    return list(_REGISTRY.get(suite, []))


def criteria() -> list:
    return suite_checks(ACCEPTANCE)


def run_criterion(number: int, seed: int = 0) -> CheckResult:
    name, fn = _REGISTRY[ACCEPTANCE][number - 1]
    return run_check(ACCEPTANCE, name, fn, seed)


# ---------------------------------------------------------------------------------
# shared generators


def partitions(n: int, m: int | None = None):
    m = n if m is None else m
    if n == 0:
        yield ()
        return
    for k in range(min(n, m), 0, -1):
        for p in partitions(n - k, k):
            yield (k,) + p


def jordan_rep(lam) -> NilpotentElement:
    """Sum of E_{i,i+1} inside consecutive blocks of sizes lam."""
    n = sum(lam)
    units, base = [], 0
    for m in lam:
        units += [(base + p, base + p + 1) for p in range(m - 1)]
        base += m
    return NilpotentElement.from_units(n, units)


def random_parameter(rng, nmax: int = 5, rs=(1, 2), imaginary: bool = False):
    """Random (y, sigma, r) with y a random element of the graded space."""
    n = rng.randint(1, nmax)
    r = as_scalar(rng.choice(rs))
    shift = Scalar(0, rng.randint(-2, 2)) if imaginary and rng.random() < 0.5 else ZERO
    sig = SemisimpleElement([r * rng.randint(-3, 3) + shift for _ in range(n)])
    rows = [[0] * n for _ in range(n)]
    for (i, j) in graded_space(sig, r).basis:
        rows[i][j] = rng.choice([0, 0, 1, -1, 2])
    return NilpotentElement(rows), sig, r


def random_bounded_sigma(rng, lam, r):
    """sigma = sigma0 + r h with sigma0 constant on each Jordan block, imaginary up to one real shift."""
    c = Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.5 else 0
    s0 = []
    for m in lam:
        im = Fraction(rng.randint(-3, 3), rng.randint(1, 2)) if rng.random() < 0.7 else 0
        s0 += [Scalar(c, im)] * m
    y = jordan_rep(lam)
    T = jm_triple(y)
    return y, SemisimpleElement([s0[i] + r * T.h[i, i] for i in range(len(s0))])


def random_parabolic_module(spec: GradedHeckeAlgebraSpec, P, rng) -> FiniteModule:
    """A module of H_P induced from a one-dimensional module of a smaller H_Q.

    On H_Q the line has N_{s_i} -> eps_i, which forces alpha_i(x) = eps_i k_i r.
    The weight is a random integral point corrected along the coroots of Q.
    """
    d = spec.datum
    P = tuple(P)
    Q = tuple(i for i in P if rng.random() < 0.5)
    eps = {}
    C0 = d.cartan_matrix()
    for j in Q:
        # the braid relation of order 3 forces equal signs
        tied = [i for i in eps if C0[i][j] * C0[j][i] == 1]
        eps[j] = eps[tied[0]] if tied else rng.choice([1, -1])
    x = [as_scalar(rng.randint(-3, 3)) for _ in range(spec.nvars)]
    if Q:
        C = ExactMatrix([[sum(d.simple_roots[a][k] * d.simple_coroots[b][k] for k in range(d.rank))
                          for b in Q] for a in Q])
        rhs = [eps[a] * spec.simple_k[a] * spec.r - sum((x[k] * d.simple_roots[a][k]
                                                          for k in range(d.rank)), ZERO)
               for a in Q]
        c = C.inverse().apply(rhs)
        for cb, b in zip(c, Q):
            for k in range(d.rank):
                x[k] = x[k] + cb * d.simple_coroots[b][k]
    M = induce(character_module(spec, x, Q, signs=eps), P)
    if rng.random() < 0.3:
        M = M.direct_sum(random_parabolic_module(spec, P, rng))
    return M


def _subsets(n: int):
    for mask in range(1 << n):
        yield tuple(i for i in range(n) if mask >> i & 1)


# ---------------------------------------------------------------------------------
# exact-core


@check("exact-core", "demazure times root recovers the difference")
def _ec_demazure(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label in ("A1", "A2", "B2", "G2"):
        d = build_root_datum(label)
        for _ in range(50):
            i = rng.randrange(d.semisimple_rank)
            alpha = Poly.linear(d.simple_roots[i])
            s = d.simple_reflection(i)
            f = random_poly(rng, d.rank, 4, 5)
            q = demazure(f, alpha, s)
            cases += 1
            if alpha * q != f - apply_matrix(s, f):
                fails.append(f"{label}: alpha * D(f) != f - s f for f = {f}")
    return cases, fails


@check("exact-core", "demazure vanishes exactly on invariants")
def _ec_demazure_zero(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label in ("A2", "B2"):
        d = build_root_datum(label)
        for _ in range(25):
            i = rng.randrange(d.semisimple_rank)
            alpha = Poly.linear(d.simple_roots[i])
            s = d.simple_reflection(i)
            f = random_poly(rng, d.rank, 3, 4)
            inv = f + apply_matrix(s, f)
            for g, want_zero in ((inv, True), (f, apply_matrix(s, f) == f)):
                cases += 1
                if (not demazure(g, alpha, s)) != want_zero:
                    fails.append(f"{label}: D({g}) zero-ness wrong")
    return cases, fails


@check("exact-core", "kernel vectors are killed and rank plus nullity is cols")
def _ec_kernel(seed):
    rng = random.Random(seed)
    fails = []
    cases = 60
    for _ in range(cases):
        m, n = rng.randint(1, 12), rng.randint(1, 12)
        rank_cap = rng.randint(0, min(m, n))
        A = ExactMatrix([[rng.randint(-3, 3) for _ in range(rank_cap)] for _ in range(m)]) if rank_cap else None
        B = ExactMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(rank_cap)]) if rank_cap else None
        M = A @ B if rank_cap else ExactMatrix.zeros(m, n)
        if rng.random() < 0.3:
            M = M + ExactMatrix([[Scalar(0, rng.randint(-1, 1)) for _ in range(n)] for _ in range(m)])
        K = M.kernel()
        if len(K) + M.rank() != n:
            fails.append(f"{m}x{n}: rank + nullity != cols")
        if any(any(v != 0 for v in M.apply(k)) for k in K):
            fails.append(f"{m}x{n}: kernel vector not killed")
    return cases, fails


# ---------------------------------------------------------------------------------
# root-data

PRESETS = (("A1", "gl"), ("A1", "adjoint"), ("A2", "gl"), ("A2", "adjoint"), ("A3", "gl"),
           ("B2", "adjoint"), ("G2", "adjoint"))


@check("root-data", "reflections are involutions permuting the roots")
def _rd_reflections(seed):
    fails, cases = [], 0
    for label, lat in PRESETS:
        d = build_root_datum(label, lat)
        R = set(d.roots)
        for a in d.roots:
            cases += 1
            s = ExactMatrix(d.reflection(a))
            if s @ s != ExactMatrix.identity(d.rank):
                fails.append(f"{label}: s_{a}^2 != 1")
            if {tuple(int(v.re) for v in s.apply(b)) for b in R} != R:
                fails.append(f"{label}: s_{a} does not permute R")
    return cases, fails


@check("root-data", "det is a homomorphism matching the matrix determinant")
def _rd_det(seed):
    fails, cases = [], 0
    for label, lat, gam in (("A1", "gl", "none"), ("A2", "gl", "none"), ("A2", "gl", "flip"),
                            ("B2", "adjoint", "none")):
        G = enumerate_group(build_root_datum(label, lat), gam)
        for g in range(G.order):
            if G.det(g) != ExactMatrix(G.matrix(g)).det():
                fails.append(f"{label}: det({g}) is not the matrix determinant")
            if G.is_in_W(g) and G.det(g) != (-1) ** G.length(g):
                fails.append(f"{label}: det({g}) != (-1)^length")
            for h in range(G.order):
                cases += 1
                if G.det(G.mul(g, h)) != G.det(g) * G.det(h):
                    fails.append(f"{label}: det not multiplicative at {g}, {h}")
    return cases, fails


@check("root-data", "parameter functions are invariant")
def _rd_kinv(seed):
    fails, cases = [], 0
    from .roots import ParameterFunction
    for label, lat in PRESETS:
        G = enumerate_group(build_root_datum(label, lat))
        specs = [2, {"long": 4, "short": 2}] if label in ("B2", "G2") else [2, 6]
        for ks in specs:
            k = ParameterFunction.from_spec(G, ks)
            for g in range(G.order):
                for a in G.datum.roots:
                    cases += 1
                    if k(G.act_on_X(g, a)) != k(a):
                        fails.append(f"{label}: k not invariant at {a}")
    return cases, fails


# ---------------------------------------------------------------------------------
# lie-geometry


def _open_orbit_sweep(nmax: int = 5, lo: int = -4, hi: int = 4):
    fails, count = [], 0
    for n in range(1, nmax + 1):
        for sig in combinations_with_replacement(range(lo, hi + 1), n):
            s = SemisimpleElement(sig)
            D = graded_space(s, 1).dim
            cls = orbit_classes(s, 1)
            count += 1
            if len({c[2].flat() for c in cls}) != len(cls):
                fails.append(f"{sig}: two multisegments share a rank invariant")
            opens = [c for c in cls if c[3] == D]
            if len(opens) != 1:
                fails.append(f"{sig}: {len(opens)} open orbit classes")
                continue
            if rank_invariants(open_orbit_rep(s, 1), s, 1) != opens[0][2]:
                fails.append(f"{sig}: open_orbit_rep is not on the open orbit")
    return count, fails


@check("lie-geometry", "unique open orbit, n <= 4")
def _lg_unique(seed):
    return _open_orbit_sweep(4, -3, 3)


@check("lie-geometry", "centralizer criterion matches openness")
def _lg_criterion(seed):
    return _criterion_agreement(seed, 200)


@check("lie-geometry", "essentially bounded implies open")
def _lg_bounded(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for n in range(1, 5):
        for lam in partitions(n):
            for _ in range(10):
                r = as_scalar(rng.choice([1, 2, Fraction(1, 2)]))
                y, sig = random_bounded_sigma(rng, lam, r)
                cases += 1
                if not is_open(y, sig, r):
                    fails.append(f"{lam} at {sig}, r = {r} is not open")
    return cases, fails


@check("lie-geometry", "distinguished nilpotents have scalar sigma0")
def _lg_distinguished(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for n in range(1, 6):
        for _ in range(6):
            r = as_scalar(rng.choice([1, 2, Fraction(1, 3)]))
            c = Scalar(rng.randint(-3, 3), rng.randint(-2, 2))
            rows = [[0] * n for _ in range(n)]
            for i in range(n - 1):
                rows[i][i + 1] = rng.choice([1, 2, -1, 3])
            y = NilpotentElement(rows)
            sig = SemisimpleElement([c + r * (n - 1 - 2 * i) for i in range(n)])
            cases += 1
            if not is_distinguished(y):
                fails.append(f"regular nilpotent of gl{n} not distinguished")
                continue
            s0 = jm_triple(y, sig, r).sigma0
            if len(set(s0.eigenvalues)) != 1:
                fails.append(f"n = {n}: sigma0 = {s0} is not scalar")
    return cases, fails


@check("lie-geometry", "closure order is a partial order compatible with orbit dimension")
def _lg_closure(seed):
    fails, cases = [], 0
    for n in range(2, 5):
        for sig in combinations_with_replacement((0, 2, 4, 6), n):
            if sig[0] != 0:
                continue
            s = SemisimpleElement(sig)
            cls = orbit_classes(s, 1)
            for _, _, a, da in cls:
                if not closure_leq(a, a):
                    fails.append(f"{sig}: not reflexive")
                for _, _, b, db in cls:
                    cases += 1
                    ab, ba = closure_leq(a, b), closure_leq(b, a)
                    if ab and ba and a != b:
                        fails.append(f"{sig}: {a} and {b} not antisymmetric")
                    if ab and not (da < db or a == b):
                        fails.append(f"{sig}: {a} <= {b} but dims {da}, {db}")
                    for _, _, c, _ in cls:
                        if ab and closure_leq(b, c) and not closure_leq(a, c):
                            fails.append(f"{sig}: not transitive")
    return cases, fails


def _criterion_agreement(seed, trials):
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        y, sig, r = random_parameter(rng, 5)
        a = is_open(y, sig, r)
        b = lemma112_criterion(y, sig, r)
        if a != b:
            fails.append(f"y = {y.to_json()}, sigma = {sig}, r = {r}: open {a}, criterion {b}")
    return trials, fails


# ---------------------------------------------------------------------------------
# graded-hecke

ENGINE_SPECS = (("A1", "gl", 2), ("A2", "gl", 2), ("B2", "adjoint", {"long": 4, "short": 2}))


def _associativity(seed, per_spec):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat, k in ENGINE_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=k, r=Fraction(1, 2))
        for _ in range(per_spec):
            a, b, c = (random_element(H, rng, 2, 2) for _ in range(3))
            cases += 1
            if (a * b) * c != a * (b * c):
                fails.append(f"{label}: (ab)c != a(bc)")
    return cases, fails


def _reduced_words(seed):
    fails, cases = [], 0
    H = GradedHeckeAlgebraSpec.build("B2", k={"long": 4, "short": 2}, r=1)
    G = H.group
    for w in range(G.order):
        target = H.N(w)
        for word in G.reduced_words(w):
            cases += 1
            prod = H.one()
            for i in word:
                prod = prod * H.N(G.simple[i])
            if prod != target:
                fails.append(f"N_w differs along the word {word}")
    return cases, fails


def _relations(seed, per_simple):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat, k in ENGINE_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=k, r=Fraction(3, 2))
        for i, s in enumerate(H.group.simple):
            for _ in range(per_simple):
                f = random_poly(rng, H.nvars, 3, 4)
                lhs = H.N(s) * H.poly(f) - H.poly(H.act(s, f)) * H.N(s)
                cases += 1
                if lhs != H.poly(H.demazure(i, f) * (H.simple_k[i] * H.r)):
                    fails.append(f"{label}: cross relation fails for s{i}")
    return cases, fails


def _sgn(seed, per_spec):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat, k in ENGINE_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=k, r=1)
        Hm = H.with_r(-H.r)
        for _ in range(per_spec):
            a, b = random_element(H, rng, 2, 2), random_element(H, rng, 2, 2)
            cases += 1
            if sgn_map(sgn_map(a, Hm), H) != a:
                fails.append(f"{label}: sgn is not an involution")
            if sgn_map(a * b, Hm) != sgn_map(a, Hm) * sgn_map(b, Hm):
                fails.append(f"{label}: sgn(ab) != sgn(a) sgn(b)")
    return cases, fails


def _rescaling(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat, k in (("A2", "gl", 6), ("A1", "adjoint", Fraction(1, 2)),
                          ("B2", "adjoint", {"long": 4, "short": 2}),
                          ("B2", "adjoint", {"long": 3, "short": 3}), ("B2", "adjoint", 2),
                          ("G2", "adjoint", {"long": 6, "short": 2})):
        H = GradedHeckeAlgebraSpec.build(label, lat, k=k, r=1)
        H2, scale = normalize_equal_parameters(H)
        if any(H2.k(a) != 2 for a in H.datum.roots):
            fails.append(f"{label} k={k}: normalized parameters are not 2")
        if k == 2 and any(v != 1 for v in scale.values()):
            fails.append(f"{label}: k = 2 should give the identity scaling")
        again, scale2 = normalize_equal_parameters(H2)
        if any(v != 1 for v in scale2.values()) or not again.same_algebra(H2):
            fails.append(f"{label} k={k}: normalizing twice is not the identity")
        for _ in range(3):
            pt = [rng.randint(-3, 3) for _ in range(H.nvars)]
            for M in (induce_character(H, pt), random_parabolic_module(H, (0,), rng)):
                cases += 1
                M2 = pushforward_normalized(M, H2)
                back = pushforward_normalized(M2, H)
                if M2.relation_failures() or back.coords != M.coords or back.gens != M.gens:
                    fails.append(f"{label} k={k}: module does not survive the round trip")
    return cases, fails


@check("graded-hecke", "associativity")
def _gh_assoc(seed):
    return _associativity(seed, 34)


@check("graded-hecke", "reduced-word independence in W(B2)")
def _gh_words(seed):
    return _reduced_words(seed)


@check("graded-hecke", "cross relations in normal form")
def _gh_rel(seed):
    return _relations(seed, 10)


@check("graded-hecke", "sgn is an involutive homomorphism")
def _gh_sgn(seed):
    return _sgn(seed, 10)


@check("graded-hecke", "rescaling round trips")
def _gh_rescale(seed):
    return _rescaling(seed)


# ---------------------------------------------------------------------------------
# module-engine: grids of integral central characters

GRID_SPECS = (("A1", "gl"), ("A2", "gl"), ("B2", "adjoint"))
GRID_SIZE = 16


@dataclass
class GridFactor:
    module: FiniteModule
    mult: int
    det: int
    cls: str
    embeds: bool


@dataclass
class GridStandard:
    label: str
    module: FiniteModule
    det: int
    factors: list


@dataclass
class GridPoint:
    spec: str
    sigma0: tuple
    standards: list
    generic_classes: int
    nirreducible: int


@lru_cache(maxsize=None)
def grid(label: str, lattice: str, size: int = GRID_SIZE) -> tuple:
    H = GradedHeckeAlgebraSpec.build(label, lattice, k=2, r=1)
    out = []
    for s in integral_grid(H, size):
        stds = []
        for sm in standard_modules(H, s):
            E = sm.module
            facs = []
            for S, m in composition_factors(E):
                dS, cS = det_multiplicity(S), temperedness_class(S)
                emb = hom_dim(S, E) > 0 if (dS or cS != NEITHER) else False
                facs.append(GridFactor(S, m, dS, cS, emb))
            stds.append(GridStandard(sm.datum.label, E, det_multiplicity(E), facs))
        irr = irreducibles(H, s)
        gen = sum(1 for S in irr if det_multiplicity(S) >= 1)
        out.append(GridPoint(f"{label}/{lattice}", tuple(s), stds, gen, len(irr)))
    return tuple(out)


def _pt(p) -> str:
    return "(" + ", ".join(str(v) for v in p) + ")"


@check("module-engine", "constructed modules verify their relations")
def _me_verify(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat in GRID_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        for P in _subsets(H.datum.semisimple_rank):
            for _ in range(3):
                M = induce(random_parabolic_module(H, P, rng))
                cases += 1
                if M.relation_failures():
                    fails.append(f"{label}: induced module fails its relations")
    return cases, fails


@check("module-engine", "det multiplicity is preserved by induction")
def _me_induction_det(seed):
    return _induction_det(seed, 20)


@check("module-engine", "standard modules have det multiplicity at most one")
def _me_det_at_most_one(seed):
    fails, cases = [], 0
    for label, lat in GRID_SPECS:
        for gp in grid(label, lat):
            for st in gp.standards:
                cases += 1
                gens = [f for f in st.factors if f.det]
                if st.det > 1:
                    fails.append(f"{gp.spec} {_pt(gp.sigma0)} {st.label}: det multiplicity {st.det}")
                if st.det == 1 and (len(gens) != 1 or gens[0].det != 1 or gens[0].mult != 1):
                    fails.append(f"{gp.spec} {_pt(gp.sigma0)} {st.label}: generic factor not unique")
    return cases, fails


@check("module-engine", "unique generic irreducible per central character")
def _me_unique_generic(seed):
    return _unique_generic(type_a=False)


@check("module-engine", "tempered standard modules match bounded sigma0 (type A)")
def _me_th110(seed):
    fails, cases = [], 0
    for label, lat in GRID_SPECS[:2]:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        for gp in grid(label, lat):
            rep = block_report(H, gp.sigma0)
            sig = SemisimpleElement(gp.sigma0)
            for e in rep.entries:
                cases += 1
                b = boundedness_class(jm_triple(e.y, sig, H.r).sigma0)
                # E is the analytic standard module, the sgn pullback of the geometric one at -r
                t, et = is_tempered(e.module), is_essentially_tempered(e.module)
                if t != (b == BOUNDED) or et != (b != GEO_NEITHER):
                    fails.append(f"{label} {_pt(gp.sigma0)} {ms_label(e.ms)}: tempered {t}, "
                                 f"essentially tempered {et}, sigma0 {b}")
    return cases, fails


@check("module-engine", "central characters of induced modules")
def _me_central(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat in GRID_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        G = H.group
        for _ in range(6):
            f = random_poly(rng, H.nvars, 3, 3)
            z = Poly.zero(H.nvars)
            for g in range(G.order):
                z = z + H.act(g, f)
            pt = [Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(H.nvars)]
            M = induce_character(H, pt)
            cases += 1
            if central_evaluate(z, M) != z.evaluate(pt):
                fails.append(f"{label}: central value at {_pt(pt)} is wrong")
    return cases, fails


def _induction_det(seed, per_parabolic):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, lat in (("A2", "gl"), ("B2", "adjoint")):
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        for P in _subsets(H.datum.semisimple_rank):
            for _ in range(per_parabolic):
                M = random_parabolic_module(H, P, rng)
                cases += 1
                a, b = det_multiplicity(induce(M)), det_multiplicity(M)
                if a != b:
                    fails.append(f"{label} P = {list(P)}: {a} after induction, {b} before")
    return cases, fails


def _unique_generic(type_a: bool):
    fails, cases = [], 0
    for label, lat in GRID_SPECS:
        H = GradedHeckeAlgebraSpec.build(label, lat, k=2, r=1)
        for gp in grid(label, lat):
            cases += 1
            if gp.generic_classes != 1:
                fails.append(f"{gp.spec} {_pt(gp.sigma0)}: {gp.generic_classes} generic irreducibles")
            if type_a and lat == "gl":
                rep = block_report(H, gp.sigma0)
                if rep.checks["generic_is_open"] != PASS:
                    fails.append(f"{gp.spec} {_pt(gp.sigma0)}: generic irreducible not on the open orbit")
    return cases, fails


# ---------------------------------------------------------------------------------
# parameter-bridge


def _openness_transfer(seed, trials):
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        y, sig, r = random_parameter(rng, 4, imaginary=True)
        p = AdditiveParameter(y, sig, r)
        if p.is_open() != mult_is_open(to_multiplicative(p)):
            fails.append(f"y = {y.to_json()}, sigma = {sig}, r = {r}: additive and multiplicative disagree")
    return trials, fails


def _bounded_open(seed, per_type):
    rng = random.Random(seed)
    fails, cases = [], 0
    for n in range(1, 5):
        for lam in partitions(n):
            for _ in range(per_type):
                r = as_scalar(rng.choice([1, 2, Fraction(1, 2)]))
                y, sig = random_bounded_sigma(rng, lam, r)
                p = AdditiveParameter(y, sig, r)
                if boundedness_class(p.sigma0) == GEO_NEITHER:
                    fails.append(f"{lam}: sampled sigma0 {p.sigma0} is not essentially bounded")
                cases += 1
                if not p.is_open() or not mult_is_open(to_multiplicative(p)):
                    fails.append(f"{lam} at {sig}, r = {r}: not open")
    return cases, fails


@check("parameter-bridge", "additive and multiplicative openness agree")
def _pb_transfer(seed):
    return _openness_transfer(seed, 200)


@check("parameter-bridge", "essentially bounded parameters are open on both sides")
def _pb_74(seed):
    return _bounded_open(seed, 10)


UNITARY = (ONE, -ONE, I, -I)


def _affine_inputs(rng):
    for label in ("A1", "A2", "B2", "G2"):
        d = build_root_datum(label, "adjoint")
        G = enumerate_group(d)
        for _ in range(6):
            vals = [rng.choice(UNITARY) for _ in range(d.semisimple_rank)]
            if label in ("B2", "G2"):
                lam = {"long": rng.randint(1, 3), "short": rng.randint(1, 3)}
            else:
                lam = rng.randint(1, 3)
            yield label, AffineReductionInput(d, lam, lam, vals, G)


@check("parameter-bridge", "reduced parameters are invariant under the stabilizer")
def _pb_kinv(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, inp in _affine_inputs(rng):
        out = reduce_affine(inp)
        G = inp.group
        for w in out.stabilizer:
            for a in out.roots:
                cases += 1
                b = G.act_on_X(w, a)
                if b not in out.k or out.k[b] != out.k[a]:
                    fails.append(f"{label} u = {inp.simple_values}: k_u not invariant at {a}")
    return cases, fails


@check("parameter-bridge", "R_u is a reflection-closed root system based by Delta_u")
def _pb_ru(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label, inp in _affine_inputs(rng):
        d = inp.datum
        out = reduce_affine(inp)
        Ru = set(out.roots)
        cases += 1
        for a in out.roots:
            s = d.reflection(a)
            for b in out.roots:
                image = tuple(sum(s[i][j] * b[j] for j in range(d.rank)) for i in range(d.rank))
                if image not in Ru:
                    fails.append(f"{label}: s_{a}({b}) is not in R_u")
        if not out.simple:
            continue
        B = ExactMatrix.from_columns([list(a) for a in out.simple], d.rank)
        if B.rank() != len(out.simple):
            fails.append(f"{label}: Delta_u is linearly dependent")
            continue
        for a in out.roots:
            # coordinates of a in Delta_u, all of one sign and integral
            aug = ExactMatrix.from_columns([list(x) for x in out.simple] + [list(a)], d.rank)
            K = aug.kernel()
            if len(K) != 1:
                fails.append(f"{label}: {a} is not in the span of Delta_u")
                continue
            c = [-v / K[0][-1] for v in K[0][:-1]]
            if any(x.denominator != 1 for x in (as_scalar(v).re for v in c)):
                fails.append(f"{label}: {a} is not an integral combination of Delta_u")
            if not (all(v.re >= 0 for v in c) or all(v.re <= 0 for v in c)):
                fails.append(f"{label}: {a} has mixed signs over Delta_u")
            if (all(v.re >= 0 for v in c)) != d.is_positive(a):
                fails.append(f"{label}: positivity of {a} changes over Delta_u")
    return cases, fails


@check("parameter-bridge", "steinberg character relations and exp_u round trips")
def _pb_steinberg(seed):
    rng = random.Random(seed)
    fails, cases = [], 0
    for label in ("A1", "A2", "B2", "G2"):
        G = enumerate_group(build_root_datum(label, "adjoint"))
        cases += 1
        st = steinberg_char(G, 1, 1)
        if not st.relations_ok:
            fails.extend(st.failures[:3])
    for _ in range(50):
        sig = tuple(Scalar(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 4)))
        cases += 1
        if expu_transfer(sig, 1).log() != sig:
            fails.append(f"log(exp_u({sig})) != sigma")
    return cases, fails


# ---------------------------------------------------------------------------------
# acceptance criteria


def _oracle_a1(c: int):
    """Independent 2x2 oracle for A1, k = 2, r = 1 on the basis (1 x 1, N_s x 1).

    alpha N_s = -N_s alpha + 2kr, so alpha acts by [[c, 4], [0, -c]].  Stable
    lines are found by brute force over small integer vectors.
    """
    alpha = [[c, 4], [0, -c]]
    ns = [[0, 1], [1, 0]]

    def par(A, v):
        w = (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])
        if w[0] * v[1] != w[1] * v[0]:
            return None
        i = 0 if v[0] else 1
        return Fraction(w[i], v[i])

    lines = {}
    for v in ((a, b) for a in range(-2, 3) for b in range(-2, 3) if (a, b) != (0, 0)):
        lam, eps = par(alpha, v), par(ns, v)
        if lam is not None and eps is not None:
            i = 0 if v[0] else 1
            key = (Fraction(v[0], v[i]), Fraction(v[1], v[i]))
            lines[key] = (lam, eps)
    return alpha, ns, [(lam, eps, v) for v, (lam, eps) in lines.items()]


@check(ACCEPTANCE, "1 unique open orbit")
def _c1(seed):
    return _open_orbit_sweep(5, -4, 4)


@check(ACCEPTANCE, "2 centralizer criterion matches openness")
def _c2(seed):
    return _criterion_agreement(seed, 200)


@check(ACCEPTANCE, "3 essentially bounded implies open")
def _c3(seed):
    return _bounded_open(seed, 50)


@check(ACCEPTANCE, "4 additive and multiplicative openness agree")
def _c4(seed):
    return _openness_transfer(seed, 200)


@check(ACCEPTANCE, "5 A1 reducibility oracle")
def _c5(seed):
    H = GradedHeckeAlgebraSpec.build("A1", "adjoint", k=2, r=1)
    fails = []
    for c in (2, 0):
        alpha, ns, lines = _oracle_a1(c)
        M = induce_character(H, (c,))
        if M.coords[0] != ExactMatrix(alpha) or M.N(H.group.simple[0]) != ExactMatrix(ns):
            fails.append(f"c = {c}: matrices differ from the oracle")
        soc = socle(M)
        if c == 2:
            if len(lines) != 1 or lines[0][1] != -1:
                fails.append("oracle: expected a single stable line with N_s = -1")
            if len(soc) != 1:
                fails.append(f"c = 2: socle has dimension {len(soc)}")
            else:
                S = M.submodule(soc)
                if S.N(H.group.simple[0]) != ExactMatrix([[-1]]):
                    fails.append("c = 2: N_s does not act by -1 on the socle")
                if lines and S.coords[0] != ExactMatrix([[lines[0][0]]]):
                    fails.append("c = 2: socle weight differs from the oracle")
        else:
            if lines:
                fails.append("oracle: c = 0 has a stable line")
            if not is_simple(M):
                fails.append("c = 0: module is reducible")
    return 2, fails


@check(ACCEPTANCE, "6 generic factor of a standard module is a submodule")
def _c6(seed):
    fails, cases, vacuous = [], 0, 0
    for label, lat in GRID_SPECS:
        for gp in grid(label, lat):
            for st in gp.standards:
                cases += 1
                gens = [f for f in st.factors if f.det]
                if st.det == 0 and not gens:
                    vacuous += 1
                    continue
                if len(gens) != 1:
                    fails.append(f"{gp.spec} {_pt(gp.sigma0)} {st.label}: {len(gens)} generic factors")
                elif gens[0].det != 1 or not gens[0].embeds:
                    fails.append(f"{gp.spec} {_pt(gp.sigma0)} {st.label}: generic factor is not a submodule")
    return cases, fails, f"{vacuous} of {cases} standard modules have no generic factor"


@check(ACCEPTANCE, "7 tempered factors of standard modules are submodules")
def _c7(seed):
    fails, cases = [], 0
    for label, lat in GRID_SPECS:
        for gp in grid(label, lat):
            for st in gp.standards:
                for f in st.factors:
                    if f.cls == NEITHER:
                        continue
                    cases += 1
                    if not f.embeds:
                        fails.append(f"{gp.spec} {_pt(gp.sigma0)} {st.label}: {f.cls} factor of "
                                     f"dim {f.module.dim} is not a submodule")
    return cases, fails


@check(ACCEPTANCE, "8 unique generic irreducible on the open orbit")
def _c8(seed):
    return _unique_generic(type_a=True)


@check(ACCEPTANCE, "9 det multiplicity is preserved by induction")
def _c9(seed):
    return _induction_det(seed, 20)


def type_a_blocks() -> list:
    """Eigenvalue multisets up to translation: n <= 4 values in {0, 2, 4, 6} containing 0."""
    out = []
    for n in range(2, 5):
        for sig in combinations_with_replacement((0, 2, 4, 6), n):
            if sig[0] == 0:
                out.append(tuple(reversed(sig)))
    return out


@check(ACCEPTANCE, "10 nonzero Hom between standard modules respects closure")
def _c10(seed):
    fails, pairs, nonzero = [], 0, 0
    for sig in type_a_blocks():
        H = GradedHeckeAlgebraSpec.build(f"A{len(sig) - 1}", "gl", k=2, r=1)
        rep = block_report(H, sig)
        for (b, a), h in rep.hom.items():
            pairs += 1
            if h:
                nonzero += 1
                if not closure_leq(rep.entries[a].invariant, rep.entries[b].invariant):
                    fails.append(f"{_pt(sig)}: Hom(E_{rep.entries[b].ms}, E_{rep.entries[a].ms}) != 0 "
                                 f"against the closure order")
        if rep.checks["hom_closure"] == FAIL and not fails:
            fails.append(f"{_pt(sig)}: block report flags hom_closure")
    return pairs, fails, f"{len(type_a_blocks())} blocks, {nonzero} nonzero Hom spaces"


@check(ACCEPTANCE, "11 engine soundness")
def _c11(seed):
    total, fails = 0, []
    for c, f in (_associativity(seed, 34), _reduced_words(seed), _relations(seed, 10),
                 _sgn(seed, 10), _rescaling(seed)):
        total += c
        fails += f
    return total, fails
