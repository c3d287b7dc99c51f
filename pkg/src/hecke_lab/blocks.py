"""Type A blocks: multisegments, their standard modules and the orbit dictionary.

For H(gl_n) with k = 2 a segment [b, b+2r, ..., e] carries the Steinberg
character of its Levi block: increasing weight (b, ..., e) with every N_s
acting by -1.  Segments are placed by decreasing center, which puts the twist in
positive position; the standard module is the induced module.  The orbit of a
multisegment has one Jordan chain per segment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact.scalar import Scalar, format_scalar
from .geometry import (RankInvariant, SemisimpleElement, closure_leq, graded_space,
                       multisegment_rep, multisegments, orbit_dim, rank_invariants)
from .hecke import GradedHeckeAlgebraSpec
from .langlands import NEITHER, temperedness_class
from .module import FiniteModule, ModuleError, character_module, det_multiplicity, induce
from .structure import head, hom_dim, socle_and_factors

PASS, FAIL, NA = "pass", "fail", "n/a"


def _check_spec(spec: GradedHeckeAlgebraSpec):
    d = spec.datum
    if not d.label.startswith("A") or d.lattice != "gl":
        raise ModuleError("block reports need a type A spec on the gl lattice")
    if spec.k.is_constant() != 2:
        raise ModuleError("block reports need k = 2")


def ms_label(ms) -> str:
    return " ".join(str(s) for s in ms)


def ms_layout(ms) -> tuple:
    """Segments by decreasing center (ties: longer first), the weight and the parabolic."""
    segs = sorted(ms, key=lambda s: (-s.center.re, -s.length, -s.start.re))
    weight, P, pos = [], [], 0
    for s in segs:
        weight.extend(s.values())
        P.extend(range(pos, pos + s.length - 1))
        pos += s.length
    return tuple(segs), tuple(weight), tuple(P)


def segment_standard(spec: GradedHeckeAlgebraSpec, ms) -> FiniteModule:
    _check_spec(spec)
    _, weight, P = ms_layout(ms)
    tau = character_module(spec, weight, P, signs={i: -1 for i in P})
    return induce(tau, label=ms_label(ms))


@dataclass
class BlockEntry:
    ms: tuple
    module: FiniteModule
    y: object
    invariant: RankInvariant
    orbit_dim: int
    factors: list = field(default_factory=list)     # [(index of irreducible, multiplicity)]
    socle: list = field(default_factory=list)       # indices of irreducibles
    generic: bool = False
    tempered: bool = False


@dataclass
class BlockReport:
    spec: str
    sigma: tuple
    r: Scalar
    entries: list
    irreducibles: list            # Langlands quotients, aligned with entries
    open_index: int | None
    checks: dict
    hom: dict = field(default_factory=dict)   # (a, b) -> dim Hom(E_a, E_b)

    def ok(self) -> bool:
        return all(v != FAIL for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "sigma": [format_scalar(v) for v in self.sigma],
            "r": format_scalar(self.r),
            "standard_modules": [{
                "multisegment": ms_label(e.ms),
                "dim": e.module.dim,
                "orbit_rank_invariants": str(e.invariant),
                "orbit_dim": e.orbit_dim,
                "socle": [ms_label(self.entries[i].ms) for i in e.socle],
                "composition_factors": [[ms_label(self.entries[i].ms), m] for i, m in e.factors],
                "generic": e.generic,
                "tempered": e.tempered,
            } for e in self.entries],
            "open_orbit": ms_label(self.entries[self.open_index].ms) if self.open_index is not None else None,
            "checks": dict(self.checks),
        }

    def text(self) -> str:
        lines = [f"block {self.spec}  sigma = ({', '.join(format_scalar(v) for v in self.sigma)})"
                 f"  r = {format_scalar(self.r)}"]
        w = max([len(ms_label(e.ms)) for e in self.entries] + [12])
        for i, e in enumerate(self.entries):
            mark = "*" if i == self.open_index else " "
            facs = ", ".join(f"L({ms_label(self.entries[j].ms)})" + (f"^{m}" if m > 1 else "")
                             for j, m in e.factors)
            lines.append(f" {mark} {ms_label(e.ms):<{w}}  dim {e.module.dim:>3}  ranks {e.invariant}"
                         f"  generic {int(e.generic)}  tempered {int(e.tempered)}")
            lines.append(f"   {'':<{w}}  factors: {facs}")
            lines.append(f"   {'':<{w}}  socle: " + ", ".join(f"L({ms_label(self.entries[j].ms)})"
                                                          for j in e.socle))
        for name, v in self.checks.items():
            lines.append(f"check {name}: {v}")
        return "\n".join(lines)


def _find(S: FiniteModule, irreducibles: Sequence[FiniteModule]) -> int:
    for i, L in enumerate(irreducibles):
        if L.dim == S.dim and L.weights() == S.weights() and hom_dim(L, S):
            return i
    raise ModuleError("composition factor is not the quotient of any standard module")


def block_report(spec: GradedHeckeAlgebraSpec, sigma: Sequence) -> BlockReport:
    """Standard modules of the block of sigma with the orbit-side checks."""
    _check_spec(spec)
    sig = SemisimpleElement(sigma)
    if sig.n != spec.nvars:
        raise ModuleError(f"sigma needs {spec.nvars} eigenvalues")
    r = spec.r
    entries = []
    for ms in multisegments(sig, r):
        y = multisegment_rep(sig, r, ms)
        E = segment_standard(spec, ms)
        entries.append(BlockEntry(ms, E, y, rank_invariants(y, sig, r), orbit_dim(y, sig)))
    irreducibles = []
    for e in entries:
        H = head(e.module)
        irreducibles.append(H)
    space = graded_space(sig, r).dim
    opens = [i for i, e in enumerate(entries) if e.orbit_dim == space]
    open_index = opens[0] if len(opens) == 1 else None
    checks = {}
    for e in entries:
        data = socle_and_factors(e.module)
        e.factors = [(_find(S, irreducibles), m) for S, m in data.factors]
        e.socle = sorted({_find(S, irreducibles) for S in data.socle_summands})
        e.generic = det_multiplicity(e.module) >= 1
        e.tempered = temperedness_class(e.module) != NEITHER
    # (i) the open-orbit irreducible is a submodule wherever it occurs
    if open_index is None:
        checks["open_embeds"] = FAIL
    else:
        L = irreducibles[open_index]
        seen = [e for e in entries if any(i == open_index for i, _ in e.factors)]
        checks["open_embeds"] = PASS if all(hom_dim(L, e.module) for e in seen) else FAIL
    # (ii) the unique generic factor is a submodule
    verdict = PASS
    for e in entries:
        gens = [i for i, _ in e.factors if det_multiplicity(irreducibles[i]) >= 1]
        if len(gens) != 1 or det_multiplicity(e.module) != 1:
            verdict = FAIL
            continue
        if not hom_dim(irreducibles[gens[0]], e.module):
            verdict = FAIL
    checks["generic_submodule"] = verdict
    # (iii) nonzero Hom(E_b, E_a) forces O_a in the closure of O_b
    hom = {}
    verdict = PASS
    for a, ea in enumerate(entries):
        for b, eb in enumerate(entries):
            if a == b:
                continue
            h = hom_dim(eb.module, ea.module)
            hom[(b, a)] = h
            if h and not closure_leq(ea.invariant, eb.invariant):
                verdict = FAIL
    checks["hom_closure"] = verdict if len(entries) > 1 else NA
    # the generic irreducible of the block lives on the open orbit
    gen_irr = [i for i, L in enumerate(irreducibles) if det_multiplicity(L) >= 1]
    checks["generic_is_open"] = PASS if gen_irr == [open_index] else FAIL
    # multiplicity of L(b) in E_a needs O_a in the closure of O_b
    verdict = PASS
    for a, ea in enumerate(entries):
        for b, _ in ea.factors:
            if not closure_leq(ea.invariant, entries[b].invariant):
                verdict = FAIL
        if dict(ea.factors).get(a) != 1:
            verdict = FAIL
    checks["unitriangular"] = verdict
    return BlockReport(f"A{spec.datum.semisimple_rank} gl k=2", tuple(sig.eigenvalues), r,
                       entries, irreducibles, open_index, checks, hom)
