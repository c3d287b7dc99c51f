"""Command line front end.

    hecke-lab open-check PARAM.json
    hecke-lab jm PARAM.json
    hecke-lab block-report --type A2 --sigma 2,0,-2
    hecke-lab reduce-affine --type B2 --u 1,-1 --lam long=2,short=1
    hecke-lab steinberg --type B2
    hecke-lab verify [SELECTOR]

Every command accepts --json and --out FILE.  Exit codes: 0 ok, 1 a check
failed (or the parameter is not open), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blocks import block_report
from .bridge import AffineReductionInput, reduce_affine, steinberg_char
from .exact.scalar import format_scalar, parse_scalar
from .geometry import (BOUNDED, ParameterError, boundedness_class, graded_space, is_distinguished,
                       is_open, jm_triple, lemma112_criterion, orbit_dim, parameter_from_json)
from .hecke import GradedHeckeAlgebraSpec
from .module import ModuleError
from .roots import RootDatumError, build_root_datum, enumerate_group
from .suites import run_suite, selectors


class UsageError(Exception):
    pass


def _emit(args, text: str, data) -> None:
    out = json.dumps(data, indent=2, sort_keys=True) if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from None


def _scalars(text: str) -> list:
    try:
        return [parse_scalar(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _param_function(text: str | None, default):
    """'2' or 'long=2,short=1' or '0=1,1=2'."""
    if text is None:
        return default
    if "=" not in text:
        return text
    out = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        out[key.strip()] = val.strip()
    return out


# ---------------------------------------------------------------------------------


def cmd_open_check(args) -> int:
    y, sigma, r = parameter_from_json(_load_json(args.param))
    op = is_open(y, sigma, r)
    space = graded_space(sigma, r).dim
    odim = orbit_dim(y, sigma)
    crit = lemma112_criterion(y, sigma, r) if r != 0 else None
    T = jm_triple(y, sigma, r)
    bclass = boundedness_class(T.sigma0) if hasattr(T.sigma0, "eigenvalues") else "n/a"

    def flag(v):
        return "n/a" if v is None else str(v).lower()

    lines = [f"open: {flag(op)}; lemma-1.12: {flag(crit)}; bounded: {flag(bclass == BOUNDED)}",
             f"boundedness: {bclass}",
             f"sigma0: {T.sigma0}",
             f"orbit dim: {odim}; space dim: {space}"]
    data = {"open": op, "centralizer_criterion": crit, "bounded": bclass == BOUNDED, "boundedness": bclass,
            "sigma0": [format_scalar(v) for v in T.sigma0.eigenvalues]
            if hasattr(T.sigma0, "eigenvalues") else T.sigma0_matrix().to_json(),
            "orbit_dim": odim, "space_dim": space, "jordan_type": list(y.jordan_type())}
    _emit(args, "\n".join(lines), data)
    return 0 if op else 1


def cmd_jm(args) -> int:
    y, sigma, r = parameter_from_json(_load_json(args.param))
    T = jm_triple(y, sigma, r)
    if not T.check():
        raise ModuleError("constructed triple fails its relations")
    lines = [f"jordan type: {list(y.jordan_type())}; distinguished: {str(is_distinguished(y)).lower()}",
             "h:", T.h.pretty(), "f:", T.f.pretty(), f"sigma0: {T.sigma0}"]
    data = dict(T.to_json(), jordan_type=list(y.jordan_type()), distinguished=is_distinguished(y))
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_block_report(args) -> int:
    label = args.type
    if not label.startswith("A"):
        raise UsageError("block reports are available for type A only")
    try:
        H = GradedHeckeAlgebraSpec.build(label, "gl", k=2, r=1)
    except RootDatumError as exc:
        raise UsageError(str(exc)) from None
    sigma = _scalars(args.sigma)
    if len(sigma) != H.nvars:
        raise UsageError(f"{label} needs {H.nvars} eigenvalues, got {len(sigma)}")
    if any(not s.is_integer() for s in sigma):
        raise UsageError("block reports need integer eigenvalues")
    rep = block_report(H, sigma)
    _emit(args, rep.text(), rep.to_json())
    return 0 if rep.ok() else 1


def cmd_reduce_affine(args) -> int:
    d = build_root_datum(args.type, args.lattice)
    G = enumerate_group(d)
    lam = _param_function(args.lam, 1)
    lam_star = _param_function(args.lam_star, lam)
    values = _scalars(args.u) if args.u else [1] * d.semisimple_rank
    try:
        out = reduce_affine(AffineReductionInput(d, lam, lam_star, values, G))
    except ParameterError as exc:
        raise UsageError(str(exc)) from None

    def vec(a):
        return "(" + ",".join(map(str, a)) + ")"

    lines = [f"R_u: {' '.join(vec(a) for a in out.roots) or '(empty)'}",
             f"Delta_u: {' '.join(vec(a) for a in out.simple) or '(empty)'}",
             f"(W Gamma)_u: {len(out.stabilizer)} elements; Gamma_u: {len(out.gamma)} elements"]
    for a in sorted(out.k):
        if d.is_positive(a):
            lines.append(f"k_u{vec(a)} = {format_scalar(out.k[a])}")
    _emit(args, "\n".join(lines), out.to_json())
    return 0


def cmd_steinberg(args) -> int:
    G = enumerate_group(build_root_datum(args.type, args.lattice), args.gamma)
    st = steinberg_char(G, _param_function(args.lam, 1), parse_scalar(args.q_exp))
    lines = []
    for g in range(G.order):
        word, gam = G.word(g)
        name = "".join(f"s{i}" for i in word) or "1"
        if gam:
            name += f" g{gam}"
        lines.append(f"St({name}) = {st(g):+d}")
    lines.append(f"relations: {'ok' if st.relations_ok else 'FAIL'}")
    data = {"values": {str(g): v for g, v in st.values.items()}, "relations_ok": st.relations_ok,
            "failures": st.failures,
            "q_powers": {str(i): format_scalar(v) for i, v in st.q_powers.items()}}
    _emit(args, "\n".join(lines), data)
    return 0 if st.relations_ok else 1


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.selector, args.seed)
    except KeyError:
        print(f"unknown selector {args.selector!r}", file=sys.stderr)
        print(f"usage: hecke-lab verify [{'|'.join(selectors())}|all]", file=sys.stderr)
        return 1
    lines = []
    counts: dict = {}
    for res in results:
        lines.append(f"[{res.suite}] {res.line()}")
        for f in res.failures[:3]:
            lines.append(f"    {f}")
        c = counts.setdefault(res.suite, [0, 0])
        c[0 if res.passed else 1] += 1
    for suite, (ok, bad) in counts.items():
        lines.append(f"suite {suite}: {ok} passed, {bad} failed")
    _emit(args, "\n".join(lines), [r.to_json() for r in results])
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", metavar="FILE", help="write the output to FILE")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    p = argparse.ArgumentParser(prog="hecke-lab", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("open-check", parents=[common], help="openness of an additive parameter")
    s.add_argument("param", help='JSON file {"n", "sigma", "r", "y"}')
    s.set_defaults(func=cmd_open_check)

    s = sub.add_parser("jm", parents=[common], help="graded Jacobson-Morozov triple and sigma0")
    s.add_argument("param", help='JSON file {"n", "sigma", "r", "y"}')
    s.set_defaults(func=cmd_jm)

    s = sub.add_parser("block-report", parents=[common], help="standard modules of a type A block")
    s.add_argument("--type", required=True, help="A1, A2 or A3 (gl lattice, k = 2, r = 1)")
    s.add_argument("--sigma", required=True, help="comma separated integer eigenvalues")
    s.set_defaults(func=cmd_block_report)

    s = sub.add_parser("reduce-affine", parents=[common], help="reduction at a unitary point u")
    s.add_argument("--type", required=True)
    s.add_argument("--lattice", default="adjoint")
    s.add_argument("--u", help="alpha(u) for the simple roots, comma separated (default 1)")
    s.add_argument("--lam", help="lambda: a number or long=..,short=.. (default 1)")
    s.add_argument("--lam-star", help="lambda*: same format (default lambda)")
    s.set_defaults(func=cmd_reduce_affine)

    s = sub.add_parser("steinberg", parents=[common], help="the Steinberg character T_w -> det(w)")
    s.add_argument("--type", required=True)
    s.add_argument("--lattice", default=None)
    s.add_argument("--gamma", default="none", help="none or flip")
    s.add_argument("--lam", help="lambda: a number or long=..,short=.. (default 1)")
    s.add_argument("--q-exp", default="1", help="exponent of q")
    s.set_defaults(func=cmd_steinberg)

    s = sub.add_parser("verify", parents=[common], help="run property suites and acceptance criteria")
    s.add_argument("selector", nargs="?", default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, ModuleError, RootDatumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
