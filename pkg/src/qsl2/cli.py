"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import crystal as cr
from .oqsl2 import O_HOPF, parse_o
from .pairing import (
    constrained_pair,
    invariants,
    left_action,
    pair,
    right_action,
    takeuchi_quotient_ideal,
    verify_right_coideal,
    vocke_catalog,
)
from .parsing import ParseError, parse_scalar
from .qscalar import QScalar
from .repmod import act, build_module
from .report import Report
from .sampling import o_monomials, o_samples, u_monomials, u_samples
from .uqsl2 import E, K_INV, U_HOPF, CartanMatrix, HopfStructure, _hopf_checks, parse_u, serre_relations

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, rep: Report) -> int:
    _emit(args, rep.to_json() if args.format == "json" else rep.render())
    return EXIT_OK if rep.passed else EXIT_FAIL


def _parser_for(alg: str) -> Callable:
    return {"uq": parse_u, "oq": parse_o}[alg]


def _emit_list(args, title: str, elems: Sequence, notes: Sequence[str] = ()) -> int:
    rendered = [x.render() for x in elems]
    if args.format == "json":
        _emit(args, json.dumps({"title": title, "elements": rendered, "notes": list(notes)}, indent=2))
    else:
        lines = [f"# {title}"] + [f"# {n}" for n in notes] + rendered
        _emit(args, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_normalize(args) -> int:
    x = _parser_for(args.algebra)(args.expr)
    if args.format == "json":
        _emit(args, json.dumps({"algebra": args.algebra, "normal_form": x.render()}))
    else:
        _emit(args, x.render())
    return EXIT_OK


def _faulty_u_antipode(m):
    # S(E) = -E K^-1 instead of -K^-1 E
    from .uqsl2 import _antipode_mono

    if m.c == 1 and m.a == 0 and m.b == 0:
        return -(E * K_INV)
    return _antipode_mono(m)


def _faulty_o_antipode(m):
    from .oqsl2 import X12, _antipode_mono

    if m == (0, 1, 0, 0):
        return -X12  # sign right, q-power dropped
    return _antipode_mono(m)


def cmd_hopf_check(args) -> int:
    algs = ["uq", "oq"] if args.algebra == "both" else [args.algebra]
    rep = Report("hopf axioms")
    for alg in algs:
        if alg == "uq":
            h = U_HOPF
            samples = u_monomials(2) + u_samples(args.samples, args.seed, args.degree)
            if args.inject_fault:
                h = HopfStructure(h.cls, h.coproduct_mono, h.counit_mono, _faulty_u_antipode, h.name)
        else:
            h = O_HOPF
            samples = o_monomials(2) + o_samples(args.samples, args.seed, args.degree)
            if args.inject_fault:
                h = HopfStructure(h.cls, h.coproduct_mono, h.counit_mono, _faulty_o_antipode, h.name)
        sub = _hopf_checks(h, samples, Report(h.name))
        rep.extend(sub, prefix=f"{h.name}: ")
    rep.note(f"seed {args.seed}, random elements of degree <= {args.degree}")
    return _emit_report(args, rep)


def cmd_pair(args) -> int:
    v = pair(parse_u(args.u), parse_o(args.a))
    _emit(args, json.dumps({"value": v.render()}) if args.format == "json" else v.render())
    return EXIT_OK


def cmd_act(args) -> int:
    u = parse_u(args.u)
    if args.module is not None:
        if args.module < 0:
            raise UsageError("--module must be nonnegative")
        m = build_module(args.module)
        try:
            vec = [parse_scalar(s) for s in args.target.split(",")]
        except ParseError as exc:
            raise ParseError(f"bad vector entry: {exc}", exc.position) from exc
        try:
            out = act(m, u, vec)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        text = [x.render() for x in out]
        _emit(args, json.dumps({"vector": text}) if args.format == "json" else ", ".join(text))
        return EXIT_OK
    a = parse_o(args.target)
    out = right_action(a, u) if args.side == "right" else left_action(u, a)
    _emit(args, json.dumps({"value": out.render()}) if args.format == "json" else out.render())
    return EXIT_OK


def _gens(exprs: Sequence[str], parse: Callable) -> list:
    if not exprs:
        return []
    return [parse(e) for e in exprs]


def cmd_invariants(args) -> int:
    gens = _gens(args.gens, parse_u)
    basis = invariants(gens, args.degree, homogeneous=args.homogeneous)
    scope = f"degree exactly {args.degree}" if args.homogeneous else f"degree bound {args.degree}"
    notes = [scope, "invariance imposed on the listed generators",
             f"dimension {len(basis)}"]
    return _emit_list(args, "invariants of O_q(SL2)", basis, notes)


def cmd_coideal_check(args) -> int:
    return _emit_report(args, verify_right_coideal(_gens(args.gens, parse_u), args.degree))


def cmd_takeuchi(args) -> int:
    gens = _gens(args.gens, parse_o)
    basis = takeuchi_quotient_ideal(gens, args.degree)
    return _emit_list(args, "left ideal O_q(SL2) A^+", basis,
                      [f"degree bound {args.degree}", f"dimension {len(basis)}"])


def cmd_crystal(args) -> int:
    try:
        c = cr.parse_crystal(args.expr)
    except cr.CrystalSyntaxError as exc:
        raise ParseError(str(exc).rsplit(" at position", 1)[0], exc.position) from exc
    if args.decompose:
        hws = cr.highest_weights(c)
        if args.format == "json":
            _emit(args, json.dumps({"highest_weights": [w if isinstance(w, int) else list(w) for w in hws]}))
        else:
            _emit(args, " ".join(str(w) for w in hws))
        return EXIT_OK
    fmt = args.format if args.format in ("dot", "json") else "dot"
    _emit(args, cr.to_dot(c) if fmt == "dot" else cr.to_json(c))
    rep = cr.validate_crystal(c)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _parse_matrix(text: str) -> tuple:
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    rows = [r for r in text.replace("\n", ";").split(";") if r.strip()]
    try:
        return tuple(tuple(int(x) for x in r.replace(",", " ").split()) for r in rows)
    except ValueError as exc:
        raise UsageError(f"malformed Cartan matrix: {exc}") from exc


def cmd_serre(args) -> int:
    entries = _parse_matrix(args.matrix)
    try:
        d = tuple(int(x) for x in args.symmetrizers.split(",")) if args.symmetrizers else ()
        cm = CartanMatrix(entries, d)
    except ValueError as exc:
        raise UsageError(f"malformed Cartan matrix: {exc}") from exc
    rels = serre_relations(cm)
    if args.format == "json":
        _emit(args, json.dumps({"relations": [r.render() for r in rels]}, indent=2))
    else:
        _emit(args, "\n".join(r.render() for r in rels) if rels else "# no Serre relations")
    return EXIT_OK


def _scalar(s: str) -> QScalar:
    return parse_scalar(s)


def cmd_vocke(args) -> int:
    pp = None
    if args.pair_lam is not None or args.pair_lam_prime is not None:
        if args.pair_lam is None or args.pair_lam_prime is None:
            raise UsageError("--pair-lam and --pair-lam-prime go together")
        try:
            constrained_pair(_scalar(args.pair_lam), _scalar(args.pair_lam_prime))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            rep = Report("right coideal subalgebras")
            rep.add("constrained family parameters", False, detail=str(exc))
            return _emit_report(args, rep)
        pp = (_scalar(args.pair_lam), _scalar(args.pair_lam_prime))
    cat = vocke_catalog(j=args.j, lam=_scalar(args.lam), lam_prime=_scalar(args.lam_prime),
                        c_F=_scalar(args.c_f), c_K=_scalar(args.c_k), pair_params=pp)
    rep = Report("right coideal subalgebras")
    for p in cat:
        sub = p.check(args.degree)
        fail = sub.first_failure()
        rep.add(p.render(), sub.passed, fail.witness if fail else None, fail.detail if fail else None)
    rep.note(f"degree bound {args.degree}")
    return _emit_report(args, rep)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="qsl2", description="exact computations in U_q(sl2), O_q(SL2) and crystals")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="print the normal form of an expression")
    s.add_argument("algebra", choices=["uq", "oq"])
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("hopf-check", parents=[common], help="run the Hopf axiom suite")
    s.add_argument("--algebra", choices=["uq", "oq", "both"], default="both")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_hopf_check)

    s = sub.add_parser("pair", parents=[common], help="evaluate the pairing (u, a)")
    s.add_argument("u")
    s.add_argument("a")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("act", parents=[common], help="a.u or u.a on O_q(SL2), or u on a vector of V(n)")
    s.add_argument("u")
    s.add_argument("target", help="element of O_q(SL2), or comma-separated vector with --module")
    s.add_argument("--side", choices=["right", "left"], default="right")
    s.add_argument("--module", type=int, help="act on V(n) instead")
    s.set_defaults(func=cmd_act)

    for name, func, helptext in (("invariants", cmd_invariants, "invariants of a right coideal subalgebra"),
                                 ("coideal-check", cmd_coideal_check, "check the right coideal property"),
                                 ("takeuchi", cmd_takeuchi, "left ideal O_q(SL2) A^+ up to a degree")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("gens", nargs="*")
        s.add_argument("--degree", type=int, default=3 if name == "coideal-check" else 1)
        if name == "invariants":
            s.add_argument("--homogeneous", action="store_true", help="only elements of degree exactly --degree")
        s.set_defaults(func=func)

    s = sub.add_parser("crystal", parents=[common], help="build a crystal from an expression like 'B(2)(x)B(2)'")
    s.add_argument("expr")
    s.add_argument("--decompose", action="store_true")
    s.set_defaults(func=cmd_crystal)

    s = sub.add_parser("serre", parents=[common], help="quantum Serre relations of a Cartan matrix")
    s.add_argument("matrix", help="inline like '2,-1;-1,2' or a file path")
    s.add_argument("--symmetrizers")
    s.set_defaults(func=cmd_serre)

    s = sub.add_parser("vocke", parents=[common], help="instantiate and check the catalog of right coideal subalgebras")
    s.add_argument("--j", type=int, default=2)
    s.add_argument("--lam", default="1")
    s.add_argument("--lam-prime", default="1")
    s.add_argument("--c-f", default="1")
    s.add_argument("--c-k", default="1")
    s.add_argument("--pair-lam")
    s.add_argument("--pair-lam-prime")
    s.add_argument("--degree", type=int, default=3)
    s.set_defaults(func=cmd_vocke)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "degree", 0) < 0:
        parser.error("--degree must be nonnegative")
    if args.command == "coideal-check" and args.degree < 1:
        parser.error("--degree must be at least 1 for coideal-check")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
