"""The ``poissonval`` command line tool.

Exit status: 0 on success, 1 on a domain error (reported structurally),
2 on a usage error (bad flags or an unparsable polynomial).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import automorphism as aut
from . import catalog
from .exactpoly import ParseError, Poly, PolyError, parse_poly, parse_rational
from .groebner import linear_syzygy_kernel, singularity_report, syzygy_residual
from .poisson import (
    PoissonStructure, jacobi_residual, skew, structure_from_potential, table_strings, torus, weyl,
)
from .quotient import MonomialOrder, QuotientRing, normal_form
from .valuation import (
    INF, classify_point, faithfulness_flags, gadic, is_classical_on_generators, min_weight_w,
    point, weyl_nu_xi,
)

GRAMMAR = """\
polynomial grammar:
  expr   := term (('+'|'-') term)*      a leading '-' is allowed
  term   := factor ('*' factor)*
  factor := base ('^' int)?             negative exponents only for Laurent (torus) input
  base   := rational | ident | '(' expr ')'
  rational := int | int/int
variables: x, y, z for potentials; x, y for weyl/skew; x1, x2 for torus
rational flags (--q, --xi, --lam) use the same p/q literal syntax
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{GRAMMAR}")
        raise SystemExit(2)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ParseError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from e


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(t.strip()) for t in text.split(","))


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {text!r}") from e
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {text!r}")
    return n


def _param(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected name=value: {text!r}")
    k, v = text.split("=", 1)
    if "," in v:
        return k, _rational_list(v)
    try:
        return k, parse_rational(v)
    except (ParseError, ValueError):
        return k, v


def _jsonable(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    if isinstance(v, float) and v == INF:
        return "infinity"
    if isinstance(v, Poly):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


# structure selection

def _add_structure(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--potential", help="homogeneous potential in x, y, z")
    g.add_argument("--weyl", action="store_true", help="Weyl bracket {x,y}=1")
    g.add_argument("--skew", type=_rational, metavar="Q", help="q-skew bracket {x,y}=q*x*y")
    g.add_argument("--torus", type=_rational, metavar="Q", help="Laurent torus {x1,x2}=q*x1*x2")


def _structure(args) -> PoissonStructure:
    if args.potential is not None:
        return structure_from_potential(_poly(args.potential))
    if args.weyl:
        return weyl()
    if args.skew is not None:
        return skew(args.skew)
    return torus(args.torus)


def _poly(text: str, vars: Sequence[str] = ("x", "y", "z"), laurent: bool = False) -> Poly:
    try:
        return parse_poly(text, vars, "laurent" if laurent else "polynomial")
    except ParseError as e:
        raise UsageError(f"cannot parse {text!r}: {e}") from e
    except PolyError as e:
        raise UsageError(str(e)) from e


def _elem(s: PoissonStructure, text: str) -> Poly:
    return _poly(text, s.vars, s.laurent)


def _random_poly(rng: random.Random, s: PoissonStructure, terms: int = 3, deg: int = 2) -> Poly:
    lo = -deg if s.laurent else 0
    out = {}
    for _ in range(terms):
        out[tuple(rng.randint(lo, deg) for _ in s.vars)] = Fraction(rng.randint(-5, 5) or 1)
    return Poly(s.vars, out, s.laurent)


# subcommands; each returns (payload, provenance lines)

def cmd_bracket(args):
    s = _structure(args)
    return {"result": str(s.bracket(_elem(s, args.f), _elem(s, args.g)))}, []


def cmd_jacobi(args):
    s = _structure(args)
    rng = random.Random(args.seed)
    if args.f is not None:
        triples = [tuple(_elem(s, t) for t in (args.f, args.g, args.h))]
    else:
        triples = [tuple(_random_poly(rng, s) for _ in range(3)) for _ in range(args.samples)]
    failures = sum(1 for t in triples if jacobi_residual(s, *t))
    return {"holds": failures == 0, "checked": len(triples), "failures": failures}, []


def cmd_potential_structure(args):
    s = structure_from_potential(_poly(args.potential))
    return {"brackets": table_strings(s)}, []


def _order(text: str | None, vars) -> MonomialOrder | None:
    if text is None:
        return None
    kind, _, prec = text.partition(":")
    prec = tuple(p.strip() for p in prec.split(",")) if prec else tuple(vars)
    if kind not in ("lex", "grlex", "grevlex"):
        raise UsageError(f"unknown order {kind!r}; use lex, grlex or grevlex")
    if sorted(prec) != sorted(vars):
        raise UsageError(f"order must rank exactly {vars}")
    return getattr(MonomialOrder, kind)(*prec)


def cmd_nf(args):
    m = _poly(args.modulus)
    q = QuotientRing.of(m, _order(args.order, m.vars))
    return {"result": str(normal_form(q, _poly(args.f))), "order": q.order.describe()}, []


def cmd_singularity(args):
    return singularity_report(_poly(args.potential)).to_dict(), []


def cmd_milnor(args):
    r = singularity_report(_poly(args.potential))
    return {"milnor": "infinity" if r.milnor == INF else r.milnor, "isolated": r.isolated}, []


def cmd_syzygy(args):
    omega = _poly(args.potential)
    basis = linear_syzygy_kernel(omega)
    assert all(not syzygy_residual(omega, f) for f in basis)
    return {"dimension": len(basis), "basis": [[str(c) for c in f] for f in basis]}, []


def _named(args):
    spec = catalog.NamedValuationSpec.make(args.entry, args.family, **dict(args.param or []))
    return catalog.build_named_valuation(spec)


def _recorded_lines(ctx) -> list[str]:
    return [f"recorded {k}: {v}" for k, v in ctx.recorded.items() if k == "residue_dimension"]


def cmd_value(args):
    ctx = _named(args)
    f = _poly(args.f, ctx.original_vars, ctx.laurent)
    if args.den is not None:
        v = ctx.value_fraction(f, _poly(args.den, ctx.original_vars, ctx.laurent))
    else:
        v = ctx.value(f)
    return {"value": _jsonable(v), "label": _jsonable(list(ctx.label))}, _recorded_lines(ctx)


def cmd_wmin(args):
    ctx = _named(args)
    wmin = min_weight_w(ctx)
    return {"w_min": wmin, "w": ctx.w, "classical": is_classical_on_generators(ctx, ctx.w),
            "flags": faithfulness_flags(ctx)}, _recorded_lines(ctx)


def cmd_classify_point(args):
    s = _structure(args)
    if len(args.point) != len(s.vars):
        raise UsageError(f"point needs {len(s.vars)} coordinates")
    out = {"classification": classify_point(s, args.point)}
    if args.f is not None:
        ctx = point(s, args.point)
        out["value"] = _jsonable(ctx.value(_elem(s, args.f)))
    return out, []


def cmd_nu_xi(args):
    ctx = weyl_nu_xi(args.xi, args.w)
    out = {"w": ctx.w, "w_min": min_weight_w(ctx)}
    if args.f is not None:
        out["value"] = _jsonable(ctx.value(_poly(args.f, ("x", "y"))))
    return out, []


def cmd_gadic(args):
    s = _structure(args)
    ctx = gadic(s, _elem(s, args.g))
    f = _elem(s, args.f)
    v = ctx.value_fraction(f, _elem(s, args.den)) if args.den is not None else ctx.value(f)
    return {"value": _jsonable(v), "w": ctx.w}, []


def cmd_aut_check(args):
    omega = _poly(args.potential)
    images = [t.strip() for t in args.map.split(";")]
    if len(images) != 3:
        raise UsageError("--map needs three images separated by ';'")
    ring = omega.vars + ((aut.ZETA,) if args.root_order else ())
    phi = aut.PolyMap(omega.vars, tuple(_poly(t, ring) for t in images), args.root_order)
    return aut.epsilon_check(phi, omega).to_dict(), []


def cmd_aut_enumerate(args):
    rep = aut.enumerate_fermat(args.fermat, args.variant, threads=args.threads)
    verified = aut.group_verify(rep)
    out = rep.to_dict(with_elements=args.elements)
    out["verified"] = verified
    return out, []


def cmd_hurwitz(args):
    return aut.genus_and_bounds(args.fermat).to_dict(), []


def cmd_catalog(args):
    entries = [catalog.get_entry(args.entry)] if args.entry else catalog.list_entries()
    prov = [f"{e.key}.{k}: {f.citation}" for e in entries for k, f in e.recorded.items()]
    return {"entries": [e.to_dict() for e in entries]}, prov


def cmd_distinguish(args):
    r = catalog.distinguisher_report(args.a, args.b)
    prov = [f"{line['invariant']}: {line['tag']}" for line in r.lines]
    return r.to_dict(), prov


COMMANDS = {
    "bracket": cmd_bracket, "jacobi": cmd_jacobi, "potential-structure": cmd_potential_structure,
    "nf": cmd_nf, "singularity": cmd_singularity, "milnor": cmd_milnor, "syzygy": cmd_syzygy,
    "value": cmd_value, "wmin": cmd_wmin, "classify-point": cmd_classify_point, "nu-xi": cmd_nu_xi,
    "gadic": cmd_gadic, "aut-check": cmd_aut_check, "aut-enumerate": cmd_aut_enumerate,
    "hurwitz": cmd_hurwitz, "catalog": cmd_catalog, "distinguish": cmd_distinguish,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling subcommands")

    p = _Parser(prog="poissonval", description="Poisson brackets, valuations and automorphisms.",
                epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    c = add("bracket", "bracket of two elements")
    _add_structure(c)
    c.add_argument("--f", required=True)
    c.add_argument("--g", required=True)

    c = add("jacobi", "check the Jacobi identity")
    _add_structure(c)
    c.add_argument("--f")
    c.add_argument("--g")
    c.add_argument("--h")
    c.add_argument("--samples", type=_positive, default=25)

    c = add("potential-structure", "generator brackets of a potential")
    c.add_argument("--potential", required=True)

    c = add("nf", "normal form modulo one polynomial")
    c.add_argument("--modulus", required=True)
    c.add_argument("--f", required=True)
    c.add_argument("--order", help="lex|grlex|grevlex[:z,y,x]; default lex z>y>x")

    for name, help in (("singularity", "isolated singularity report"), ("milnor", "Milnor number"),
                       ("syzygy", "linear syzygies of the partials")):
        c = add(name, help)
        c.add_argument("--potential", required=True)

    for name, help in (("value", "value of an element"), ("wmin", "generator-level w bound")):
        c = add(name, help)
        c.add_argument("--entry", required=True, choices=catalog.ENTRY_KEYS)
        c.add_argument("--family", required=True)
        c.add_argument("--param", type=_param, action="append", metavar="NAME=VALUE")
        if name == "value":
            c.add_argument("--f", required=True)
            c.add_argument("--den")

    c = add("classify-point", "classical or Weyl-type point valuation")
    _add_structure(c)
    c.add_argument("--point", type=_rational_list, required=True, metavar="A,B[,C]")
    c.add_argument("--f")

    c = add("nu-xi", "Weyl valuation ν_ξ")
    c.add_argument("--xi", type=_rational, required=True)
    c.add_argument("--w", type=int, default=0)
    c.add_argument("--f")

    c = add("gadic", "g-adic valuation for a principal prime g")
    _add_structure(c)
    c.add_argument("--g", required=True)
    c.add_argument("--f", required=True)
    c.add_argument("--den")

    c = add("aut-check", "epsilon-morphism test for a polynomial map")
    c.add_argument("--potential", required=True)
    c.add_argument("--map", required=True, metavar="IMG;IMG;IMG")
    c.add_argument("--root-order", type=_positive, help="images may use zeta, a primitive root of this order")

    c = add("aut-enumerate", "monomial symmetries of the Fermat potential")
    c.add_argument("--fermat", type=int, required=True, metavar="D")
    c.add_argument("--variant", choices=("graded", "fiber"), default="graded")
    c.add_argument("--threads", type=_positive)
    c.add_argument("--elements", action="store_true", help="list every element")

    c = add("hurwitz", "genus and automorphism order bounds")
    c.add_argument("--fermat", type=int, required=True, metavar="D")

    c = add("catalog", "recorded facts for the named fields")
    c.add_argument("--entry", choices=catalog.ENTRY_KEYS)

    c = add("distinguish", "separate two catalog entries")
    c.add_argument("--a", required=True, choices=catalog.ENTRY_KEYS)
    c.add_argument("--b", required=True, choices=catalog.ENTRY_KEYS)
    return p


def _text(payload: dict) -> str:
    if list(payload) == ["result"]:
        return str(payload["result"])
    lines = []
    for k, v in payload.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True, ensure_ascii=False)
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        payload, prov = COMMANDS[args.command](args)
    except UsageError as e:
        err.write(f"poissonval {args.command}: error: {e}\n\n{GRAMMAR}")
        return 2
    except (PolyError, ValueError, KeyError, ZeroDivisionError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        if args.json:
            out.write(json.dumps({"subcommand": args.command, "status": "error",
                                  "error": {"type": type(e).__name__, "message": msg}}) + "\n")
        else:
            err.write(f"poissonval {args.command}: {type(e).__name__}: {msg}\n")
        return 1
    payload = _jsonable(payload)
    if args.json:
        report = {"subcommand": args.command, "status": "ok", "result": payload, "provenance": prov}
        out.write(json.dumps(report, ensure_ascii=False) + "\n")
    else:
        out.write(_text(payload) + "\n")
        for line in prov:
            out.write(f"# {line}\n")
    return 0


def report_schema() -> dict:
    from importlib.resources import files
    return json.loads(files("poissonval").joinpath("schema/report.schema.json").read_text())


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
