"""Command-line front-end.  All results go to stdout as JSON; diagnostics go
to stderr.  Exit codes: 0 success or affirmative verdict, 1 negative
verdict, 2 input error, 3 unsupported or inconclusive."""

from __future__ import annotations

import argparse
import json
import sys

from ..certsys import certificates_of, check_compatibility, shift_guards
from ..errors import InputError, NotCompatible, PoleInRange, WZError
from ..holonomy import HOLONOMIC, NOT_HOLONOMIC, decide_conjugate_proper, decide_from_certificates
from ..mixedsplit import full_structure
from ..seqlab import (
    DEFAULT_BOUND,
    DEFAULT_ORDER,
    check_certificates_on_grid,
    diagonal,
    eval_grid,
    gf_truncate,
)
from ..terms import EvalContext, normalize_standard
from . import serial
from .build import infer_varspec, to_term
from .parser import parse

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _read_input(path):
    if path is None:
        return None
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"input is not valid JSON: {e}") from None


def _system(args, data):
    if data is not None and ("a" in data or "b" in data):
        return serial.dec_system(data)
    a, b = args.a or [], args.b or []
    if not a and not b:
        raise InputError("no certificate system given (use --input or --a/--b)")
    return serial.dec_system({"m": len(a), "n": len(b), "a": a, "b": b})


def _term(args, data):
    src = args.term
    m, n = args.m, args.n
    if data is not None and "term" in data:
        src = data["term"]
        m = data.get("m", m)
        n = data.get("n", n)
    if src is None:
        return None
    vs = infer_varspec(parse(src), m=m, n=n)
    return to_term(src, vs)


def _ints(s):
    return tuple(int(x) for x in s.split(",")) if s else None


def _ctx(args, m):
    if args.t:
        vals = tuple(serial.rational(x) for x in args.t.split(","))
    else:
        vals = tuple(serial.rational(1) for _ in range(m))
    return EvalContext(vals)


def _emit(args, command, payload):
    payload = dict(payload)
    payload["schema"] = serial.SCHEMA
    payload["command"] = command
    print(serial.dumps(payload))


def cmd_compat(args, data):
    c = _system(args, data)
    rep = check_compatibility(c)
    _emit(args, "compat", serial.enc_report(rep))
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_decompose(args, data):
    c = _system(args, data)
    sd = full_structure(c)
    _emit(args, "decompose", {"structure": serial.enc_structure(sd)})
    return EXIT_OK


def cmd_standardize(args, data):
    term = _term(args, data)
    if term is None:
        raise InputError("standardize needs --term")
    _emit(args, "standardize", {"term": serial.enc_term(normalize_standard(term))})
    return EXIT_OK


def cmd_holonomic(args, data):
    term = _term(args, data)
    if term is not None:
        v = decide_conjugate_proper(term)
    else:
        v = decide_from_certificates(_system(args, data))
    _emit(args, "holonomic", serial.enc_verdict(v))
    if v.status == HOLONOMIC:
        return EXIT_OK
    return EXIT_NEGATIVE if v.status == NOT_HOLONOMIC else EXIT_UNSUPPORTED


def _grid_of(args, data):
    term = _term(args, data)
    if term is None:
        raise InputError("a term is needed (use --term)")
    bounds = _ints(args.bounds) or (DEFAULT_BOUND,) * term.vs.n
    ctx = _ctx(args, term.vs.m)
    return term, ctx, eval_grid(term, ctx, bounds)


def cmd_eval(args, data):
    _, _, grid = _grid_of(args, data)
    _emit(args, "eval", {"grid": serial.enc_grid(grid)})
    return EXIT_OK


def cmd_verify(args, data):
    term, ctx, grid = _grid_of(args, data)
    guards = None
    if (data is not None and ("a" in data or "b" in data)) or args.a or args.b:
        c = _system(args, data)
    else:
        c = certificates_of(term)
        guards = shift_guards(term)
    rep = check_certificates_on_grid(grid, c, ctx, guards)
    _emit(args, "verify", {"report": serial.enc_grid_report(rep), "system": serial.enc_system(c)})
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_gf(args, data):
    term = _term(args, data)
    if term is None:
        raise InputError("gf needs --term")
    order = args.order if args.order is not None else DEFAULT_ORDER
    ctx = _ctx(args, term.vs.m)
    grid = eval_grid(term, ctx, (order,) * term.vs.n)
    gf = gf_truncate(grid, order)
    for spec in args.diagonal or []:
        i, j = _ints(spec)
        gf = diagonal(gf, i, j)
    _emit(args, "gf", {"gf": serial.enc_gf(gf)})
    return EXIT_OK


COMMANDS = {
    "compat": cmd_compat,
    "decompose": cmd_decompose,
    "standardize": cmd_standardize,
    "holonomic": cmd_holonomic,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "gf": cmd_gf,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wzht", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", help="JSON file with the input, or - for stdin")
    p.add_argument("--a", action="append", help="t-certificate (repeat for each i)")
    p.add_argument("--b", action="append", help="k-certificate (repeat for each j)")
    p.add_argument("--term", help="term expression, e.g. 'Geo(t1)*RisingStarInv(1, k1)'")
    p.add_argument("--m", type=int, help="number of t variables (default: inferred)")
    p.add_argument("--n", type=int, help="number of k variables (default: inferred)")
    p.add_argument("--bounds", help="grid bounds n1,n2,...")
    p.add_argument("--order", type=int, help="truncation order")
    p.add_argument("--t", help="rational t-values v1,v2,...")
    p.add_argument("--diagonal", action="append", help="diagonal index pair i,j (repeatable)")
    p.add_argument("--json-only", action="store_true", help="suppress stderr diagnostics")
    return p


def _classify(e: Exception) -> int:
    if isinstance(e, NotCompatible):
        return EXIT_NEGATIVE
    if isinstance(e, (InputError, PoleInRange, OSError, ValueError)):
        return EXIT_INPUT
    return EXIT_UNSUPPORTED


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        data = _read_input(args.input)
        return COMMANDS[args.command](args, data)
    except (WZError, OSError, ValueError) as e:
        _emit(args, args.command, {"error": type(e).__name__, "message": str(e)})
        if not args.json_only:
            print(f"wzht {args.command}: {e}", file=sys.stderr)
        return _classify(e)


def main(argv=None):
    sys.exit(run(argv))
