"""JSON encoding of the domain types.

Rationals are strings "p/q" (or "p"), polynomials and rational functions are
strings in the expression syntax, so everything round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..certsys import CertificateSystem, CompatReport
from ..christopher import ContinuousDecomp
from ..exactarith.ratfunc import RatFunc
from ..exactarith.ring import VarSpec, poly_str
from ..holonomy import HolonomyVerdict
from ..mixedsplit import StructureData
from ..oresato import ShiftDecomp
from ..seqlab import Grid, GridReport, TruncatedGF
from ..terms import FactorialTerm, PoleAt, StandardFormTerm
from .build import to_ratfunc, to_rational, to_zpoly

SCHEMA = "wzht/1"


def q(x) -> str:
    return str(Fraction(x))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _poly(p, vs: VarSpec) -> str:
    return poly_str(p)


def _mpoly(s: str, vs: VarSpec):
    r = to_ratfunc(s, vs)
    return r.num.quo_ground(r.den.LC)


# -- encoders -----------------------------------------------------------------


def enc_system(c: CertificateSystem) -> dict:
    return {"m": c.vs.m, "n": c.vs.n, "a": [str(x) for x in c.a], "b": [str(x) for x in c.b]}


def dec_system(d: dict) -> CertificateSystem:
    a, b = list(d.get("a", [])), list(d.get("b", []))
    vs = VarSpec(int(d.get("m", len(a))), int(d.get("n", len(b))))
    return CertificateSystem(vs, [to_ratfunc(x, vs) for x in a], [to_ratfunc(x, vs) for x in b])


def enc_report(r: CompatReport) -> dict:
    return {
        "ok": r.ok,
        "violations": [
            {"condition": tag, "indices": list(ij), "residual": str(res)}
            for tag, ij, res in r.violations
        ],
    }


def enc_factorial(T: FactorialTerm) -> dict:
    return {
        "mu": [q(x) for x in T.mu],
        "num_parts": [{"alpha": q(a), "v": list(v)} for a, v in T.num_parts],
        "den_parts": [{"alpha": q(a), "v": list(v)} for a, v in T.den_parts],
        "num_poly_parts": [{"rho": poly_str(r), "v": list(v)} for r, v in T.num_poly_parts],
        "den_poly_parts": [{"rho": poly_str(r), "v": list(v)} for r, v in T.den_poly_parts],
    }


def dec_factorial(d: dict) -> FactorialTerm:
    return FactorialTerm(
        tuple(Fraction(x) for x in d["mu"]),
        tuple((Fraction(p["alpha"]), tuple(p["v"])) for p in d.get("num_parts", [])),
        tuple((Fraction(p["alpha"]), tuple(p["v"])) for p in d.get("den_parts", [])),
        tuple((to_zpoly(p["rho"]), tuple(p["v"])) for p in d.get("num_poly_parts", [])),
        tuple((to_zpoly(p["rho"]), tuple(p["v"])) for p in d.get("den_poly_parts", [])),
    )


def enc_term(t: StandardFormTerm) -> dict:
    return {
        "m": t.vs.m,
        "n": t.vs.n,
        "f": str(t.f),
        "g0": str(t.g0),
        "powers": [{"gamma": q(g), "g": poly_str(p)} for g, p in t.powers],
        "h": [str(x) for x in t.h],
        "T": enc_factorial(t.T),
    }


def dec_term(d: dict) -> StandardFormTerm:
    vs = VarSpec(int(d["m"]), int(d["n"]))
    return StandardFormTerm(
        vs,
        to_ratfunc(d["f"], vs),
        to_ratfunc(d["g0"], vs),
        tuple((Fraction(p["gamma"]), _mpoly(p["g"], vs)) for p in d["powers"]),
        tuple(to_ratfunc(x, vs) for x in d["h"]),
        dec_factorial(d["T"]),
    )


def enc_cont(c: ContinuousDecomp) -> dict:
    return {
        "g0": str(c.g0),
        "parts": [{"gamma": q(g), "g": poly_str(p)} for g, p in c.parts],
    }


def dec_cont(d: dict, vs: VarSpec) -> ContinuousDecomp:
    return ContinuousDecomp(
        vs,
        to_ratfunc(d["g0"], vs),
        tuple((Fraction(p["gamma"]), _mpoly(p["g"], vs)) for p in d["parts"]),
    )


def enc_shift(s: ShiftDecomp) -> dict:
    return {
        "f": str(s.f),
        "mu": [q(x) for x in s.mu],
        "parts": [
            {"v": list(v), "r_num": poly_str(rn), "r_den": poly_str(rd)} for v, rn, rd in s.parts
        ],
    }


def dec_shift(d: dict, vs: VarSpec) -> ShiftDecomp:
    return ShiftDecomp(
        vs,
        to_ratfunc(d["f"], vs),
        tuple(Fraction(x) for x in d["mu"]),
        tuple((tuple(p["v"]), to_zpoly(p["r_num"]), to_zpoly(p["r_den"])) for p in d["parts"]),
    )


def enc_structure(s: StructureData) -> dict:
    return {
        "m": s.vs.m,
        "n": s.vs.n,
        "f": str(s.f),
        "cont": enc_cont(s.cont),
        "h": [str(x) for x in s.h],
        "shift": enc_shift(s.shift),
    }


def dec_structure(d: dict) -> StructureData:
    vs = VarSpec(int(d["m"]), int(d["n"]))
    return StructureData(
        vs,
        to_ratfunc(d["f"], vs),
        dec_cont(d["cont"], vs),
        tuple(to_ratfunc(x, vs) for x in d["h"]),
        dec_shift(d["shift"], vs),
    )


def enc_verdict(v: HolonomyVerdict) -> dict:
    return {
        "status": v.status,
        "witness": enc_term(v.witness) if v.witness is not None else None,
        "offender": poly_str(v.offender) if v.offender is not None else None,
    }


def dec_verdict(d: dict, vs: VarSpec) -> HolonomyVerdict:
    return HolonomyVerdict(
        d["status"],
        dec_term(d["witness"]) if d.get("witness") else None,
        _mpoly(d["offender"], vs) if d.get("offender") else None,
    )


def _val(x):
    return "pole" if isinstance(x, PoleAt) else q(x)


def _unval(s, k):
    return PoleAt(tuple(k)) if s == "pole" else Fraction(s)


def enc_grid(g: Grid) -> dict:
    return {
        "bounds": list(g.bounds),
        "values": [{"k": list(k), "value": _val(g.values[k])} for k in g.points()],
    }


def dec_grid(d: dict) -> Grid:
    return Grid(
        tuple(d["bounds"]), {tuple(e["k"]): _unval(e["value"], e["k"]) for e in d["values"]}
    )


def enc_grid_report(r: GridReport) -> dict:
    return {
        "ok": r.ok,
        "checked": r.checked,
        "masked": r.masked,
        "violations": [{"j": j, "k": list(k)} for j, k in r.violations],
    }


def enc_gf(g: TruncatedGF) -> dict:
    return {
        "order": g.order,
        "nvars": g.nvars,
        "coeffs": [{"e": list(e), "c": q(c)} for e, c in sorted(g.normalized().items())],
    }


def dec_gf(d: dict) -> TruncatedGF:
    return TruncatedGF(
        int(d["order"]), int(d["nvars"]), {tuple(x["e"]): Fraction(x["c"]) for x in d["coeffs"]}
    )


def dec_ratfunc(s: str, vs: VarSpec) -> RatFunc:
    return to_ratfunc(s, vs)


def rational(s) -> Fraction:
    return to_rational(s) if isinstance(s, str) else Fraction(s)
