"""Grids of exact sequence values, pointwise certificate checks and
truncated generating functions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ

from .certsys import CertificateSystem
from .errors import BadIndex, InputError, PoleInRange
from .exactarith.ring import MultiPoly, evaluate, qq, to_fraction
from .terms import EvalContext, PoleAt, StandardFormTerm, eval_term

DEFAULT_BOUND = 10
DEFAULT_ORDER = 8


@dataclass(frozen=True)
class Grid:
    bounds: tuple[int, ...]
    values: dict = field(hash=False, compare=True)

    def points(self):
        return itertools.product(*(range(b + 1) for b in self.bounds))

    def __getitem__(self, k):
        return self.values[tuple(k)]


@dataclass(frozen=True)
class TruncatedGF:
    order: int
    nvars: int
    coeffs: dict = field(hash=False, compare=True)

    def coeff(self, e) -> Fraction:
        return self.coeffs.get(tuple(e), Fraction(0))

    def normalized(self) -> dict:
        return {e: c for e, c in self.coeffs.items() if c}

    def __eq__(self, other):
        if not isinstance(other, TruncatedGF):
            return NotImplemented
        return (self.order, self.nvars) == (other.order, other.nvars) and (
            self.normalized() == other.normalized()
        )


def _box(bounds):
    return itertools.product(*(range(b + 1) for b in bounds))


def eval_grid(term: StandardFormTerm, ctx: EvalContext, bounds) -> Grid:
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != term.vs.n or any(b < 0 for b in bounds):
        raise InputError("bounds must be n non-negative integers")
    return Grid(bounds, {k: eval_term(term, ctx, k) for k in _box(bounds)})


def grid_from_function(bounds, fn) -> Grid:
    """Grid with values fn(k); used for sequences installed by hand."""
    bounds = tuple(bounds)
    return Grid(bounds, {k: fn(k) for k in _box(bounds)})


@dataclass(frozen=True)
class GridReport:
    checked: int
    masked: int
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def check_certificates_on_grid(grid: Grid, c: CertificateSystem, ctx: EvalContext, guards=None) -> GridReport:
    """Check v_j H(k + e_j) = u_j H(k) with b_j = u_j/v_j at every point where
    k + e_j is in the box, neither value is a pole and u_j v_j does not vanish.

    The zeros of u_j are masked too: nonvanishing rising factorials satisfy
    their recurrence only away from them.  ``guards`` (see
    ``certsys.shift_guards``) adds, per j, polynomials whose zeros are masked
    as well.
    """
    vs = c.vs
    if len(grid.bounds) != vs.n:
        raise InputError("grid and certificate system disagree on n")
    tq = [qq(Fraction(x)) for x in ctx.t_values]
    checked = masked = 0
    bad = []
    for j in range(vs.n):
        bj = c.b[j]
        for k in grid.points():
            if k[j] + 1 > grid.bounds[j]:
                continue
            k2 = k[:j] + (k[j] + 1,) + k[j + 1 :]
            h0, h1 = grid.values[k], grid.values[k2]
            point = tq + [QQ(x) for x in k]
            u = evaluate(bj.num, point)
            v = evaluate(bj.den, point)
            if (
                isinstance(h0, PoleAt)
                or isinstance(h1, PoleAt)
                or u == 0
                or v == 0
                or (guards is not None and any(evaluate(g, point) == 0 for g in guards[j]))
            ):
                masked += 1
                continue
            checked += 1
            if to_fraction(v) * h1 != to_fraction(u) * h0:
                bad.append((j + 1, k))
    return GridReport(checked, masked, tuple(bad))


def equal_mod_algebraic(g1: Grid, g2: Grid, p: MultiPoly) -> bool:
    if g1.bounds != g2.bounds:
        raise InputError("grids have different bounds")
    if not p:
        raise InputError("the polynomial must be nonzero")
    nv = p.ring.ngens
    for k in g1.points():
        if g1.values[k] != g2.values[k]:
            point = [QQ(0)] * (nv - len(k)) + [QQ(x) for x in k]
            if evaluate(p, point) != 0:
                return False
    return True


def gf_truncate(grid: Grid, order: int) -> TruncatedGF:
    if order > min(grid.bounds, default=order):
        raise InputError("order exceeds the grid bounds")
    coeffs = {}
    for e in _box([order] * len(grid.bounds)):
        val = grid.values[e]
        if isinstance(val, PoleAt):
            raise PoleInRange(f"pole at {e} inside truncation order {order}")
        if val:
            coeffs[e] = Fraction(val)
    return TruncatedGF(order, len(grid.bounds), coeffs)


def diagonal(gf: TruncatedGF, i: int, j: int) -> TruncatedGF:
    """Keep the terms whose exponents in variables i and j (1-based) agree;
    the merged variable takes the place of i and variable j is removed."""
    if not (1 <= i < j <= gf.nvars):
        raise BadIndex(f"need 1 <= i < j <= {gf.nvars}, got ({i}, {j})")
    out = {}
    for e, c in gf.coeffs.items():
        if e[i - 1] == e[j - 1]:
            out[e[: j - 1] + e[j:]] = c
    return TruncatedGF(gf.order, gf.nvars - 1, out)


def gf_product(g1: TruncatedGF, g2: TruncatedGF) -> TruncatedGF:
    """G1(y) * G2(z) in separate variable blocks (y first)."""
    out = {}
    for e1, c1 in g1.coeffs.items():
        for e2, c2 in g2.coeffs.items():
            out[e1 + e2] = c1 * c2
    return TruncatedGF(max(g1.order, g2.order), g1.nvars + g2.nvars, out)


def hadamard_closure_check(
    t1: StandardFormTerm,
    t2: StandardFormTerm,
    ctx: EvalContext,
    order: int = DEFAULT_ORDER,
    pairs=None,
) -> bool:
    """Compare the gf of H1*H2 with the iterated diagonals of G1(y) G2(z).

    ``pairs`` overrides the diagonal index pairs (1-based, applied in order);
    by default variable y_l is merged with z_l for every l.
    """
    if t1.vs != t2.vs:
        raise InputError("terms over different variables")
    n = t1.vs.n
    bounds = (order,) * n
    G1 = eval_grid(t1, ctx, bounds)
    G2 = eval_grid(t2, ctx, bounds)
    prod = {}
    for k in G1.points():
        a, b = G1.values[k], G2.values[k]
        if isinstance(a, PoleAt) or isinstance(b, PoleAt):
            raise PoleInRange(f"pole at {k}")
        prod[k] = a * b
    target = gf_truncate(Grid(bounds, prod), order)
    G = gf_product(gf_truncate(G1, order), gf_truncate(G2, order))
    if pairs is None:
        # after merging y_1..y_{l-1}, z_l sits at position n + 1
        pairs = [(l, n + 1) for l in range(1, n + 1)]
    for i, j in pairs:
        G = diagonal(G, i, j)
    return G == target


__all__ = [
    "DEFAULT_BOUND",
    "DEFAULT_ORDER",
    "Grid",
    "GridReport",
    "TruncatedGF",
    "check_certificates_on_grid",
    "diagonal",
    "equal_mod_algebraic",
    "eval_grid",
    "gf_product",
    "gf_truncate",
    "grid_from_function",
    "hadamard_closure_check",
]
