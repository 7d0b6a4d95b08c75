"""Degree-based topological indices, computed two independent ways.

:func:`indices_from_edges` sums the defining expressions directly over a
graph's edges.  :func:`indices_from_mpoly` recovers the same quantities
from an M-polynomial through the degree-weight operator calculus.  The two
routes share no code path, so their agreement on a graph and its
M-polynomial is a meaningful cross-check rather than a tautology.

First Zagreb      M1  = sum (d_u + d_v)
Second Zagreb     M2  = sum d_u * d_v
Modified second   MM2 = sum 1 / (d_u * d_v)
Generalized Randic          R_a  = sum (d_u * d_v)^a
Reciprocal generalized      RR_a = sum (d_u * d_v)^-a   (i.e. RR_a = R_-a)
Symmetric division          SDD  = sum (min/max + max/min)

Integer alpha is computed exactly in rational arithmetic; non-integer
alpha in double precision (compare with a relative tolerance of 1e-12).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .graph import Graph
from .mpoly import MPoly

Real = Union[Fraction, float]
Alpha = Union[int, float]


def normalize_alpha(alpha: Alpha) -> Alpha:
    """Collapse integer-valued floats to int so 1.0 and 1 share one exact path."""
    if isinstance(alpha, float) and alpha.is_integer():
        return int(alpha)
    return alpha


def alpha_label(alpha: Alpha) -> str:
    """Canonical text label for an alpha value ("1", "0.5", "-2", ...)."""
    return repr(normalize_alpha(alpha))


@dataclass(frozen=True)
class IndexSet:
    """Six degree-based indices; the Randic families keyed by alpha."""

    m1: Fraction
    m2: Fraction
    mm2: Fraction
    sdd: Fraction
    r_alpha: dict[Alpha, Real]
    rr_alpha: dict[Alpha, Real]


def indices_from_edges(g: Graph, alphas: Iterable[Alpha] = (1,)) -> IndexSet:
    """Compute all indices by direct summation over the graph's edges."""
    d = g.degrees()
    m1 = Fraction(0)
    m2 = Fraction(0)
    mm2 = Fraction(0)
    sdd = Fraction(0)
    for u, v in g.edges:
        du, dv = d[u], d[v]
        m1 += du + dv
        m2 += du * dv
        mm2 += Fraction(1, du * dv)
        lo, hi = (du, dv) if du <= dv else (dv, du)
        sdd += Fraction(lo, hi) + Fraction(hi, lo)
    r: dict[Alpha, Real] = {}
    rr: dict[Alpha, Real] = {}
    for alpha in (normalize_alpha(a) for a in alphas):
        if isinstance(alpha, int):
            r[alpha] = sum((Fraction(d[u] * d[v]) ** alpha for u, v in g.edges), Fraction(0))
            rr[alpha] = sum((Fraction(d[u] * d[v]) ** -alpha for u, v in g.edges), Fraction(0))
        else:
            r[alpha] = sum(((d[u] * d[v]) ** alpha for u, v in g.edges), 0.0)
            rr[alpha] = sum(((d[u] * d[v]) ** -alpha for u, v in g.edges), 0.0)
    return IndexSet(m1=m1, m2=m2, mm2=mm2, sdd=sdd, r_alpha=r, rr_alpha=rr)


def indices_from_mpoly(p: MPoly, alphas: Iterable[Alpha] = (1,)) -> IndexSet:
    """Recover all indices from an M-polynomial via the operator calculus.

    M1 applies the two derivative weights and sums; M2/MM2 apply the
    combined weight ``(1, 1)`` / ``(-1, -1)``; SDD the mixed weights
    ``(1, -1) + (-1, 1)``; integer alpha the weight ``(a, a)`` or its
    negative.  Non-integer alpha falls back to direct float summation over
    terms, keeping the polynomial core exact.  Every term must have both
    exponents >= 1 (true of any graph's M-polynomial); otherwise the
    negative weights raise ``ZeroExponentWeight``.
    """
    m1 = (p.weight_by(1, 0) + p.weight_by(0, 1)).eval_at_one()
    m2 = p.weight_by(1, 1).eval_at_one()
    mm2 = p.weight_by(-1, -1).eval_at_one()
    sdd = (p.weight_by(1, -1) + p.weight_by(-1, 1)).eval_at_one()
    r: dict[Alpha, Real] = {}
    rr: dict[Alpha, Real] = {}
    for alpha in (normalize_alpha(a) for a in alphas):
        if isinstance(alpha, int):
            r[alpha] = p.weight_by(alpha, alpha).eval_at_one()
            rr[alpha] = p.weight_by(-alpha, -alpha).eval_at_one()
        else:
            r[alpha] = sum((float(c) * (i * j) ** alpha for (i, j), c in p.terms.items()), 0.0)
            rr[alpha] = sum((float(c) * (i * j) ** -alpha for (i, j), c in p.terms.items()), 0.0)
    return IndexSet(m1=m1, m2=m2, mm2=mm2, sdd=sdd, r_alpha=r, rr_alpha=rr)
