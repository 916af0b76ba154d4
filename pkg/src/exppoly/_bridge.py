"""Bridge to sympy for polynomial gcd and factorization over Q(i).

The internal representation allows fractional and negative exponents on
formal-exponential generators; sympy wants honest integer exponents.  The
bridge scales each generator's exponents by the lcm of their denominators and
shifts negatives away before converting, and undoes the transform on the way
back.  Laurent units introduced by the shift are irrelevant to the callers,
which re-normalize canonically afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

import sympy
from sympy.polys.domains import QQ_I

from ._poly import Poly, p_is_zero
from .gauss import GaussRat

_SYMS: dict[int, sympy.Symbol] = {}


def _sym(gid: int) -> sympy.Symbol:
    s = _SYMS.get(gid)
    if s is None:
        s = sympy.Symbol(f"g{gid}")
        _SYMS[gid] = s
    return s


def _lcm(a: int, b: int) -> int:
    return a * b // int_gcd(a, b)


def _transform(polys: list[Poly]):
    """Joint scale/shift making all exponents nonnegative integers.

    Returns (gids, scales, shifts, transformed dicts) where transformed
    dicts map integer exponent tuples to GaussRat.
    """
    gids = sorted({g for p in polys for m in p for g, _ in m})
    scales = {g: 1 for g in gids}
    shifts = {g: Fraction(0) for g in gids}
    for p in polys:
        for m in p:
            for g, e in m:
                scales[g] = _lcm(scales[g], e.denominator)
                if e < shifts[g]:
                    shifts[g] = e
    out = []
    for p in polys:
        d = {}
        for m, c in p.items():
            exps = dict(m)
            key = tuple(
                int((exps.get(g, Fraction(0)) - shifts[g]) * scales[g]) for g in gids
            )
            d[key] = c
        out.append(d)
    return gids, scales, shifts, out


def _to_sympy(d: dict, gids) -> sympy.Poly:
    rep = {
        key: QQ_I.new(sympy.Rational(c.re.numerator, c.re.denominator),
                      sympy.Rational(c.im.numerator, c.im.denominator))
        for key, c in d.items()
    }
    return sympy.Poly.from_dict(rep, *[_sym(g) for g in gids], domain=QQ_I)


def _from_sympy(poly: sympy.Poly, gids, scales, shifts) -> Poly:
    out: Poly = {}
    for key, c in poly.rep.to_dict().items():
        mono = []
        for g, e in zip(gids, key):
            val = Fraction(int(e), scales[g]) + shifts[g]
            if val:
                mono.append((g, val))
        coeff = GaussRat(Fraction(int(c.x.numerator), int(c.x.denominator)),
                         Fraction(int(c.y.numerator), int(c.y.denominator)))
        out[tuple(mono)] = coeff
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """gcd over Q(i), well-defined up to units (monomials and constants)."""
    if p_is_zero(a):
        return dict(b)
    if p_is_zero(b):
        return dict(a)
    gids, scales, shifts, (ta, tb) = _transform([a, b])
    if not gids:
        return {(): GaussRat(1)}
    sa, sb = _to_sympy(ta, gids), _to_sympy(tb, gids)
    g = sa.gcd(sb)
    return _from_sympy(g, gids, scales, shifts)


def poly_factor(a: Poly):
    """Irreducible factorization over Q(i).

    Returns (constant: GaussRat, [(Poly, multiplicity), ...]).  Input
    exponents must already be nonnegative integers (honest polynomial);
    monomial content shows up as a factor of the transformed input and is
    handled by callers through canonical normalization.
    """
    gids, scales, shifts, (ta,) = _transform([a])
    if not gids:
        ((m, c),) = a.items()
        return c, []
    sa = _to_sympy(ta, gids)
    const, factors = sa.factor_list()
    c_elem = QQ_I.from_sympy(const)
    coeff = GaussRat(Fraction(int(c_elem.x.numerator), int(c_elem.x.denominator)),
                     Fraction(int(c_elem.y.numerator), int(c_elem.y.denominator)))
    out = []
    for f, mult in factors:
        out.append((_from_sympy(f, gids, scales, shifts), int(mult)))
    return coeff, out


def cyclotomic_coeffs(n: int) -> list[int]:
    """Integer coefficient list (ascending degree) of the nth cyclotomic polynomial."""
    x = sympy.Symbol("x")
    p = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    return [int(c) for c in reversed(p.all_coeffs())]
