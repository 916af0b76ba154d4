"""Internal sparse multivariate polynomial arithmetic over GaussRat.

A monomial is a tuple of (generator_id, exponent) pairs sorted by id with
nonzero Fraction exponents; the empty tuple is 1.  Exponents may be negative
or fractional only for formal-exponential generators; that constraint is
enforced by the Const layer, not here.  A polynomial is a dict mapping
monomials to nonzero GaussRat coefficients; {} is the zero polynomial.

The term order is graded lexicographic: total degree first, ties broken by
comparing exponents generator-by-generator in id order (bigger exponent on
an earlier generator wins).  It is total and compatible with multiplication,
which is what exact division needs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from .gauss import GaussRat, ONE

Monomial = tuple
Poly = dict

MONO_ONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ga, ea = a[i]
        gb, eb = b[j]
        if ga < gb:
            out.append(a[i]); i += 1
        elif gb < ga:
            out.append(b[j]); j += 1
        else:
            e = ea + eb
            if e:
                out.append((ga, e))
            i += 1; j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_inv(a: Monomial) -> Monomial:
    return tuple((g, -e) for g, e in a)


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return mono_mul(a, mono_inv(b))


def mono_degree(a: Monomial) -> Fraction:
    return sum((e for _, e in a), Fraction(0))


def mono_cmp(a: Monomial, b: Monomial) -> int:
    """Graded lex; returns -1/0/1."""
    if a == b:
        return 0
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return -1 if da < db else 1
    i = j = 0
    while i < len(a) or j < len(b):
        ga, ea = a[i] if i < len(a) else (None, Fraction(0))
        gb, eb = b[j] if j < len(b) else (None, Fraction(0))
        if ga is None:
            # a exhausted: b has a later generator with exponent eb vs 0
            if eb:
                return 1 if eb < 0 else -1
            j += 1
            continue
        if gb is None:
            if ea:
                return -1 if ea < 0 else 1
            i += 1
            continue
        if ga < gb:
            return 1 if ea > 0 else -1
        if gb < ga:
            return -1 if eb > 0 else 1
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1; j += 1
    return 0


mono_sort_key = cmp_to_key(mono_cmp)


def p_zero() -> Poly:
    return {}


def p_const(c: GaussRat) -> Poly:
    return {MONO_ONE: c} if c else {}


P_ONE_TEMPLATE = {MONO_ONE: ONE}


def p_one() -> Poly:
    return {MONO_ONE: ONE}


def p_gen(gid: int, exp: Fraction = Fraction(1)) -> Poly:
    return {((gid, Fraction(exp)),): ONE}


def p_is_zero(p: Poly) -> bool:
    return not p


def p_add(a: Poly, b: Poly) -> Poly:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def p_neg(a: Poly) -> Poly:
    return {m: -c for m, c in a.items()}


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, p_neg(b))


def p_scale(a: Poly, c: GaussRat) -> Poly:
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def p_mul_term(a: Poly, m: Monomial, c: GaussRat) -> Poly:
    if not c:
        return {}
    return {mono_mul(km, m): kv * c for km, kv in a.items()}


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    for m, c in a.items():
        for m2, c2 in b.items():
            key = mono_mul(m, m2)
            s = out.get(key)
            v = c * c2
            if s is None:
                out[key] = v
            else:
                s = s + v
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def p_lead(a: Poly) -> tuple:
    """Leading (monomial, coefficient) under graded lex.  a must be nonzero."""
    best = None
    for m in a:
        if best is None or mono_cmp(m, best) > 0:
            best = m
    return best, a[best]


def p_trail(a: Poly) -> Monomial:
    """Trailing (minimal) monomial under graded lex.  a must be nonzero."""
    best = None
    for m in a:
        if best is None or mono_cmp(m, best) < 0:
            best = m
    return best


def p_exact_div(num: Poly, den: Poly) -> Poly:
    """Exact division in the formal Laurent sense.

    Raises ArithmeticError if den does not divide num exactly.  If a true
    quotient q exists then lead(q) = lead(num)/lead(den) and trail(q) =
    trail(num)/trail(den), so any quotient monomial falling below the
    trailing bound proves inexactness (the Laurent monomial group is not
    well-ordered, hence the explicit floor).
    """
    if not den:
        raise ArithmeticError("division by zero polynomial")
    if not num:
        return {}
    dm, dc = p_lead(den)
    dc_inv = dc.inv()
    floor = mono_div(p_trail(num), p_trail(den))
    rem = dict(num)
    quo: Poly = {}
    while rem:
        rm, rc = p_lead(rem)
        qm = mono_div(rm, dm)
        if mono_cmp(qm, floor) < 0:
            raise ArithmeticError("inexact polynomial division")
        qc = rc * dc_inv
        quo[qm] = quo.get(qm, GaussRat(0)) + qc
        for m2, c2 in den.items():
            key = mono_mul(qm, m2)
            s = rem.get(key, GaussRat(0)) - qc * c2
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return quo


def p_sorted_terms(a: Poly) -> list:
    """Terms sorted leading-first (graded lex descending)."""
    return sorted(a.items(), key=lambda kv: mono_sort_key(kv[0]), reverse=True)


def p_cmp(a: Poly, b: Poly) -> int:
    """Total order on polynomials (for canonical sorting only)."""
    ta, tb = p_sorted_terms(a), p_sorted_terms(b)
    for (ma, ca), (mb, cb) in zip(ta, tb):
        c = mono_cmp(ma, mb)
        if c:
            return c
        for x, y in ((ca.re, cb.re), (ca.im, cb.im)):
            if x != y:
                return -1 if x < y else 1
    if len(ta) != len(tb):
        return -1 if len(ta) < len(tb) else 1
    return 0
