"""The ring of exponential polynomials f(z) = sum of lam * e^(mu*z).

An ExpPoly is a finite map from exponents mu to nonzero coefficients lam,
both elements of the symbolic constant field; this is the group algebra of
(K, +) over K.  Exponents must be Q(i)-linear in {1} union generators so the
support (a Q-vector space of scalars) has computable coordinates; anything
else raises NonLinearExponent at construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from ._linalg import Echelon
from .constants import Const, Context, GaussRat, const_cmp, formal_exp
from .errors import ContextMismatch, DivisionByZero, NonLinearExponent, ZeroPolynomial


class ExpPoly:
    """Immutable canonical exponential polynomial."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self):
        raise TypeError("use normalize() or Context helpers to build ExpPoly")

    @staticmethod
    def _make(ctx: Context, terms: dict) -> "ExpPoly":
        self = object.__new__(ExpPoly)
        self.ctx = ctx
        self.terms = terms
        self._hash = None
        return self

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def length(self) -> int:
        return len(self.terms)

    def exponents(self) -> list:
        return [mu for mu, _ in sorted_terms(self)]

    def coefficients(self) -> list:
        return [lam for _, lam in sorted_terms(self)]

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            self._hash = h
        return h

    def __add__(self, other):
        return ep_add(self, other)

    def __sub__(self, other):
        return ep_add(self, ep_neg(other))

    def __neg__(self):
        return ep_neg(self)

    def __mul__(self, other):
        if isinstance(other, ExpPoly):
            return ep_mul(self, other)
        if isinstance(other, (int, Const, GaussRat, Fraction)):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        from .printer import exp_poly_to_str

        return exp_poly_to_str(self)

    def __repr__(self):
        return f"ExpPoly({self})"


def _check_exponent(mu: Const):
    mu.linear_parts()  # raises NonLinearExponent if unsuitable


def normalize(ctx: Context, raw_terms) -> ExpPoly:
    """Merge duplicate exponents, drop zero coefficients.

    raw_terms is an iterable of (exponent, coefficient) pairs; entries may be
    Const or anything Context can coerce (int, Fraction, GaussRat).
    """
    terms: dict = {}
    for mu, lam in raw_terms:
        if not isinstance(mu, Const):
            mu = ctx.rational(mu) if isinstance(mu, (int, Fraction)) else ctx.gauss(mu.re, mu.im)
        if not isinstance(lam, Const):
            lam = ctx.rational(lam) if isinstance(lam, (int, Fraction)) else ctx.gauss(lam.re, lam.im)
        ctx._check(mu)
        ctx._check(lam)
        _check_exponent(mu)
        cur = terms.get(mu)
        acc = lam if cur is None else cur + lam
        if acc.is_zero:
            terms.pop(mu, None)
        else:
            terms[mu] = acc
    return ExpPoly._make(ctx, terms)


def zero(ctx: Context) -> ExpPoly:
    return ExpPoly._make(ctx, {})


def one(ctx: Context) -> ExpPoly:
    return normalize(ctx, [(ctx.zero, ctx.one)])


def monomial(mu: Const, lam: Const) -> ExpPoly:
    """The single term lam * e^(mu*z)."""
    return normalize(mu.ctx, [(mu, lam)])


def exp_z(mu: Const) -> ExpPoly:
    """e^(mu*z)."""
    return monomial(mu, mu.ctx.one)


def sin_poly(ctx: Context, c: Const) -> ExpPoly:
    """sin(c*z) = (e^(i*c*z) - e^(-i*c*z)) / 2i."""
    ic = c * GaussRat(0, 1)
    half = ctx.gauss(0, Fraction(-1, 2))  # 1/(2i) = -i/2
    return normalize(ctx, [(ic, half), (-ic, -half)])


def cos_poly(ctx: Context, c: Const) -> ExpPoly:
    """cos(c*z) = (e^(i*c*z) + e^(-i*c*z)) / 2."""
    ic = c * GaussRat(0, 1)
    half = ctx.rational(1, 2)
    return normalize(ctx, [(ic, half), (-ic, half)])


def _same_ctx(f: ExpPoly, g: ExpPoly):
    if f.ctx is not g.ctx:
        raise ContextMismatch("polynomials from different Contexts")


def ep_add(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    _same_ctx(f, g)
    terms = dict(f.terms)
    for mu, lam in g.terms.items():
        cur = terms.get(mu)
        acc = lam if cur is None else cur + lam
        if acc.is_zero:
            terms.pop(mu, None)
        else:
            terms[mu] = acc
    return ExpPoly._make(f.ctx, terms)


def ep_neg(f: ExpPoly) -> ExpPoly:
    return ExpPoly._make(f.ctx, {mu: -lam for mu, lam in f.terms.items()})


def ep_mul(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    _same_ctx(f, g)
    terms: dict = {}
    for mu1, lam1 in f.terms.items():
        for mu2, lam2 in g.terms.items():
            mu = mu1 + mu2
            lam = lam1 * lam2
            cur = terms.get(mu)
            acc = lam if cur is None else cur + lam
            if acc.is_zero:
                terms.pop(mu, None)
            else:
                terms[mu] = acc
    return ExpPoly._make(f.ctx, terms)


def scale(f: ExpPoly, c) -> ExpPoly:
    if not isinstance(c, Const):
        c = f.ctx.rational(c) if isinstance(c, (int, Fraction)) else f.ctx.gauss(c.re, c.im)
    if c.is_zero:
        return zero(f.ctx)
    return ExpPoly._make(f.ctx, {mu: lam * c for mu, lam in f.terms.items()})


def is_unit(f: ExpPoly) -> bool:
    """Units of the ring are exactly the single-term polynomials lam*e^(mu*z)."""
    return len(f.terms) == 1


def sorted_terms(f: ExpPoly) -> list:
    """Terms in the canonical order (leading exponent first)."""
    return sorted(f.terms.items(), key=cmp_to_key(lambda a, b: const_cmp(a[0], b[0])),
                  reverse=True)


def min_exponent(f: ExpPoly) -> Const:
    """The least exponent in the canonical order.  f must be nonzero."""
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no exponents")
    return sorted_terms(f)[-1][0]


class Support:
    """Q-span data of a polynomial's exponents.

    axes lists the coordinate directions as (generator id or None, part)
    pairs, None meaning the rational constant direction and part 0/1 the
    real/imaginary component; coordinates holds one row of Fractions per
    exponent (in canonical term order).
    """

    __slots__ = ("axes", "coordinates", "q_dimension", "spanning_exponents")

    def __init__(self, axes, coordinates, q_dimension, spanning_exponents):
        self.axes = axes
        self.coordinates = coordinates
        self.q_dimension = q_dimension
        self.spanning_exponents = spanning_exponents


def exponent_coordinates(ctx: Context, exponents: list):
    """Shared Q-coordinates of linear exponents: (axes, rows of Fractions)."""
    parsed = []
    gids = set()
    has_const = False
    for mu in exponents:
        const, coeffs = mu.linear_parts()
        parsed.append((const, coeffs))
        gids |= set(coeffs)
        if const:
            has_const = True
    axes = []
    if has_const or not gids:
        axes.extend([(None, 0), (None, 1)])
    for g in sorted(gids):
        axes.extend([(g, 0), (g, 1)])
    index = {a: k for k, a in enumerate(axes)}
    rows = []
    for const, coeffs in parsed:
        row = [Fraction(0)] * len(axes)
        if const:
            row[index[(None, 0)]] = const.re
            row[index[(None, 1)]] = const.im
        for g, c in coeffs.items():
            row[index[(g, 0)]] = c.re
            row[index[(g, 1)]] = c.im
        rows.append(row)
    return axes, rows


def support(f: ExpPoly) -> Support:
    """The Q-space generated by the exponents, with exact rank data."""
    if f.is_zero:
        raise ZeroPolynomial("support of the zero polynomial")
    exps = f.exponents()
    axes, rows = exponent_coordinates(f.ctx, exps)
    ech = Echelon()
    spanning = []
    for mu, row in zip(exps, rows):
        vec = {k: v for k, v in enumerate(row) if v}
        if ech.add(vec):
            spanning.append(mu)
    return Support(axes, rows, ech.rank, spanning)


def is_simple(f: ExpPoly) -> bool:
    """dim supp(f) = 1."""
    return support(f).q_dimension == 1


def substitute_affine(f: ExpPoly, scale_c: Const, shift: Const) -> ExpPoly:
    """f(scale*z + shift): lam*e^(mu*z) -> (lam*exp(mu*shift))*e^((mu*scale)*z).

    Raises DivisionByZero for scale = 0 (the substitution must stay
    invertible) and propagates UnsupportedRootOfUnity from formal_exp.
    """
    ctx = f.ctx
    if not isinstance(scale_c, Const):
        scale_c = ctx.rational(scale_c)
    if not isinstance(shift, Const):
        shift = ctx.rational(shift)
    ctx._check(scale_c)
    ctx._check(shift)
    if scale_c.is_zero:
        raise DivisionByZero("affine substitution needs a nonzero scale")
    out = []
    for mu, lam in f.terms.items():
        factor = lam if shift.is_zero else lam * formal_exp(mu * shift)
        out.append((mu * scale_c, factor))
    return normalize(ctx, out)
