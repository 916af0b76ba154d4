"""The Ritt correspondence and factorization theory.

An exponential polynomial rewrites as a Laurent polynomial in Y_j = e^(b_j z)
for a Z-basis b_1..b_D of its exponent group.  Factorization happens over
Q(i): the Laurent polynomial is made honest by a corner shift, factored, and
each piece is classified as a unit, a simple factor (support on one line,
grouped by that line) or an irreducible factor.  Power-substitution
reducibility (the fractional-power phenomenon) is searched up to qmax per
direction and the lattice refined when a witness appears; cases that exceed
the refinement budget land in the residual, flagged unresolved.  The product
identity unit * simple * irreducible * residual == input holds exactly on
every path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import _bridge
from ._linalg import Echelon
from .constants import Const, const_cmp
from .errors import (
    BasisDoesNotSpan,
    CoefficientsOutsideBaseField,
    NotSimple,
    ReducibleInput,
    ZeroDivisor,
    ZeroPolynomial,
)
from .expring import (
    ExpPoly,
    exponent_coordinates,
    ep_mul,
    normalize,
    sorted_terms,
    support,
)
from .gauss import GaussRat
from .lattice import ExpBasis, exponent_basis


class LaurentPoly:
    """Sparse Laurent polynomial in the basis variables, Const coefficients."""

    __slots__ = ("basis", "terms", "ctx")

    def __init__(self, basis: ExpBasis, terms: dict, ctx):
        self.basis = basis
        self.terms = terms
        self.ctx = ctx

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def __repr__(self):
        return f"LaurentPoly({self.terms})"


def to_laurent(f: ExpPoly, basis: ExpBasis) -> LaurentPoly:
    """Term-by-term rewrite; BasisDoesNotSpan if a transition is fractional."""
    terms = {}
    for mu, lam in f.terms.items():
        coords = basis.express(mu)
        if coords is None:
            raise BasisDoesNotSpan(f"exponent {mu} not in the basis lattice")
        terms[tuple(coords)] = lam
    return LaurentPoly(basis, terms, f.ctx)


def from_laurent(q: LaurentPoly) -> ExpPoly:
    out = []
    for key, lam in q.terms.items():
        mu = q.ctx.zero
        for a, b in zip(key, q.basis.basis):
            if a:
                mu = mu + b * a
        out.append((mu, lam))
    return normalize(q.ctx, out)


# ------------------------------------------------------------- shift helpers


def shift_exponents(f: ExpPoly, mu: Const) -> ExpPoly:
    """Multiply by the unit e^(mu*z)."""
    return normalize(f.ctx, [(m + mu, lam) for m, lam in f.terms.items()])


def canonical_associate(f: ExpPoly):
    """(associate, unit) with associate having least exponent 0, coefficient 1.

    f == unit * associate exactly; the canonical associate of a factor makes
    'unique up to units' testable as literal equality.
    """
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no associate")
    terms = sorted_terms(f)
    mu_min, lam_min = terms[-1]
    assoc = normalize(
        f.ctx, [(m - mu_min, lam / lam_min) for m, lam in f.terms.items()])
    unit = normalize(f.ctx, [(mu_min, lam_min)])
    return assoc, unit


def unit_quotient(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    """The unit u with f == u*g; raises if no such single-term unit works."""
    if g.is_zero or f.length != g.length:
        raise ZeroDivisor("unit quotient undefined")
    tf, tg = sorted_terms(f)[0], sorted_terms(g)[0]
    u = normalize(f.ctx, [(tf[0] - tg[0], tf[1] / tg[1])])
    if ep_mul(u, g) != f:
        raise ArithmeticError("polynomials are not associates")
    return u


# ---------------------------------------------------------------- divisibility


def _grlex_key(t: tuple):
    return (sum(t), t)


def _corner_shift(terms: dict, dim: int):
    """(shift vector, honest dict): subtract per-variable minima."""
    if not terms:
        return (0,) * dim, {}
    mins = [min(key[j] for key in terms) for j in range(dim)]
    if not any(mins):
        return tuple(mins), dict(terms)
    out = {tuple(k - m for k, m in zip(key, mins)): c for key, c in terms.items()}
    return tuple(mins), out


def _honest_div(num: dict, den: dict):
    """Exact multivariate division over the Const field, or None.

    Both inputs honest (nonnegative integer exponent tuples).  Single-divisor
    leading-term division under graded lex is complete for exact division.
    """
    if not num:
        return {}
    dm = max(den, key=_grlex_key)
    dc_inv = den[dm].inv()
    zero_c = den[dm].ctx.zero
    rem = dict(num)
    quo: dict = {}
    while rem:
        rm = max(rem, key=_grlex_key)
        qm = tuple(a - b for a, b in zip(rm, dm))
        if any(x < 0 for x in qm):
            return None
        qc = rem[rm] * dc_inv
        quo[qm] = quo.get(qm, zero_c) + qc
        for m2, c2 in den.items():
            key = tuple(a + b for a, b in zip(qm, m2))
            s = rem.get(key)
            s = (-qc * c2) if s is None else s - qc * c2
            if s.is_zero:
                rem.pop(key, None)
            else:
                rem[key] = s
    return quo


def _span_contains(f_exps: list, g_exps: list, ctx) -> bool:
    """Every g exponent inside the Q-span of the f exponents."""
    axes, rows = exponent_coordinates(ctx, list(f_exps) + list(g_exps))
    ech = Echelon()
    nf = len(f_exps)
    for row in rows[:nf]:
        ech.add({k: v for k, v in enumerate(row) if v})
    for row in rows[nf:]:
        _, rem = ech.reduce({k: v for k, v in enumerate(row) if v})
        if rem:
            return False
    return True


def divides(g: ExpPoly, f: ExpPoly, refine_max: int = 6):
    """The quotient q with g*q == f, or None.

    Applies the support-containment necessary condition (with units pinning
    a common term at exponent 0) as a fast reject, then attempts exact
    Laurent division over the 1/n-refinements, n <= refine_max, of the group
    generated by the combined exponents.
    """
    if g.is_zero:
        raise ZeroDivisor("division by the zero polynomial")
    ctx = f.ctx
    if f.is_zero:
        return normalize(ctx, [])
    g_assoc, g_unit = canonical_associate(g)
    f_assoc, f_unit = canonical_associate(f)
    g_exps = [mu for mu in g_assoc.terms if not mu.is_zero]
    f_exps = [mu for mu in f_assoc.terms if not mu.is_zero]
    if not _span_contains(f_exps, g_exps, ctx):
        return None
    all_exps = f_exps + g_exps
    if not all_exps:
        # both are constants after unit normalization
        quot = f_unit.coefficients()[0] / g_unit.coefficients()[0]
        mu = f_unit.exponents()[0] - g_unit.exponents()[0]
        return normalize(ctx, [(mu, quot)])
    base = exponent_basis(all_exps)
    for n in range(1, max(1, refine_max) + 1):
        basis = base.refine(n) if n > 1 else base
        lf = to_laurent(f_assoc, basis)
        lg = to_laurent(g_assoc, basis)
        sf, hf = _corner_shift(lf.terms, basis.dimension)
        sg, hg = _corner_shift(lg.terms, basis.dimension)
        hq = _honest_div(hf, hg)
        if hq is None:
            continue
        shift = tuple(a - b for a, b in zip(sf, sg))
        q_terms = {tuple(k + s for k, s in zip(key, shift)): c
                   for key, c in hq.items()}
        q_assoc = from_laurent(LaurentPoly(basis, q_terms, ctx))
        mu_u = f_unit.exponents()[0] - g_unit.exponents()[0]
        lam_u = f_unit.coefficients()[0] / g_unit.coefficients()[0]
        q = ep_mul(q_assoc, normalize(ctx, [(mu_u, lam_u)]))
        assert ep_mul(g, q) == f
        return q
    return None


# ----------------------------------------------------------- Q(i) coefficients


def _gauss_coefficients(terms: dict):
    """terms' coefficients as GaussRat, or None if any is transcendental."""
    out = {}
    for key, lam in terms.items():
        gval = lam.as_gauss()
        if gval is None:
            return None
        out[key] = gval
    return out


def _to_bridge_poly(gauss_terms: dict) -> dict:
    out = {}
    for key, c in gauss_terms.items():
        mono = tuple((j, Fraction(e)) for j, e in enumerate(key) if e)
        out[mono] = c
    return out


def _from_bridge_poly(p: dict, dim: int, ctx) -> dict:
    out = {}
    for mono, c in p.items():
        key = [0] * dim
        for j, e in mono:
            key[j] = int(e)
        out[tuple(key)] = ctx.gauss(c.re, c.im)
    return out


def _factor_gauss(terms: dict, dim: int, ctx):
    """Irreducible factorization over Q(i) of an honest Laurent dict.

    Returns list of (terms dict, multiplicity); constants and the corner
    unit are dropped (callers recover the exact unit by division).
    """
    gauss_terms = _gauss_coefficients(terms)
    if gauss_terms is None:
        raise CoefficientsOutsideBaseField(
            "factorization needs coefficients in Q(i)")
    _, factors = _bridge.poly_factor(_to_bridge_poly(gauss_terms))
    out = []
    for fp, mult in factors:
        fd = _from_bridge_poly(fp, dim, ctx)
        if len(fd) == 1:
            continue  # monomial unit
        out.append((fd, mult))
    return out


# --------------------------------------------------------------- simple factors


class SimpleFactor:
    """One factor of a simple polynomial with its multiplicity.

    min_poly annotates blocks of degree >= 2 that stay irreducible over Q(i)
    with the coefficient list (ascending) of their univariate polynomial.
    """

    __slots__ = ("poly", "multiplicity", "min_poly")

    def __init__(self, poly: ExpPoly, multiplicity: int, min_poly=None):
        self.poly = poly
        self.multiplicity = multiplicity
        self.min_poly = min_poly

    def __repr__(self):
        return f"SimpleFactor({self.poly}, {self.multiplicity})"


class SimpleFactorization:
    __slots__ = ("unit", "factors")

    def __init__(self, unit: ExpPoly, factors: list):
        self.unit = unit
        self.factors = factors


def factor_simple(f: ExpPoly) -> SimpleFactorization:
    """Factor a simple polynomial exactly over Q(i).

    Degree-1 pieces come out as 1 - alpha*e^(mu*z); higher-degree pieces
    irreducible over Q(i) stay as annotated blocks.  The product of the unit
    and all factor powers reconstructs f exactly.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.length == 1:
        return SimpleFactorization(f, [])
    sup = support(f)
    if sup.q_dimension != 1:
        raise NotSimple("factor_simple needs a simple polynomial")
    assoc, _ = canonical_associate(f)
    # the lattice is generated by the original exponents, per the Ritt
    # correspondence; the unit-normalized associate may generate less
    exps = [mu for mu in f.terms if not mu.is_zero]
    basis = exponent_basis(exps)
    lp = to_laurent(assoc, basis)
    _, honest = _corner_shift(lp.terms, 1)
    pieces = _factor_gauss(honest, 1, f.ctx)
    factors = []
    for terms, mult in pieces:
        w = from_laurent(LaurentPoly(basis, terms, f.ctx))
        w_assoc, _ = canonical_associate(w)
        degree = max(k[0] for k in terms) - min(k[0] for k in terms)
        ann = None
        if degree >= 2:
            shift = min(k[0] for k in terms)
            coeffs = [f.ctx.zero.as_gauss()] * (degree + 1)
            for (k,), lam in terms.items():
                coeffs[k - shift] = lam.as_gauss()
            ann = coeffs
        factors.append(SimpleFactor(w_assoc, mult, ann))
    factors.sort(key=lambda s: _factor_sort_key(s.poly))
    prod = normalize(f.ctx, [(f.ctx.zero, f.ctx.one)])
    for s in factors:
        for _ in range(s.multiplicity):
            prod = ep_mul(prod, s.poly)
    unit = unit_quotient(f, prod) if not prod.is_zero else f
    return SimpleFactorization(unit, factors)


def _factor_sort_key(p: ExpPoly):
    import functools

    return tuple(
        functools.cmp_to_key(const_cmp)(x)
        for pair in sorted_terms(p)
        for x in pair
    )


# ---------------------------------------------------------- power irreducibility


class PowerIrreducibility:
    """Bounded verdict of the power-substitution search.

    power_irreducible means no witness with all substitution exponents
    <= bound; a witness is the first (lex) tuple making the substituted
    polynomial reducible, together with the factorization found.
    """

    __slots__ = ("power_irreducible", "bound", "witness", "factors")

    def __init__(self, power_irreducible, bound, witness=None, factors=None):
        self.power_irreducible = power_irreducible
        self.bound = bound
        self.witness = witness
        self.factors = factors


def _substitute_powers(terms: dict, qvec: tuple) -> dict:
    return {tuple(k * q for k, q in zip(key, qvec)): c for key, c in terms.items()}


def is_power_irreducible(q: LaurentPoly, qmax: int = 6) -> PowerIrreducibility:
    """Search substitution tuples 1 <= q_i <= qmax for reducibility.

    The input must be irreducible as given (ReducibleInput otherwise).  A
    True verdict means irreducible up to qmax only.
    """
    dim = q.dimension
    _, honest = _corner_shift(q.terms, dim)
    base = _factor_gauss(honest, dim, q.ctx)
    if sum(m for _, m in base) > 1:
        raise ReducibleInput("input already factors")
    for qvec in itertools.product(range(1, max(1, qmax) + 1), repeat=dim):
        if all(x == 1 for x in qvec):
            continue
        sub = _substitute_powers(honest, qvec)
        pieces = _factor_gauss(sub, dim, q.ctx)
        if sum(m for _, m in pieces) > 1:
            factors = [
                (LaurentPoly(q.basis.refine(list(qvec)), terms, q.ctx), m)
                for terms, m in pieces
            ]
            return PowerIrreducibility(False, qmax, qvec, factors)
    return PowerIrreducibility(True, qmax)


# ---------------------------------------------------------------- factorization


class RittFactorization:
    """unit * prod(simple^mult) * prod(irreducible^mult) * residual == source.

    simple_factors are (factor, multiplicity, support_line) triples grouped
    and sorted by their line; irreducible_factors are (factor, multiplicity)
    pairs power-irreducible up to the recorded bound; residual (flagged
    UNRESOLVED) collects pieces whose refinement would exceed refine_max.
    """

    __slots__ = ("unit", "simple_factors", "irreducible_factors", "residual",
                 "qmax", "refine_max")

    def __init__(self, unit, simple_factors, irreducible_factors, residual,
                 qmax, refine_max):
        self.unit = unit
        self.simple_factors = simple_factors
        self.irreducible_factors = irreducible_factors
        self.residual = residual
        self.qmax = qmax
        self.refine_max = refine_max

    @property
    def resolved(self) -> bool:
        return self.residual is None

    def product(self) -> ExpPoly:
        acc = self.unit
        for p, m, _ in self.simple_factors:
            for _ in range(m):
                acc = ep_mul(acc, p)
        for p, m in self.irreducible_factors:
            for _ in range(m):
                acc = ep_mul(acc, p)
        if self.residual is not None:
            acc = ep_mul(acc, self.residual)
        return acc

    def to_json_dict(self) -> dict:
        return {
            "unit": str(self.unit),
            "simple": [
                {"factor": str(p), "mult": m, "support_line": str(line)}
                for p, m, line in self.simple_factors
            ],
            "irreducible": [
                {"factor": str(p), "mult": m} for p, m in self.irreducible_factors
            ],
            "residual": None if self.residual is None else str(self.residual),
            "power_bound": self.qmax,
        }


def _line_key(w: ExpPoly) -> Const:
    """Canonical generator of the support line of a simple factor."""
    assoc, _ = canonical_associate(w)
    exps = [mu for mu in assoc.terms if not mu.is_zero]
    return exponent_basis(exps).basis[0]


def ritt_factor(f: ExpPoly, qmax: int = 6, refine_max: int = 6) -> RittFactorization:
    """Split f into unit x simple factors (grouped by support line) x
    irreducible factors, exactly, over Q(i) coefficients.

    Transcendental coefficients produce a partial result: the whole
    canonical associate lands in the residual.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    ctx = f.ctx
    if f.length == 1:
        return RittFactorization(f, [], [], None, qmax, refine_max)
    assoc, unit0 = canonical_associate(f)
    exps = [mu for mu in f.terms if not mu.is_zero]
    base = exponent_basis(exps)
    lp = to_laurent(assoc, base)
    if _gauss_coefficients(lp.terms) is None:
        return RittFactorization(unit0, [], [], assoc, qmax, refine_max)
    simple: list = []
    irreducible: list = []
    residual = None
    _, honest = _corner_shift(lp.terms, base.dimension)
    work = [(terms, base, mult, [1] * base.dimension)
            for terms, mult in _factor_gauss(honest, base.dimension, ctx)]
    while work:
        terms, basis, mult, cum = work.pop()
        w = from_laurent(LaurentPoly(basis, terms, ctx))
        if w.length == 1:
            continue  # unit piece, recovered in the final division
        w_assoc, _ = canonical_associate(w)
        dim_w = support(w_assoc).q_dimension
        if dim_w == 1:
            simple.append((w_assoc, mult))
            continue
        verdict = is_power_irreducible(LaurentPoly(basis, terms, ctx), qmax)
        if verdict.power_irreducible:
            irreducible.append((w_assoc, mult))
            continue
        qvec = verdict.witness
        if any(c * q > refine_max for c, q in zip(cum, qvec)):
            extra = w_assoc
            for _ in range(mult - 1):
                extra = ep_mul(extra, w_assoc)
            residual = extra if residual is None else ep_mul(residual, extra)
            continue
        new_cum = [c * q for c, q in zip(cum, qvec)]
        for piece, m in verdict.factors:
            work.append((piece.terms, piece.basis, mult * m, list(new_cum)))
    # merge duplicates, group simple factors by line
    simple_merged: dict = {}
    for w, m in simple:
        simple_merged[w] = simple_merged.get(w, 0) + m
    irr_merged: dict = {}
    for w, m in irreducible:
        irr_merged[w] = irr_merged.get(w, 0) + m
    simple_list = sorted(
        ((w, m, _line_key(w)) for w, m in simple_merged.items()),
        key=lambda t: (_factor_sort_key_const(t[2]), _factor_sort_key(t[0])))
    irr_list = sorted(irr_merged.items(), key=lambda t: _factor_sort_key(t[0]))
    prod = normalize(ctx, [(ctx.zero, ctx.one)])
    for w, m, _ in simple_list:
        for _ in range(m):
            prod = ep_mul(prod, w)
    for w, m in irr_list:
        for _ in range(m):
            prod = ep_mul(prod, w)
    if residual is not None:
        prod = ep_mul(prod, residual)
    unit = unit_quotient(f, prod)
    result = RittFactorization(unit, simple_list, irr_list, residual,
                               qmax, refine_max)
    assert result.product() == f
    return result


def _factor_sort_key_const(c: Const):
    import functools

    return functools.cmp_to_key(const_cmp)(c)
