"""The exact symbolic constant field K = Q(i)(pi, t1, t2, ..., log(.), exp(.)).

A Const is a canonical fraction of sparse multivariate polynomials over the
Gaussian rationals in a Context's generators.  Generators are pi, declared
transcendentals, formal logarithms and formal exponential constants; all are
algebraically independent by construction except for the relations the
formal-exponential reduction installs:

    exp(c1) * exp(c2) == exp(c1 + c2)        (monomial exponent addition)
    exp(2*pi*i*q) in {1, i, -1, -i}          (q rational, denominator | 4)

The kernel of formal_exp is exactly 2*pi*i*Z.

Canonical form: numerator and denominator share no factor (polynomial gcd
over Q(i)), the denominator contains no formal-exponential monomial factor
and is monic under graded lex, and a zero value is 0/1.  Equality is
structural equality of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from . import _poly as P
from ._bridge import poly_gcd
from ._linalg import Echelon
from .errors import (
    ContextMismatch,
    DenominatorBoundExceeded,
    DivisionByZero,
    NonLinearExponent,
    UnsupportedRootOfUnity,
)
from .gauss import GaussRat, I_UNIT, ONE

KIND_PI = "pi"
KIND_DECLARED = "declared"
KIND_LOG = "log"
KIND_EXP = "exp"

_ROOTS_OF_UNITY = {
    Fraction(0): ONE,
    Fraction(1, 4): I_UNIT,
    Fraction(1, 2): -ONE,
    Fraction(3, 4): -I_UNIT,
}


class Generator:
    """A transcendental generator registered in a Context."""

    __slots__ = ("kind", "name", "argument", "id")

    def __init__(self, kind: str, gid: int, name=None, argument=None):
        self.kind = kind
        self.id = gid
        self.name = name
        self.argument = argument

    def __repr__(self):
        if self.kind == KIND_PI:
            return "pi"
        if self.kind == KIND_DECLARED:
            return self.name
        return f"{self.kind}#{self.id}"


class Context:
    """Generator registry plus the formal-exponential reduction tables.

    One logical computation per Context; Const values from different
    contexts never mix (ContextMismatch).
    """

    def __init__(self, exp_denominator_bound: int = 64):
        self.generators: list[Generator] = []
        self.exp_denominator_bound = exp_denominator_bound
        self._by_name: dict[str, Generator] = {}
        self._log_by_arg: dict = {}
        self._exp_atoms: list = []  # (atom: Const, gen: Generator)
        self._pi = self._register(Generator(KIND_PI, 0))
        self._cache_pi = self._gen_const(self._pi)
        self._cache_two_pi_i = self._cache_pi * GaussRat(0, 2)

    def _register(self, gen: Generator) -> Generator:
        assert gen.id == len(self.generators)
        self.generators.append(gen)
        return gen

    def is_exp_gen(self, gid: int) -> bool:
        return self.generators[gid].kind == KIND_EXP

    # ------------------------------------------------------------------ values

    def _gen_const(self, gen: Generator) -> "Const":
        return Const._make(self, P.p_gen(gen.id), P.p_one())

    def rational(self, p, q=1) -> "Const":
        return self.gauss(Fraction(p, q), 0)

    def gauss(self, re, im) -> "Const":
        return Const._make(self, P.p_const(GaussRat(re, im)), P.p_one())

    @property
    def zero(self) -> "Const":
        return self.gauss(0, 0)

    @property
    def one(self) -> "Const":
        return self.gauss(1, 0)

    @property
    def i(self) -> "Const":
        return self.gauss(0, 1)

    @property
    def pi(self) -> "Const":
        return self._cache_pi

    @property
    def two_pi_i(self) -> "Const":
        return self._cache_two_pi_i

    def declare(self, name: str) -> "Const":
        """Declare (or fetch) an independent transcendental generator."""
        gen = self._by_name.get(name)
        if gen is None:
            if not name.isidentifier():
                raise ValueError(f"invalid generator name {name!r}")
            gen = self._register(Generator(KIND_DECLARED, len(self.generators), name=name))
            self._by_name[name] = gen
        return self._gen_const(gen)

    def lookup(self, name: str):
        gen = self._by_name.get(name)
        return None if gen is None else self._gen_const(gen)

    def log_of(self, c: "Const") -> "Const":
        """A fixed value of log c.

        Built-in evaluations: log 1 = 0 and the 4th roots of unity get the
        principal value (argument in (-pi, pi]); every other argument gets a
        fresh formal logarithm generator.
        """
        self._check(c)
        if c.is_zero:
            raise DivisionByZero("log of zero")
        g = c.as_gauss()
        if g is not None:
            if g == ONE:
                return self.zero
            if g == I_UNIT:
                return self.pi * GaussRat(0, Fraction(1, 2))
            if g == -ONE:
                return self.pi * GaussRat(0, 1)
            if g == -I_UNIT:
                return self.pi * GaussRat(0, Fraction(-1, 2))
        gen = self._log_by_arg.get(c)
        if gen is None:
            gen = self._register(Generator(KIND_LOG, len(self.generators), argument=c))
            self._log_by_arg[c] = gen
        return self._gen_const(gen)

    def _check(self, c: "Const"):
        if c.ctx is not self:
            raise ContextMismatch("value belongs to a different Context")

    # --------------------------------------------------- formal exponentials

    def _exp_reduce(self, c: "Const"):
        """Decompose c = q0*(2*pi*i) + sum(q_j * atom_j) over Q.

        Registers a fresh atom for any irreducible remainder, so the
        decomposition always exists and is unique for the current registry.
        """
        rows = [self.two_pi_i] + [a for a, _ in self._exp_atoms]
        vecs = q_coordinates(rows + [c])
        target = vecs.pop()
        ech = Echelon()
        for v in vecs:
            ech.add(v)
        combo, rem = ech.reduce(target)
        if rem:
            lead = rem[min(rem)]
            partial = self.zero
            for idx, coeff in combo.items():
                partial = partial + rows[idx] * GaussRat(coeff)
            atom = (c - partial) * GaussRat(Fraction(1) / lead)
            gen = self._register(Generator(KIND_EXP, len(self.generators), argument=atom))
            self._exp_atoms.append((atom, gen))
            combo[len(rows)] = lead  # coefficient of the new atom
            rows.append(atom)
        q0 = combo.get(0, Fraction(0))
        parts = []
        for idx, coeff in sorted(combo.items()):
            if idx == 0 or not coeff:
                continue
            gen = self._exp_atoms[idx - 1][1]
            parts.append((gen, coeff))
        return q0, parts


class Const:
    """An element of the symbolic constant field, immutable and canonical."""

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self):
        raise TypeError("use Context factories to build Const values")

    @staticmethod
    def _make(ctx: Context, num: P.Poly, den: P.Poly) -> "Const":
        num, den = _canonicalize(ctx, num, den)
        self = object.__new__(Const)
        self.ctx = ctx
        self.num = num
        self.den = den
        self._hash = None
        return self

    # ----------------------------------------------------------- predicates

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return _is_one(self.num) and _is_one(self.den)

    def as_gauss(self):
        """The value as a GaussRat if it lies in Q(i), else None."""
        if not self.num:
            return GaussRat(0)
        if _is_one(self.den) and len(self.num) == 1 and P.MONO_ONE in self.num:
            return self.num[P.MONO_ONE]
        return None

    def as_fraction(self):
        g = self.as_gauss()
        if g is not None and g.is_rational:
            return g.re
        return None

    def generator_ids(self) -> frozenset:
        ids = set()
        for p in (self.num, self.den):
            for m in p:
                for g, _ in m:
                    ids.add(g)
        return frozenset(ids)

    def linear_parts(self):
        """(constant, {generator id: coefficient}) for Q(i)-linear values.

        Raises NonLinearExponent when the value has a denominator or any
        monomial of total degree other than 0 or a single generator^1.
        """
        if not _is_one(self.den):
            raise NonLinearExponent(f"exponent has a denominator: {self}")
        const = GaussRat(0)
        coeffs: dict[int, GaussRat] = {}
        for m, c in self.num.items():
            if m == P.MONO_ONE:
                const = c
            elif len(m) == 1 and m[0][1] == 1:
                coeffs[m[0][0]] = c
            else:
                raise NonLinearExponent(f"nonlinear exponent term in {self}")
        return const, coeffs

    # ----------------------------------------------------------- arithmetic

    def _coerce(self, x):
        if isinstance(x, Const):
            self.ctx._check(x)
            return x
        if isinstance(x, (int, Fraction)):
            return self.ctx.rational(x)
        if isinstance(x, GaussRat):
            return self.ctx.gauss(x.re, x.im)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if _is_one(self.den) and _is_one(o.den):
            return Const._make(self.ctx, P.p_add(self.num, o.num), P.p_one())
        num = P.p_add(P.p_mul(self.num, o.den), P.p_mul(o.num, self.den))
        return Const._make(self.ctx, num, P.p_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        self2 = object.__new__(Const)
        self2.ctx = self.ctx
        self2.num = P.p_neg(self.num)
        self2.den = self.den
        self2._hash = None
        return self2

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if _is_one(self.den) and _is_one(o.den):
            return Const._make(self.ctx, P.p_mul(self.num, o.num), P.p_one())
        return Const._make(self.ctx, P.p_mul(self.num, o.num), P.p_mul(self.den, o.den))

    __rmul__ = __mul__

    def inv(self) -> "Const":
        if self.is_zero:
            raise DivisionByZero("inverse of zero constant")
        return Const._make(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------- identity

    def __eq__(self, other):
        if isinstance(other, Const):
            return (self.ctx is other.ctx and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (int, Fraction, GaussRat)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((frozenset(self.num.items()), frozenset(self.den.items())))
            self._hash = h
        return h

    def __str__(self):
        from .printer import const_to_str

        return const_to_str(self)

    def __repr__(self):
        return f"Const({self})"


def _is_one(p: P.Poly) -> bool:
    return len(p) == 1 and P.MONO_ONE in p and p[P.MONO_ONE] == ONE


def _canonicalize(ctx: Context, num: P.Poly, den: P.Poly):
    if P.p_is_zero(den):
        raise DivisionByZero("zero denominator")
    if P.p_is_zero(num):
        return {}, P.p_one()
    if len(den) == 1:
        (dm, dc), = den.items()
        exp_part = tuple((g, e) for g, e in dm if ctx.is_exp_gen(g))
        poly_part = tuple((g, e) for g, e in dm if not ctx.is_exp_gen(g))
        if exp_part or dc != ONE:
            num = P.p_mul_term(num, P.mono_inv(exp_part), dc.inv())
            den = {poly_part: ONE}
            dm, dc = poly_part, ONE
        if dm == P.MONO_ONE:
            return num, den
    # general fraction: cancel the gcd, keep exp-monomials out of the
    # denominator, make the denominator monic
    g = poly_gcd(num, den)
    if not (len(g) == 1 and P.MONO_ONE in g):
        num = P.p_exact_div(num, g)
        den = P.p_exact_div(den, g)
    exp_gens = {g for m in den for g, _ in m if ctx.is_exp_gen(g)}
    shift = []
    for g_id in sorted(exp_gens):
        mn = min(dict(m).get(g_id, Fraction(0)) for m in den)
        if mn:
            shift.append((g_id, -mn))
    if shift:
        shift_m = tuple(sorted(shift))
        num = P.p_mul_term(num, shift_m, ONE)
        den = P.p_mul_term(den, shift_m, ONE)
    _, lead_c = P.p_lead(den)
    if lead_c != ONE:
        inv = lead_c.inv()
        num = P.p_scale(num, inv)
        den = P.p_scale(den, inv)
    return num, den


# ------------------------------------------------------------------ module ops


def const_add(a: Const, b: Const) -> Const:
    return a + b


def const_mul(a: Const, b: Const) -> Const:
    return a * b


def const_inv(a: Const) -> Const:
    return a.inv()


def const_eq(a: Const, b: Const) -> bool:
    if a.ctx is not b.ctx:
        raise ContextMismatch("values from different Contexts")
    return a == b


def rational_ratio(a: Const, b: Const):
    """q in Q with a = q*b, or None.  Raises DivisionByZero when b = 0."""
    if b.is_zero:
        raise DivisionByZero("rational_ratio with zero divisor")
    if a.ctx is not b.ctx:
        raise ContextMismatch("values from different Contexts")
    return (a / b).as_fraction()


def transcendence_degree(cs) -> int:
    """Number of distinct generators in the canonical forms (exact in the
    independence-by-construction model)."""
    ids = set()
    ctx = None
    for c in cs:
        if ctx is None:
            ctx = c.ctx
        elif c.ctx is not ctx:
            raise ContextMismatch("values from different Contexts")
        ids |= c.generator_ids()
    return len(ids)


def formal_exp(c: Const) -> Const:
    """The canonical formal exponential of c.

    The 2*pi*i*Q component reduces to a 4th root of unity (kernel exactly
    2*pi*i*Z); the remainder becomes a monomial in formal-exponential
    generators, respecting exp(c1 + c2) = exp(c1)*exp(c2).
    """
    ctx = c.ctx
    if c.is_zero:
        return ctx.one
    q0, parts = ctx._exp_reduce(c)
    frac = q0 - (q0.numerator // q0.denominator)
    zeta = _ROOTS_OF_UNITY.get(frac)
    if zeta is None:
        raise UnsupportedRootOfUnity(
            f"exp({c}) needs a root of unity of order {frac.denominator}")
    mono = []
    for gen, coeff in parts:
        if coeff.denominator > ctx.exp_denominator_bound:
            raise DenominatorBoundExceeded(
                f"exponent denominator {coeff.denominator} exceeds bound "
                f"{ctx.exp_denominator_bound}")
        mono.append((gen.id, coeff))
    return Const._make(ctx, {tuple(sorted(mono)): zeta}, P.p_one())


def q_coordinates(values: list) -> list:
    """Sparse Q-coordinate vectors for Const values.

    Brings all values over a common denominator and splits each numerator
    monomial coefficient into real and imaginary axes.  The axis indexing is
    shared across the returned vectors.
    """
    if not values:
        return []
    ctx = values[0].ctx
    for v in values:
        ctx._check(v)
    cd = P.p_one()
    for v in values:
        if not _is_one(v.den):
            g = poly_gcd(cd, v.den)
            extra = P.p_exact_div(v.den, g)
            cd = P.p_mul(cd, extra)
    numerators = []
    for v in values:
        if v.den == cd:
            numerators.append(v.num)
        else:
            numerators.append(P.p_mul(v.num, P.p_exact_div(cd, v.den)))
    monos = sorted({m for p in numerators for m in p}, key=P.mono_sort_key)
    index = {m: k for k, m in enumerate(monos)}
    vecs = []
    for p in numerators:
        vec = {}
        for m, coeff in p.items():
            if coeff.re:
                vec[2 * index[m]] = coeff.re
            if coeff.im:
                vec[2 * index[m] + 1] = coeff.im
        vecs.append(vec)
    return vecs


def const_cmp(a: Const, b: Const) -> int:
    """Deterministic total order on canonical values (for sorting only)."""
    c = P.p_cmp(a.num, b.num)
    if c:
        return c
    return P.p_cmp(a.den, b.den)
