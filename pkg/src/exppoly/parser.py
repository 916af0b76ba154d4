"""Expression grammar shared by the library and the CLI.

    poly := ['-'] term (('+'|'-') term)*
    term := const ('*' exp)? | exp
    exp  := 'e^(' linear ')' | 'sin(' linear ')' | 'cos(' linear ')'
    const := rational | 'i' | 'pi' | name | const op const | '(' const ')'
             | 'log(' const ')' | 'exp(' const ')'

with op in + - * / ^ (integer or parenthesized-rational powers).  The
argument of e^/sin/cos is an expression linear in z, e.g. 2*pi*i*z or z/2;
sin and cos require a pure c*z argument.  log(...) and exp(...) atoms exist
so printed canonical forms round trip.  The parser accepts a superset of the
grammar above (any +,-,* combination of terms, parenthesized subpolynomials,
division by constants and units).
"""

from __future__ import annotations

from fractions import Fraction

from .constants import Const, Context, formal_exp
from .errors import ParseError, UndeclaredSymbol
from .expring import (
    ExpPoly,
    cos_poly,
    ep_add,
    ep_mul,
    ep_neg,
    normalize,
    scale,
    sin_poly,
)
from .gauss import GaussRat

_RESERVED = {"e", "z", "pi", "i", "sin", "cos", "log", "exp"}


class _Tok:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos

    def __repr__(self):
        return f"{self.kind}:{self.value}"


def _tokenize(text: str) -> list:
    out = []
    k = 0
    n = len(text)
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
            continue
        if ch.isdigit():
            j = k
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Tok("num", int(text[k:j]), k))
            k = j
            continue
        if ch.isalpha() or ch == "_":
            j = k
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[k:j]
            if word == "e" and text[j:j + 2] == "^(":
                out.append(_Tok("efun", "e", k))
                out.append(_Tok("(", "(", j + 1))
                k = j + 2
                continue
            out.append(_Tok("name", word, k))
            k = j
            continue
        if ch in "+-*/^()":
            out.append(_Tok(ch, ch, k))
            k += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", k)
    out.append(_Tok("end", None, n))
    return out


class _LinVal:
    """Value A + B*z used while parsing exponential arguments."""

    __slots__ = ("a", "b")

    def __init__(self, a: Const, b: Const):
        self.a = a
        self.b = b


def _as_const(f: ExpPoly):
    """The value of a constant polynomial, else None."""
    if f.is_zero:
        return f.ctx.zero
    if f.length == 1:
        ((mu, lam),) = f.terms.items()
        if mu.is_zero:
            return lam
    return None


class _Parser:
    def __init__(self, text: str, ctx: Context, declare):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0
        self.ctx = ctx
        # declare=True auto-declares any name; a set allows those names only
        self.declare = declare

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def next(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind) -> _Tok:
        t = self.next()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.value!r}", t.pos)
        return t

    def fail(self, msg):
        raise ParseError(msg, self.peek().pos)

    # ------------------------------------------------- linear const sublanguage

    def _name_const(self, tok) -> Const:
        name = tok.value
        if name == "pi":
            return self.ctx.pi
        if name == "i":
            return self.ctx.i
        if name in _RESERVED:
            raise ParseError(f"{name!r} not valid here", tok.pos)
        existing = self.ctx.lookup(name)
        if existing is not None:
            return existing
        if self.declare is True or (isinstance(self.declare, (set, frozenset))
                                    and name in self.declare):
            return self.ctx.declare(name)
        raise UndeclaredSymbol(f"undeclared symbol {name!r} at position {tok.pos}")

    def lin_expr(self) -> _LinVal:
        v = self.lin_term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            w = self.lin_term()
            if op == "-":
                w = _LinVal(-w.a, -w.b)
            v = _LinVal(v.a + w.a, v.b + w.b)
        return v

    def lin_term(self) -> _LinVal:
        v = self.lin_factor()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            w = self.lin_factor()
            if op == "*":
                if not v.b.is_zero and not w.b.is_zero:
                    self.fail("argument must stay linear in z")
                if w.b.is_zero:
                    v = _LinVal(v.a * w.a, v.b * w.a)
                else:
                    v = _LinVal(v.a * w.a, w.b * v.a)
            else:
                if not w.b.is_zero:
                    self.fail("cannot divide by z")
                if w.a.is_zero:
                    self.fail("division by zero")
                inv = w.a.inv()
                v = _LinVal(v.a * inv, v.b * inv)
        return v

    def lin_factor(self) -> _LinVal:
        neg = False
        while self.peek().kind in ("+", "-"):
            if self.next().kind == "-":
                neg = not neg
        v = self.lin_atom()
        while self.peek().kind == "^":
            self.next()
            e = self._power_exponent()
            v = _LinVal(self._const_pow(v.a, e, require_const=v.b), self.ctx.zero)
        if neg:
            v = _LinVal(-v.a, -v.b)
        return v

    def lin_atom(self) -> _LinVal:
        tok = self.next()
        if tok.kind == "num":
            return _LinVal(self.ctx.rational(tok.value), self.ctx.zero)
        if tok.kind == "(":
            v = self.lin_expr()
            self.expect(")")
            return v
        if tok.kind == "name":
            if tok.value == "z":
                return _LinVal(self.ctx.zero, self.ctx.one)
            if tok.value in ("log", "exp"):
                self.expect("(")
                arg = self.lin_expr()
                self.expect(")")
                if not arg.b.is_zero:
                    raise ParseError(f"argument of {tok.value} must be constant", tok.pos)
                if tok.value == "log":
                    return _LinVal(self.ctx.log_of(arg.a), self.ctx.zero)
                return _LinVal(formal_exp(arg.a), self.ctx.zero)
            return _LinVal(self._name_const(tok), self.ctx.zero)
        raise ParseError(f"unexpected token {tok.value!r}", tok.pos)

    def _power_exponent(self) -> Fraction:
        sign = 1
        if self.peek().kind == "(":
            self.next()
            if self.peek().kind == "-":
                self.next()
                sign = -1
            p = self.expect("num").value
            q = 1
            if self.peek().kind == "/":
                self.next()
                q = self.expect("num").value
            self.expect(")")
            return Fraction(sign * p, q)
        if self.peek().kind == "-":
            self.next()
            sign = -1
        t = self.expect("num")
        return Fraction(sign * t.value)

    def _const_pow(self, base: Const, e: Fraction, require_const=None) -> Const:
        if require_const is not None and not require_const.is_zero:
            self.fail("cannot raise z to a power")
        if e.denominator == 1:
            return base ** e.numerator
        # fractional powers only on formal exponentials: exp(c)^(p/q) = exp(c*p/q)
        if len(base.num) == 1 and not base.is_zero:
            ((mono, coeff),) = base.num.items()
            if coeff == GaussRat(1) and len(mono) == 1 and self.ctx.is_exp_gen(mono[0][0]):
                gen_id, ge = mono[0]
                arg = self.ctx.generators[gen_id].argument
                return formal_exp(arg * self.ctx.rational(ge * e))
        self.fail("fractional powers only apply to exp(...) atoms")

    # ------------------------------------------------------- poly expressions

    def exp_factor(self):
        """One e^(...), sin(...) or cos(...) factor, or None if not at one."""
        tok = self.peek()
        if tok.kind == "efun":
            self.next()
            self.expect("(")
            v = self.lin_expr()
            self.expect(")")
            if not v.a.is_zero:
                raise ParseError("argument of e^ must have no constant term", tok.pos)
            return normalize(self.ctx, [(v.b, self.ctx.one)])
        if tok.kind == "name" and tok.value in ("sin", "cos"):
            self.next()
            self.expect("(")
            v = self.lin_expr()
            self.expect(")")
            if not v.a.is_zero:
                raise ParseError(f"argument of {tok.value} must be c*z", tok.pos)
            fn = sin_poly if tok.value == "sin" else cos_poly
            return fn(self.ctx, v.b)
        return None

    def expr(self) -> ExpPoly:
        v = self.mul_term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            w = self.mul_term()
            v = ep_add(v, ep_neg(w) if op == "-" else w)
        return v

    def mul_term(self) -> ExpPoly:
        v = self.power_term()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            w = self.power_term()
            if op == "*":
                v = ep_mul(v, w)
            else:
                v = self._divide(v, w)
        return v

    def _divide(self, v: ExpPoly, w: ExpPoly) -> ExpPoly:
        c = _as_const(w)
        if c is not None:
            if c.is_zero:
                self.fail("division by zero")
            return scale(v, c.inv())
        if w.length == 1:
            ((mu, lam),) = w.terms.items()
            return ep_mul(v, normalize(self.ctx, [(-mu, lam.inv())]))
        self.fail("division only by constants or units")

    def power_term(self) -> ExpPoly:
        neg = False
        while self.peek().kind in ("+", "-"):
            if self.next().kind == "-":
                neg = not neg
        v = self.atom()
        while self.peek().kind == "^":
            self.next()
            e = self._power_exponent()
            c = _as_const(v)
            if c is not None:
                v = normalize(self.ctx, [(self.ctx.zero, self._const_pow(c, e))])
            elif e.denominator == 1 and e >= 0:
                out = normalize(self.ctx, [(self.ctx.zero, self.ctx.one)])
                for _ in range(e.numerator):
                    out = ep_mul(out, v)
                v = out
            elif e.denominator == 1 and v.length == 1:
                ((mu, lam),) = v.terms.items()
                v = normalize(self.ctx, [(mu * e.numerator, lam ** e.numerator)])
            else:
                self.fail("unsupported power")
        return ep_neg(v) if neg else v

    def atom(self) -> ExpPoly:
        f = self.exp_factor()
        if f is not None:
            return f
        tok = self.peek()
        if tok.kind == "(":
            self.next()
            v = self.expr()
            self.expect(")")
            return v
        if tok.kind in ("num", "name"):
            lv = self.lin_atom()
            if not lv.b.is_zero:
                raise ParseError("'z' only allowed inside e^/sin/cos", tok.pos)
            return normalize(self.ctx, [(self.ctx.zero, lv.a)])
        raise ParseError(f"unexpected token {tok.value!r}", tok.pos)

    def parse_poly(self) -> ExpPoly:
        v = self.expr()
        self.expect("end")
        return v

    def parse_const_value(self) -> Const:
        v = self.expr()
        self.expect("end")
        c = _as_const(v)
        if c is None:
            raise ParseError("expected a constant expression", len(self.text))
        return c


def parse_exp_poly(text: str, ctx: Context, declare=False) -> ExpPoly:
    """Parse an exponential polynomial.

    declare: True auto-declares unknown names, a set allows exactly those
    names, False (default) raises UndeclaredSymbol on unknown names.
    """
    return _Parser(text, ctx, declare).parse_poly()


def parse_const(text: str, ctx: Context, declare=False) -> Const:
    return _Parser(text, ctx, declare).parse_const_value()
