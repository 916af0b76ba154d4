"""Deterministic pretty-printing for Const and ExpPoly values.

The output re-parses to the identical canonical value (round trip), so it
doubles as the serialization format in CLI JSON output.
"""

from __future__ import annotations

from fractions import Fraction

from . import _poly as P
from .constants import KIND_DECLARED, KIND_EXP, KIND_LOG, KIND_PI


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _gauss_str(g, wrap_sum: bool = True) -> str:
    """Render a GaussRat; wrap a genuine sum in parens when wrap_sum."""
    if not g.im:
        return _frac_str(g.re)
    if not g.re:
        if g.im == 1:
            return "i"
        if g.im == -1:
            return "-i"
        return f"{_frac_str(g.im)}*i"
    im = "i" if g.im == 1 else ("-i" if g.im == -1 else f"{_frac_str(g.im)}*i")
    joined = f"{_frac_str(g.re)}+{im}" if not im.startswith("-") else f"{_frac_str(g.re)}{im}"
    return f"({joined})" if wrap_sum else joined


def _gen_str(ctx, gid: int) -> str:
    gen = ctx.generators[gid]
    if gen.kind == KIND_PI:
        return "pi"
    if gen.kind == KIND_DECLARED:
        return gen.name
    if gen.kind == KIND_LOG:
        return f"log({const_to_str(gen.argument)})"
    if gen.kind == KIND_EXP:
        return f"exp({const_to_str(gen.argument)})"
    raise AssertionError(gen.kind)


def _mono_str(ctx, mono) -> str:
    parts = []
    for gid, e in mono:
        base = _gen_str(ctx, gid)
        if e == 1:
            parts.append(base)
        elif e.denominator == 1 and e > 0:
            parts.append(f"{base}^{e.numerator}")
        else:
            parts.append(f"{base}^({_frac_str(e)})")
    return "*".join(parts)


def _poly_str(ctx, p) -> str:
    if P.p_is_zero(p):
        return "0"
    chunks = []
    for mono, coeff in P.p_sorted_terms(p):
        if mono == P.MONO_ONE:
            term = _gauss_str(coeff)
        else:
            ms = _mono_str(ctx, mono)
            if coeff == 1:
                term = ms
            elif coeff == -1:
                term = f"-{ms}"
            else:
                term = f"{_gauss_str(coeff)}*{ms}"
        if chunks and not term.startswith("-"):
            chunks.append("+" + term)
        else:
            chunks.append(term)
    return "".join(chunks)


def _outer_parens(s: str) -> bool:
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return k == len(s) - 1
    return False


def _wrap(s: str) -> str:
    """Parenthesize additive expressions; products and quotients bind fine."""
    if _outer_parens(s):
        return s
    if "+" in s[1:] or "-" in s[1:]:
        return f"({s})"
    return s


def _wrap_den(s: str) -> str:
    """Denominators additionally wrap products ('/' is left associative)."""
    if _outer_parens(s):
        return s
    if any(op in s[1:] for op in "+-*/"):
        return f"({s})"
    return s


def const_to_str(c) -> str:
    num = _poly_str(c.ctx, c.num)
    if len(c.den) == 1 and P.MONO_ONE in c.den and c.den[P.MONO_ONE] == 1:
        return num
    den = _poly_str(c.ctx, c.den)
    return f"{_wrap(num)}/{_wrap_den(den)}"


def exp_poly_to_str(f) -> str:
    """Canonical text form, term order leading-exponent-first."""
    from .expring import sorted_terms

    if f.is_zero:
        return "0"
    chunks = []
    for mu, lam in sorted_terms(f):
        if mu.is_zero:
            term = const_to_str(lam)
        else:
            es = "e^(z)" if mu.is_one else f"e^({_wrap(const_to_str(mu))}*z)"
            if lam.is_one:
                term = es
            elif (-lam).is_one:
                term = f"-{es}"
            else:
                term = f"{_wrap(const_to_str(lam))}*{es}"
        if chunks and not term.startswith("-"):
            chunks.append(" + " + term)
        elif chunks:
            chunks.append(" - " + term[1:])
        else:
            chunks.append(term)
    return "".join(chunks)
