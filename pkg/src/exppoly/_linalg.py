"""Exact Gaussian elimination over Q on sparse integer-indexed vectors."""

from __future__ import annotations

from fractions import Fraction

Vec = dict  # axis index (int) -> nonzero Fraction


def vec_sub_scaled(a: Vec, b: Vec, s: Fraction) -> Vec:
    """a - s*b."""
    if not s:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, Fraction(0)) - s * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pivot(v: Vec) -> int:
    return min(v)


class Echelon:
    """Row echelon accumulator tracking combinations of the original rows."""

    def __init__(self):
        self.rows = []  # (pivot, vec with pivot coeff 1, combo: dict[int, Fraction])
        self.count = 0

    def reduce(self, v: Vec):
        """Return (combo, remainder): v = sum(combo[i] * original_i) + remainder."""
        combo: dict[int, Fraction] = {}
        rem = dict(v)
        for pivot, row, rcombo in self.rows:
            c = rem.get(pivot)
            if c:
                rem = vec_sub_scaled(rem, row, c)
                for i, s in rcombo.items():
                    combo[i] = combo.get(i, Fraction(0)) + c * s
        return combo, rem

    def add(self, v: Vec) -> bool:
        """Insert a vector; returns True if it increased the rank."""
        idx = self.count
        self.count += 1
        combo, rem = self.reduce(v)
        if not rem:
            return False
        p = _pivot(rem)
        lead = rem[p]
        row = {k: val / lead for k, val in rem.items()}
        rcombo = {i: -s / lead for i, s in combo.items()}
        rcombo[idx] = rcombo.get(idx, Fraction(0)) + Fraction(1) / lead
        # insertion order matters: each row is reduced against all earlier
        # rows, so a single forward pass in this order is a full reduction
        self.rows.append((p, row, rcombo))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def q_rank(vectors: list) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve_in_span(rows: list, target: Vec):
    """Coefficients c with target = sum(c[i] * rows[i]), or None."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    combo, rem = ech.reduce(target)
    if rem:
        return None
    return [combo.get(i, Fraction(0)) for i in range(len(rows))]
