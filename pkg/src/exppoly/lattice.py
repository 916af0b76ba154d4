"""Integer-lattice and torus-subgroup calculus.

Matrices are lists of equal-length rows of Python ints (arbitrary
precision).  hnf computes the row-style Hermite normal form with positive
pivots and reduced entries above; the zero rows are dropped, so the result
is a canonical basis of the row lattice.  Exactness over the full integer
range is the contract; matrices stay desk-scale (<= 64x64).
"""

from __future__ import annotations

from fractions import Fraction

from ._linalg import Echelon
from .constants import Const, q_coordinates
from .errors import EmptySet, NonLinearExponent, ZeroCoordinate
from .expring import exponent_coordinates


def _check_matrix(m: list) -> tuple:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for r in m:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def _hnf_in_place(mat: list, transform: list | None = None) -> int:
    """Row HNF of mat in place; returns the rank.

    If transform is given (an identity matrix of matching height), the same
    row operations are applied to it, so transform @ original == result.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        # gcd-eliminate below pivot_row
        r = pivot_row
        while r < rows:
            if mat[r][col]:
                break
            r += 1
        if r == rows:
            continue
        mat[pivot_row], mat[r] = mat[r], mat[pivot_row]
        if transform is not None:
            transform[pivot_row], transform[r] = transform[r], transform[pivot_row]
        for r in range(pivot_row + 1, rows):
            while mat[r][col]:
                a, b = mat[pivot_row][col], mat[r][col]
                if abs(b) < abs(a):
                    mat[pivot_row], mat[r] = mat[r], mat[pivot_row]
                    if transform is not None:
                        transform[pivot_row], transform[r] = (
                            transform[r], transform[pivot_row])
                    continue
                q = b // a
                mat[r] = [x - q * y for x, y in zip(mat[r], mat[pivot_row])]
                if transform is not None:
                    transform[r] = [x - q * y for x, y in
                                    zip(transform[r], transform[pivot_row])]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-x for x in mat[pivot_row]]
            if transform is not None:
                transform[pivot_row] = [-x for x in transform[pivot_row]]
        p = mat[pivot_row][col]
        for r in range(pivot_row):
            q = mat[r][col] // p
            if q:
                mat[r] = [x - q * y for x, y in zip(mat[r], mat[pivot_row])]
                if transform is not None:
                    transform[r] = [x - q * y for x, y in
                                    zip(transform[r], transform[pivot_row])]
        pivot_row += 1
        if pivot_row == rows:
            break
    return pivot_row


def hnf(m: list) -> list:
    """Hermite normal form; nonzero rows only."""
    _check_matrix(m)
    mat = [list(r) for r in m]
    rank = _hnf_in_place(mat)
    return mat[:rank]


def int_rank(m: list) -> int:
    return len(hnf(m))


def hnf_with_transform(m: list):
    """(H with zero rows kept, unimodular U) with U @ m == H."""
    rows, _ = _check_matrix(m)
    mat = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    _hnf_in_place(mat, u)
    return mat, u


def kernel_basis(m: list) -> list:
    """Basis rows of the left-kernel lattice {a : a @ m == 0}; saturated."""
    rows, _ = _check_matrix(m)
    if rows == 0:
        return []
    h, u = hnf_with_transform(m)
    out = [u[r] for r in range(rows) if not any(h[r])]
    return hnf(out) if out else []


def saturate(m: list) -> list:
    """Saturation of the row lattice: (Q-span of rows) intersected with Z^n."""
    rows, cols = _check_matrix(m)
    if rows == 0:
        return []
    ker = kernel_basis([[row[j] for row in m] for j in range(cols)])
    # the saturation is exactly the integer solution lattice of ker @ x == 0
    if not ker:
        return hnf([[1 if i == j else 0 for j in range(cols)] for i in range(cols)])
    return kernel_basis([[row[j] for row in ker] for j in range(cols)])


class ExpBasis:
    """A Z-basis b_1..b_D of the additive group generated by some exponents.

    transition holds one integer row per input exponent expressing it in the
    basis.  Built from the Hermite normal form of the cleared coordinate
    matrix, so it is a basis of the generated group, not its divisible hull.
    """

    __slots__ = ("basis", "transition", "_axes", "_rows")

    def __init__(self, basis, transition, axes=None, rows=None):
        self.basis = basis
        self.transition = transition
        self._axes = axes
        self._rows = rows

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def refine(self, factors) -> "ExpBasis":
        """Basis b_j / n_j; transitions scale accordingly."""
        if isinstance(factors, int):
            factors = [factors] * self.dimension
        basis = [b / n for b, n in zip(self.basis, factors)]
        transition = [[t * n for t, n in zip(row, factors)] for row in self.transition]
        return ExpBasis(basis, transition)

    def express(self, mu: Const):
        """Integer coordinates of mu in the basis, or None."""
        if not self.basis:
            return [] if mu.is_zero else None
        ctx = self.basis[0].ctx
        axes, rows = exponent_coordinates(ctx, list(self.basis) + [mu])
        vecs = [{k: v for k, v in enumerate(r) if v} for r in rows]
        target = vecs.pop()
        from ._linalg import solve_in_span

        sol = solve_in_span(vecs, target)
        if sol is None:
            return None
        out = []
        for c in sol:
            if c.denominator != 1:
                return None
            out.append(c.numerator)
        return out


def exponent_basis(exponents: list) -> ExpBasis:
    """Z-basis of the additive group generated by the exponents."""
    if not exponents:
        raise EmptySet("no exponents")
    ctx = exponents[0].ctx
    axes, rows = exponent_coordinates(ctx, exponents)
    lcm = 1
    for row in rows:
        for x in row:
            d = x.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
    mat = [[int(x * lcm) for x in row] for row in rows]
    h = hnf(mat)
    basis = []
    for hr in h:
        b = ctx.zero
        for (gid, part), entry in zip(axes, hr):
            if not entry:
                continue
            unit = ctx.one if gid is None else ctx._gen_const(ctx.generators[gid])
            if part == 1:
                unit = unit * ctx.i
            b = b + unit * Fraction(entry, lcm)
        basis.append(b)
    transition = [_solve_int(h, row_scaled) for row_scaled in mat]
    return ExpBasis(basis, transition, axes, rows)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _solve_int(h: list, target: list) -> list:
    """Coordinates of target over HNF rows h; exact by back substitution."""
    if not h:
        if any(target):
            raise NonLinearExponent("exponent outside generated group")
        return []
    cols = len(h[0])
    pivots = []
    for r, row in enumerate(h):
        for c in range(cols):
            if row[c]:
                pivots.append((r, c))
                break
    rem = list(target)
    coeffs = [0] * len(h)
    for r, c in pivots:
        q, s = divmod(rem[c], h[r][c])
        if s:
            raise ArithmeticError("target not in row lattice")
        if q:
            coeffs[r] = q
            rem = [x - q * y for x, y in zip(rem, h[r])]
    if any(rem):
        raise ArithmeticError("target not in row lattice")
    return coeffs


class SubgroupCoset:
    """Finitely many conditions Y_1^a_1 ... Y_D^a_D = theta on G_m^D.

    theta entries all 1 describe an algebraic subgroup; anything else a
    coset.  exponent_vectors are rows of integers of length D.
    """

    __slots__ = ("exponent_vectors", "theta")

    def __init__(self, exponent_vectors: list, theta: list):
        if len(exponent_vectors) != len(theta):
            raise ValueError("one theta per exponent vector")
        _check_matrix(exponent_vectors)
        self.exponent_vectors = [list(r) for r in exponent_vectors]
        self.theta = list(theta)


def subgroup_dim(s: SubgroupCoset, ambient: int) -> int:
    """dim = D - rank of the exponent-vector lattice."""
    if not s.exponent_vectors:
        return ambient
    return ambient - int_rank(s.exponent_vectors)


def coset_contains(s: SubgroupCoset, point: list) -> bool:
    """Exact membership of a point with nonzero Const coordinates."""
    for c in point:
        if c.is_zero:
            raise ZeroCoordinate("points live in the multiplicative group")
    for vec, theta in zip(s.exponent_vectors, s.theta):
        if len(vec) != len(point):
            raise ValueError("point and exponent vector lengths differ")
        acc = point[0].ctx.one
        for a, y in zip(vec, point):
            if a:
                acc = acc * (y ** a)
        if acc != theta:
            return False
    return True


def is_anomalous(dim_w: int, dim_v: int, codim_gamma: int) -> bool:
    """dim W > max(0, dim V - codim Gamma), exactly as defined."""
    return dim_w > max(0, dim_v - codim_gamma)


def q_linear_rank(values: list) -> int:
    """Dimension of the Q-span of arbitrary constants (not just linear ones)."""
    vecs = q_coordinates(list(values))
    ech = Echelon()
    for v in vecs:
        ech.add(v)
    return ech.rank


def linear_relations(values: list) -> list:
    """Z-basis (rows) of the lattice of integer relations sum(a_i v_i) = 0.

    values must be Q(i)-linear in the generators (module expring constraint);
    computed as the left kernel of the cleared coordinate matrix, hence
    saturated and exact.
    """
    if not values:
        return []
    ctx = values[0].ctx
    axes, rows = exponent_coordinates(ctx, list(values))
    lcm = 1
    for row in rows:
        for x in row:
            d = x.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
    mat = [[int(x * lcm) for x in row] for row in rows]
    if not mat[0]:
        mat = [[0] for _ in mat]
    return kernel_basis(mat)
