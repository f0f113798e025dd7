"""Exact integer matrix normal forms and lattice comparison.

Everything here works on row-major ``list[list[int]]`` matrices with plain
Python integers, so intermediate values never overflow.  Smith normal form
pivots on the minimal nonzero entry; Hermite normal form is the canonical
row-echelon form (positive pivots, entries above a pivot reduced into
``[0, pivot)``), which makes lattice equality a plain list comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]
Vector = list[int]


class DimensionMismatchError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatchError("inner dimensions differ")
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for i in range(len(a))]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def vec_mat(v: Sequence[int], a: Sequence[Sequence[int]]) -> Vector:
    if len(v) != len(a):
        raise DimensionMismatchError("vector/matrix sizes differ")
    cols = len(a[0]) if a else 0
    return [sum(v[i] * a[i][j] for i in range(len(a))) for j in range(cols)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def bareiss_determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise DimensionMismatchError("determinant of non-square matrix")
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---- Smith normal form ----------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """diag with d1 | d2 | ...; left @ A @ right == diag(diag)."""

    diag: tuple[int, ...]
    left: Matrix
    right: Matrix


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, dst: int, src: int, q: int) -> None:
    if q:
        row_s = m[src]
        row_d = m[dst]
        for j in range(len(row_d)):
            row_d[j] += q * row_s[j]


def _add_col(m: Matrix, dst: int, src: int, q: int) -> None:
    if q:
        for row in m:
            row[dst] += q * row[src]


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    rows = len(a)
    cols = len(a[0]) if a else 0
    d = [list(map(int, row)) for row in a]
    if any(len(row) != cols for row in d):
        raise DimensionMismatchError("ragged matrix")
    left = identity(rows)
    right = identity(cols)
    k = min(rows, cols)
    t = 0
    while t < k:
        # Locate the entry of minimal nonzero magnitude in the trailing block.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (pivot is None
                                     or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            _swap_rows(d, t, pivot[0])
            _swap_rows(left, t, pivot[0])
        if pivot[1] != t:
            _swap_cols(d, t, pivot[1])
            _swap_cols(right, t, pivot[1])
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t]:
                q = d[i][t] // d[t][t]
                _add_row(d, i, t, -q)
                _add_row(left, i, t, -q)
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j]:
                q = d[t][j] // d[t][t]
                _add_col(d, j, t, -q)
                _add_col(right, j, t, -q)
                if d[t][j]:
                    dirty = True
        if dirty:
            continue
        # Pivot must divide the whole trailing block for the invariant chain.
        fix = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            _add_row(d, t, fix, 1)
            _add_row(left, t, fix, 1)
            continue
        if d[t][t] < 0:
            for j in range(cols):
                d[t][j] = -d[t][j]
            for j in range(rows):
                left[t][j] = -left[t][j]
        t += 1
    diag = tuple(d[i][i] for i in range(k))
    return SmithForm(diag, left, right)


def invariant_factors(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(a).diag


def rank(a: Sequence[Sequence[int]]) -> int:
    return sum(1 for x in smith_normal_form(a).diag if x != 0)


def rank_over_q(a: Sequence[Sequence[int]]) -> int:
    """Row rank by fraction-free Gaussian elimination; independent of SNF."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def kernel_basis(a: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of {v : A v = 0}; the spanned lattice is saturated."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    if rows == 0:
        return [row[:] for row in identity(cols)]
    form = smith_normal_form(a)
    r = sum(1 for x in form.diag if x != 0)
    return [[form.right[i][j] for i in range(cols)] for j in range(r, cols)]


# ---- Hermite normal form ---------------------------------------------------


def hermite_normal_form(gens: Sequence[Sequence[int]],
                        with_transform: bool = False):
    """Canonical row HNF.  Returns the nonzero rows; optionally also a
    unimodular transform U (len(gens) x len(gens)) and, per HNF row, the index
    of the corresponding row of U, so that hnf row i equals U[i] @ gens."""
    m = len(gens)
    n = len(gens[0]) if m else 0
    if any(len(row) != n for row in gens):
        raise DimensionMismatchError("generators of mixed lengths")
    h = [list(map(int, row)) for row in gens]
    u = identity(m)
    pivot_row = 0
    for col in range(n):
        # Combine rows so a single nonzero remains in this column below pivot_row.
        found = None
        for i in range(pivot_row, m):
            if h[i][col]:
                found = i
                break
        if found is None:
            continue
        if found != pivot_row:
            _swap_rows(h, pivot_row, found)
            _swap_rows(u, pivot_row, found)
        for i in range(pivot_row + 1, m):
            if h[i][col]:
                g, x, y = xgcd(h[pivot_row][col], h[i][col])
                p, q = h[pivot_row][col] // g, h[i][col] // g
                new_top = [x * a + y * b for a, b in zip(h[pivot_row], h[i])]
                new_bot = [-q * a + p * b for a, b in zip(h[pivot_row], h[i])]
                h[pivot_row], h[i] = new_top, new_bot
                new_top_u = [x * a + y * b for a, b in zip(u[pivot_row], u[i])]
                new_bot_u = [-q * a + p * b for a, b in zip(u[pivot_row], u[i])]
                u[pivot_row], u[i] = new_top_u, new_bot_u
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        for i in range(pivot_row):
            q = h[i][col] // h[pivot_row][col]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
        pivot_row += 1
        if pivot_row == m:
            break
    nonzero = [row[:] for row in h[:pivot_row]]
    if not with_transform:
        return nonzero
    return nonzero, u, pivot_row


def lattice_basis(gens: Sequence[Sequence[int]]) -> list[Vector]:
    """Canonical basis (HNF rows) of the lattice spanned by the generators."""
    if not gens:
        return []
    return hermite_normal_form(gens)


# ---- solving and membership -------------------------------------------------


def solve_left(target: Sequence[int], gens: Sequence[Sequence[int]]) -> Vector | None:
    """Integer row vector x with x @ gens == target, or None."""
    if not gens:
        return [] if all(t == 0 for t in target) else None
    n = len(gens[0])
    if len(target) != n:
        raise DimensionMismatchError("target length differs from generators")
    h, u, nrows = hermite_normal_form(gens, with_transform=True)
    residue = list(map(int, target))
    coeffs = [0] * len(gens)
    for r, row in enumerate(h):
        pivot_col = next(j for j, x in enumerate(row) if x)
        if residue[pivot_col] % row[pivot_col] != 0:
            return None
        q = residue[pivot_col] // row[pivot_col]
        if q:
            residue = [a - q * b for a, b in zip(residue, row)]
            coeffs = [a + q * b for a, b in zip(coeffs, u[r])]
    if any(residue):
        return None
    return coeffs


def solve_left_rational(target: Sequence[int],
                        gens: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """Rational solution of x @ gens == target, or None when inconsistent."""
    if not gens:
        return [] if all(t == 0 for t in target) else None
    m = len(gens)
    n = len(gens[0])
    # Solve gens^T y = target by Gauss-Jordan over Q, tracking columns.
    aug = [[Fraction(gens[i][j]) for i in range(m)] + [Fraction(target[j])]
           for j in range(n)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(m):
        pivot_row = None
        for i in range(r, n):
            if aug[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, n):
        if aug[i][m]:
            return None
    solution = [Fraction(0)] * m
    for row, col in pivots:
        solution[col] = aug[row][m]
    return solution


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    certificate: tuple[int, ...] | None


def membership(target: Sequence[int], gens: Sequence[Sequence[int]],
               modulus: int | None = None) -> MembershipResult:
    """Decide lattice (or Z/m-module) membership with a verifiable certificate."""
    gens = [list(map(int, g)) for g in gens]
    target = list(map(int, target))
    for g in gens:
        if len(g) != len(target):
            raise DimensionMismatchError("generator length differs from target")
    if modulus is None:
        x = solve_left(target, gens)
        if x is None:
            return MembershipResult(False, None)
        return MembershipResult(True, tuple(x))
    n = len(target)
    extended = [g[:] for g in gens]
    for i in range(n):
        row = [0] * n
        row[i] = modulus
        extended.append(row)
    x = solve_left([t % modulus for t in target], extended)
    if x is None:
        return MembershipResult(False, None)
    return MembershipResult(True, tuple(c % modulus for c in x[:len(gens)]))


# ---- submodule comparison ----------------------------------------------------


@dataclass(frozen=True)
class CompareResult:
    relation: str  # equal | A_in_B | B_in_A | incomparable
    quotient_invariants: tuple[int, ...] | None


def _quotient_invariants(sub_basis: list[Vector],
                         big_basis: list[Vector]) -> tuple[int, ...]:
    """Invariant factors of span(big)/span(sub), given HNF bases, sub inside big."""
    if not big_basis:
        return ()
    coeff_rows = []
    for row in sub_basis:
        x = solve_left(row, big_basis)
        assert x is not None, "sub lattice not inside big lattice"
        coeff_rows.append(x)
    free = len(big_basis) - (rank(coeff_rows) if coeff_rows else 0)
    torsion = [d for d in invariant_factors(coeff_rows) if d not in (0, 1)] \
        if coeff_rows else []
    return tuple(torsion + [0] * free)


def submodule_compare(gens_a: Sequence[Sequence[int]],
                      gens_b: Sequence[Sequence[int]]) -> CompareResult:
    gens_a = [list(map(int, g)) for g in gens_a]
    gens_b = [list(map(int, g)) for g in gens_b]
    lengths = {len(g) for g in gens_a} | {len(g) for g in gens_b}
    if len(lengths) > 1:
        raise DimensionMismatchError("generators of mixed lengths")
    ha = lattice_basis(gens_a)
    hb = lattice_basis(gens_b)
    hab = lattice_basis(gens_a + gens_b)
    a_in_b = hab == hb
    b_in_a = hab == ha
    if a_in_b and b_in_a:
        return CompareResult("equal", ())
    if a_in_b:
        return CompareResult("A_in_B", _quotient_invariants(ha, hb))
    if b_in_a:
        return CompareResult("B_in_A", _quotient_invariants(hb, ha))
    return CompareResult("incomparable", None)
