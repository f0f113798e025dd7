"""Finite matrix groups acting on polynomial rings by linear substitution.

An element matrix acts on the character lattice by multiplying column
coordinate vectors, so variable ``i`` is substituted by the linear form read
off column ``i``.  With that convention ``act(g*h, p) == act(g, act(h, p))``
when the product ``g*h`` is the ordinary matrix product.

Orbit sums model the composite of a transfer with the restriction back to the
subring: ``orbit_sum(G, p) = sum(act(g, p) for g in G)``, which is fixed by
every element and multiplies invariants by the group order.

Shift-invariance along a direction vector is imposed as the vanishing of the
directional derivative; over a torsion-free coefficient ring this is the same
polynomial condition as literal invariance under translation by an auxiliary
parameter, which :func:`literally_shift_invariant` provides as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import intlinalg
from .poly import (
    INTEGERS,
    CoefficientRing,
    ContextMismatchError,
    Polynomial,
    RingMap,
    VariableContext,
    context,
)

MatrixRows = tuple[tuple[int, ...], ...]


def _freeze(matrix: Sequence[Sequence[int]]) -> MatrixRows:
    return tuple(tuple(int(x) for x in row) for row in matrix)


@dataclass(frozen=True)
class LinearConstraint:
    """Vanishing of the directional derivative along a nonzero direction."""

    direction: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.direction):
            raise ValueError("direction must be nonzero")


@dataclass(frozen=True)
class ClosureReport:
    ok: bool
    order: int
    violations: tuple[str, ...]


@dataclass(frozen=True)
class MatrixGroup:
    """Explicit element list of unimodular matrices acting on a context."""

    ctx: VariableContext
    elements: tuple[tuple[str, MatrixRows], ...]
    ring: CoefficientRing = INTEGERS

    @staticmethod
    def from_dict(ctx: VariableContext, elements: Mapping[str, Sequence[Sequence[int]]],
                  ring: CoefficientRing = INTEGERS) -> "MatrixGroup":
        return MatrixGroup(ctx, tuple((label, _freeze(m)) for label, m in elements.items()),
                           ring)

    def labels(self) -> list[str]:
        return [label for label, _ in self.elements]

    def matrix(self, label: str) -> MatrixRows:
        for name, m in self.elements:
            if name == label:
                return m
        raise KeyError(f"no element labeled {label!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def _ring_map(self, matrix: MatrixRows) -> RingMap:
        n = self.ctx.arity
        images = []
        for i in range(n):
            images.append(Polynomial.linear_form(
                self.ctx, [matrix[j][i] for j in range(n)], self.ring))
        return RingMap(self.ctx, self.ctx, tuple(images), self.ring)

    def act(self, label: str, p: Polynomial) -> Polynomial:
        if p.context != self.ctx:
            raise ContextMismatchError("polynomial not over the group's context")
        return self._ring_map(self.matrix(label)).apply(p)

    def act_matrix(self, matrix: Sequence[Sequence[int]], p: Polynomial) -> Polynomial:
        return self._ring_map(_freeze(matrix)).apply(p)

    def orbit_sum(self, p: Polynomial) -> Polynomial:
        if p.context != self.ctx:
            raise ContextMismatchError("polynomial not over the group's context")
        total = Polynomial.zero(self.ctx, self.ring)
        for _, matrix in self.elements:
            total = total + self._ring_map(matrix).apply(p)
        return total

    def closure_check(self) -> ClosureReport:
        violations: list[str] = []
        n = self.ctx.arity
        mats = [m for _, m in self.elements]
        labels = self.labels()
        if len(set(mats)) != len(mats):
            violations.append("duplicate element matrices")
        ident = _freeze(intlinalg.identity(n))
        if ident not in mats:
            violations.append("identity element missing")
        for label, m in self.elements:
            if len(m) != n or any(len(row) != n for row in m):
                violations.append(f"{label}: not {n}x{n}")
                continue
            det = intlinalg.bareiss_determinant([list(r) for r in m])
            if self.ring.kind == "Zmod":
                from math import gcd
                if gcd(det, self.ring.modulus) != 1:
                    violations.append(f"{label}: determinant {det} not invertible "
                                      f"mod {self.ring.modulus}")
            elif det not in (1, -1):
                violations.append(f"{label}: determinant {det} not a unit")
        mat_set = set(mats)
        for la, ma in self.elements:
            for lb, mb in self.elements:
                prod = _freeze(intlinalg.matmul([list(r) for r in ma],
                                                [list(r) for r in mb]))
                if self.ring.kind == "Zmod":
                    prod = tuple(tuple(x % self.ring.modulus for x in row) for row in prod)
                if prod not in mat_set:
                    violations.append(f"product {la}*{lb} escapes the element set")
        for label, m in self.elements:
            if not any(_freeze(intlinalg.matmul([list(r) for r in m],
                                                [list(r) for r in other])) == ident
                       for other in mats):
                violations.append(f"{label}: no inverse in the element set")
        return ClosureReport(not violations, len(self.elements), tuple(violations))


def action_matrix(group: MatrixGroup, matrix: MatrixRows, d: int) -> intlinalg.Matrix:
    """Matrix of the substitution action on degree-d coefficient vectors."""
    basis = group.ctx.monomials_of_degree(d)
    index = {e: i for i, e in enumerate(basis)}
    cols = len(basis)
    out = [[0] * cols for _ in range(cols)]
    for j, exp in enumerate(basis):
        mono = Polynomial(group.ctx, group.ring, {exp: 1})
        image = group.act_matrix(matrix, mono)
        for e, c in image.terms.items():
            out[index[e]][j] = c
    return out


def derivative_matrix(ctx: VariableContext, direction: Sequence[int],
                      d: int) -> intlinalg.Matrix:
    """Matrix of the directional derivative from degree d to degree d-1."""
    basis = ctx.monomials_of_degree(d)
    target = ctx.monomials_of_degree(d - 1) if d >= 1 else []
    index = {e: i for i, e in enumerate(target)}
    out = [[0] * len(basis) for _ in range(len(target))]
    for j, exp in enumerate(basis):
        for i, step in enumerate(direction):
            if step and exp[i] > 0:
                ne = list(exp)
                ne[i] -= 1
                out[index[tuple(ne)]][j] += step * exp[i]
    return out


def invariant_basis(group: MatrixGroup, constraints: Sequence[LinearConstraint],
                    d: int) -> list[Polynomial]:
    """Z-basis of the saturated lattice of degree-d forms fixed by the group
    and killed by every directional-derivative constraint."""
    basis = group.ctx.monomials_of_degree(d)
    cols = len(basis)
    if cols == 0:
        return []
    stacked: intlinalg.Matrix = []
    ident = intlinalg.identity(cols)
    for _, matrix in group.elements:
        a = action_matrix(group, matrix, d)
        for i in range(cols):
            row = [a[i][j] - ident[i][j] for j in range(cols)]
            if any(row):
                stacked.append(row)
    for constraint in constraints:
        stacked.extend(derivative_matrix(group.ctx, constraint.direction, d))
    if not stacked:
        kernel = intlinalg.identity(cols)
    else:
        kernel = intlinalg.kernel_basis(stacked)
    out = []
    for vec in kernel:
        out.append(Polynomial(group.ctx, group.ring,
                              {basis[i]: vec[i] for i in range(cols)}))
    return out


def literally_shift_invariant(p: Polynomial, direction: Sequence[int],
                              parameter: str = "t") -> bool:
    """Check f(x + t*direction) == f(x) with an explicit auxiliary variable."""
    ctx = p.context
    if parameter in ctx.names:
        parameter = parameter + "_shift"
    extended = context(ctx.names + (parameter,), ctx.weights + (1,))
    t = Polynomial.variable(extended, parameter, p.ring)
    images = []
    for i, name in enumerate(ctx.names):
        img = Polynomial.variable(extended, name, p.ring)
        if direction[i]:
            img = img + t * direction[i]
        images.append(img)
    shift = RingMap(ctx, extended, tuple(images), p.ring)
    embed = RingMap(ctx, extended,
                    tuple(Polynomial.variable(extended, n, p.ring) for n in ctx.names),
                    p.ring)
    return shift.apply(p) == embed.apply(p)


def transported_group(group: MatrixGroup, embedding: Sequence[Sequence[int]],
                      target_ctx: VariableContext) -> MatrixGroup:
    """Transport a lattice action through an injective lattice embedding.

    ``embedding`` has one column per target variable, giving its coordinates
    in the source lattice.  Each source matrix M must preserve the embedded
    sublattice; the transported matrix N solves M @ F == F @ N exactly over Z.
    """
    f = [list(map(int, row)) for row in embedding]
    f_rows_as_gens = intlinalg.transpose(f)  # one generator per target basis vector
    elements = []
    for label, m in group.elements:
        mf = intlinalg.matmul([list(r) for r in m], f)
        cols = []
        for j in range(target_ctx.arity):
            target_vec = [mf[i][j] for i in range(len(mf))]
            x = intlinalg.solve_left(target_vec, f_rows_as_gens)
            if x is None:
                raise ValueError(
                    f"element {label} does not preserve the embedded sublattice")
            cols.append(x)
        n = [[cols[j][i] for j in range(target_ctx.arity)]
             for i in range(target_ctx.arity)]
        elements.append((label, _freeze(n)))
    return MatrixGroup(target_ctx, tuple(elements), group.ring)


def symmetric_group_s3(ctx: VariableContext,
                       ring: CoefficientRing = INTEGERS) -> MatrixGroup:
    """S3 permuting three variables; sigma sends variable i to variable
    sigma^{-1}(i), so cycles act on linear forms the usual way."""
    if ctx.arity != 3:
        raise ValueError("S3 permutation action needs three variables")
    perms = {
        "e": (0, 1, 2),
        "(12)": (1, 0, 2),
        "(13)": (2, 1, 0),
        "(23)": (0, 2, 1),
        "(123)": (1, 2, 0),
        "(132)": (2, 0, 1),
    }
    elements = []
    for label, perm in perms.items():
        # Column i carries variable i to variable perm^{-1}(i); as a lattice
        # matrix this is the permutation matrix with 1 at (perm^{-1}(i), i),
        # i.e. at (j, perm(j)).
        m = [[0] * 3 for _ in range(3)]
        for j in range(3):
            m[j][perm[j]] = 1
        elements.append((label, _freeze(m)))
    return MatrixGroup(ctx, tuple(elements), ring)


def alternating_subgroup(group: MatrixGroup,
                         labels: Iterable[str] = ("e", "(123)", "(132)")) -> MatrixGroup:
    picked = tuple((label, group.matrix(label)) for label in labels)
    return MatrixGroup(group.ctx, picked, group.ring)
