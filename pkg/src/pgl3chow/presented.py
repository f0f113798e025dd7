"""Finitely generated graded rings over Z presented by homogeneous relations.

The degree-d component of Z[g1..gn]/(r1..rk) is the quotient of the free
lattice on degree-d generator monomials by the span of every product
relation * monomial landing in degree d; since the relation ideal is
homogeneous this span is exactly the ideal's degree-d part, so a Smith normal
form gives the component's free rank and invariant factors without any
Groebner machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import intlinalg
from .poly import (
    INTEGERS,
    NotHomogeneousError,
    Polynomial,
    VariableContext,
    context,
    parse,
)


@dataclass(frozen=True)
class RingPresentation:
    """Named generators with positive degrees and homogeneous Z-relations."""

    generators: tuple[tuple[str, int], ...]
    relations: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        ctx = self.context
        for rel in self.relations:
            if rel.context != ctx:
                raise ValueError("relation not over the generator context")
            if rel.ring != INTEGERS:
                raise ValueError("relations must have integer coefficients")
            if not rel.is_homogeneous():
                raise NotHomogeneousError(
                    f"relation {rel.render()} is not homogeneous")

    @property
    def context(self) -> VariableContext:
        names = tuple(n for n, _ in self.generators)
        degrees = tuple(d for _, d in self.generators)
        return context(names, degrees)

    @staticmethod
    def from_strings(generators: Sequence[tuple[str, int]],
                     relations: Sequence[str]) -> "RingPresentation":
        gens = tuple((str(n), int(d)) for n, d in generators)
        ctx = context(tuple(n for n, _ in gens), tuple(d for _, d in gens))
        rels = tuple(parse(text, ctx, INTEGERS) for text in relations)
        return RingPresentation(gens, rels)


@dataclass(frozen=True)
class GradedComponent:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]

    def render(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


def relation_rows(pres: RingPresentation, d: int) -> tuple[list[tuple[int, ...]],
                                                           intlinalg.Matrix]:
    """Degree-d monomial basis and the matrix of relation*monomial products."""
    ctx = pres.context
    basis = ctx.monomials_of_degree(d)
    index = {e: i for i, e in enumerate(basis)}
    rows: intlinalg.Matrix = []
    for rel in pres.relations:
        rel_degree = rel.weighted_degree()
        if rel_degree is None or rel_degree > d:
            continue
        for mono in ctx.monomials_of_degree(d - rel_degree):
            shifted = Polynomial(ctx, INTEGERS, {mono: 1}) * rel
            row = [0] * len(basis)
            for e, c in shifted.terms.items():
                row[index[e]] = c
            rows.append(row)
    return basis, rows


def graded_component(pres: RingPresentation, d: int) -> GradedComponent:
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis, rows = relation_rows(pres, d)
    if not rows:
        return GradedComponent(d, len(basis), ())
    diag = intlinalg.invariant_factors(rows)
    nonzero = [x for x in diag if x != 0]
    free_rank = len(basis) - len(nonzero)
    torsion = tuple(x for x in nonzero if x > 1)
    return GradedComponent(d, free_rank, torsion)


def rational_rank_table(pres: RingPresentation,
                        d_max: int) -> list[tuple[int, int]]:
    """Rank of each graded piece after tensoring with Q.

    Computed by fraction-free Gaussian elimination, deliberately independent
    of the Smith normal form route used by :func:`graded_component`.
    """
    out = []
    for d in range(d_max + 1):
        basis, rows = relation_rows(pres, d)
        r = intlinalg.rank_over_q(rows) if rows else 0
        out.append((d, len(basis) - r))
    return out


def reduce_in_quotient(p: Polynomial, variable: str,
                       rewrite: Polynomial) -> Polynomial:
    """Normal form of p modulo a monic rewrite rule for one variable.

    ``rewrite`` is a polynomial whose leading term in ``variable`` is
    ``variable**k`` with coefficient one; occurrences of ``variable**k`` in p
    are replaced by ``variable**k - rewrite`` until the degree in ``variable``
    drops below k.
    """
    ctx = p.context
    if rewrite.context != ctx or rewrite.ring != p.ring:
        raise ValueError("rewrite rule must share context and ring with p")
    idx = ctx.index(variable)
    k = max((e[idx] for e in rewrite.terms), default=0)
    if k == 0:
        raise ValueError("rewrite rule does not involve the variable")
    lead_exp = [0] * ctx.arity
    lead_exp[idx] = k
    if rewrite.terms.get(tuple(lead_exp)) != p.ring.normalize(1):
        raise ValueError("rewrite rule is not monic in the variable")
    replacement = Polynomial(ctx, p.ring, {tuple(lead_exp): 1}) - rewrite

    result = p
    while True:
        top = max((e[idx] for e in result.terms), default=0)
        if top < k:
            return result
        keep: dict = {}
        quotient: dict = {}
        for e, c in result.terms.items():
            if e[idx] >= k:
                reduced = list(e)
                reduced[idx] -= k
                quotient[tuple(reduced)] = c
            else:
                keep[e] = c
        result = (Polynomial(ctx, p.ring, keep)
                  + Polynomial(ctx, p.ring, quotient) * replacement)


def rstar_presentation() -> RingPresentation:
    """The candidate Chow ring of the PGL3 classifying stack: generators
    lam, c3, rho, chi, c6, c8 of degrees 2,3,4,6,6,8 with the 3-torsion
    relations and rho^2 = c8."""
    return RingPresentation.from_strings(
        [("lam", 2), ("c3", 3), ("rho", 4), ("chi", 6), ("c6", 6), ("c8", 8)],
        [
            "3*rho",
            "3*chi",
            "3*c8",
            "81*c6 - 3*c3^2 - 12*lam^3",
            "rho^2 - c8",
        ],
    )


BUILTIN_PRESENTATIONS = {
    "Rstar": rstar_presentation,
}
