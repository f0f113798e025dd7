"""Virtual representations as signed weight multisets, Chern classes,
restriction along character-lattice maps, and the built-in catalog of tori,
finite-subgroup lattices, representations and maps used by the checks.

A weight is an integer coordinate vector in a named lattice; a virtual
representation is a finite multiset of weights with (possibly negative)
multiplicities.  Chern classes of genuine representations are elementary
symmetric polynomials in the weights' first Chern classes, computed in the
lattice's polynomial context.  Mod-3 lattices keep weight coordinates in
{-1, 0, 1} so negation-symmetric multisets stay visibly symmetric.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import intlinalg
from .poly import (
    INTEGERS,
    CoefficientRing,
    Polynomial,
    RingMap,
    VariableContext,
    context,
    integers_mod,
)

Weight = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    """A character lattice with a polynomial context and coefficient ring."""

    name: str
    ctx: VariableContext
    ring: CoefficientRing

    @property
    def rank(self) -> int:
        return self.ctx.arity

    def normalize_weight(self, coords: Sequence[int]) -> Weight:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError(f"weight {coords} has wrong rank for {self.name}")
        if self.ring.kind == "Zmod":
            m = self.ring.modulus
            half = m // 2
            coords = tuple(((c + half) % m) - half for c in coords)
        return coords

    def weight_form(self, w: Weight) -> Polynomial:
        return Polynomial.linear_form(self.ctx, list(w), self.ring)


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class VirtualRep:
    """Finite weight multiset with nonzero integer multiplicities."""

    lattice: Lattice
    weights: tuple[tuple[Weight, int], ...]

    @staticmethod
    def from_weights(lattice: Lattice,
                     weights: Iterable[Sequence[int] | tuple[Sequence[int], int]]
                     ) -> "VirtualRep":
        acc: dict[Weight, int] = {}
        for item in weights:
            if (isinstance(item, tuple) and len(item) == 2
                    and isinstance(item[1], int) and not isinstance(item[0], int)):
                coords, mult = item
            else:
                coords, mult = item, 1
            w = lattice.normalize_weight(coords)
            acc[w] = acc.get(w, 0) + mult
        return VirtualRep(lattice, tuple(sorted(
            (w, m) for w, m in acc.items() if m != 0)))

    def multiplicity(self, coords: Sequence[int]) -> int:
        w = self.lattice.normalize_weight(coords)
        return dict(self.weights).get(w, 0)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.weights)

    @property
    def is_genuine(self) -> bool:
        return all(m > 0 for _, m in self.weights)

    def weight_list(self) -> list[Weight]:
        """Weights repeated with multiplicity; only for genuine representations."""
        if not self.is_genuine:
            raise RepresentationError("virtual representation has negative multiplicities")
        out: list[Weight] = []
        for w, m in self.weights:
            out.extend([w] * m)
        return out


# ---- constructors ----------------------------------------------------------


def trivial(lattice: Lattice, copies: int = 1) -> VirtualRep:
    return VirtualRep.from_weights(lattice, [((0,) * lattice.rank, copies)])


def dual(r: VirtualRep) -> VirtualRep:
    return VirtualRep.from_weights(
        r.lattice, [(tuple(-c for c in w), m) for w, m in r.weights])


def direct_sum(r: VirtualRep, s: VirtualRep) -> VirtualRep:
    if r.lattice != s.lattice:
        raise RepresentationError("direct sum across different lattices")
    return VirtualRep.from_weights(r.lattice, list(r.weights) + list(s.weights))


def subtract(r: VirtualRep, s: VirtualRep) -> VirtualRep:
    """Remove s's weights from r; s must be a sub-multiset of r."""
    if r.lattice != s.lattice:
        raise RepresentationError("subtraction across different lattices")
    acc = dict(r.weights)
    for w, m in s.weights:
        if acc.get(w, 0) < m:
            raise RepresentationError(
                f"subtrahend weight {w} (x{m}) not contained in the minuend")
        acc[w] -= m
    return VirtualRep.from_weights(r.lattice, [(w, m) for w, m in acc.items()])


def tensor(r: VirtualRep, s: VirtualRep) -> VirtualRep:
    if r.lattice != s.lattice:
        raise RepresentationError("tensor across different lattices")
    items = []
    for w1, m1 in r.weights:
        for w2, m2 in s.weights:
            items.append((tuple(a + b for a, b in zip(w1, w2)), m1 * m2))
    return VirtualRep.from_weights(r.lattice, items)


def sym_power(r: VirtualRep, k: int) -> VirtualRep:
    ws = r.weight_list()
    items = []
    for combo in itertools.combinations_with_replacement(ws, k):
        items.append(tuple(sum(cs) for cs in zip(*combo)) if combo else (0,) * r.lattice.rank)
    return VirtualRep.from_weights(r.lattice, items)


def exterior_power(r: VirtualRep, k: int) -> VirtualRep:
    ws = r.weight_list()
    items = []
    for combo in itertools.combinations(ws, k):
        items.append(tuple(sum(cs) for cs in zip(*combo)) if combo else (0,) * r.lattice.rank)
    return VirtualRep.from_weights(r.lattice, items)


def twist(r: VirtualRep, w: Sequence[int]) -> VirtualRep:
    shift = r.lattice.normalize_weight(w)
    return VirtualRep.from_weights(
        r.lattice, [(tuple(a + b for a, b in zip(weight, shift)), m)
                    for weight, m in r.weights])


# ---- Chern classes ----------------------------------------------------------


def chern_class(r: VirtualRep, i: int) -> Polynomial:
    """i-th elementary symmetric polynomial of the weight multiset."""
    if i < 0:
        raise ValueError("negative Chern degree")
    lattice = r.lattice
    ws = r.weight_list()
    if i == 0:
        return Polynomial.constant(lattice.ctx, 1, lattice.ring)
    if i > len(ws):
        return Polynomial.zero(lattice.ctx, lattice.ring)
    # e_i by one pass of the Newton-girard style update e[k] += w * e[k-1].
    e = [Polynomial.zero(lattice.ctx, lattice.ring) for _ in range(i + 1)]
    e[0] = Polynomial.constant(lattice.ctx, 1, lattice.ring)
    for w in ws:
        form = lattice.weight_form(w)
        for k in range(i, 0, -1):
            e[k] = e[k] + e[k - 1] * form
    return e[i]


def total_chern_classes(r: VirtualRep) -> list[Polynomial]:
    return [chern_class(r, i) for i in range(r.dimension + 1)]


# ---- lattice maps -----------------------------------------------------------


@dataclass(frozen=True)
class LatticeMap:
    """Linear map of character lattices, optionally reducing coefficients."""

    name: str
    source: Lattice
    target: Lattice
    matrix: tuple[tuple[int, ...], ...]  # target.rank rows x source.rank columns

    def __post_init__(self) -> None:
        if len(self.matrix) != self.target.rank or any(
                len(row) != self.source.rank for row in self.matrix):
            raise ValueError("lattice map matrix has wrong shape")

    def map_weight(self, w: Sequence[int]) -> Weight:
        w = self.source.normalize_weight(w)
        image = [sum(self.matrix[i][j] * w[j] for j in range(self.source.rank))
                 for i in range(self.target.rank)]
        return self.target.normalize_weight(image)

    def ring_map(self) -> RingMap:
        images = []
        for j in range(self.source.rank):
            images.append(Polynomial.linear_form(
                self.target.ctx, [self.matrix[i][j] for i in range(self.target.rank)],
                self.target.ring))
        return RingMap(self.source.ctx, self.target.ctx, tuple(images),
                       self.target.ring)


def restrict_rep(r: VirtualRep, m: LatticeMap) -> VirtualRep:
    if r.lattice != m.source:
        raise RepresentationError(
            f"representation over {r.lattice.name}, map from {m.source.name}")
    return VirtualRep.from_weights(
        m.target, [(m.map_weight(w), mult) for w, mult in r.weights])


def restrict_poly(p: Polynomial, m: LatticeMap) -> Polynomial:
    return m.ring_map().apply(p)


def restrict(value, m: LatticeMap):
    if isinstance(value, VirtualRep):
        return restrict_rep(value, m)
    if isinstance(value, Polynomial):
        return restrict_poly(value, m)
    raise TypeError("restrict expects a VirtualRep or Polynomial")


# ---- expressing classes in named generators ----------------------------------


@dataclass(frozen=True)
class ExpressResult:
    ok: bool
    expression: Polynomial | None
    rational_expression: str | None


class ExpressError(ValueError):
    pass


def express_in(target: Polynomial, gens: Mapping[str, Polynomial]) -> ExpressResult:
    """Write a homogeneous polynomial as an integer polynomial in generators.

    Solves degree-wise over Z.  When several expressions exist the certificate
    is canonicalized by Hermite-reducing the coordinate vector against the
    syzygy lattice in graded-lex coordinate order, so the result is
    deterministic.  When only a rational combination exists it is reported in
    ``rational_expression`` and ``ok`` is False.
    """
    names = list(gens)
    polys = [gens[n] for n in names]
    degrees = []
    for name, g in zip(names, polys):
        d = g.weighted_degree()
        if d is None or not g.is_homogeneous():
            raise ExpressError(f"generator {name} is not homogeneous and nonzero")
        degrees.append(d)
    d_target = target.weighted_degree()
    gen_ctx = context(names, degrees)
    if d_target is None:
        return ExpressResult(True, Polynomial.zero(gen_ctx, target.ring), None)
    if not target.is_homogeneous():
        raise ExpressError("target is not homogeneous")

    monomials = gen_ctx.monomials_of_degree(d_target)
    _, t_vec = target.coefficient_vector(d_target)
    rows = []
    for exp in monomials:
        prod = Polynomial.constant(target.context, 1, target.ring)
        for g, e in zip(polys, exp):
            if e:
                prod = prod * g ** e
        _, vec = prod.coefficient_vector(d_target)
        rows.append(vec)
    if not rows:
        if any(t_vec):
            return ExpressResult(False, None, None)
        return ExpressResult(True, Polynomial.zero(gen_ctx, target.ring), None)

    solution = intlinalg.solve_left(t_vec, rows)
    if solution is None:
        rational = intlinalg.solve_left_rational(t_vec, rows)
        text = None
        if rational is not None:
            parts = []
            for exp, c in zip(monomials, rational):
                if c:
                    mono = gen_ctx.render_monomial(exp) or "1"
                    parts.append(f"{c}*{mono}")
            text = " + ".join(parts) if parts else "0"
        return ExpressResult(False, None, text)

    syzygies = intlinalg.kernel_basis(intlinalg.transpose(rows))
    if syzygies:
        reduced = intlinalg.hermite_normal_form(syzygies)
        for row in reduced:
            pivot = next(j for j, x in enumerate(row) if x)
            q = solution[pivot] // row[pivot]
            if q:
                solution = [a - q * b for a, b in zip(solution, row)]
    expression = Polynomial(gen_ctx, target.ring,
                            {exp: c for exp, c in zip(monomials, solution)})
    return ExpressResult(True, expression, None)


def expand_expression(expression: Polynomial, gens: Mapping[str, Polynomial],
                      target_ctx: VariableContext,
                      ring: CoefficientRing) -> Polynomial:
    """Re-expand an express_in certificate back into the target context."""
    images = tuple(gens[name] for name in expression.context.names)
    rm = RingMap(expression.context, target_ctx, images, ring)
    return rm.apply(expression)


# ---- built-in catalog ---------------------------------------------------------

T_GL3 = Lattice("T_GL3", context(("x1", "x2", "x3")), INTEGERS)
T_PGL3_XY = Lattice("T_PGL3_xy", context(("x", "y")), INTEGERS)
T_SL3_U = Lattice("T_SL3_u", context(("u1", "u2")), INTEGERS)
A3MU3_AB = Lattice("A3mu3_ab", context(("a", "b")), integers_mod(3))

LATTICES: dict[str, Lattice] = {
    lat.name: lat for lat in (T_GL3, T_PGL3_XY, T_SL3_U, A3MU3_AB)
}

# x1 -> x, x2 -> y, x3 -> 0: inverse of the embedding x = x1 - x3, y = x2 - x3;
# canonical on translation-invariant polynomials.
TO_XY = LatticeMap("to_xy", T_GL3, T_PGL3_XY, ((1, 0, 0), (0, 1, 0)))

# Restriction along the inclusion of the SL3 torus: x3 = -x1 - x2.
TO_SL3 = LatticeMap("to_SL3", T_GL3, T_SL3_U, ((1, 0, -1), (0, 1, -1)))

# Restriction to the finite subgroup A3 x mu3 inside A3 x T_SL3: the torus
# characters u1, u2, u3 restrict to b+a, b-a, b.
TO_A3MU3 = LatticeMap("to_A3mu3", T_SL3_U, A3MU3_AB, ((1, -1), (1, 1)))

# Identity on the mod-3 lattice; composing through it reduces coefficients.
MOD3 = LatticeMap("mod3", A3MU3_AB, A3MU3_AB, ((1, 0), (0, 1)))

MAPS: dict[str, LatticeMap] = {
    m.name: m for m in (TO_XY, TO_SL3, TO_A3MU3, MOD3)
}

# The embedding of SL3-torus characters into GL3-torus characters induced by
# [t1,t2,t3] -> (t2/t3, t3/t1, t1/t2); one column per u-variable.  Transporting
# the permutation action through it yields the signed action on u1, u2.
TWIST_EMBEDDING = ((0, -1), (1, 0), (-1, 1))

# Same device for the two-variable presentation x = x1 - x3, y = x2 - x3.
XY_EMBEDDING = ((1, 0), (0, 1), (-1, -1))


def _build_reps() -> dict[str, VirtualRep]:
    e3 = VirtualRep.from_weights(T_GL3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    e3_dual = dual(e3)
    sl3 = subtract(tensor(e3, e3_dual), trivial(T_GL3))
    sym3 = twist(sym_power(e3, 3), (-1, -1, -1))
    w_torus = VirtualRep.from_weights(T_SL3_U, [(1, 0), (0, 1), (-1, -1)])
    w_a3mu3 = VirtualRep.from_weights(A3MU3_AB, [(1, 1), (-1, 1), (0, 1)])
    reg = VirtualRep.from_weights(
        A3MU3_AB, [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)])
    return {
        "E": e3,
        "E_dual": e3_dual,
        "sl3": sl3,
        "Sym3E_PGL3": sym3,
        "Sym3E_dual_PGL3": dual(sym3),
        "W_A3T": w_torus,
        "W_A3mu3": w_a3mu3,
        "reg_A3mu3": reg,
    }


REPRESENTATIONS: dict[str, VirtualRep] = _build_reps()


def standard(name: str) -> VirtualRep:
    try:
        return REPRESENTATIONS[name]
    except KeyError:
        raise KeyError(f"no catalogued representation {name!r}") from None


def lattice(name: str) -> Lattice:
    try:
        return LATTICES[name]
    except KeyError:
        raise KeyError(f"no catalogued lattice {name!r}") from None


def lattice_map(name: str) -> LatticeMap:
    try:
        return MAPS[name]
    except KeyError:
        raise KeyError(f"no catalogued lattice map {name!r}") from None
