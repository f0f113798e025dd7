"""Exact sparse multivariate polynomials over Z, Z/m and Q with weighted grading.

A polynomial is a finite map from exponent vectors to nonzero coefficients,
kept in canonical form: no zero coefficients are stored, Z/m coefficients are
canonical residues in [0, m), and rational coefficients are reduced
fractions.  Iteration, printing and basis enumeration all follow graded-lex
order (weighted degree first, then lexicographic on exponent vectors, largest
first), so every rendering of a value is deterministic.

The text format used in reports is ``coeff*var^exp`` with explicit ``*`` and
``^``, e.g. ``2*x1^3 - 9*x1*x2 + 27*x3``; :func:`parse` inverts
:meth:`Polynomial.render` exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Exponent = tuple[int, ...]


class ContextMismatchError(ValueError):
    """Operands live over different variable contexts."""


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class NotHomogeneousError(ValueError):
    """A homogeneous polynomial was required."""


@dataclass(frozen=True)
class CoefficientRing:
    """One of Z, Z/m (m >= 2) or Q; arithmetic is exact and unbounded."""

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Zmod", "Q"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modulus must be >= 2")
        elif self.modulus is not None:
            raise ValueError("modulus only makes sense for Zmod")

    def normalize(self, c):
        if self.kind == "Z":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise RingMismatchError(f"{c} is not an integer")
                return int(c)
            return int(c)
        if self.kind == "Zmod":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise RingMismatchError(f"{c} is not an integer")
                c = int(c)
            return int(c) % self.modulus
        return Fraction(c)

    def __str__(self) -> str:
        if self.kind == "Zmod":
            return f"Z/{self.modulus}"
        return self.kind


INTEGERS = CoefficientRing("Z")
RATIONALS = CoefficientRing("Q")


def integers_mod(m: int) -> CoefficientRing:
    return CoefficientRing("Zmod", m)


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableContext:
    """An ordered variable alphabet with a positive integer weight per variable."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def weighted_degree(self, exponent: Exponent) -> int:
        return sum(e * w for e, w in zip(exponent, self.weights))

    def monomials_of_degree(self, d: int) -> list[Exponent]:
        """All exponent vectors of weighted degree d, graded-lex (largest first)."""
        if d < 0:
            return []
        out: list[Exponent] = []

        def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
            if i == self.arity:
                if remaining == 0:
                    out.append(prefix)
                return
            w = self.weights[i]
            for e in range(remaining // w, -1, -1):
                rec(i + 1, remaining - e * w, prefix + (e,))

        rec(0, d, ())
        return out

    def render_monomial(self, exponent: Exponent) -> str:
        factors = []
        for name, e in zip(self.names, exponent):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)


def context(names: Sequence[str], weights: Sequence[int] | None = None) -> VariableContext:
    names = tuple(names)
    if weights is None:
        weights = (1,) * len(names)
    return VariableContext(names, tuple(weights))


class Polynomial:
    """Immutable sparse polynomial over a :class:`VariableContext` and ring."""

    __slots__ = ("context", "ring", "terms")

    def __init__(self, ctx: VariableContext, ring: CoefficientRing,
                 terms: Mapping[Exponent, object]):
        cleaned: dict[Exponent, object] = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != ctx.arity:
                raise ValueError(f"exponent {exp} has wrong arity for {ctx.names}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = ring.normalize(c)
            if c != 0:
                if exp in cleaned:
                    c = ring.normalize(cleaned[exp] + c)
                    if c == 0:
                        del cleaned[exp]
                        continue
                cleaned[exp] = c
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    # ---- construction helpers -------------------------------------------------

    @staticmethod
    def zero(ctx: VariableContext, ring: CoefficientRing = INTEGERS) -> "Polynomial":
        return Polynomial(ctx, ring, {})

    @staticmethod
    def constant(ctx: VariableContext, value, ring: CoefficientRing = INTEGERS) -> "Polynomial":
        return Polynomial(ctx, ring, {(0,) * ctx.arity: value})

    @staticmethod
    def variable(ctx: VariableContext, name: str, ring: CoefficientRing = INTEGERS) -> "Polynomial":
        exp = [0] * ctx.arity
        exp[ctx.index(name)] = 1
        return Polynomial(ctx, ring, {tuple(exp): 1})

    @staticmethod
    def linear_form(ctx: VariableContext, coeffs: Sequence[int],
                    ring: CoefficientRing = INTEGERS) -> "Polynomial":
        terms = {}
        for i, c in enumerate(coeffs):
            exp = [0] * ctx.arity
            exp[i] = 1
            terms[tuple(exp)] = c
        return Polynomial(ctx, ring, terms)

    # ---- basic protocol -------------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"contexts differ: {self.context.names} vs {other.context.names}")
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring} vs {other.ring}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.context == other.context and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.context, self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return Polynomial(self.context, self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.context, self.ring,
                          {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.context, self.ring,
                              {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.context, self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.context, 1, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # ---- grading --------------------------------------------------------------

    def ordered_exponents(self) -> list[Exponent]:
        ctx = self.context
        return sorted(self.terms, key=lambda e: (ctx.weighted_degree(e), e),
                      reverse=True)

    def weighted_degree(self) -> int | None:
        """Top weighted degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.context.weighted_degree(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> "Polynomial":
        ctx = self.context
        return Polynomial(ctx, self.ring,
                          {e: c for e, c in self.terms.items()
                           if ctx.weighted_degree(e) == d})

    def is_homogeneous(self, d: int | None = None) -> bool:
        degrees = {self.context.weighted_degree(e) for e in self.terms}
        if not degrees:
            return True
        if d is None:
            return len(degrees) == 1
        return degrees == {d}

    def coefficient_vector(self, d: int) -> tuple[list[Exponent], list]:
        """Coordinates of a degree-d homogeneous polynomial in the graded-lex basis.

        Returns the full degree-d monomial basis of the context together with
        this polynomial's coordinates in it.
        """
        if not self.is_homogeneous(d) and self.terms:
            raise NotHomogeneousError(f"not homogeneous of degree {d}: {self.render()}")
        basis = self.context.monomials_of_degree(d)
        vec = [self.terms.get(e, 0) for e in basis]
        return basis, vec

    # ---- calculus -------------------------------------------------------------

    def derivative(self, var: int | str) -> "Polynomial":
        i = var if isinstance(var, int) else self.context.index(var)
        out: dict[Exponent, object] = {}
        for e, c in self.terms.items():
            if e[i] > 0:
                ne = list(e)
                ne[i] -= 1
                key = tuple(ne)
                out[key] = out.get(key, 0) + c * e[i]
        return Polynomial(self.context, self.ring, out)

    def directional_derivative(self, direction: Sequence[int]) -> "Polynomial":
        if len(direction) != self.context.arity:
            raise ValueError("direction has wrong arity")
        result = Polynomial.zero(self.context, self.ring)
        for i, d in enumerate(direction):
            if d:
                result = result + self.derivative(i) * d
        return result

    # ---- rendering ------------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp in self.ordered_exponents():
            c = self.terms[exp]
            negative = c < 0
            mag = -c if negative else c
            mon = self.context.render_monomial(exp)
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<Polynomial {self.render()} over {self.ring}>"


# ---- ring maps ----------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    """A ring homomorphism given by one image polynomial per source variable."""

    source: VariableContext
    target: VariableContext
    images: tuple[Polynomial, ...]
    target_ring: CoefficientRing

    def __post_init__(self) -> None:
        if len(self.images) != self.source.arity:
            raise ValueError("one image per source variable required")
        for img in self.images:
            if img.context != self.target:
                raise ContextMismatchError("image not over target context")
            if img.ring != self.target_ring:
                raise RingMismatchError("image not over target ring")

    def is_graded(self) -> bool:
        """True when each image is homogeneous of its variable's weight."""
        for img, w in zip(self.images, self.source.weights):
            if img.terms and not img.is_homogeneous(w):
                return False
        return True

    def _convert_coeff(self, c, source_ring: CoefficientRing):
        if source_ring == self.target_ring:
            return c
        if source_ring.kind == "Z":
            return self.target_ring.normalize(c)
        if source_ring.kind == "Q" and self.target_ring.kind == "Q":
            return c
        raise RingMismatchError(
            f"cannot map coefficients from {source_ring} into {self.target_ring}")

    def apply(self, p: Polynomial) -> Polynomial:
        if p.context != self.source:
            raise ContextMismatchError("polynomial not over the map's source context")
        one = Polynomial.constant(self.target, 1, self.target_ring)
        powers: list[list[Polynomial]] = [[one] for _ in range(self.source.arity)]
        result = Polynomial.zero(self.target, self.target_ring)
        for exp, c in p.terms.items():
            term = Polynomial.constant(self.target, self._convert_coeff(c, p.ring),
                                       self.target_ring)
            for i, e in enumerate(exp):
                cache = powers[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * self.images[i])
                term = term * cache[e]
            result = result + term
        return result


def substitute(p: Polynomial, m: RingMap) -> Polynomial:
    return m.apply(p)


def identity_map(ctx: VariableContext, ring: CoefficientRing = INTEGERS) -> RingMap:
    return RingMap(ctx, ctx,
                   tuple(Polynomial.variable(ctx, n, ring) for n in ctx.names), ring)


def reduction_map(ctx: VariableContext, m: int) -> RingMap:
    """Coefficient reduction Z -> Z/m keeping the variables fixed."""
    ring = integers_mod(m)
    return RingMap(ctx, ctx,
                   tuple(Polynomial.variable(ctx, n, ring) for n in ctx.names), ring)


# ---- text format --------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\A
    (?P<coeff>\d+(?:/\d+)?)?            # optional magnitude
    (?P<star>\*)?                       # separator when both parts present
    (?P<monomial>
        [A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?
        (?:\*[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?)*
    )?
    \Z""",
    re.VERBOSE,
)


class PolynomialParseError(ValueError):
    pass


def parse(text: str, ctx: VariableContext,
          ring: CoefficientRing = INTEGERS) -> Polynomial:
    """Parse the canonical text format back into a polynomial."""
    stripped = text.strip()
    if not stripped:
        raise PolynomialParseError("empty polynomial text")
    if stripped == "0":
        return Polynomial.zero(ctx, ring)
    # Tokenize into signed terms; signs are the only top-level separators.
    pieces = re.split(r"\s*([+-])\s*", stripped)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2 != 0:
        raise PolynomialParseError(f"cannot parse {text!r}")
    terms: dict[Exponent, object] = {}
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        match = _TERM_RE.match(body)
        if not match or (match.group("coeff") is None and match.group("monomial") is None):
            raise PolynomialParseError(f"bad term {body!r} in {text!r}")
        if match.group("star") and (match.group("coeff") is None
                                    or match.group("monomial") is None):
            raise PolynomialParseError(f"bad term {body!r} in {text!r}")
        coeff_text = match.group("coeff")
        if coeff_text is None:
            coeff = Fraction(1)
        elif "/" in coeff_text:
            if ring.kind != "Q":
                raise PolynomialParseError(f"fractional coefficient over {ring}")
            coeff = Fraction(coeff_text)
        else:
            coeff = Fraction(int(coeff_text))
        if sign == "-":
            coeff = -coeff
        exp = [0] * ctx.arity
        mono_text = match.group("monomial")
        if mono_text:
            for factor in mono_text.split("*"):
                if "^" in factor:
                    name, power = factor.split("^")
                    e = int(power)
                else:
                    name, e = factor, 1
                if name not in ctx.names:
                    raise PolynomialParseError(f"unknown variable {name!r}")
                exp[ctx.index(name)] += e
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    if ring.kind != "Q":
        for key, val in terms.items():
            if isinstance(val, Fraction) and val.denominator != 1:
                raise PolynomialParseError(f"non-integral coefficient {val} over {ring}")
        terms = {k: int(v) for k, v in terms.items()}
    return Polynomial(ctx, ring, terms)
