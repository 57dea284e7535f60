"""Frobenius splitting operators on F_p[x_1, ..., x_n].

``F_*S`` is free over S on the monomials with exponents below p.  The trace
map is the S-linear dual of the top basis monomial ``x_1^(p-1)...x_n^(p-1)``:
a term ``c * x^a`` survives iff every exponent is congruent to p-1 mod p, and
then maps to ``c * x^((a - (p-1))/p)`` (p-th roots fix F_p, so coefficients
are untouched).  Every S-linear map ``F_*S -> S`` is ``f * trace`` for a
unique carrier f, which makes splitting questions polynomial arithmetic:

* ``f * trace`` splits Frobenius iff trace(f) = 1, equivalently the two
  support conditions checked by :func:`is_splitting`;
* ``(f * trace)(I) ⊆ I`` iff f lies in the Fedder colon ``I^[p] : I``;
* an ideal is compatible with a splitting iff the finitely many coset
  representatives ``x^a * g`` (a below p, g a generator) all map into it,
  which :func:`compatible_check` verifies directly, independently of the
  colon route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .field_poly import FieldPolyError, Monomial, Polynomial, RingContext
from .groebner import Budget, IdealPresentation, member, reduced_gb
from .ideal_ops import bracket_of_variables, bracket_power, colon_ideal

COMPATIBLE_ENUMERATION_LIMIT = 2**16


class EnumerationBudgetError(FieldPolyError):
    """The p^n coset enumeration is too large; use fedder_membership instead."""


def trace(g: Polynomial) -> Polynomial:
    """Project onto the dual of the top basis monomial of F_*S over S."""
    ring = g.ring
    p = ring.p
    out: dict[tuple, int] = {}
    for e, c in g.terms_dict().items():
        if all(a % p == p - 1 for a in e):
            ne = tuple((a - (p - 1)) // p for a in e)
            v = (out.get(ne, 0) + c) % p
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
    return ring.polynomial(out)


def star_apply(f: Polynomial, g: Polynomial) -> Polynomial:
    """The map f * trace evaluated at g, i.e. trace(f * g)."""
    return trace(f * g)


def top_monomial(ring: RingContext) -> Monomial:
    """The monomial x_1^(p-1) ... x_n^(p-1)."""
    return ring.monomial((ring.p - 1,) * ring.n)


def standard_splitting_carrier(ring: RingContext) -> Polynomial:
    """Carrier of the standard splitting, the top monomial itself."""
    return ring.polynomial({top_monomial(ring).exponents: 1})


@dataclass(frozen=True)
class SplittingCheck:
    """Verdict of :func:`is_splitting` with the offending monomial, if any."""

    ok: bool
    violation: Monomial | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_splitting(f: Polynomial) -> SplittingCheck:
    """Decide whether f * trace splits Frobenius.

    Two support conditions: the top monomial occurs in f with coefficient 1,
    and no other monomial of f has all exponents congruent to -1 mod p.
    Equivalent to trace(f) = 1.
    """
    ring = f.ring
    p = ring.p
    top = (p - 1,) * ring.n
    for e, c in f.terms_dict().items():
        if all(a % p == p - 1 for a in e) and e != top:
            return SplittingCheck(
                False,
                Monomial(ring, e),
                "monomial with all exponents = -1 mod p other than the top monomial",
            )
    c = f.terms_dict().get(top, 0)
    if c != 1:
        return SplittingCheck(
            False,
            Monomial(ring, top),
            f"top monomial has coefficient {c}, expected 1",
        )
    return SplittingCheck(True)


@dataclass(frozen=True)
class SplittingCandidate:
    """A map F_*S -> S presented by its carrier polynomial."""

    carrier: Polynomial

    @property
    def ring(self) -> RingContext:
        return self.carrier.ring

    def apply(self, g: Polynomial) -> Polynomial:
        return star_apply(self.carrier, g)

    def is_splitting(self) -> SplittingCheck:
        return is_splitting(self.carrier)

    def iterate(self, g: Polynomial, n: int) -> Polynomial:
        return trace_iterate(self.carrier, g, n)


def trace_iterate(f: Polynomial, g: Polynomial, n: int) -> Polynomial:
    """n-fold composition of the map f * trace applied to g."""
    if n < 1:
        raise FieldPolyError("iteration count must be >= 1")
    result = g
    for _ in range(n):
        result = trace(f * result)
    return result


def fedder_colon(
    I: IdealPresentation, order, budget: Budget | None = None
) -> IdealPresentation:
    """The colon ideal I^[p] : I, cached on the presentation per order."""
    key = ("fedder_colon", order)
    cached = I._aux_cache.get(key)
    if cached is None:
        cached = colon_ideal(bracket_power(I, 1), I, order, budget)
        I._aux_cache[key] = cached
    return cached


def fedder_membership(
    f: Polynomial, I: IdealPresentation, order, budget: Budget | None = None
) -> bool:
    """Whether (f * trace)(I) ⊆ I, tested as membership in I^[p] : I."""
    return member(f, fedder_colon(I, order, budget), order, budget)


def compatible_check(
    f: Polynomial, J: IdealPresentation, order, budget: Budget | None = None
) -> bool:
    """Direct test that (f * trace)(J) ⊆ J by enumerating module generators.

    As a submodule of F_*S, J is spanned over S by ``x^a * g`` for exponent
    vectors a below p and generators g, so S-linearity reduces the check to
    p^n * #generators memberships.  This is the enumeration oracle, kept
    deliberately independent of the Fedder colon route.
    """
    ring = J.ring
    p = ring.p
    if not J.generators:
        return True
    if p**ring.n > COMPATIBLE_ENUMERATION_LIMIT:
        raise EnumerationBudgetError(
            f"p^n = {p**ring.n} coset representatives exceed the enumeration "
            "limit; use fedder_membership"
        )
    for g in J.generators:
        for a in product(range(p), repeat=ring.n):
            shifted = g.multiply_monomial(ring.monomial(a))
            image = trace(f * shifted)
            if image and not member(image, J, order, budget):
                return False
    return True


@dataclass(frozen=True)
class FSplitOutcome:
    """Result of the graded Fedder test at the irrelevant maximal ideal."""

    split: bool
    witness: Polynomial | None
    colon: IdealPresentation

    def __bool__(self):
        return self.split


def fsplit_graded_test(
    I: IdealPresentation, order, budget: Budget | None = None
) -> FSplitOutcome:
    """Graded Fedder criterion: S/I is F-split iff I^[p] : I ⊄ (x_1, ..., x_n)^[p].

    Requires I ⊆ (x_1, ..., x_n).  On success the witness is a reduced-basis
    element of the colon with a term outside the bracket of the variables.
    """
    ring = I.ring
    for g in I.generators:
        if g.constant_term():
            raise FieldPolyError("the ideal must be contained in (x_1, ..., x_n)")
    if I.is_zero:
        return FSplitOutcome(True, ring.one(), IdealPresentation(ring, (ring.one(),)))
    C = fedder_colon(I, order, budget)
    mbr = bracket_of_variables(ring)
    for g in reduced_gb(C, order, budget).elements:
        if not mbr.contains_polynomial(g):
            return FSplitOutcome(True, g, C)
    return FSplitOutcome(False, None, C)
