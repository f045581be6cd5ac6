"""Buchberger's algorithm and ideal-theoretic decision procedures.

Reduced Groebner bases are computed deterministically: normal selection
strategy (smallest lcm first), Buchberger's coprimality and chain criteria
for pair pruning, monic generators, output sorted by descending leading
monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .polynomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    MultiPoly,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)


class NotZeroDimensional(ValueError):
    """Raised when an operation requires a zero-dimensional ideal."""


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis with its monomial order.

    ``generators`` are monic, pairwise irredundant and fully inter-reduced;
    the tuple is sorted by descending leading monomial.  The empty tuple
    represents the zero ideal.
    """

    generators: tuple[MultiPoly, ...]
    order: MonomialOrder
    arity: int

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def contains(self, p: MultiPoly) -> bool:
        return normal_form(p, self).is_zero()


def _reduce(p: MultiPoly, basis: list[MultiPoly], order: MonomialOrder) -> MultiPoly:
    """Full remainder of p on division by the list, first divisor wins."""
    remainder_terms: dict[Monomial, Fraction] = {}
    h = p
    leading = [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in basis]
    while h.terms:
        lm = h.leading_monomial(order)
        lc = h.terms[lm]
        for gm, gc, g in leading:
            if mono_divides(gm, lm):
                factor = MultiPoly.monomial(mono_div(lm, gm), lc / gc)
                h = h - factor * g
                break
        else:
            remainder_terms[lm] = lc
            h = h - MultiPoly.monomial(lm, lc)
    return MultiPoly(remainder_terms, p.arity)


def _s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    fm, fc = f.leading_monomial(order), f.leading_coefficient(order)
    gm, gc = g.leading_monomial(order), g.leading_coefficient(order)
    lcm = mono_lcm(fm, gm)
    return MultiPoly.monomial(mono_div(lcm, fm), Fraction(1) / fc) * f - MultiPoly.monomial(
        mono_div(lcm, gm), Fraction(1) / gc
    ) * g


def buchberger(
    gens: list[MultiPoly], order: MonomialOrder = GREVLEX, arity: int | None = None
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Deterministic for fixed input and order.  Pairs are processed by
    ascending lcm (normal strategy) and pruned by the coprimality criterion
    and the chain criterion.  ``arity`` is only needed for an empty
    generator list (the zero ideal).
    """
    arities = {g.arity for g in gens}
    if arity is not None:
        arities.add(arity)
    if len(arities) > 1:
        raise ValueError("generators do not share an arity")
    arity = arities.pop() if arities else 0
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis((), order, arity)

    pairs: set[tuple[int, int]] = set(combinations(range(len(basis)), 2))

    def pair_key(pair: tuple[int, int]):
        i, j = pair
        lcm = mono_lcm(
            basis[i].leading_monomial(order), basis[j].leading_monomial(order)
        )
        return (order.key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lm_i = basis[i].leading_monomial(order)
        lm_j = basis[j].leading_monomial(order)
        lcm = mono_lcm(lm_i, lm_j)
        if lcm == mono_mul(lm_i, lm_j):
            continue  # coprime leading terms, S-polynomial reduces to zero
        chained = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not mono_divides(basis[k].leading_monomial(order), lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chained = True
                break
        if chained:
            continue
        remainder = _reduce(_s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero():
            continue
        basis.append(remainder.monic(order))
        new = len(basis) - 1
        pairs.update((t, new) for t in range(new))

    return _reduced_basis(basis, order, arity)


def _reduced_basis(basis: list[MultiPoly], order: MonomialOrder, arity: int) -> GroebnerBasis:
    # drop generators whose leading term another generator's divides
    by_lm = sorted(basis, key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[MultiPoly] = []
    for g in by_lm:
        lm = g.leading_monomial(order)
        if any(mono_divides(h.leading_monomial(order), lm) for h in minimal):
            continue
        minimal.append(g)
    # tail-reduce each against the others; leading terms are untouched
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(_reduce(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return GroebnerBasis(tuple(reduced), order, arity)


def normal_form(p: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Canonical remainder of p modulo the basis; zero iff p is in the ideal."""
    if p.arity != gb.arity:
        raise ValueError(f"arity mismatch: {p.arity} vs {gb.arity}")
    return _reduce(p, list(gb.generators), gb.order)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading terms."""
    if gb.arity == 0:
        return True
    lms = gb.leading_monomials()
    for var in range(gb.arity):
        if not any(all(e == 0 for i, e in enumerate(lm) if i != var) for lm in lms):
            return False
    return True


def quotient_basis(gb: GroebnerBasis) -> list[Monomial]:
    """Standard monomials of a zero-dimensional ideal, sorted by the order.

    The length is the rational-vector-space dimension of the quotient ring.
    """
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional("quotient basis requires a zero-dimensional ideal")
    lms = gb.leading_monomials()
    bounds = []
    for var in range(gb.arity):
        pure = [
            lm[var]
            for lm in lms
            if all(e == 0 for i, e in enumerate(lm) if i != var)
        ]
        bounds.append(min(pure))
    standard: list[Monomial] = []

    def scan(prefix: tuple[int, ...]) -> None:
        if len(prefix) == gb.arity:
            if not any(mono_divides(lm, prefix) for lm in lms):
                standard.append(prefix)
            return
        for e in range(bounds[len(prefix)]):
            scan(prefix + (e,))

    scan(())
    standard.sort(key=gb.order.key)
    return standard


def krull_dimension(gb: GroebnerBasis) -> int | None:
    """Dimension of the quotient ring; None for the unit ideal (empty scheme).

    Computed as the largest cardinality of a variable subset U such that no
    leading term involves only variables from U.  Brute force over subsets;
    intended for small arity.
    """
    supports = [
        frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials()
    ]
    variables = list(range(gb.arity))
    for size in range(gb.arity, -1, -1):
        for subset in combinations(variables, size):
            u = frozenset(subset)
            if all(not s <= u for s in supports):
                return size
    return None


def is_unit_mod(g: MultiPoly, gb: GroebnerBasis) -> bool:
    """True iff 1 lies in ideal(gb) + (g)."""
    if g.arity != gb.arity:
        raise ValueError(f"arity mismatch: {g.arity} vs {gb.arity}")
    combined = buchberger(list(gb.generators) + [g], gb.order)
    return combined.is_unit_ideal()


def hilbert_function(gb: GroebnerBasis, degree: int) -> int:
    """Number of standard monomials of total degree exactly ``degree``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    lms = gb.leading_monomials()
    count = 0
    for mono in monomials_of_degree(gb.arity, degree):
        if not any(mono_divides(lm, mono) for lm in lms):
            count += 1
    return count


def staircase_degree_bound(gb: GroebnerBasis) -> int:
    """Largest total degree of a standard monomial (zero-dimensional only)."""
    qb = quotient_basis(gb)
    return max((mono_degree(m) for m in qb), default=-1)
