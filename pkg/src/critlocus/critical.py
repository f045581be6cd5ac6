"""Derived-critical-locus analyses.

Builds the Koszul model of Crit(f) from the Jacobian ideal, decides the
regular-sequence equivalence with the strict locus, computes Milnor
numbers, Hessian data at rational points, validates coordinate splittings
of a smooth critical family, and runs the T*[-1]S comparison whose
success is equivalent to non-degeneracy of the normal Hessian block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import (
    GroebnerBasis,
    buchberger,
    hilbert_function,
    is_unit_mod,
    is_zero_dimensional,
    krull_dimension,
    normal_form,
    quotient_basis,
)
from .koszul import (
    BoundTooSmall,
    KoszulComplex,
    default_homology_bound,
    koszul_homology,
    minimal_safe_bound,
)
from .linalg import PolyMatrix, invert
from .polynomials import ArityError, GREVLEX, MonomialOrder, MultiPoly

INFINITE = math.inf  # sentinel for a non-isolated singular locus


class EngineError(RuntimeError):
    """An internal cross-check failed; this must not occur."""


class SplittingError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind  # "not_tangent" | "not_q_orthogonal"


@dataclass(frozen=True)
class StrictLocus:
    """The classical vanishing scheme of the partial derivatives."""

    jacobian_basis: GroebnerBasis
    dimension: int | None  # None: empty locus (unit ideal)
    zero_dimensional: bool


@dataclass(frozen=True)
class HessianData:
    matrix: PolyMatrix


@dataclass(frozen=True)
class SplittingData:
    """Coordinate realization of a first-order splitting of the family.

    ``tangent_vars`` span the directions along the critical family,
    ``normal_vars`` the complement; validity is established by
    ``validate_splitting``.
    """

    tangent_vars: tuple[int, ...]
    normal_vars: tuple[int, ...]
    validated: bool = False

    @classmethod
    def from_tangent(cls, tangent: Sequence[int], arity: int) -> "SplittingData":
        t = tuple(sorted(set(tangent)))
        if any(i < 0 or i >= arity for i in t):
            raise ValueError("tangent variable index out of range")
        n = tuple(i for i in range(arity) if i not in set(t))
        return cls(t, n)


@dataclass(frozen=True)
class CriticalPointReport:
    point: tuple[Fraction, ...]
    on_locus: bool
    hessian_at: tuple[tuple[Fraction, ...], ...]
    nondegenerate: bool
    alpha_matrix: tuple[tuple[Fraction, ...], ...] | None
    omega_flat_invertible: bool


@dataclass(frozen=True)
class LambdaVerdict:
    """Regular-sequence decision with a named certificate.

    The primary criterion is ideal-theoretic (height n, i.e. the quotient
    is zero-dimensional or empty); Koszul homology vanishing in positive
    degrees is computed as an independent cross-check up to the bound.
    """

    regular: bool
    criterion: str
    dimension: int | None
    positive_degree_dimensions: dict[int, int]
    homology_bound: int
    cross_check: str  # "confirms" | "inconclusive within bound"


@dataclass(frozen=True)
class PhiComparisonReport:
    bound: int
    crit_table: dict[int, tuple[int, ...]]
    model_table: dict[int, tuple[int, ...]]
    verdict: str  # "equal" | "unequal" | "inconclusive"
    normal_hessian_nondegenerate: bool
    mismatches: tuple[tuple[int, int, int, int], ...]  # (k, degree, crit, model)

    @property
    def biconditional_holds(self) -> bool | None:
        if self.verdict == "inconclusive":
            return None
        return (self.verdict == "equal") == self.normal_hessian_nondegenerate


def jacobian_ideal(f: MultiPoly, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    return buchberger([f.partial(i) for i in range(f.arity)], order, arity=f.arity)


def build_crit(f: MultiPoly, order: MonomialOrder = GREVLEX) -> tuple[KoszulComplex, StrictLocus]:
    """Koszul model of the derived critical locus and its strict locus."""
    partials = tuple(f.partial(i) for i in range(f.arity))
    complex_ = KoszulComplex(f.arity, partials, "critical_locus")
    gb = buchberger(list(partials), order, arity=f.arity)
    locus = StrictLocus(
        jacobian_basis=gb,
        dimension=krull_dimension(gb),
        zero_dimensional=is_zero_dimensional(gb),
    )
    return complex_, locus


def milnor_number(f: MultiPoly, order: MonomialOrder = GREVLEX) -> int | float:
    """Dimension of the Jacobian quotient ring; INFINITE when not isolated."""
    gb = jacobian_ideal(f, order)
    if not is_zero_dimensional(gb):
        return INFINITE
    return len(quotient_basis(gb))


def lambda_equivalence_verdict(f: MultiPoly, bound: int | None = None) -> LambdaVerdict:
    """Decide whether the partials form a regular sequence.

    Height criterion: over a polynomial ring the n partials are regular
    iff the Jacobian quotient is zero-dimensional (the unit ideal counts:
    both loci are then empty).  Koszul homology in degrees k >= 1 is an
    independent cross-check; disagreement raises EngineError.
    """
    complex_, locus = build_crit(f)
    regular = locus.zero_dimensional
    if locus.dimension is None:
        criterion = "unit Jacobian ideal: strict and derived loci are both empty"
    elif regular:
        criterion = "Jacobian quotient has dimension 0 (height n over a Cohen-Macaulay ring)"
    else:
        criterion = f"Jacobian quotient has dimension {locus.dimension} > 0"
    if bound is None:
        bound = default_homology_bound(complex_)
        if not complex_.is_weight_graded():
            # the truncated path is quadratic in the basis; keep it modest
            bound = min(bound, minimal_safe_bound(complex_) + 3)
    report = koszul_homology(complex_, bound)
    positive = {
        k: (report.dimensions[k] if report.mode == "finite" else sum(report.table[k]))
        for k in range(1, f.arity + 1)
    }
    any_positive = any(v != 0 for v in positive.values())
    if regular and any_positive:
        raise EngineError(
            "height criterion says regular sequence but positive-degree homology is nonzero"
        )
    if regular:
        cross = "confirms"
    else:
        cross = "confirms" if any_positive else "inconclusive within bound"
    return LambdaVerdict(
        regular=regular,
        criterion=criterion,
        dimension=locus.dimension,
        positive_degree_dimensions=positive,
        homology_bound=bound,
        cross_check=cross,
    )


def hessian(f: MultiPoly) -> HessianData:
    n = f.arity
    entries = tuple(
        tuple(f.partial(i).partial(j) for j in range(n)) for i in range(n)
    )
    return HessianData(PolyMatrix(entries))


def hessian_at(f: MultiPoly, point: Sequence) -> list[list[Fraction]]:
    if len(point) != f.arity:
        raise ArityError("point arity mismatch")
    return hessian(f).matrix.evaluate([Fraction(x) for x in point])


def point_report(f: MultiPoly, point: Sequence) -> CriticalPointReport:
    """Local analysis at a rational point: Hessian, inverse-Hessian map.

    At a non-degenerate critical point the non-degeneracy map of the
    Lagrangian fibration is the inverse Hessian; off the strict locus no
    such map is reported.
    """
    from .symplectic import omega_minus_one

    pt = tuple(Fraction(x) for x in point)
    if len(pt) != f.arity:
        raise ArityError("point arity mismatch")
    on_locus = all(f.partial(i).evaluate(pt) == 0 for i in range(f.arity))
    hess = hessian_at(f, pt)
    alpha = invert(hess) if on_locus else None
    nondegenerate = on_locus and alpha is not None
    # the pairing block of the shifted 2-form in coordinates is the
    # identity; verified rather than assumed
    K = KoszulComplex(f.arity, tuple(f.partial(i) for i in range(f.arity)), "critical_locus")
    record = omega_minus_one(f.arity, K)
    return CriticalPointReport(
        point=pt,
        on_locus=on_locus,
        hessian_at=tuple(tuple(row) for row in hess),
        nondegenerate=nondegenerate,
        alpha_matrix=tuple(tuple(row) for row in alpha) if nondegenerate and alpha else None,
        omega_flat_invertible=record.pairing_invertible,
    )


def fat_point_signal(milnor: int | float, distinct_points_on_locus: int) -> bool:
    """Informational flag: a finite local algebra bigger than the visible
    point set indicates a non-reduced (fat) strict locus."""
    return milnor != INFINITE and milnor > distinct_points_on_locus


def _normal_ideal(s: SplittingData, arity: int) -> GroebnerBasis:
    gens = [MultiPoly.variable(i, arity) for i in s.normal_vars]
    return buchberger(gens, GREVLEX, arity=arity)


def validate_splitting(f: MultiPoly, s: SplittingData) -> SplittingData:
    """Check that the coordinate subspace S0 = {x_j = 0, j normal} realizes
    the strict critical locus and is Q-orthogonal to the normal directions.

    (a) every partial of f lies in the ideal of S0 (so S0 is contained in
        the strict locus) and the two loci have the same dimension;
    (b) the Hessian blocks tangent-tangent and tangent-normal vanish
        modulo the ideal of S0.
    """
    n = f.arity
    if set(s.tangent_vars) | set(s.normal_vars) != set(range(n)) or set(
        s.tangent_vars
    ) & set(s.normal_vars):
        raise ValueError("tangent and normal variables must partition the coordinates")
    gb_n = _normal_ideal(s, n)
    for i in range(n):
        residue = normal_form(f.partial(i), gb_n)
        if not residue.is_zero():
            raise SplittingError(
                "not_tangent",
                "splitting not tangent to critical locus: partial derivative "
                f"{i} of the functional does not vanish modulo the subspace ideal",
            )
    locus_dim = krull_dimension(jacobian_ideal(f))
    expected = len(s.tangent_vars)
    if locus_dim != expected:
        raise SplittingError(
            "not_tangent",
            "splitting not tangent to critical locus: the strict locus has "
            f"dimension {locus_dim}, the coordinate subspace has dimension {expected}",
        )
    hess = hessian(f).matrix
    for i in s.tangent_vars:
        for j in list(s.tangent_vars) + list(s.normal_vars):
            if not normal_form(hess.entry(i, j), gb_n).is_zero():
                raise SplittingError(
                    "not_q_orthogonal",
                    "splitting not Q-orthogonal: Hessian block entry "
                    f"({i},{j}) does not vanish modulo the subspace ideal",
                )
    return SplittingData(s.tangent_vars, s.normal_vars, validated=True)


def normal_hessian(f: MultiPoly, s: SplittingData) -> tuple[PolyMatrix, bool]:
    """Normal-normal Hessian block over the family ring, with the
    non-degeneracy verdict (its determinant is a unit there)."""
    if not s.validated:
        raise ValueError("splitting has not been validated")
    gb_n = _normal_ideal(s, f.arity)
    hess = hessian(f).matrix
    block = PolyMatrix(
        tuple(
            tuple(normal_form(hess.entry(i, j), gb_n) for j in s.normal_vars)
            for i in s.normal_vars
        )
    ) if s.normal_vars else PolyMatrix(())
    if s.normal_vars:
        det = normal_form(block.det(), gb_n)
    else:
        det = MultiPoly.one(f.arity)
    return block, is_unit_mod(det, gb_n)


def phi_comparison(
    f: MultiPoly, s: SplittingData, bound: int | None = None
) -> PhiComparisonReport:
    """Compare Crit(f) homology against the shifted cotangent model of the
    family: graded dimensions C(|T|, k) * hilbert(O_S, d), with the wedge
    generators placed at polynomial degree 0.

    Within the bound, equality of the tables is equivalent to the normal
    Hessian block being non-degenerate; the report carries both sides so
    the biconditional can be asserted.
    """
    if not s.validated:
        raise ValueError("splitting has not been validated")
    n = f.arity
    complex_, _ = build_crit(f)
    if bound is None:
        bound = default_homology_bound(complex_)
    _, nondeg = normal_hessian(f, s)
    try:
        report = koszul_homology(complex_, bound)
    except BoundTooSmall:
        return PhiComparisonReport(
            bound=bound,
            crit_table={},
            model_table={},
            verdict="inconclusive",
            normal_hessian_nondegenerate=nondeg,
            mismatches=(),
        )
    gb_n = _normal_ideal(s, n)
    t_count = len(s.tangent_vars)
    model: dict[int, tuple[int, ...]] = {}
    for k in range(n + 1):
        factor = math.comb(t_count, k)
        model[k] = tuple(
            factor * hilbert_function(gb_n, d) for d in range(bound + 1)
        )
    crit_table = {k: report.graded_dimensions(k) for k in range(n + 1)}
    mismatches = tuple(
        (k, d, crit_table[k][d], model[k][d])
        for k in range(n + 1)
        for d in range(bound + 1)
        if crit_table[k][d] != model[k][d]
    )
    if not report.sliceable:
        verdict = "inconclusive"
    else:
        verdict = "equal" if not mismatches else "unequal"
    return PhiComparisonReport(
        bound=bound,
        crit_table=crit_table,
        model_table=model,
        verdict=verdict,
        normal_hessian_nondegenerate=nondeg,
        mismatches=mismatches,
    )
