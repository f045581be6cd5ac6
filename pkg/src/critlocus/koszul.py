"""The Koszul differential graded algebra Sym(T[1]) and its form calculus.

Generators and grading
----------------------
Over the polynomial ring in n variables we adjoin odd generators
``xi_0 .. xi_{n-1}`` (homological degree -1) and build the contraction
differential ``delta`` with ``delta(xi_i) = g_i``.  The coordinate de Rham
model adds form generators ``dx_i`` (degree 0, form weight 1) and
``dxi_i`` (degree -1, form weight 1).  Parity for Koszul signs is
(homological degree + form weight) mod 2, so ``xi`` and ``dx`` are odd
while ``dxi`` and polynomials are even; products of ``dxi`` generators are
symmetric and may repeat.

Sign normalization
------------------
The two differentials act on generators by

    delta: x -> 0,      xi_i -> g_i,  dx -> 0,  dxi_i -> sum_j (dg_i/dx_j) dx_j
    d:     x_i -> -dx_i, xi_i -> dxi_i, dx -> 0, dxi -> 0

Both are odd derivations.  The minus sign in d on the polynomial
generators is forced: it is the unique choice for which d^2 = delta^2 = 0
and d*delta + delta*d = 0 hold exactly while delta(dxi_i) carries the
Hessian pairing with a plus sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .groebner import (
    buchberger,
    is_zero_dimensional,
    staircase_degree_bound,
)
from .linalg import EchelonAccumulator, KernelTracker, Vector, rank as mat_rank
from .polynomials import (
    ArityError,
    Monomial,
    MultiPoly,
    mono_degree,
    monomials_of_degree,
)

XiMonomial = tuple[int, ...]  # strictly increasing generator indices
FormMonomial = tuple[tuple[int, ...], tuple[int, ...]]  # (dx indices, dxi indices)


class BoundTooSmall(ValueError):
    """Homology degree bound below the minimal safe bound."""

    def __init__(self, bound: int, minimal: int):
        super().__init__(
            f"degree bound {bound} is below the minimal safe bound {minimal}"
        )
        self.bound = bound
        self.minimal = minimal


class PointNotOnLocus(ValueError):
    """A point where the complex's structure maps do not all vanish."""


def _merge_odd(a: tuple[int, ...], b: tuple[int, ...]):
    """Merge two strictly increasing index tuples of odd generators.

    Returns (merged, sign) with the Koszul sign of the shuffle, or None
    when the factors overlap (odd square is zero).
    """
    if not a:
        return b, 1
    if not b:
        return a, 1
    sa, sb = set(a), set(b)
    if sa & sb:
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    merged = tuple(sorted(a + b))
    return merged, (-1 if inversions % 2 else 1)


class CdgaElement:
    """Element of the Koszul algebra: a map xi-monomial -> polynomial."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms: Mapping[XiMonomial, MultiPoly], arity: int):
        clean: dict[XiMonomial, MultiPoly] = {}
        for mono, poly in terms.items():
            if poly.arity != arity:
                raise ArityError("coefficient arity does not match the algebra")
            if any(i < 0 or i >= arity for i in mono):
                raise ArityError(f"generator index out of range in {mono}")
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"xi-monomial {mono} is not strictly increasing")
            if not poly.is_zero():
                clean[tuple(mono)] = poly
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("CdgaElement is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "CdgaElement":
        return cls({}, arity)

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "CdgaElement":
        return cls({(): poly}, poly.arity)

    @classmethod
    def xi(cls, indices: Sequence[int], arity: int, coeff: MultiPoly | None = None) -> "CdgaElement":
        poly = coeff if coeff is not None else MultiPoly.one(arity)
        return cls({tuple(indices): poly}, arity)

    @classmethod
    def unit(cls, arity: int) -> "CdgaElement":
        return cls.from_poly(MultiPoly.one(arity))

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, CdgaElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def homogeneous_parts(self) -> dict[int, "CdgaElement"]:
        """Split by xi-degree (the exterior degree)."""
        parts: dict[int, dict[XiMonomial, MultiPoly]] = {}
        for mono, poly in self.terms.items():
            parts.setdefault(len(mono), {})[mono] = poly
        return {k: CdgaElement(t, self.arity) for k, t in parts.items()}

    def xi_degree(self) -> int | None:
        """Exterior degree if homogeneous, else None; None for zero too."""
        degrees = {len(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "CdgaElement") -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "CdgaElement") -> "CdgaElement":
        self._check(other)
        res = dict(self.terms)
        for mono, poly in other.terms.items():
            s = res.get(mono, MultiPoly.zero(self.arity)) + poly
            if s.is_zero():
                res.pop(mono, None)
            else:
                res[mono] = s
        return CdgaElement(res, self.arity)

    def __neg__(self) -> "CdgaElement":
        return CdgaElement({m: -p for m, p in self.terms.items()}, self.arity)

    def __sub__(self, other: "CdgaElement") -> "CdgaElement":
        return self + (-other)

    def scale(self, scalar) -> "CdgaElement":
        return CdgaElement({m: p * scalar for m, p in self.terms.items()}, self.arity)

    def __mul__(self, other):
        """Graded product; polynomials are central, xi generators anticommute."""
        if isinstance(other, MultiPoly):
            other = CdgaElement.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        res: dict[XiMonomial, MultiPoly] = {}
        for m1, p1 in self.terms.items():
            for m2, p2 in other.terms.items():
                merged = _merge_odd(m1, m2)
                if merged is None:
                    continue
                mono, sign = merged
                contrib = p1 * p2 if sign == 1 else -(p1 * p2)
                s = res.get(mono, MultiPoly.zero(self.arity)) + contrib
                if s.is_zero():
                    res.pop(mono, None)
                else:
                    res[mono] = s
        return CdgaElement(res, self.arity)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "CdgaElement(0)"
        names = [f"x{i}" for i in range(self.arity)]
        bits = []
        for mono in sorted(self.terms):
            xi = "".join(f"xi{i}" for i in mono) or "1"
            bits.append(f"({self.terms[mono].to_string(names)})*{xi}")
        return "CdgaElement(" + " + ".join(bits) + ")"


def wedge(a: CdgaElement, b: CdgaElement) -> CdgaElement:
    """Graded-commutative product in the Koszul algebra."""
    return a * b


@dataclass(frozen=True)
class KoszulComplex:
    """(Sym T[1], contraction along g): odd generators with delta(xi_i) = g_i."""

    arity: int
    diff_images: tuple[MultiPoly, ...]
    origin_tag: str = "custom"  # "critical_locus" | "one_form" | "custom"

    def __post_init__(self) -> None:
        if len(self.diff_images) != self.arity:
            raise ArityError("need one structure polynomial per generator")
        for g in self.diff_images:
            if g.arity != self.arity:
                raise ArityError("structure polynomial arity mismatch")

    def weights(self) -> tuple[int, ...]:
        """Polynomial weight of each xi generator: deg g_i, 0 for g_i = 0."""
        return tuple(max(g.total_degree(), 0) for g in self.diff_images)

    def is_weight_graded(self) -> bool:
        return all(g.is_zero() or g.is_homogeneous() for g in self.diff_images)


def koszul_differential(K: KoszulComplex, element: CdgaElement) -> CdgaElement:
    """Odd derivation with delta(xi_i) = g_i, zero on polynomials."""
    if element.arity != K.arity:
        raise ArityError("element does not live over this complex")
    res = CdgaElement.zero(K.arity)
    for mono, poly in element.terms.items():
        for t, gen in enumerate(mono):
            g = K.diff_images[gen]
            if g.is_zero():
                continue
            rest = mono[:t] + mono[t + 1 :]
            coeff = g * poly if t % 2 == 0 else -(g * poly)
            res = res + CdgaElement({rest: coeff}, K.arity)
    return res


# ---------------------------------------------------------------------------
# coordinate de Rham model


class FormElement:
    """Element of the form algebra: map (dx-monomial, dxi-monomial) -> CdgaElement.

    dx indices are strictly increasing (odd generators); dxi indices are
    non-decreasing with repetition allowed (even generators).
    """

    __slots__ = ("terms", "arity")

    def __init__(self, terms: Mapping[FormMonomial, CdgaElement], arity: int):
        clean: dict[FormMonomial, CdgaElement] = {}
        for (dx, dxi), coeff in terms.items():
            if coeff.arity != arity:
                raise ArityError("coefficient arity does not match")
            if list(dx) != sorted(set(dx)) or any(i < 0 or i >= arity for i in dx):
                raise ValueError(f"dx-monomial {dx} is not canonical")
            if list(dxi) != sorted(dxi) or any(i < 0 or i >= arity for i in dxi):
                raise ValueError(f"dxi-monomial {dxi} is not canonical")
            if not coeff.is_zero():
                clean[(tuple(dx), tuple(dxi))] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("FormElement is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "FormElement":
        return cls({}, arity)

    @classmethod
    def from_cdga(cls, coeff: CdgaElement) -> "FormElement":
        return cls({((), ()): coeff}, coeff.arity)

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "FormElement":
        return cls.from_cdga(CdgaElement.from_poly(poly))

    @classmethod
    def dx(cls, index: int, arity: int, coeff: MultiPoly | None = None) -> "FormElement":
        c = CdgaElement.from_poly(coeff if coeff is not None else MultiPoly.one(arity))
        return cls({(((index,)), ()): c}, arity)

    @classmethod
    def dxi(cls, index: int, arity: int) -> "FormElement":
        return cls({((), (index,)): CdgaElement.unit(arity)}, arity)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, FormElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def _check(self, other: "FormElement") -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "FormElement") -> "FormElement":
        self._check(other)
        res = dict(self.terms)
        for key, coeff in other.terms.items():
            s = res.get(key, CdgaElement.zero(self.arity)) + coeff
            if s.is_zero():
                res.pop(key, None)
            else:
                res[key] = s
        return FormElement(res, self.arity)

    def __neg__(self) -> "FormElement":
        return FormElement({k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other: "FormElement") -> "FormElement":
        return self + (-other)

    def scale(self, scalar) -> "FormElement":
        return FormElement({k: c.scale(scalar) for k, c in self.terms.items()}, self.arity)

    def wedge(self, other: "FormElement") -> "FormElement":
        """Graded product.  Signs: xi and dx odd, dxi even."""
        self._check(other)
        accum: dict[FormMonomial, CdgaElement] = {}
        for (dx1, dxi1), c1 in self.terms.items():
            for (dx2, dxi2), c2 in other.terms.items():
                dx_merged = _merge_odd(dx1, dx2)
                if dx_merged is None:
                    continue
                dx, dx_sign = dx_merged
                dxi = tuple(sorted(dxi1 + dxi2))
                for e1, p1 in c1.terms.items():
                    for e2, p2 in c2.terms.items():
                        xi_merged = _merge_odd(e1, e2)
                        if xi_merged is None:
                            continue
                        xi, xi_sign = xi_merged
                        # moving the xi factors of the right term past dx1
                        cross = -1 if (len(e2) * len(dx1)) % 2 else 1
                        sign = dx_sign * xi_sign * cross
                        poly = p1 * p2 if sign == 1 else -(p1 * p2)
                        key = (dx, dxi)
                        prev = accum.get(key, CdgaElement.zero(self.arity))
                        accum[key] = prev + CdgaElement({xi: poly}, self.arity)
        return FormElement({k: v for k, v in accum.items() if not v.is_zero()}, self.arity)

    __mul__ = wedge

    def form_weight_parts(self) -> dict[int, "FormElement"]:
        parts: dict[int, dict[FormMonomial, CdgaElement]] = {}
        for (dx, dxi), coeff in self.terms.items():
            parts.setdefault(len(dx) + len(dxi), {})[(dx, dxi)] = coeff
        return {w: FormElement(t, self.arity) for w, t in parts.items()}

    def one_form_components(self) -> tuple[MultiPoly, ...]:
        """Extract polynomial components a_i from sum a_i dx_i; error otherwise."""
        comps = [MultiPoly.zero(self.arity) for _ in range(self.arity)]
        for (dx, dxi), coeff in self.terms.items():
            if len(dx) != 1 or dxi:
                raise ValueError("not a polynomial 1-form in the dx generators")
            poly = coeff.terms.get((), MultiPoly.zero(self.arity))
            if len(coeff.terms) != (1 if poly else 0):
                raise ValueError("1-form coefficients contain xi generators")
            comps[dx[0]] = poly
        return tuple(comps)

    def __repr__(self):
        if not self.terms:
            return "FormElement(0)"
        bits = []
        for (dx, dxi) in sorted(self.terms):
            factors = [f"dx{i}" for i in dx] + [f"dxi{i}" for i in dxi]
            label = "^".join(factors) or "1"
            bits.append(f"[{self.terms[(dx, dxi)]!r}]*{label}")
        return "FormElement(" + " + ".join(bits) + ")"


def de_rham_and_internal(
    form: FormElement, K: KoszulComplex
) -> tuple[FormElement, FormElement]:
    """Apply both differentials to a form: returns (d form, delta form)."""
    if form.arity != K.arity:
        raise ArityError("form does not live over this complex")
    n = K.arity
    d_out = FormElement.zero(n)
    delta_out = FormElement.zero(n)
    for (dx, dxi), coeff in form.terms.items():
        for xi, poly in coeff.terms.items():
            # --- de Rham d ---
            # polynomial part: d(p) = sum_j -(dp/dx_j) dx_j, created at the
            # front, moved right past the xi factors (each odd).
            front_sign = -1 if len(xi) % 2 else 1
            for j in range(n):
                dp = poly.partial(j)
                if dp.is_zero():
                    continue
                merged = _merge_odd((j,), dx)
                if merged is None:
                    continue
                new_dx, shuffle = merged
                sign = -1 * front_sign * shuffle
                d_out = d_out + FormElement(
                    {(new_dx, dxi): CdgaElement({xi: dp if sign == 1 else -dp}, n)}, n
                )
            # xi part: xi_i -> dxi_i (even, slides freely into the dxi block)
            for t, gen in enumerate(xi):
                rest = xi[:t] + xi[t + 1 :]
                new_dxi = tuple(sorted(dxi + (gen,)))
                signed = poly if t % 2 == 0 else -poly
                d_out = d_out + FormElement(
                    {(dx, new_dxi): CdgaElement({rest: signed}, n)}, n
                )
            # --- internal delta ---
            # xi part: xi_i -> g_i
            for t, gen in enumerate(xi):
                g = K.diff_images[gen]
                if g.is_zero():
                    continue
                rest = xi[:t] + xi[t + 1 :]
                signed = g * poly if t % 2 == 0 else -(g * poly)
                delta_out = delta_out + FormElement(
                    {(dx, dxi): CdgaElement({rest: signed}, n)}, n
                )
            # dxi part: dxi_i -> sum_j (dg_i/dx_j) dx_j, an odd factor created
            # past the xi and dx blocks.
            block_sign = -1 if (len(xi) + len(dx)) % 2 else 1
            seen: set[int] = set()
            for pos, gen in enumerate(dxi):
                if gen in seen:
                    continue
                seen.add(gen)
                multiplicity = dxi.count(gen)
                g = K.diff_images[gen]
                if g.is_zero():
                    continue
                reduced = list(dxi)
                reduced.remove(gen)
                new_dxi = tuple(reduced)
                for j in range(n):
                    dg = g.partial(j)
                    if dg.is_zero():
                        continue
                    merged = _merge_odd(dx, (j,))
                    if merged is None:
                        continue
                    new_dx, shuffle = merged
                    sign = block_sign * shuffle
                    contrib = (dg * poly).scale(multiplicity)
                    delta_out = delta_out + FormElement(
                        {
                            (new_dx, new_dxi): CdgaElement(
                                {xi: contrib if sign == 1 else -contrib}, n
                            )
                        },
                        n,
                    )
    return d_out, delta_out


# ---------------------------------------------------------------------------
# the two-term cotangent complex at a rational point


@dataclass(frozen=True)
class TwoTermComplexAtPoint:
    """dxi-span in degree -1 mapping to dx-span in degree 0 via the Jacobian.

    matrix[j][i] is dg_i/dx_j at the point; for a critical locus this is the
    Hessian of the functional.
    """

    size: int
    matrix: tuple[tuple[Fraction, ...], ...]

    def rank(self) -> int:
        return mat_rank([list(row) for row in self.matrix])

    def h0_dimension(self) -> int:
        return self.size - self.rank()

    def h_minus1_dimension(self) -> int:
        return self.size - self.rank()

    def is_acyclic(self) -> bool:
        return self.rank() == self.size


def cotangent_complex_at(K: KoszulComplex, point: Sequence) -> TwoTermComplexAtPoint:
    if len(point) != K.arity:
        raise ArityError("point arity mismatch")
    pt = [Fraction(x) for x in point]
    for g in K.diff_images:
        if g.evaluate(pt) != 0:
            raise PointNotOnLocus(
                "the structure polynomials do not all vanish at the point"
            )
    n = K.arity
    matrix = tuple(
        tuple(K.diff_images[i].partial(j).evaluate(pt) for i in range(n))
        for j in range(n)
    )
    return TwoTermComplexAtPoint(n, matrix)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyReport:
    """Graded dimensions of the Koszul homology, per exterior degree k.

    ``table[k][d]`` is the dimension contributed at polynomial degree d
    (xi_i weighted by deg g_i).  In finite mode (zero-dimensional ideal)
    ``dimensions`` carries exact totals and ``representatives`` cycle
    bases; ``stabilized`` records whether the tabulated range certifies
    the totals.  ``sliceable`` tells whether the differential was graded
    (per-degree entries are honest graded dimensions) or only filtered.
    """

    mode: str  # "finite" | "hilbert"
    arity: int
    bound: int
    weights: tuple[int, ...]
    table: dict[int, tuple[int, ...]]
    sliceable: bool
    dimensions: dict[int, int] | None = None
    representatives: dict[int, tuple[CdgaElement, ...]] | None = None
    stabilized: bool | None = None

    def dimension(self, k: int) -> int:
        if self.dimensions is None:
            raise ValueError("totals are only available in finite mode")
        return self.dimensions.get(k, 0)

    def graded_dimensions(self, k: int) -> tuple[int, ...]:
        return self.table.get(k, tuple(0 for _ in range(self.bound + 1)))


def default_homology_bound(K: KoszulComplex) -> int:
    top = max((g.total_degree() for g in K.diff_images if not g.is_zero()), default=0)
    if K.origin_tag == "critical_locus":
        top += 1  # partials of f have degree deg(f) - 1
    return 2 * K.arity * max(1, top)


def minimal_safe_bound(K: KoszulComplex) -> int:
    return max((g.total_degree() for g in K.diff_images if not g.is_zero()), default=0)


def _slice_basis(n: int, k: int, degree: int, weights: tuple[int, ...]):
    basis = []
    for subset in combinations(range(n), k):
        w = sum(weights[i] for i in subset)
        if w > degree:
            continue
        for mono in monomials_of_degree(n, degree - w):
            basis.append((subset, mono))
    return basis


def _column(
    K: KoszulComplex, subset: tuple[int, ...], mono: Monomial, target_index: dict
) -> Vector:
    """Sparse coordinates of delta(xi_subset * x^mono) in the target basis."""
    col: Vector = {}
    for t, gen in enumerate(subset):
        g = K.diff_images[gen]
        if g.is_zero():
            continue
        rest = subset[:t] + subset[t + 1 :]
        sign = 1 if t % 2 == 0 else -1
        for gm, gc in g.terms.items():
            key = (rest, tuple(a + b for a, b in zip(gm, mono)))
            idx = target_index.get(key)
            if idx is None:
                continue  # truncated away (filtered path only)
            s = col.get(idx, Fraction(0)) + sign * gc
            if s == 0:
                col.pop(idx, None)
            else:
                col[idx] = s
    return col


def _vector_to_cdga(vector, basis, n: int) -> CdgaElement:
    terms: dict[XiMonomial, dict] = {}
    for idx, coeff in vector.items() if isinstance(vector, dict) else enumerate(vector):
        if coeff == 0:
            continue
        subset, mono = basis[idx]
        terms.setdefault(subset, {})[mono] = coeff
    return CdgaElement(
        {s: MultiPoly(t, n) for s, t in terms.items()}, n
    )


def _reduce_cycles(cycles, image: EchelonAccumulator, basis, n: int):
    """Reduce cycle vectors against the boundary space; return independent reps."""
    reps = []
    independent = EchelonAccumulator()
    for vec in cycles:
        reduced = image.reduce(vec)
        if not reduced:
            continue
        keep = dict(reduced)
        if independent.insert(reduced):
            lead = min(keep)
            lv = keep[lead]
            keep = {i: c / lv for i, c in keep.items()}
            reps.append(_vector_to_cdga(keep, basis, n))
    return reps


def _sliced_homology(K: KoszulComplex, bound: int, finite: bool):
    n = K.arity
    weights = K.weights()
    table: dict[int, list[int]] = {k: [0] * (bound + 1) for k in range(n + 1)}
    reps: dict[int, list[CdgaElement]] = {k: [] for k in range(n + 1)}
    for d in range(bound + 1):
        bases = {k: _slice_basis(n, k, d, weights) for k in range(n + 2)}
        indexes = {
            k: {key: i for i, key in enumerate(bases[k])} for k in range(n + 2)
        }
        ranks = {0: 0}
        kernels: dict[int, list[Vector]] = {}
        images: dict[int, EchelonAccumulator] = {}
        for k in range(1, n + 2):
            tracker = KernelTracker()
            kernel_vectors: list[Vector] = []
            for subset, mono in bases[k]:
                combo = tracker.insert(_column(K, subset, mono, indexes[k - 1]))
                if combo is not None:
                    kernel_vectors.append(combo)
            ranks[k] = tracker.acc.rank
            kernels[k] = kernel_vectors
            images[k] = tracker.acc
        for k in range(n + 1):
            dim = len(bases[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            table[k][d] = dim
            if finite and dim > 0:
                if k == 0:
                    cycles = [{i: Fraction(1)} for i in range(len(bases[0]))]
                else:
                    cycles = kernels[k]
                reps[k].extend(_reduce_cycles(cycles, images[k + 1], bases[k], n))
    return table, reps


def _filtered_homology(K: KoszulComplex, bound: int, finite: bool):
    """Homology of the weight-truncated subcomplexes C^{<=d}, d = 0..bound.

    Valid for arbitrary structure polynomials: the differential never raises
    the weighted degree, so each truncation is a subcomplex.  Table entries
    are the dimension jumps between consecutive truncations; for weight-
    graded inputs these agree with the graded slice dimensions.
    """
    n = K.arity
    weights = K.weights()
    bases: dict[int, list] = {}
    indexes: dict[int, dict] = {}
    counts: dict[int, list[int]] = {}
    for k in range(n + 2):
        basis = []
        per_degree = [0] * (bound + 1)
        for d in range(bound + 1):
            block = _slice_basis(n, k, d, weights)
            basis.extend(block)
            per_degree[d] = len(block)
        bases[k] = basis
        indexes[k] = {key: i for i, key in enumerate(basis)}
        counts[k] = per_degree
    trackers = {k: KernelTracker() for k in range(1, n + 2)}
    kernels: dict[int, list[Vector]] = {k: [] for k in range(1, n + 2)}
    cumulative: dict[int, list[int]] = {k: [] for k in range(n + 1)}
    offsets = {k: 0 for k in range(n + 2)}
    for d in range(bound + 1):
        for k in range(1, n + 2):
            start = offsets[k]
            stop = start + counts[k][d]
            for subset, mono in bases[k][start:stop]:
                col = _column(K, subset, mono, indexes[k - 1])
                combo = trackers[k].insert(col)
                if combo is not None:
                    kernels[k].append(combo)
            offsets[k] = stop
        offsets[0] += counts[0][d]
        for k in range(n + 1):
            ncols = offsets[k]
            rank_k = trackers[k].acc.rank if k >= 1 else 0
            rank_k1 = trackers[k + 1].acc.rank
            cumulative[k].append(ncols - rank_k - rank_k1)
    table = {}
    for k in range(n + 1):
        row = []
        prev = 0
        for d in range(bound + 1):
            row.append(cumulative[k][d] - prev)
            prev = cumulative[k][d]
        table[k] = row
    reps: dict[int, list[CdgaElement]] = {k: [] for k in range(n + 1)}
    if finite:
        for k in range(n + 1):
            if cumulative[k][bound] == 0:
                continue
            if k == 0:
                cycles = [{i: Fraction(1)} for i in range(len(bases[0]))]
            else:
                cycles = kernels[k]
            reps[k] = _reduce_cycles(cycles, trackers[k + 1].acc, bases[k], n)
    return table, reps


def koszul_homology(K: KoszulComplex, bound: int | None = None) -> HomologyReport:
    """Exact homology dimensions of (Sym T[1], contraction along g).

    Finite mode (zero-dimensional ideal): exact totals per exterior degree k
    with representative cycles.  Otherwise hilbert mode: a table of graded
    dimensions per polynomial degree up to the bound.
    """
    n = K.arity
    minimal = minimal_safe_bound(K)
    if bound is None:
        bound = default_homology_bound(K)
    if bound < minimal:
        raise BoundTooSmall(bound, minimal)
    gb = buchberger(list(K.diff_images), arity=n)
    finite = is_zero_dimensional(gb)
    sliceable = K.is_weight_graded()
    if sliceable:
        table, reps = _sliced_homology(K, bound, finite)
    else:
        table, reps = _filtered_homology(K, bound, finite)
    frozen_table = {k: tuple(v) for k, v in table.items()}
    if not finite:
        return HomologyReport(
            mode="hilbert",
            arity=n,
            bound=bound,
            weights=K.weights(),
            table=frozen_table,
            sliceable=sliceable,
        )
    totals = {k: sum(frozen_table[k]) for k in range(n + 1)}
    window = max(max(K.weights(), default=0), 1)
    tail_quiet = all(
        frozen_table[k][d] == 0
        for k in range(1, n + 1)
        for d in range(max(0, bound - window), bound + 1)
    )
    h0_complete = bound >= staircase_degree_bound(gb)
    return HomologyReport(
        mode="finite",
        arity=n,
        bound=bound,
        weights=K.weights(),
        table=frozen_table,
        sliceable=sliceable,
        dimensions=totals,
        representatives={k: tuple(v) for k, v in reps.items()},
        stabilized=tail_quiet and h0_complete,
    )
