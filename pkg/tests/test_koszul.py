import math
import random
from fractions import Fraction as F

import pytest

from critlocus import (
    ArityError,
    BoundTooSmall,
    CdgaElement,
    FormElement,
    KoszulComplex,
    MultiPoly,
    PointNotOnLocus,
    cotangent_complex_at,
    de_rham_and_internal,
    koszul_differential,
    koszul_homology,
    wedge,
)
from critlocus.koszul import _slice_basis

from conftest import random_poly
from oracles import koszul_homology_dim


def variables(n):
    return [MultiPoly.variable(i, n) for i in range(n)]


def crit(f):
    return KoszulComplex(f.arity, tuple(f.partial(i) for i in range(f.arity)), "critical_locus")


def random_complex(rng, n, max_degree=3):
    return KoszulComplex(n, tuple(random_poly(rng, n, max_degree) for _ in range(n)))


def random_single_term_form(rng, n):
    """One-term form element with well-defined parity."""
    dx = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
    dxi = tuple(sorted(rng.choices(range(n), k=rng.randint(0, 2))))
    xi = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
    poly = random_poly(rng, n, max_degree=4)
    if poly.is_zero():
        poly = MultiPoly.one(n)
    form = FormElement({(dx, dxi): CdgaElement({xi: poly}, n)}, n)
    return form, (len(xi) + len(dx)) % 2


def random_form(rng, n):
    total = FormElement.zero(n)
    for _ in range(rng.randint(1, 3)):
        term, _ = random_single_term_form(rng, n)
        total = total + term
    return total


class TestWedge:
    def test_odd_generators_anticommute(self):
        n = 2
        a = CdgaElement.xi((0,), n)
        b = CdgaElement.xi((1,), n)
        assert wedge(a, b) == -wedge(b, a)

    def test_square_of_odd_generator(self):
        a = CdgaElement.xi((0,), 2)
        assert wedge(a, a).is_zero()

    def test_polynomial_coefficients_central(self):
        n = 2
        x, y = variables(n)
        a = CdgaElement.xi((0,), n, x)
        b = CdgaElement.xi((1,), n, y)
        assert wedge(a, b) == CdgaElement.xi((0, 1), n, x * y)

    def test_sign_soundness_500_pairs(self):
        rng = random.Random(99)
        for _ in range(500):
            n = rng.randint(1, 4)
            ka = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            kb = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            a = CdgaElement({ka: random_poly(rng, n) or MultiPoly.one(n)}, n)
            b = CdgaElement({kb: random_poly(rng, n) or MultiPoly.one(n)}, n)
            sign = -1 if (len(ka) * len(kb)) % 2 else 1
            assert wedge(a, b) == wedge(b, a).scale(sign)

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            wedge(CdgaElement.unit(1), CdgaElement.unit(2))


class TestKoszulDifferential:
    def test_sends_generators_to_partials(self):
        n = 2
        x, y = variables(n)
        K = crit(x**2 + y**2)
        for i in range(n):
            image = koszul_differential(K, CdgaElement.xi((i,), n))
            assert image == CdgaElement.from_poly((x**2 + y**2).partial(i))

    def test_leibniz_expansion(self):
        n = 2
        g1 = MultiPoly.variable(0, n) * 3
        g2 = MultiPoly.variable(1, n) ** 2
        K = KoszulComplex(n, (g1, g2))
        image = koszul_differential(K, CdgaElement.xi((0, 1), n))
        expected = CdgaElement.xi((1,), n, g1) - CdgaElement.xi((0,), n, g2)
        assert image == expected

    def test_squares_to_zero(self, rng):
        for _ in range(40):
            n = rng.randint(1, 3)
            K = random_complex(rng, n)
            xi = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            e = CdgaElement({xi: random_poly(rng, n) or MultiPoly.one(n)}, n)
            assert koszul_differential(K, koszul_differential(K, e)).is_zero()

    def test_leibniz_rule(self, rng):
        for _ in range(40):
            n = rng.randint(1, 3)
            K = random_complex(rng, n)
            ka = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            a = CdgaElement({ka: random_poly(rng, n) or MultiPoly.one(n)}, n)
            b_key = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
            b = CdgaElement({b_key: random_poly(rng, n) or MultiPoly.one(n)}, n)
            lhs = koszul_differential(K, wedge(a, b))
            sign = -1 if len(ka) % 2 else 1
            rhs = wedge(koszul_differential(K, a), b) + wedge(a, koszul_differential(K, b)).scale(sign)
            assert lhs == rhs


class TestDeRhamAndInternal:
    def test_de_rham_of_polynomial_engine_normalization(self):
        # d and delta anticommute exactly; that normalization puts the sign
        # on d of the polynomial generators: d(x^2) = -2x dx
        n = 1
        x = variables(n)[0]
        K = crit(x**2)
        d, delta = de_rham_and_internal(FormElement.from_poly(x**2), K)
        assert d == FormElement.dx(0, n, -2 * x)
        assert delta.is_zero()

    def test_internal_on_dxi_is_hessian_row(self):
        n = 2
        x, y = variables(n)
        f = x**2 * y + 3 * x * y
        K = crit(f)
        for i in range(n):
            _, delta = de_rham_and_internal(FormElement.dxi(i, n), K)
            expected = FormElement.zero(n)
            for j in range(n):
                h = f.partial(i).partial(j)
                if not h.is_zero():
                    expected = expected + FormElement.dx(j, n, h)
            assert delta == expected

    def test_de_rham_of_tautological_form(self):
        n = 2
        K = crit(variables(n)[0] ** 2)
        lam = FormElement.zero(n)
        omega = FormElement.zero(n)
        for i in range(n):
            lam = lam + FormElement({((i,), ()): CdgaElement.xi((i,), n)}, n)
            omega = omega + FormElement({((i,), (i,)): CdgaElement.unit(n)}, n)
        d, _ = de_rham_and_internal(lam, K)
        assert d == omega

    def test_differential_identities_on_random_forms(self, rng):
        for _ in range(60):
            n = rng.randint(1, 3)
            K = random_complex(rng, n)
            w = random_form(rng, n)
            dw, deltaw = de_rham_and_internal(w, K)
            assert de_rham_and_internal(dw, K)[0].is_zero()
            assert de_rham_and_internal(deltaw, K)[1].is_zero()
            mixed = de_rham_and_internal(deltaw, K)[0] + de_rham_and_internal(dw, K)[1]
            assert mixed.is_zero()

    def test_graded_leibniz_for_both_differentials(self, rng):
        for _ in range(60):
            n = rng.randint(1, 3)
            K = random_complex(rng, n)
            a, pa = random_single_term_form(rng, n)
            b, _ = random_single_term_form(rng, n)
            da, dla = de_rham_and_internal(a, K)
            db, dlb = de_rham_and_internal(b, K)
            dab, dlab = de_rham_and_internal(a.wedge(b), K)
            sign = -1 if pa % 2 else 1
            assert dab == da.wedge(b) + a.wedge(db).scale(sign)
            assert dlab == dla.wedge(b) + a.wedge(dlb).scale(sign)


class TestHomology:
    def test_univariate_morse(self):
        x = variables(1)[0]
        rep = koszul_homology(crit(x**2))
        assert rep.mode == "finite"
        assert rep.dimensions == {0: 1, 1: 0}
        assert rep.stabilized

    def test_line_of_critical_points(self):
        n = 2
        x = variables(n)[0]
        rep = koszul_homology(crit(x**2), bound=8)
        assert rep.mode == "hilbert"
        # both H0 and H1 look like the polynomial ring on the tangent line
        assert rep.table[0] == tuple([1] * 9)
        assert rep.table[1] == tuple([1] * 9)
        assert rep.table[2] == tuple([0] * 9)

    def test_zero_differential_gives_free_pattern(self):
        n = 2
        K = KoszulComplex(n, tuple(MultiPoly.zero(n) for _ in range(n)), "critical_locus")
        rep = koszul_homology(K, bound=5)
        for k in range(n + 1):
            expected = tuple(math.comb(n, k) * (d + 1) for d in range(6))
            assert rep.table[k] == expected

    def test_brute_force_dense_oracle_agreement(self, rng):
        checked = 0
        while checked < 12:
            n = rng.randint(1, 3)
            K = random_complex(rng, n, max_degree=3)
            if not K.is_weight_graded():
                continue
            bound = 5
            rep = koszul_homology(K, bound=bound)
            gs_terms = [dict(g.terms) for g in K.diff_images]
            for k in range(n + 1):
                for d in range(bound + 1):
                    assert rep.table[k][d] == koszul_homology_dim(
                        gs_terms, n, k, d, K.weights()
                    )
            checked += 1

    def test_euler_characteristic_per_slice(self, rng):
        for _ in range(8):
            n = rng.randint(1, 3)
            K = random_complex(rng, n, max_degree=2)
            if not K.is_weight_graded():
                continue
            bound = 4
            rep = koszul_homology(K, bound=bound)
            for d in range(bound + 1):
                chain_euler = sum(
                    (-1) ** k * len(_slice_basis(n, k, d, K.weights()))
                    for k in range(n + 1)
                )
                homology_euler = sum(
                    (-1) ** k * rep.table[k][d] for k in range(n + 1)
                )
                assert chain_euler == homology_euler

    def test_representatives_are_independent_cycles(self):
        x = variables(1)[0]
        K = crit(x**3)  # g = 3x^2, finite with mu = 2
        rep = koszul_homology(K)
        assert rep.dimensions == {0: 2, 1: 0}
        reps = rep.representatives[0]
        assert len(reps) == 2
        for r in reps:
            assert koszul_differential(K, r).is_zero()

    def test_filtered_path_on_inhomogeneous_input(self):
        x = variables(1)[0]
        K = crit(x**2 + x**3)  # two nondegenerate critical points
        rep = koszul_homology(K, bound=8)
        assert not rep.sliceable
        assert rep.mode == "finite"
        assert rep.dimensions == {0: 2, 1: 0}
        for r in rep.representatives[0]:
            assert koszul_differential(K, r).is_zero()

    def test_bound_too_small_reports_minimal(self):
        x, y = variables(2)
        K = crit(x**3 + y**3)
        with pytest.raises(BoundTooSmall) as err:
            koszul_homology(K, bound=1)
        assert err.value.minimal == 2


class TestCotangentComplexAtPoint:
    def test_morse_point(self):
        x = variables(1)[0]
        tc = cotangent_complex_at(crit(x**2), [0])
        assert tc.matrix == ((F(2),),)
        assert tc.h0_dimension() == 0 and tc.h_minus1_dimension() == 0

    def test_degenerate_point(self):
        x = variables(1)[0]
        tc = cotangent_complex_at(crit(x**3 * F(1, 3)), [0])
        assert tc.matrix == ((F(0),),)
        assert tc.h0_dimension() == 1 and tc.h_minus1_dimension() == 1

    def test_plane_morse_acyclic(self):
        x, y = variables(2)
        tc = cotangent_complex_at(crit(x**2 + y**2), [0, 0])
        assert tc.matrix == ((F(2), F(0)), (F(0), F(2)))
        assert tc.is_acyclic()

    def test_rejects_points_off_locus(self):
        x, y = variables(2)
        with pytest.raises(PointNotOnLocus):
            cotangent_complex_at(crit(x**2 + y**2), [1, 0])
