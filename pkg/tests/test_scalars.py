import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlra.errors import KindMismatch, NotInPositiveCone
from qlra.scalars import (
    Field,
    HyperbolicNumber as H,
    PhaseFactor,
    PhaseKind,
    braket,
    cone_sum_check,
    conj,
    from_parts,
    h_arg,
    h_conj,
    h_exp,
    h_mul,
    h_polar,
    h_sq_abs,
    inner,
    mul,
    phase_pair_real,
    phase_value,
    sq_abs,
    to_parts,
    unit,
)

# 30-digit reference values (mpmath)
COSH_03 = 1.04533851412886048502530904632
SINH_03 = 0.304520293447142618958435267005
COSH_1 = 1.54308063481524377847790562076

finite = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
hyper = st.builds(H, finite, finite)


def close(z, w, tol=1e-12):
    return abs(z.x - w.x) <= tol * max(1.0, abs(w.x)) and abs(z.y - w.y) <= tol * max(1.0, abs(w.y))


class TestProduct:
    @pytest.mark.parametrize("a,b", [(2.0, 3.0), (-1.5, 0.25), (0.0, 0.0)])
    def test_identity(self, a, b):
        assert h_mul(H(1, 0), H(a, b)) == H(a, b)

    def test_j_squared_is_one(self):
        assert h_mul(H(0, 1), H(0, 1)) == H(1, 0)

    def test_addition_theorem(self):
        z = h_mul(H(math.cosh(0.2), math.sinh(0.2)), H(math.cosh(0.1), math.sinh(0.1)))
        assert close(z, H(COSH_03, SINH_03), 1e-15)

    def test_operators_match_functions(self):
        z, w = H(1.5, -0.5), H(0.25, 2.0)
        assert z * w == h_mul(z, w)
        assert z + w == H(1.75, 1.5)
        assert z - w == H(1.25, -2.5)
        assert 2 * z == H(3.0, -1.0)
        assert -z == H(-1.5, 0.5)

    def test_mixing_with_complex_is_rejected(self):
        with pytest.raises(KindMismatch):
            H(1, 1) * 1j
        with pytest.raises(KindMismatch):
            to_parts([H(1, 0), 1j], Field.HYPERBOLIC)

    @given(hyper, hyper, hyper)
    def test_commutative_associative(self, a, b, c):
        assert h_mul(a, b) == h_mul(b, a)
        assert close(h_mul(h_mul(a, b), c), h_mul(a, h_mul(b, c)), 1e-9)


class TestConjugateAndModulus:
    def test_conj_examples(self):
        assert h_conj(H(2, 3)) == H(2, -3)
        assert h_conj(H(1, 0)) == H(1, 0)

    @pytest.mark.parametrize("z,expected", [(H(2, 1), 3.0), (H(1, 1), 0.0), (H(0, 2), -4.0)])
    def test_sq_abs_examples(self, z, expected):
        assert h_sq_abs(z) == expected

    @pytest.mark.parametrize("t", [-3.0, -0.4, 0.0, 0.3, 2.5])
    def test_unit_hyperbola(self, t):
        assert h_sq_abs(H(math.cosh(t), math.sinh(t))) == pytest.approx(1.0, abs=1e-12 * math.cosh(t) ** 2)

    @given(hyper, hyper)
    def test_conj_is_homomorphism(self, z, w):
        assert h_conj(h_mul(z, w)) == h_mul(h_conj(z), h_conj(w))

    @given(hyper)
    def test_involution_and_invariance(self, z):
        assert h_conj(h_conj(z)) == z
        assert h_sq_abs(h_conj(z)) == h_sq_abs(z)
        assert h_mul(z, h_conj(z)).y == 0.0

    @given(hyper, hyper)
    @settings(max_examples=300)
    def test_sq_abs_multiplicative(self, z, w):
        lhs = h_sq_abs(h_mul(z, w))
        rhs = h_sq_abs(z) * h_sq_abs(w)
        # cancellation in x^2 - y^2 limits accuracy to the size of the squares
        scale = (z.x**2 + z.y**2) * (w.x**2 + w.y**2)
        assert abs(lhs - rhs) <= 1e-12 * max(scale, 1e-300)


class TestPolar:
    def test_arg_examples(self):
        assert h_arg(H(1, 0)) == 0.0
        assert h_arg(H(math.cosh(0.3), math.sinh(0.3))) == pytest.approx(0.3, abs=1e-15)

    @pytest.mark.parametrize("z", [H(1, 1), H(1, -1), H(0, 0), H(0, 2), H(0.5, -2)])
    def test_outside_cone_is_rejected(self, z):
        with pytest.raises(NotInPositiveCone):
            h_arg(z)
        with pytest.raises(NotInPositiveCone):
            h_polar(z)

    def test_exp_examples(self):
        assert h_exp(0.0) == H(1.0, 0.0)
        z = h_exp(0.3)
        assert z.x == pytest.approx(COSH_03, rel=1e-15)
        assert z.y == pytest.approx(SINH_03, rel=1e-15)

    @given(st.floats(-5, 5), st.floats(-5, 5))
    def test_exp_semigroup(self, a, b):
        assert close(h_mul(h_exp(a), h_exp(b)), h_exp(a + b), 1e-12)

    def test_polar_examples(self):
        assert h_polar(H(2, 0)) == (1, 2.0, 0.0)
        e, m, t = h_polar(-2 * h_exp(0.3))
        assert e == -1
        assert m == pytest.approx(2.0, rel=1e-14)
        assert t == pytest.approx(0.3, rel=1e-14)

    @given(st.sampled_from([1, -1]), st.floats(0.01, 100), st.floats(-4, 4))
    def test_polar_round_trip(self, eps, m, theta):
        z = eps * m * h_exp(theta)
        e2, m2, t2 = h_polar(z)
        assert close(e2 * m2 * h_exp(t2), z, 1e-10)

    @given(st.floats(0.1, 10), st.floats(-3, 3), st.floats(0.1, 10), st.floats(-3, 3),
           st.sampled_from([1, -1]), st.sampled_from([1, -1]))
    def test_cone_closed_under_product(self, m1, t1, m2, t2, e1, e2):
        e, m, t = h_polar(h_mul(e1 * m1 * h_exp(t1), e2 * m2 * h_exp(t2)))
        assert e == e1 * e2
        assert m == pytest.approx(m1 * m2, rel=1e-9)
        assert t == pytest.approx(t1 + t2, abs=1e-9)


class TestConeSum:
    def test_examples(self):
        assert cone_sum_check(H(1, 0), H(1, 0))
        assert not cone_sum_check(h_exp(0.0), -h_exp(0.0))

    def test_rejects_invalid_input(self):
        with pytest.raises(NotInPositiveCone):
            cone_sum_check(H(1, 1), H(1, 0))

    def test_agrees_with_direct_sign_on_random_pairs(self):
        rng = np.random.default_rng(2024)
        n = 10_000
        mags = rng.uniform(0.05, 5, (n, 2))
        thetas = rng.uniform(-3, 3, (n, 2))
        signs = rng.choice((-1, 1), (n, 2))
        disagree = 0
        for k in range(n):
            z1 = signs[k, 0] * mags[k, 0] * h_exp(thetas[k, 0])
            z2 = signs[k, 1] * mags[k, 1] * h_exp(thetas[k, 1])
            s = z1 + z2
            direct = (s.x - s.y) * (s.x + s.y) > 0
            disagree += cone_sum_check(z1, z2) != direct
        assert disagree == 0


class TestPhaseFactor:
    def test_values(self):
        assert phase_value(PhaseFactor.trig(0.0)) == 1
        assert phase_value(PhaseFactor.hyper(-1, 0.0)) == H(-1.0, -0.0)
        assert phase_value(PhaseFactor.hyper(1, 0.3)) == h_exp(0.3)

    @given(st.floats(-3, 3), st.sampled_from([1, -1]))
    def test_unit_modulus(self, theta, eps):
        assert abs(phase_value(PhaseFactor.trig(theta))) == pytest.approx(1.0, abs=1e-15)
        assert h_sq_abs(phase_value(PhaseFactor.hyper(eps, theta))) == pytest.approx(1.0, abs=1e-12 * math.cosh(theta) ** 2)

    @pytest.mark.parametrize("theta", [-1.0, 0.0, 0.7])
    def test_pair_real(self, theta):
        assert phase_pair_real(PhaseFactor.trig(theta), PhaseFactor.trig(theta)) == 1.0
        assert phase_pair_real(PhaseFactor.hyper(1, theta), PhaseFactor.hyper(1, theta)) == 1.0
        assert phase_pair_real(PhaseFactor.hyper(1, theta), PhaseFactor.hyper(-1, theta)) == -1.0

    def test_pair_real_cosh(self):
        assert phase_pair_real(PhaseFactor.hyper(1, 1.0), PhaseFactor.hyper(1, 0.0)) == pytest.approx(COSH_1, rel=1e-15)

    @given(st.floats(-2, 2), st.floats(-2, 2), st.sampled_from([1, -1]), st.sampled_from([1, -1]))
    def test_pair_real_matches_definition(self, t1, t2, e1, e2):
        l1, l2 = phase_value(PhaseFactor.hyper(e1, t1)), phase_value(PhaseFactor.hyper(e2, t2))
        s = l1 * h_conj(l2) + l2 * h_conj(l1)
        assert s.y == pytest.approx(0.0, abs=1e-12)
        assert 0.5 * s.x == pytest.approx(phase_pair_real(PhaseFactor.hyper(e1, t1), PhaseFactor.hyper(e2, t2)), rel=1e-12)

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch):
            phase_pair_real(PhaseFactor.trig(0.1), PhaseFactor.hyper(1, 0.1))

    def test_trig_eps_is_fixed(self):
        with pytest.raises(ValueError):
            PhaseFactor(PhaseKind.TRIG, 0.0, -1)

    @pytest.mark.parametrize("field", list(Field))
    def test_parts_match_value(self, field):
        kind = PhaseKind.TRIG if field is Field.COMPLEX else PhaseKind.HYPER
        lam = PhaseFactor(kind, 0.4)
        np.testing.assert_allclose(lam.parts(), to_parts(lam.value, field), rtol=1e-15)


# -- parts arrays and the Hilbert-space axioms ----------------------------

vec = st.lists(st.floats(-10, 10), min_size=6, max_size=6).map(lambda v: np.array(v).reshape(3, 2))


@pytest.mark.parametrize("field", list(Field))
class TestHilbertAxioms:
    @given(x=vec, y=vec)
    def test_conjugate_symmetry(self, field, x, y):
        np.testing.assert_allclose(inner(x, y, field), conj(inner(y, x, field)), atol=1e-9)

    @given(x=vec, y=vec, z=vec, a=st.tuples(st.floats(-3, 3), st.floats(-3, 3)),
           b=st.tuples(st.floats(-3, 3), st.floats(-3, 3)))
    def test_linear_in_first_argument(self, field, x, y, z, a, b):
        a, b = np.array(a), np.array(b)
        lhs = inner(mul(a, x, field) + mul(b, y, field), z, field)
        rhs = mul(a, inner(x, z, field), field) + mul(b, inner(y, z, field), field)
        np.testing.assert_allclose(lhs, rhs, atol=1e-8)

    @given(x=vec)
    def test_non_degenerate(self, field, x):
        # <x, y> = 0 for every basis vector y forces x = 0
        basis = []
        for k in range(3):
            for part in (np.array([1.0, 0.0]), np.array([0.0, 1.0])):
                e = np.zeros((3, 2))
                e[k] = part
                basis.append(e)
        products = np.array([inner(x, e, field) for e in basis])
        assert np.any(products != 0) or not np.any(x)

    def test_round_trip_parts(self, field):
        if field is Field.COMPLEX:
            values = np.array([1 + 2j, -0.5j, 3])
        else:
            values = np.array([H(1, 2), H(0, -0.5), H(3, 0)], dtype=object)
        assert np.all(from_parts(to_parts(values, field), field) == values)

    def test_braket_is_antilinear_in_first(self, field):
        x = np.array([[1.0, 2.0], [0.5, -1.0], [0.0, 3.0]])
        y = np.array([[2.0, 0.0], [1.0, 1.0], [-1.0, 0.5]])
        np.testing.assert_array_equal(braket(x, y, field), inner(y, x, field))

    def test_unit_has_modulus_one(self, field):
        np.testing.assert_allclose(sq_abs(unit(np.linspace(-2, 2, 9), field), field), 1.0, rtol=1e-12)


def test_field_sigma_and_parse():
    assert Field.COMPLEX.sigma == -1.0
    assert Field.HYPERBOLIC.sigma == 1.0
    assert Field.parse("Hyperbolic") is Field.HYPERBOLIC
    with pytest.raises(ValueError):
        Field.parse("quaternion")
