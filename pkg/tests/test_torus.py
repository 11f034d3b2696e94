import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistgroups.algebra import INT_IDENTITY, IntMat2
from twistgroups.torus import CurveClass, intersection, twist_action, twist_matrix


def curve_classes():
    return st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(
        lambda v: v != (0, 0) and math.gcd(*v) == 1
    ).map(lambda v: CurveClass(*v))


class TestCurveClass:
    def test_sign_canonicalization(self):
        assert CurveClass(-1, 2) == CurveClass(1, -2)
        assert CurveClass(0, -1) == CurveClass(0, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            CurveClass(0, 0)

    def test_rejects_imprimitive(self):
        with pytest.raises(ValueError):
            CurveClass(2, 4)


class TestIntersection:
    def test_standard_basis(self):
        assert intersection(CurveClass(1, 0), CurveClass(0, 1)) == 1

    def test_self_intersection_zero(self):
        assert intersection(CurveClass(1, 0), CurveClass(1, 0)) == 0

    def test_determinant(self):
        assert intersection(CurveClass(1, 0), CurveClass(1, 2)) == 2

    @given(curve_classes(), curve_classes())
    def test_symmetric(self, u, v):
        assert intersection(u, v) == intersection(v, u)

    @given(curve_classes(), curve_classes())
    def test_zero_iff_equal(self, u, v):
        # parallel primitive classes coincide up to sign
        assert (intersection(u, v) == 0) == (u == v)


class TestTwistAction:
    def test_basic(self):
        a, b = CurveClass(1, 0), CurveClass(0, 1)
        assert twist_action(a, b, 1) == CurveClass(1, 1)

    def test_identity_at_zero(self):
        a, b = CurveClass(1, 0), CurveClass(0, 1)
        assert twist_action(a, b, 0) == b

    def test_corollary_instance(self):
        a, b = CurveClass(1, 0), CurveClass(0, 1)
        assert intersection(twist_action(a, b, 2), b) == 2

    def test_exchange_at_intersection_one(self):
        # T_a T_b sends a to b, and T_b T_a sends b to a (up to sign)
        a, b = CurveClass(1, 0), CurveClass(0, 1)
        assert twist_action(a, twist_action(b, a)) == b
        assert twist_action(b, twist_action(a, b)) == a

    @given(curve_classes(), curve_classes(),
           st.integers(-20, 20), st.integers(-20, 20))
    def test_power_additivity(self, v, w, n, m):
        assert twist_action(v, twist_action(v, w, m), n) == twist_action(v, w, n + m)

    @given(curve_classes(), curve_classes(), st.integers(-20, 20))
    def test_twist_intersection_formula(self, v, w, n):
        assert intersection(twist_action(v, w, n), w) == \
            abs(n) * intersection(v, w) ** 2


class TestTwistMatrix:
    def test_standard_generators(self):
        assert twist_matrix(CurveClass(1, 0)) == IntMat2(1, 1, 0, 1)
        assert twist_matrix(CurveClass(0, 1)) == IntMat2(1, 0, -1, 1)

    @given(curve_classes())
    def test_determinant_one(self, v):
        assert twist_matrix(v).det() == 1

    @given(curve_classes(), curve_classes())
    def test_matrix_realizes_action(self, v, w):
        m = twist_matrix(v)
        image = (m.a * w.p + m.b * w.q, m.c * w.p + m.d * w.q)
        assert CurveClass(*image) == twist_action(v, w)


def test_conjugation_covariance():
    # M T_v M^-1 = T_{M v} for M a product of the two twist matrices
    rng = random.Random(7)
    gens = [twist_matrix(CurveClass(1, 0)), twist_matrix(CurveClass(0, 1))]
    gens += [g.inv() for g in gens]
    for _ in range(100):
        m = INT_IDENTITY
        for _ in range(rng.randint(1, 6)):
            m = m * rng.choice(gens)
        p, q = rng.choice([(1, 0), (0, 1), (1, 1), (1, 2), (2, 3)])
        v = CurveClass(p, q)
        moved = CurveClass(m.a * v.p + m.b * v.q, m.c * v.p + m.d * v.q)
        assert m * twist_matrix(v) * m.inv() == twist_matrix(moved)
