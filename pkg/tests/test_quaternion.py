import numpy as np
import pytest

from qhfedge.quaternion import (I, J, K, ONE, Quaternion, conj, hamilton,
                                modulus, mul, sc, vec)


class TestMul:
    def test_ij_equals_k(self):
        assert mul(I, J) == K

    def test_one_plus_i_times_one_plus_j(self):
        assert mul(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == \
            Quaternion(1, 1, 1, 1)

    def test_ji_equals_minus_k(self):
        assert mul(J, I) == -K

    def test_hamilton_table(self):
        minus_one = -ONE
        assert mul(I, I) == minus_one
        assert mul(J, J) == minus_one
        assert mul(K, K) == minus_one
        assert mul(mul(I, J), K) == minus_one
        assert mul(J, K) == I
        assert mul(K, I) == J
        assert mul(K, J) == -I
        assert mul(I, K) == -J

    def test_non_commutativity_witness(self):
        assert mul(I, J) == -mul(J, I)

    def test_real_scalars_commute(self):
        q = Quaternion(1.5, -2.0, 0.25, 3.0)
        for r in (-3.0, 0.0, 0.5, 7.0):
            assert mul(Quaternion(r), q) == mul(q, Quaternion(r))
            assert r * q == q * r

    def test_associativity_small_integers(self):
        a = Quaternion(1, 2, -1, 3)
        b = Quaternion(0, -2, 4, 1)
        c = Quaternion(2, 1, 1, -5)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_associativity_random(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a, b, c = (Quaternion(*rng.uniform(-10, 10, 4)) for _ in range(3))
            lhs = mul(mul(a, b), c).as_array()
            rhs = mul(a, mul(b, c)).as_array()
            np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-12)

    def test_modulus_multiplicative(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            a = Quaternion(*rng.uniform(-10, 10, 4))
            b = Quaternion(*rng.uniform(-10, 10, 4))
            assert modulus(mul(a, b)) == pytest.approx(modulus(a) * modulus(b),
                                                       rel=1e-12)


class TestConj:
    def test_definition(self):
        assert conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)

    def test_real_fixed_point(self):
        assert conj(Quaternion(5, 0, 0, 0)) == Quaternion(5, 0, 0, 0)

    def test_conj_times_self_is_squared_modulus(self):
        q = Quaternion(0, 1, 1, 1)
        assert mul(conj(q), q) == Quaternion(3, 0, 0, 0)

    def test_involution(self):
        q = Quaternion(0.5, -1.25, 2.0, -3.5)
        assert conj(conj(q)) == q

    def test_q_times_conj_is_real(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            q = Quaternion(*rng.uniform(-5, 5, 4))
            prod = mul(q, conj(q))
            assert prod.q0 == pytest.approx(modulus(q) ** 2, rel=1e-12)
            np.testing.assert_allclose([prod.q1, prod.q2, prod.q3], 0.0,
                                       atol=1e-12)


class TestModulus:
    def test_examples(self):
        assert modulus(Quaternion(1, 1, 1, 1)) == 2.0
        assert modulus(Quaternion(0, 0, 0, 0)) == 0.0
        assert modulus(Quaternion(3, 0, 4, 0)) == 5.0

    def test_zero_only_at_origin(self):
        assert modulus(Quaternion(0, 0, 1e-150, 0)) > 0.0

    def test_matches_scalar_of_q_conj_q(self):
        q = Quaternion(2.0, -3.0, 0.5, 1.5)
        assert modulus(q) ** 2 == pytest.approx(sc(mul(q, conj(q))), rel=1e-12)


class TestScVec:
    def test_examples(self):
        q = Quaternion(7, 1, 2, 3)
        assert sc(q) == 7.0
        assert vec(q) == Quaternion(0, 1, 2, 3)
        assert vec(Quaternion(5, 0, 0, 0)) == Quaternion(0, 0, 0, 0)

    def test_decomposition(self):
        q = Quaternion(-2.5, 0.75, 4.0, -1.0)
        assert Quaternion(sc(q)) + vec(q) == q
        assert sc(vec(q)) == 0.0


class TestHamiltonArray:
    def test_matches_scalar_product(self):
        rng = np.random.default_rng(5)
        a = rng.normal(size=(6, 4))
        b = rng.normal(size=(6, 4))
        batched = hamilton(a, b)
        for row_a, row_b, row_out in zip(a, b, batched):
            expected = mul(Quaternion(*row_a), Quaternion(*row_b)).as_array()
            np.testing.assert_allclose(row_out, expected, rtol=1e-14)

    def test_broadcasting(self):
        i = np.array([0.0, 1.0, 0.0, 0.0])
        grid = np.zeros((2, 3, 4))
        grid[..., 2] = 1.0  # j everywhere
        out = hamilton(i, grid)
        assert out.shape == (2, 3, 4)
        np.testing.assert_array_equal(out[..., 3], np.ones((2, 3)))  # i*j = k
