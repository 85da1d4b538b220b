import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rwinv.tensor import (
    SymTensor4,
    apply_tau,
    contract_pair,
    is_tau_real,
    matching_epsilon,
    perfect_matchings,
    random_curvature,
    reality_project,
    signed_matchings,
    standard_quaternionic,
    standard_symplectic,
    symmetrize4,
)


def double_factorial(m):
    return 1 if m <= 0 else m * double_factorial(m - 2)


class TestStandardForms:
    def test_n1(self):
        assert standard_symplectic(1).matrix.tolist() == [[0, 1], [-1, 0]]

    def test_n3_block_pattern(self):
        m = standard_symplectic(3).matrix
        assert m[1, 4] == 1 and m[4, 1] == -1
        assert np.count_nonzero(m) == 6

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_antisymmetric_nondegenerate(self, n):
        m = standard_symplectic(n).matrix
        assert np.array_equal(m + m.T, np.zeros_like(m))
        assert abs(np.linalg.det(m)) == pytest.approx(1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_quaternionic_squares_to_minus_one(self, n):
        J = standard_quaternionic(n).matrix
        assert np.array_equal(J @ J, -np.eye(2 * n))
        assert J[n, 0] == 1 and J[0, n] == -1

    @pytest.mark.parametrize("bad", [0, -1, 1.5, True])
    def test_bad_dimension(self, bad):
        with pytest.raises(ValueError):
            standard_symplectic(bad)


class TestMatchingEpsilon:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matching_count(self, k):
        assert len(signed_matchings(k)) == double_factorial(2 * k - 1)
        assert len(list(perfect_matchings(list(range(2 * k))))) == double_factorial(2 * k - 1)

    def test_three_term_expansion_signs(self):
        # eps^{DHLP} = eps^{DH}eps^{LP} + eps^{DL}eps^{PH} + eps^{DP}eps^{HL}
        signs = {pairs: s for s, pairs in signed_matchings(2)}
        assert signs[((0, 1), (2, 3))] == 1
        assert signs[((0, 2), (1, 3))] == -1  # eps^{DL}eps^{PH} = -eps^{DL}eps^{HP}
        assert signs[((0, 3), (1, 2))] == 1

    def test_k2_n2_example(self):
        # 1-based (1,3,2,4)
        assert matching_epsilon(standard_symplectic(2), 2)((0, 2, 1, 3)) == 1

    def test_k2_n1_vanishes(self):
        e = matching_epsilon(standard_symplectic(1), 2)
        assert all(e(idx) == 0 for idx in itertools.product(range(2), repeat=4))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_k1_is_eps(self, n):
        eps = standard_symplectic(n)
        assert np.array_equal(matching_epsilon(eps, 1).to_array(), eps.matrix)

    @pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
    def test_total_antisymmetry_full_scan(self, n, k):
        arr = matching_epsilon(standard_symplectic(n), k).to_array()
        for a, b in itertools.combinations(range(2 * k), 2):
            assert np.array_equal(np.swapaxes(arr, a, b), -arr)

    @pytest.mark.parametrize("n,k", [(1, 2), (2, 3)])
    def test_high_k_vanishes(self, n, k):
        assert not np.any(matching_epsilon(standard_symplectic(n), k).to_array())

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_top_form_is_volume(self, n):
        # For k = n the form is the Pfaffian volume: its value on (0..2n-1) is Pf(eps) up to the
        # ordering sign of the standard basis.
        eps = standard_symplectic(n)
        e = matching_epsilon(eps, n)
        value = e(tuple(range(2 * n)))
        assert abs(value) == 1
        perm = tuple(j for i in range(n) for j in (i, n + i))
        assert e(perm) == 1

    def test_wrong_arity(self):
        with pytest.raises(ValueError):
            matching_epsilon(standard_symplectic(2), 2)((0, 1))

    @pytest.mark.parametrize("k", [0, -2, 1.5])
    def test_bad_k(self, k):
        with pytest.raises(ValueError):
            matching_epsilon(standard_symplectic(2), k)


class TestSymmetrize:
    def test_single_entry_example(self):
        raw = np.zeros((2,) * 4)
        raw[0, 1, 0, 0] = 24
        out = symmetrize4(raw).data
        hits = {idx for idx in itertools.product(range(2), repeat=4) if out[idx] != 0}
        assert hits == {(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)}
        assert all(out[i] == 6 for i in hits)

    def test_zero(self):
        assert not np.any(symmetrize4(np.zeros((4,) * 4)).data)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError, match="rank mismatch"):
            symmetrize4(np.zeros((2, 2, 2)))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 3), st.integers(0, 2**32))
    def test_exact_symmetry_and_idempotence(self, n, seed):
        rng = np.random.default_rng(seed)
        raw = rng.normal(size=(2 * n,) * 4) + 1j * rng.normal(size=(2 * n,) * 4)
        s = symmetrize4(raw).data
        for perm in itertools.permutations(range(4)):
            assert np.array_equal(np.transpose(s, perm), s)
        assert np.array_equal(symmetrize4(s).data, s)

    @settings(max_examples=10, deadline=None)
    @given(st.integers(0, 2**32), st.floats(-3, 3))
    def test_linear(self, seed, c):
        rng = np.random.default_rng(seed)
        a, b = rng.normal(size=(2, 4, 4, 4, 4))
        lhs = symmetrize4(a + c * b).data
        rhs = symmetrize4(a).data + c * symmetrize4(b).data
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_symtensor_rejects_nonfinite(self):
        bad = np.zeros((2,) * 4)
        bad[0, 0, 0, 0] = np.nan
        with pytest.raises(ValueError):
            SymTensor4(bad)


class TestReality:
    def test_single_entry_example(self):
        raw = np.zeros((2,) * 4, dtype=complex)
        raw[0, 0, 0, 0] = 1
        omega = reality_project(SymTensor4(raw), standard_quaternionic(1)).data
        expected = np.zeros_like(raw)
        expected[0, 0, 0, 0] = expected[1, 1, 1, 1] = 1
        assert np.array_equal(omega, expected)

    def test_zero(self):
        z = SymTensor4(np.zeros((4,) * 4, dtype=complex))
        assert not np.any(reality_project(z, standard_quaternionic(2)).data)

    def test_dim_mismatch(self):
        z = SymTensor4(np.zeros((4,) * 4, dtype=complex))
        with pytest.raises(ValueError, match="dimension mismatch"):
            reality_project(z, standard_quaternionic(1))

    def test_tau_against_einsum(self):
        rng = np.random.default_rng(3)
        R = rng.normal(size=(4,) * 4) + 1j * rng.normal(size=(4,) * 4)
        J = standard_quaternionic(2)
        ref = np.einsum("efgh,ea,fb,gc,hd->abcd", R.conj(), *(J.matrix,) * 4)
        assert np.array_equal(apply_tau(R, J), ref)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 3), st.integers(0, 2**63))
    def test_tau_involution_exact(self, n, seed):
        rng = np.random.default_rng(seed)
        R = rng.normal(size=(2 * n,) * 4) + 1j * rng.normal(size=(2 * n,) * 4)
        J = standard_quaternionic(n)
        assert np.array_equal(apply_tau(apply_tau(R, J), J), R)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 3), st.integers(0, 2**64 - 1))
    def test_random_curvature_properties(self, n, seed):
        omega = random_curvature(n, seed)
        J = standard_quaternionic(n)
        assert np.array_equal(apply_tau(omega.data, J), omega.data)
        assert is_tau_real(omega, J)
        for perm in itertools.permutations(range(4)):
            assert np.array_equal(np.transpose(omega.data, perm), omega.data)

    def test_random_curvature_replay(self):
        a, b = random_curvature(3, 42), random_curvature(3, 42)
        assert np.array_equal(a.data, b.data)
        assert not np.array_equal(a.data, random_curvature(3, 43).data)

    def test_entry_range_scales(self):
        a, b = random_curvature(2, 5, 1.0), random_curvature(2, 5, 2.5)
        np.testing.assert_allclose(b.data, 2.5 * a.data, rtol=1e-14)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            random_curvature(2, 0, 0.0)


class TestContractPair:
    def test_basis_vectors(self):
        e1, e2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
        assert contract_pair(e1, 0, e2, 0, standard_symplectic(1)) == 1

    def test_zero(self):
        a = np.random.default_rng(0).normal(size=(4, 4, 4))
        assert not np.any(contract_pair(a, 1, np.zeros((4, 4)), 0, standard_symplectic(2)))

    def test_matrix_oracle(self):
        rng = np.random.default_rng(1)
        a, b = rng.normal(size=(2, 6, 6))
        eps = standard_symplectic(3)
        np.testing.assert_allclose(contract_pair(a, 1, b, 1, eps), a @ eps.matrix @ b.T, atol=1e-14)

    def test_free_index_order(self):
        rng = np.random.default_rng(2)
        a, b = rng.normal(size=(4, 4, 4)), rng.normal(size=(4, 4))
        eps = standard_symplectic(2).matrix
        ref = np.einsum("xay,bz,ab->xyz", a, b, eps)
        np.testing.assert_allclose(contract_pair(a, 1, b, 0, standard_symplectic(2)), ref, atol=1e-13)

    def test_invalid_slot(self):
        with pytest.raises(IndexError):
            contract_pair(np.zeros((2, 2)), 2, np.zeros(2), 0, standard_symplectic(1))
