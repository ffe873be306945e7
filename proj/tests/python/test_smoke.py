from fractions import Fraction

import numpy as np
import pytest

import spinv

HALF = Fraction(1, 2)


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_predicates():
    assert spinv.is_symplectic([[1, 1], [0, 1]])
    assert not spinv.is_symplectic([[2, 0], [0, 2]])
    assert spinv.is_in_A(spinv.standard_involution(2))
    assert spinv.omega([1, 0], [0, 1]) == 1


def test_swap_conjugation():
    swap = [[0, 1], [1, 0]]
    psi = spinv.conjugate_to_R(swap)
    psi_inv = [[1, -HALF], [1, HALF]]
    assert matmul(psi_inv, psi) == [[1, 0], [0, 1]]
    assert spinv.conjugation_map(psi) == swap


def test_normalize_golden():
    _, phi_tilde = spinv.normalize_to_SpR([[2, 0], [0, HALF]], [[0, 1], [1, 0]])
    assert phi_tilde == [[Fraction(5, 4), Fraction(-3, 8)], [Fraction(-3, 2), Fraction(5, 4)]]


def test_shear_factorization():
    t, s = spinv.factor_sl2([[1, 1], [0, 1]])
    assert matmul(t, s) == [[1, 1], [0, 1]]


def test_chart_roundtrip():
    s = spinv.sample_anti_symplectic_involution(3, 5)
    base, coord = spinv.chart_coordinates(s)
    assert coord == [list(r) for r in zip(*coord)]
    assert spinv.involution_from_chart(base, coord) == s


def test_unitary_bridge():
    theta = spinv.sample_symmetric_unitary(2, 1)
    s = spinv.from_symmetric_unitary(theta)
    back = spinv.to_symmetric_unitary(s)
    assert np.max(np.abs(np.asarray(back) - np.asarray(theta))) < 1e-8


def test_errors_map_to_exceptions():
    with pytest.raises(spinv.NotSymplecticError):
        spinv.is_in_SpR([[2, 0], [0, 2]])
    with pytest.raises(spinv.DomainError):
        spinv.factor_sl2([[2, 0], [0, 2]])


def test_sampling_is_deterministic():
    assert spinv.sample_sp_r(2, 11) == spinv.sample_sp_r(2, 11)
    assert spinv.is_in_SpR(spinv.sample_sp_r(2, 11))


def test_verify_small():
    ok, tallies = spinv.verify(2, 5, 0)
    assert ok
    assert all(failed == 0 for _, failed in tallies.values())
