from fractions import Fraction

import numpy as np
import pytest

from btpgeo import frames, lie
from btpgeo.scalars import EC

CYCLES = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def cyclic_torsion(a1, a2, a3):
    T = np.zeros((3, 3, 3), dtype=complex)
    for (i, j, k), v in zip(CYCLES, (a1, a2, a3)):
        T[i][j][k] = v
        T[i][k][j] = -v
    return T


def random_unitary(rng, n=3):
    M = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, _ = np.linalg.qr(M)
    return Q


# ---- transform_torsion -------------------------------------------------------

def test_identity_leaves_torsion():
    T = cyclic_torsion(1, 1, 1)
    out = frames.transform_torsion(T, np.eye(3))
    assert np.max(np.abs(out - T)) == 0


def test_so3_preserves_fully_symmetric_torsion():
    rng = np.random.default_rng(1)
    T = cyclic_torsion(1, 1, 1)
    for _ in range(10):
        M = rng.normal(size=(3, 3))
        Q, _ = np.linalg.qr(M)
        Q = Q * np.linalg.det(Q)      # force determinant +1
        out = frames.transform_torsion(T, Q)
        assert np.max(np.abs(out - T)) < 1e-10


def test_round_trip_composition():
    rng = np.random.default_rng(2)
    T = rng.normal(size=(3, 3, 3)) + 1j * rng.normal(size=(3, 3, 3))
    T = T - np.swapaxes(T, 1, 2)
    P = random_unitary(rng)
    back = frames.transform_torsion(frames.transform_torsion(T, P), P.conj().T)
    assert np.max(np.abs(back - T)) < 1e-10


def test_transform_requires_unitary():
    with pytest.raises(ValueError):
        frames.transform_torsion(cyclic_torsion(1, 0, 0), np.diag([2.0, 1, 1]))


def test_exact_transform_with_exact_unitary():
    T = [[[EC.zero() for _ in range(3)] for _ in range(3)] for _ in range(3)]
    T[0][1][2] = EC(1)
    T[0][2][1] = EC(-1)
    P = [[EC(0), EC(1), EC(0)], [EC(1), EC(0), EC(0)], [EC(0), EC(0), EC(0, 1)]]
    out = frames.transform_torsion(T, P)
    # odd permutation with a phase: components move and pick up factors
    assert out[1][0][2] == EC(0, 1)


# ---- special frames ------------------------------------------------------------

def test_special_frame_fixed_point():
    T = cyclic_torsion(2.0, 1.0, 0.5)
    res = frames.build_special_frame(T)
    assert res.a == (2.0, 1.0, 0.5)
    assert np.allclose(np.abs(res.U.to_numpy()), np.eye(3), atol=1e-9)


def test_special_frame_recovers_sl2c():
    rng = np.random.default_rng(3)
    T = frames._as_array(lie.chern_torsion(lie.sl2c(1)).T)
    for _ in range(20):
        scr = frames.transform_torsion(T, random_unitary(rng))
        res = frames.build_special_frame(scr)
        assert np.max(np.abs(np.array(res.a) - 1.0)) <= 1e-9
        # the returned unitary reproduces the special pattern
        out = frames.transform_torsion(scr, res.U.to_numpy())
        for (i, j, k), v in zip(CYCLES, res.a):
            assert abs(out[i][j][k] - v) < 1e-9
        eta = frames.gauduchon_components(out)
        assert np.max(np.abs(eta)) < 1e-9


def test_special_frame_rank_one_and_sorted_singular_values():
    rng = np.random.default_rng(4)
    T = cyclic_torsion(1.0, 0, 0)
    for _ in range(10):
        scr = frames.transform_torsion(T, random_unitary(rng))
        res = frames.build_special_frame(scr)
        assert np.max(np.abs(np.array(res.a) - [1.0, 0, 0])) <= 1e-9


def test_special_frame_invariant_is_singular_values():
    # a equals the sorted singular values of the cyclic matrix, scramble-proof
    rng = np.random.default_rng(5)
    a0 = (1.7, 0.9, 0.2)
    T = cyclic_torsion(*a0)
    for _ in range(10):
        scr = frames.transform_torsion(T, random_unitary(rng))
        res = frames.build_special_frame(scr)
        assert np.max(np.abs(np.array(res.a) - np.array(a0))) < 1e-9


def test_not_balanced_rejected():
    T = np.zeros((3, 3, 3), dtype=complex)
    T[0][0][2] = 1.0      # T^1_{13}: eta_3 != 0
    T[0][2][0] = -1.0
    with pytest.raises(frames.NotBalancedError):
        frames.build_special_frame(T)


# ---- admissible frames -----------------------------------------------------------

def test_special_to_admissible_unit():
    U, T = frames.special_to_admissible((1.0, 1.0, 0.0))
    assert abs(T[0][0][2] - 1) < 1e-15 and abs(T[1][1][2] + 1) < 1e-15
    # consistency with the transformation law
    sp = cyclic_torsion(1.0, 1.0, 0.0)
    out = frames.transform_torsion(sp, U.to_numpy())
    assert np.max(np.abs(out - frames._as_array(T))) <= 1e-12


def test_special_to_admissible_exact():
    U, T = frames.special_to_admissible((Fraction(3, 7), Fraction(3, 7), 0))
    assert T[0][0][2] == EC(Fraction(3, 7))
    assert T[1][1][2] == EC(Fraction(-3, 7))
    assert T[0][2][0] == EC(Fraction(-3, 7))
    nonzero = [(j, i, k) for j in range(3) for i in range(3) for k in range(3)
               if not T[j][i][k].is_zero()]
    assert sorted(nonzero) == [(0, 0, 2), (0, 2, 0), (1, 1, 2), (1, 2, 1)]


def test_special_to_admissible_rejects_wrong_rank():
    with pytest.raises(frames.FramePatternError):
        frames.special_to_admissible((1.0, 1.0, 0.5))
    with pytest.raises(frames.FramePatternError):
        frames.special_to_admissible((1.0, 0.5, 0.0))


# ---- rank trichotomy ----------------------------------------------------------------

def test_b_rank_type_table():
    assert frames.b_rank_type((1.0, 1.0, 1.0)) == "rank3"
    assert frames.b_rank_type((0.0, 0.0, 0.0)) == "kahler"
    assert frames.b_rank_type((1.0, 1.0, 0.0)) == "rank2"
    assert frames.b_rank_type((1.0, 0.0, 0.0)) == "rank1"
    assert frames.b_rank_type((1.0, 0.5, 0.25)) == "excluded_by_classification"
    assert frames.b_rank_type((1.0, 1.0, 0.5)) == "excluded_by_classification"


def test_b_rank_type_exact():
    assert frames.b_rank_type((Fraction(2), Fraction(2), Fraction(2))) == "rank3"
    assert frames.b_rank_type((Fraction(2), Fraction(2), 0)) == "rank2"
    assert frames.b_rank_type((Fraction(2), Fraction(1), 0)) == "excluded_by_classification"
    with pytest.raises(frames.FramePatternError):
        frames.b_rank_type((Fraction(1), Fraction(2), 0))


def test_b_rank_type_float_thresholds():
    assert frames.b_rank_type((1.0, 1.0 - 1e-10, 1e-12)) == "rank2"
    assert frames.b_rank_type((1.0, 1e-12, -1e-15)) == "rank1"
