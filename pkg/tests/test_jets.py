import pytest
from hypothesis import given, settings, strategies as st

from btpgeo.jets import Jet2, JetSingularityError, jet_matrix_inverse
from btpgeo.scalars import EC


def z(i):
    return Jet2.z(3, i)


def zb(i):
    return Jet2.zbar(3, i)


def const(c):
    return Jet2.constant(3, c)


def test_geometric_series_reciprocal():
    f = const(EC(1)) + z(0) * zb(0)
    inv = f.reciprocal()
    assert inv == const(EC(1)) - z(0) * zb(0)


def test_conj_swaps_variables():
    f = z(0) + zb(1).scale(EC(2))
    assert f.conj() == zb(0) + z(1).scale(EC(2))


def test_conj_conjugates_coefficients():
    f = z(0).scale(EC(0, 1))
    assert f.conj() == zb(0).scale(EC(0, -1))


def test_reciprocal_identity_to_degree_two():
    alpha = const(EC(1)) + z(0) * zb(0) + z(1) * zb(1)
    assert alpha * alpha.reciprocal() == const(EC(1))


def test_reciprocal_needs_unit():
    with pytest.raises(JetSingularityError):
        (z(0) + z(1)).reciprocal()


def test_truncation_closed():
    f = z(0) * z(1)
    g = f * z(2)          # degree 3: dropped entirely
    assert g.is_zero()
    assert (f * const(EC(2))).coeff((0, 1)) == EC(2)


def test_deriv_multiplicities():
    f = z(0) * z(0) + z(0) * zb(0).scale(EC(3)) + z(1).scale(EC(5))
    assert f.deriv(holo=(0, 0)) == EC(2)        # d^2/dz1^2 of z1^2
    assert f.deriv(holo=(0,), anti=(0,)) == EC(3)
    assert f.deriv(holo=(1,)) == EC(5)
    assert f.value() == EC(0)


def test_partial_reduces_degree():
    f = z(0) * z(0) + z(0) * zb(1)
    df = f.partial_z(0)
    assert df == z(0).scale(EC(2)) + zb(1)
    assert f.partial_zbar(1) == z(0)


coef = st.integers(-4, 4).map(lambda v: EC(v, 0))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), coef), max_size=4))
def test_ring_commutativity(entries):
    a = Jet2(3)
    b = Jet2(3)
    for i, (v, c) in enumerate(entries):
        t = Jet2.variable(3, v).scale(c)
        a = a + t if i % 2 == 0 else a
        b = b + t if i % 2 == 1 else b
    assert a * b == b * a
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()


def test_jet_matrix_inverse_exact():
    g = [[const(EC(1)) + z(0) * zb(0), z(1).scale(EC(0, 1))],
         [zb(1).scale(EC(0, -1)), const(EC(2)) + z(1) * zb(1)]]
    inv = jet_matrix_inverse(g)
    for i in range(2):
        for j in range(2):
            acc = Jet2(3)
            for k in range(2):
                acc = acc + g[i][k] * inv[k][j]
            want = const(EC(1)) if i == j else Jet2(3)
            assert acc == want


def test_jet_matrix_inverse_float():
    gf = [[Jet2.constant(2, 2 + 0j) + Jet2.z(2, 0, exact=False) * Jet2.zbar(2, 0, exact=False),
           Jet2.constant(2, 0.5 + 0j)],
          [Jet2.constant(2, 0.5 + 0j), Jet2.constant(2, 1 + 0j)]]
    inv = jet_matrix_inverse(gf)
    acc = Jet2(2)
    for k in range(2):
        acc = acc + gf[0][k] * inv[k][0]
    assert abs(complex(acc.value()) - 1) < 1e-12
    assert (acc - Jet2.constant(2, acc.value())).norm_inf() < 1e-12
