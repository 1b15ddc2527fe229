"""Pointwise Hermitian geometry from coordinate-chart metrics via 2-jets.

A ChartMetric holds the components g_{i jbar} of a Hermitian metric as
Wirtinger 2-jets at a base point.  Torsion, Chern curvature, the three Chern
Ricci tensors, parallel-torsion residuals, and (for parallel-torsion metrics
with unitary base frame) the Levi-Civita curvature and its sectional/Ricci
traces are all extracted from jet coefficients.

The built-in metric is the homogeneous metric on the flag threefold sitting
inside P^2 x P^2: with alpha = 1 + |z1|^2 + |z2|^2, f = z2 + z1 z3,
beta = 1 + |z3|^2 + |f|^2, the Kaehler-Einstein part is
gtilde = Hess log(alpha beta) and the metric is g = gtilde - sigma, where
sigma_{i jbar} = (delta_{i1} delta_{j1} |z3|^2 + delta_{i1} delta_{j2} z3
+ delta_{i2} delta_{j1} zbar3 + delta_{i2} delta_{j2}) / (alpha beta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .jets import Jet2, jet_matrix_inverse
from .linalg import exact_solve_identity
from .scalars import (EC, ExactComplex, conj, is_exact, is_zero, scalar_abs,
                      scalar_to_json)

FLOAT_TOL = 1e-9


class BaseMetricError(ValueError):
    """The operation needs the metric to be the identity at the base point."""


class UnsupportedMetricError(ValueError):
    """Levi-Civita extraction is implemented only for parallel torsion."""


class DegeneratePlaneError(ValueError):
    pass


class ChartMetric:
    """Hermitian metric components g_{i jbar} as 2-jets at a base point."""

    __slots__ = ("n", "g", "label", "exact")

    def __init__(self, n: int, g, label: str = ""):
        g = tuple(tuple(r) for r in g)
        exact = is_exact(next(iter(g[0][0].coeffs.values()), EC.zero()))
        for i in range(n):
            for j in range(n):
                d = g[i][j] - g[j][i].conj()
                if exact:
                    if not d.is_zero():
                        raise ValueError("metric jets must be hermitian")
                elif d.norm_inf() > 1e-10 * max(g[i][j].norm_inf(), 1.0):
                    raise ValueError("metric jets must be hermitian within tolerance")
        g0 = [[g[i][j].value() for j in range(n)] for i in range(n)]
        if exact:
            # Sylvester: leading principal minors positive
            for k in range(1, n + 1):
                sub = [row[:k] for row in g0[:k]]
                det = _exact_det(sub)
                if not (det.im == 0 and det.re > 0):
                    raise ValueError("metric must be positive definite at the base point")
        else:
            ev = np.linalg.eigvalsh(np.array([[complex(e) for e in r] for r in g0]))
            if np.min(ev) <= 0:
                raise ValueError("metric must be positive definite at the base point")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, *_):
        raise AttributeError("ChartMetric is immutable")

    def value_matrix(self):
        return [[self.g[i][j].value() for j in range(self.n)] for i in range(self.n)]

    def inverse_value_matrix(self):
        g0 = self.value_matrix()
        if self.exact:
            return exact_solve_identity([list(r) for r in g0])
        inv = np.linalg.inv(np.array([[complex(e) for e in r] for r in g0]))
        return [[complex(inv[i, j]) for j in range(self.n)] for i in range(self.n)]

    def has_identity_base(self, tol: float = FLOAT_TOL) -> bool:
        for i in range(self.n):
            for j in range(self.n):
                want = (EC.one() if self.exact else 1 + 0j) if i == j else \
                    (EC.zero() if self.exact else 0j)
                d = self.g[i][j].value() - want
                if self.exact:
                    if not d.is_zero():
                        return False
                elif scalar_abs(d) > tol:
                    return False
        return True


def _exact_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = EC.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _exact_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


# --------------------------------------------------------------------------
# metric builders
# --------------------------------------------------------------------------

def _coords(n: int, point, exact: bool):
    """Coordinate jets Z_i = p_i + w_i and their conjugates."""
    Z, Zb = [], []
    for i in range(n):
        p = point[i]
        if exact:
            base = Jet2.constant(n, p if isinstance(p, ExactComplex) else EC(Fraction(p), 0))
        else:
            base = Jet2.constant(n, complex(p))
        Z.append(base + Jet2.z(n, i, exact))
        Zb.append(base.conj() + Jet2.zbar(n, i, exact))
    return Z, Zb


def euclidean_metric(n: int = 3, exact: bool = True) -> ChartMetric:
    one = EC.one() if exact else 1 + 0j
    g = [[Jet2.constant(n, one) if i == j else Jet2(n) for j in range(n)]
         for i in range(n)]
    return ChartMetric(n, g, label="euclidean")


def fubini_study_metric(n: int = 3, exact: bool = True, point=None) -> ChartMetric:
    """g = Hess log(1 + |z|^2): the Kaehler reference case (zero torsion)."""
    point = point or [0] * n
    Z, Zb = _coords(n, point, exact)
    one = EC.one() if exact else 1 + 0j
    al = Jet2.constant(n, one)
    for k in range(n):
        al = al + Z[k] * Zb[k]
    alinv = al.reciprocal()
    g = [[(Jet2.constant(n, one) if i == j else Jet2(n)) * alinv
          - Zb[i] * Z[j] * alinv * alinv for j in range(n)] for i in range(n)]
    return ChartMetric(n, g, label="fubini_study")


def wallach_metric(point=None, exact: bool = True, sigma_scale=1) -> ChartMetric:
    """The flag-threefold metric g = gtilde - sigma as 2-jets.

    Exact mode supports the chart origin (homogeneity reduces any point to
    it); float mode expands at an arbitrary chart point.  ``sigma_scale``
    exists for perturbation experiments; the geometric metric is scale 1.
    """
    n = 3
    if point is None:
        point = [0, 0, 0]
    if exact and any(not is_zero(p if isinstance(p, ExactComplex) else EC(Fraction(p), 0))
                     for p in point):
        raise ValueError("exact jets are expanded at the chart origin only")
    Z, Zb = _coords(n, point, exact)
    one = EC.one() if exact else 1 + 0j
    zero = Jet2(n)
    const = lambda c: Jet2.constant(n, c)
    sscale = (EC(Fraction(sigma_scale), 0) if not isinstance(sigma_scale, ExactComplex)
              else sigma_scale) if exact else complex(sigma_scale)

    al = const(one) + Z[0] * Zb[0] + Z[1] * Zb[1]
    al_d = [Zb[0], Zb[1], zero]                      # partial_i alpha
    al_db = [Z[0], Z[1], zero]                       # partial_jbar alpha
    al_dd = [[const(one) if (i == j and i < 2) else zero for j in range(3)]
             for i in range(3)]                      # partial_i partial_jbar alpha

    f = Z[1] + Z[0] * Z[2]
    fb = f.conj()
    f_d = [Z[2], const(one), Z[0]]
    f_db = [j.conj() for j in f_d]

    be = const(one) + Z[2] * Zb[2] + f * fb
    be_d = [f_d[i] * fb + (Zb[2] if i == 2 else zero) for i in range(3)]
    be_db = [j.conj() for j in be_d]
    be_dd = [[f_d[i] * f_db[j] + (const(one) if i == j == 2 else zero)
              for j in range(3)] for i in range(3)]

    alinv = al.reciprocal()
    beinv = be.reciprocal()
    alinv2 = alinv * alinv
    beinv2 = beinv * beinv

    g = []
    for i in range(3):
        row = []
        for j in range(3):
            gt = al_dd[i][j] * alinv - al_d[i] * al_db[j] * alinv2 \
                + be_dd[i][j] * beinv - be_d[i] * be_db[j] * beinv2
            sig = zero
            if i == 0 and j == 0:
                sig = Z[2] * Zb[2]
            elif i == 0 and j == 1:
                sig = Z[2]
            elif i == 1 and j == 0:
                sig = Zb[2]
            elif i == 1 and j == 1:
                sig = const(one)
            row.append(gt - sig.scale(sscale) * alinv * beinv)
        g.append(row)
    return ChartMetric(3, g, label="wallach")


def wallach_metric_values(z, sigma_scale: float = 1.0) -> np.ndarray:
    """Direct complex-arithmetic evaluation of the metric components.

    Independent of the jet machinery; used as the finite-difference oracle.
    """
    z1, z2, z3 = complex(z[0]), complex(z[1]), complex(z[2])
    al = 1 + abs(z1) ** 2 + abs(z2) ** 2
    f = z2 + z1 * z3
    be = 1 + abs(z3) ** 2 + abs(f) ** 2
    al_d = np.array([np.conj(z1), np.conj(z2), 0.0])
    al_dd = np.diag([1.0, 1.0, 0.0]).astype(complex)
    f_d = np.array([z3, 1.0, z1])
    be_d = np.array([0, 0, np.conj(z3)]).astype(complex) + f_d * np.conj(f)
    be_dd = np.array([[f_d[i] * np.conj(f_d[j]) + (1.0 if i == j == 2 else 0.0)
                       for j in range(3)] for i in range(3)])
    g = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            g[i, j] = al_dd[i, j] / al - al_d[i] * np.conj(al_d[j]) / al ** 2 \
                + be_dd[i, j] / be - be_d[i] * np.conj(be_d[j]) / be ** 2
    sig = np.zeros((3, 3), dtype=complex)
    sig[0, 0] = abs(z3) ** 2
    sig[0, 1] = z3
    sig[1, 0] = np.conj(z3)
    sig[1, 1] = 1.0
    return g - sigma_scale * sig / (al * be)


def change_frame(m: ChartMetric, A) -> ChartMetric:
    """Metric jets under the constant linear coordinate change z = A z'.

    Components transform as ghat_{i jbar} = sum_{a,b} A_{a i} conj(A_{b j})
    g_{a bbar} with the chart variables substituted accordingly.
    """
    n = m.n
    rows = [list(r) for r in (A.entries if hasattr(A, "entries") else A)]
    out = []
    for i in range(n):
        outrow = []
        for j in range(n):
            acc = Jet2(n)
            for a in range(n):
                for b in range(n):
                    coef = rows[a][i] * conj(rows[b][j])
                    if is_zero(coef):
                        continue
                    acc = acc + m.g[a][b].substitute_linear(rows).scale(coef)
            outrow.append(acc)
        out.append(outrow)
    return ChartMetric(n, out, label=f"{m.label}~frame")


def orthonormalize_base(m: ChartMetric) -> ChartMetric:
    """Constant frame change making the base-point metric the identity.

    Float-only: the Cholesky factor is generally irrational.
    """
    if m.exact:
        raise ValueError("orthonormalization requires the float scalar kind")
    g0 = np.array([[complex(e) for e in r] for r in m.value_matrix()])
    L = np.linalg.cholesky(g0)
    A = np.linalg.inv(L).conj().T      # A^H g0 A = identity
    return change_frame(m, [[A[a, i] for i in range(m.n)] for a in range(m.n)])


# --------------------------------------------------------------------------
# pointwise extraction
# --------------------------------------------------------------------------

def _cv(x, exact: bool):
    """Coerce a value extracted from a possibly-empty jet to the metric kind."""
    if exact:
        return x
    return complex(x)


def _first_derivs(m: ChartMetric):
    """dg[i][j][k] = partial_k g_{i jbar} at the base point."""
    n = m.n
    return [[[_cv(m.g[i][j].deriv(holo=(k,)), m.exact) for k in range(n)]
             for j in range(n)] for i in range(n)]


def chern_torsion_at(m: ChartMetric):
    """T^j_{ik} = sum_l ( g_{k lbar, i} - g_{i lbar, k} ) g^{lbar j}."""
    n = m.n
    dg = _first_derivs(m)
    ginv = m.inverse_value_matrix()
    T = [[[None] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for i in range(n):
            for k in range(n):
                acc = EC.zero() if m.exact else 0j
                for l in range(n):
                    acc = acc + (dg[k][l][i] - dg[i][l][k]) * ginv[l][j]
                T[j][i][k] = acc
    return T


def torsion_jets(m: ChartMetric):
    """The torsion components as degree-1 jets (enough for one derivative)."""
    n = m.n
    G = [[m.g[i][j] for j in range(n)] for i in range(n)]
    Ginv = jet_matrix_inverse(G)
    tj = [[[None] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for i in range(n):
            for k in range(n):
                acc = Jet2(n)
                for l in range(n):
                    acc = acc + (G[k][l].partial_z(i) - G[i][l].partial_z(k)) * Ginv[l][j]
                tj[j][i][k] = acc.truncate(1)
    return tj


def chern_curvature_at(m: ChartMetric):
    """R^c_{k lbar i jbar} = -g_{i jbar, k lbar}
    + sum_{p,q} g_{i pbar, k} conj(g_{j qbar, l}) g^{pbar q}."""
    n = m.n
    dg = _first_derivs(m)
    ginv = m.inverse_value_matrix()
    Rc = [[[[None] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    acc = -_cv(m.g[i][j].deriv(holo=(k,), anti=(l,)), m.exact)
                    for p in range(n):
                        for q in range(n):
                            acc = acc + dg[i][p][k] * conj(dg[j][q][l]) * ginv[p][q]
                    Rc[k][l][i][j] = acc
    return Rc


def ricci_forms_at(m: ChartMetric, Rc=None):
    """First, second and third Chern Ricci tensors as hermitian matrices.

    Index conventions: the first Ricci traces the bundle indices, the second
    traces the direction indices, the third ties direction to bundle;
    ric1[k][l] = sum_i Rc[k][l][i][i], ric2[i][j] = sum_k Rc[k][k][i][j],
    ric3[k][j] = sum_i Rc[k][i][i][j].
    """
    n = m.n
    if Rc is None:
        Rc = chern_curvature_at(m)
    zero = EC.zero() if m.exact else 0j
    ric1 = [[sum((Rc[k][l][i][i] for i in range(n)), zero) for l in range(n)]
            for k in range(n)]
    ric2 = [[sum((Rc[k][k][i][j] for k in range(n)), zero) for j in range(n)]
            for i in range(n)]
    ric3 = [[sum((Rc[k][i][i][j] for i in range(n)), zero) for j in range(n)]
            for k in range(n)]
    return ric1, ric2, ric3


def btp_residual_at(m: ChartMetric):
    """Residuals of the parallel-torsion identities at a unitary base point.

    Holomorphic side:  d/dz_l T^j_{ik}
        - sum_r ( g_{l rbar, i} T^j_{rk} + g_{l rbar, k} T^j_{ir}
                  - g_{l jbar, r} T^r_{ik} ),
    antiholomorphic side:  d/dzbar_l T^j_{ik}
        - sum_r ( T^j_{ir} conj(T^k_{lr}) - T^j_{kr} conj(T^i_{lr})
                  + T^r_{ik} conj(T^r_{jl}) ).
    Both vanish identically iff the Bismut torsion is parallel at the point.
    """
    if not m.has_identity_base():
        raise BaseMetricError("parallel-torsion residuals need g = identity "
                              "at the base point; orthonormalize first")
    n = m.n
    dg = _first_derivs(m)
    tj = torsion_jets(m)
    T = [[[_cv(tj[j][i][k].value(), m.exact) for k in range(n)]
          for i in range(n)] for j in range(n)]
    zero = EC.zero() if m.exact else 0j
    res_h = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    res_a = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for l in range(n):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    rhs = zero
                    for r in range(n):
                        rhs = rhs + dg[l][r][i] * T[j][r][k] \
                            + dg[l][r][k] * T[j][i][r] \
                            - dg[l][j][r] * T[r][i][k]
                    res_h[l][i][j][k] = _cv(tj[j][i][k].deriv(holo=(l,)), m.exact) - rhs
                    rhs = zero
                    for r in range(n):
                        rhs = rhs + T[j][i][r] * conj(T[k][l][r]) \
                            - T[j][k][r] * conj(T[i][l][r]) \
                            + T[r][i][k] * conj(T[r][j][l])
                    res_a[l][i][j][k] = _cv(tj[j][i][k].deriv(anti=(l,)), m.exact) - rhs
    return res_h, res_a


def _max_abs4(arr) -> float:
    return max(scalar_abs(c) for a in arr for b in a for r in b for c in r)


@dataclass(frozen=True)
class PointCurvature:
    """Torsion, Chern curvature, Ricci tensors and Levi-Civita components
    of a chart metric at its base point."""
    n: int
    exact: bool
    torsion: list            # T[j][i][k]
    rc: list                 # rc[k][l][i][j] = R^c_{k lbar i jbar}
    ric1: list
    ric2: list
    ric3: list
    r11: Optional[list]      # r11[k][l][i][j] = R_{k lbar i jbar}
    r20: Optional[list]      # r20[i][j][k][l] = R_{i j k lbar}

    def to_json(self):
        dump = lambda a: _nested_json(a)
        out = {"n": self.n, "scalar_kind": "exact" if self.exact else "float",
               "torsion": dump(self.torsion), "chern_curvature": dump(self.rc),
               "chern_ricci_1": dump(self.ric1), "chern_ricci_2": dump(self.ric2),
               "chern_ricci_3": dump(self.ric3)}
        if self.r11 is not None:
            out["riemannian_11"] = dump(self.r11)
            out["riemannian_20"] = dump(self.r20)
        return out


def _nested_json(a):
    if isinstance(a, (list, tuple)):
        return [_nested_json(x) for x in a]
    return scalar_to_json(a)


def riemannian_curvature_at(m: ChartMetric, tol: float = FLOAT_TOL) -> PointCurvature:
    """Levi-Civita curvature at a unitary base point of a parallel-torsion
    metric.

    The holomorphic covariant derivative of the torsion vanishes under the
    parallel-torsion hypothesis, which is what lets the (2,0)-type
    components reduce to quadratic torsion terms:

        R_{i j k lbar} = 1/4 sum_r ( T^l_{ri} T^r_{jk} - T^l_{rj} T^r_{ik} ),
        R_{k lbar i jbar} = 1/2 ( R^c_{i lbar k jbar} + R^c_{k jbar i lbar} )
            + 1/4 sum_r ( T^r_{ik} conj(T^r_{jl}) - T^j_{kr} conj(T^i_{lr})
                          - T^l_{ir} conj(T^k_{jr}) ).
    """
    if not m.has_identity_base(tol):
        raise BaseMetricError("Levi-Civita extraction needs g = identity at "
                              "the base point")
    res_h, res_a = btp_residual_at(m)
    resid = max(_max_abs4(res_h), _max_abs4(res_a))
    if resid > (0.0 if m.exact else tol):
        raise UnsupportedMetricError(
            f"torsion is not parallel at the base point (residual {resid:.3e}); "
            "the covariant-derivative term of the (2,0) curvature is not supported")
    n = m.n
    T = chern_torsion_at(m)
    Rc = chern_curvature_at(m)
    ric1, ric2, ric3 = ricci_forms_at(m, Rc)
    quarter = EC(Fraction(1, 4), 0) if m.exact else 0.25
    half = EC(Fraction(1, 2), 0) if m.exact else 0.5
    zero = EC.zero() if m.exact else 0j
    r20 = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    r11 = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    acc = zero
                    for r in range(n):
                        acc = acc + T[l][r][i] * T[r][j][k] - T[l][r][j] * T[r][i][k]
                    r20[i][j][k][l] = quarter * acc
    for k in range(n):
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    acc = half * (Rc[i][l][k][j] + Rc[k][j][i][l])
                    tacc = zero
                    for r in range(n):
                        tacc = tacc + T[r][i][k] * conj(T[r][j][l]) \
                            - T[j][k][r] * conj(T[i][l][r]) \
                            - T[l][i][r] * conj(T[k][j][r])
                    r11[k][l][i][j] = acc + quarter * tacc
    return PointCurvature(n=n, exact=m.exact, torsion=T, rc=Rc,
                          ric1=ric1, ric2=ric2, ric3=ric3, r11=r11, r20=r20)


def chern_point_curvature(m: ChartMetric) -> PointCurvature:
    """Chern-side data only (no parallel-torsion requirement)."""
    T = chern_torsion_at(m)
    Rc = chern_curvature_at(m)
    ric1, ric2, ric3 = ricci_forms_at(m, Rc)
    return PointCurvature(n=m.n, exact=m.exact, torsion=T, rc=Rc,
                          ric1=ric1, ric2=ric2, ric3=ric3, r11=None, r20=None)


# --------------------------------------------------------------------------
# sectional and Ricci curvature
# --------------------------------------------------------------------------

def _as_vec(X, n, exact):
    out = []
    for x in X:
        if exact:
            if isinstance(x, ExactComplex):
                out.append(x)
            elif isinstance(x, (int, Fraction)):
                out.append(EC(Fraction(x), 0))
            else:
                raise TypeError("exact curvature data needs exact vectors")
        else:
            out.append(complex(x))
    if len(out) != n:
        raise ValueError(f"direction must have {n} components")
    return out


def _re(c, exact):
    if exact:
        if c.im != 0:
            raise ArithmeticError("expected a real exact value")
        return c.re
    return complex(c).real


def sectional_numerator(pc: PointCurvature, X, Y):
    """R(x, y, y, x) for x = X + conj(X), y = Y + conj(Y).

    Expands the real 2-plane pairing through the complexified curvature:
    -2 R_{X Xb Y Yb} + 4 R_{X Yb Y Xb} - 2 Re R_{X Yb X Yb}
    - 4 Re ( R_{X Y X Yb} - R_{X Y Y Xb} ); the last group vanishes whenever
    the (2,0)-type components do.
    """
    if pc.r11 is None:
        raise UnsupportedMetricError("Levi-Civita components missing")
    n = pc.n
    X = _as_vec(X, n, pc.exact)
    Y = _as_vec(Y, n, pc.exact)
    Xb = [conj(x) for x in X]
    Yb = [conj(y) for y in Y]
    zero = EC.zero() if pc.exact else 0j

    def c11(A, B, C, D):
        acc = zero
        for a in range(n):
            if is_zero(A[a]):
                continue
            for b in range(n):
                if is_zero(B[b]):
                    continue
                for c in range(n):
                    if is_zero(C[c]):
                        continue
                    for d in range(n):
                        v = pc.r11[a][b][c][d]
                        if not is_zero(v):
                            acc = acc + A[a] * B[b] * C[c] * D[d] * v
        return acc

    def c20(A, B, C, D):
        acc = zero
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for d in range(n):
                        v = pc.r20[a][b][c][d]
                        if not is_zero(v):
                            acc = acc + A[a] * B[b] * C[c] * D[d] * v
        return acc

    t1 = c11(X, Xb, Y, Yb)
    t2 = c11(X, Yb, Y, Xb)
    t3 = c11(X, Yb, X, Yb)
    e = c20(X, Y, X, Yb) - c20(X, Y, Y, Xb)
    two = EC(2) if pc.exact else 2.0
    four = EC(4) if pc.exact else 4.0
    total = -two * t1 + four * t2 - two * _real_part(t3, pc.exact) \
        - four * _real_part(e, pc.exact)
    return _re(total, pc.exact)


def _real_part(c, exact):
    if exact:
        return EC(c.re, 0)
    return complex(c).real + 0j


def sectional_curvature(pc: PointCurvature, X, Y, normalized: bool = False):
    """Sectional numerator R_{xyyx}, optionally normalized by |x ^ y|^2."""
    num = sectional_numerator(pc, X, Y)
    if not normalized:
        return num
    X = _as_vec(X, pc.n, pc.exact)
    Y = _as_vec(Y, pc.n, pc.exact)
    if pc.exact:
        x2 = 2 * sum((v.abs2() for v in X), Fraction(0))
        y2 = 2 * sum((v.abs2() for v in Y), Fraction(0))
        xy = sum(((v * conj(w)).re for v, w in zip(X, Y)), Fraction(0)) * 2
    else:
        x2 = 2 * sum(abs(v) ** 2 for v in X)
        y2 = 2 * sum(abs(v) ** 2 for v in Y)
        xy = 2 * sum((v * w.conjugate()).real for v, w in zip(X, Y))
    den = x2 * y2 - xy * xy
    if (den == 0) if pc.exact else abs(den) < 1e-14 * max(1.0, x2 * y2):
        raise DegeneratePlaneError("x and y span a degenerate plane")
    return num / den


def ricci_curvature(pc: PointCurvature, X):
    """Ricci curvature of the real direction x = X + conj(X).

    Traces the sectional numerators over the orthonormal frame built from
    the unitary base frame and divides by |x|^2.
    """
    n = pc.n
    X = _as_vec(X, n, pc.exact)
    if all(is_zero(x) for x in X):
        raise DegeneratePlaneError("zero direction")
    if pc.exact:
        x2 = 2 * sum((v.abs2() for v in X), Fraction(0))
        total = Fraction(0)
    else:
        x2 = 2 * sum(abs(v) ** 2 for v in X)
        total = 0.0
    for i in range(n):
        for unit in (False, True):
            Y = [EC.zero() if pc.exact else 0j] * n
            if pc.exact:
                Y[i] = EC.i() if unit else EC.one()
            else:
                Y[i] = 1j if unit else 1 + 0j
            total = total + sectional_numerator(pc, X, Y)
    # each frame vector above has squared length 2
    return total / 2 / x2
