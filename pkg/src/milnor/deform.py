"""Deformed left-invariant metrics and their sectional curvature.

A DeformedMetric scales the reference bi-invariant product Q by a factor
a > 0 on a chosen subalgebra k and leaves it alone on the orthogonal
complement m. The unnormalized curvature of a pair (A + X, B + Y) with
A, B in m and X, Y in k has the closed form

    1/4 |[A,B]_m + a([X,B] + [A,Y])|^2  +  1/4 |[A,B]_k + a^2 [X,Y]|^2
    + 1/4 a (1-a)^3 |[X,Y]|^2           +  3/4 (1-a) |[A,B]_k + a [X,Y]|^2

with all norms taken in Q. Every term is nonnegative for a <= 1. For
a > 1 the third term is negative and can dominate unless k is abelian;
with k abelian the whole expression collapses to

    1/4 |[A,B]_m + a([X,B] + [A,Y])|^2  +  (1 - 3a/4) |[A,B]_k|^2

which stays nonnegative exactly up to a = 4/3. That threshold is what the
disc gluing construction spends, and the curvature_oracle method provides a
completely independent check of the closed form: it assembles the curvature
tensor from Koszul structure constants on a Q_a-orthonormal basis.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import minimize

from .errors import (DegeneratePlaneError, ParameterError, ValidationError)

_MEMBER_TOL = 1e-9
_GRAM_TOL = 1e-12


class DeformedMetric:
    """Q on the complement m, a*Q on the subalgebra k."""

    def __init__(self, split, a):
        a = float(a)
        if not math.isfinite(a) or a <= 0.0:
            raise ParameterError("deformation scale a must be positive")
        self.split = split
        self.algebra = split.algebra
        self.a = a
        self._koszul = None

    def __repr__(self):
        return "DeformedMetric(a={:.6g}, dim_k={}, algebra={!r})".format(
            self.a, self.split.dim_k, self.algebra)

    # -- inner product ----------------------------------------------------

    def inner(self, u, v):
        alg = self.algebra
        uk = self.split.project_k(u)
        vk = self.split.project_k(v)
        return alg.inner(u, v) + (self.a - 1.0) * alg.inner(uk, vk)

    def norm_sq(self, u):
        return self.inner(u, u)

    # -- curvature, closed form -------------------------------------------

    def _check_parts(self, A, X, B, Y):
        sp = self.split
        alg = self.algebra
        for name, vec, proj in (("A", A, sp.project_k), ("B", B, sp.project_k),
                                ("X", X, sp.project_m), ("Y", Y, sp.project_m)):
            resid = alg.norm(proj(vec))
            scale = np.maximum(1.0, alg.norm(vec))
            if np.any(resid > _MEMBER_TOL * scale):
                where = "m" if proj is sp.project_k else "k"
                raise ValidationError(
                    "{} does not lie in the {} block (residual {:.3g})".format(
                        name, where, float(np.max(resid))))

    def curvature(self, A, X, B, Y, check=True):
        """Unnormalized curvature Q_a(R(A+X, B+Y)(B+Y), A+X).

        A, B must lie in m and X, Y in k; arbitrary leading sample axes
        broadcast. The value is quartic in the inputs and vanishes when the
        two arguments are proportional.
        """
        alg = self.algebra
        sp = self.split
        a = self.a
        A = alg.check_element(np.asarray(A, dtype=float))
        X = alg.check_element(np.asarray(X, dtype=float))
        B = alg.check_element(np.asarray(B, dtype=float))
        Y = alg.check_element(np.asarray(Y, dtype=float))
        if check:
            self._check_parts(A, X, B, Y)
        brAB_m, brAB_k = sp.split(alg.bracket(A, B))
        brXY = alg.bracket(X, Y)
        mixed = alg.bracket(X, B) + alg.bracket(A, Y)
        t1 = 0.25 * alg.norm_sq(brAB_m + a * mixed)
        t2 = 0.25 * alg.norm_sq(brAB_k + (a * a) * brXY)
        t3 = 0.25 * a * (1.0 - a) ** 3 * alg.norm_sq(brXY)
        t4 = 0.75 * (1.0 - a) * alg.norm_sq(brAB_k + a * brXY)
        return t1 + t2 + t3 + t4

    def curvature_of_pair(self, u, v, check=False):
        """curvature() after splitting two arbitrary vectors into m + k."""
        um, uk = self.split.split(self.algebra.check_element(np.asarray(u, float)))
        vm, vk = self.split.split(self.algebra.check_element(np.asarray(v, float)))
        return self.curvature(um, uk, vm, vk, check=check)

    # -- curvature, Koszul oracle ------------------------------------------

    def _tensors(self):
        """Structure constants and connection coefficients on a
        Q_a-orthonormal basis (m-part first, then k-part / sqrt(a))."""
        if self._koszul is None:
            alg = self.algebra
            d = alg.dim
            K = self.split._flat
            m_rows = null_space(K).T
            basis = np.vstack([m_rows, K / math.sqrt(self.a)])
            b3 = alg.unflatten(basis)
            br = 2.0 * np.cross(b3[:, None, :, :], b3[None, :, :, :])
            brf = br.reshape(d, d, d)
            metric_mat = np.eye(d) + (self.a - 1.0) * (K.T @ K)
            weighted = basis @ metric_mat
            gamma = np.einsum("ijd,ld->ijl", brf, weighted)
            chris = 0.5 * (gamma - np.transpose(gamma, (0, 2, 1))
                           - np.transpose(gamma, (2, 0, 1)))
            self._koszul = (basis, metric_mat, gamma, chris)
        return self._koszul

    def curvature_oracle(self, A, X, B, Y, check=True):
        """Same quantity as curvature(), computed the long way round:
        Christoffel coefficients from the Koszul formula for left-invariant
        fields, then R(u,v)v = nabla_u nabla_v v - nabla_v nabla_u v
        - nabla_[u,v] v, contracted back with u."""
        alg = self.algebra
        A = alg.check_element(np.asarray(A, dtype=float))
        X = alg.check_element(np.asarray(X, dtype=float))
        B = alg.check_element(np.asarray(B, dtype=float))
        Y = alg.check_element(np.asarray(Y, dtype=float))
        if check:
            self._check_parts(A, X, B, Y)
        return self.curvature_oracle_of_pair(A + X, B + Y)

    def curvature_oracle_of_pair(self, u, v):
        alg = self.algebra
        basis, metric_mat, gamma, chris = self._tensors()
        uf = alg.flatten(alg.check_element(np.asarray(u, dtype=float)))
        vf = alg.flatten(alg.check_element(np.asarray(v, dtype=float)))
        coords = (basis @ metric_mat).T
        cu = uf @ coords
        cv = vf @ coords

        def nab(x, y):
            return np.einsum("...i,...j,ijl->...l", x, y, chris)

        lie = np.einsum("...i,...j,ijl->...l", cu, cv, gamma)
        r_uvv = nab(cu, nab(cv, cv)) - nab(cv, nab(cu, cv)) - nab(lie, cv)
        return np.einsum("...l,...l->...", r_uvv, cu)

    def oracle_agreement(self, samples=64, seed=0):
        """Worst absolute gap between the closed-form curvature and the
        connection-based oracle over seeded random vector pairs."""
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(samples):
            u = self.algebra.random(rng)
            v = self.algebra.random(rng)
            gap = abs(float(self.curvature_of_pair(u, v))
                      - float(self.curvature_oracle_of_pair(u, v)))
            worst = max(worst, gap)
        return worst

    # -- sectional curvature ------------------------------------------------

    def sectional(self, u, v):
        """Curvature of the plane spanned by u and v, normalized by the
        Q_a Gram determinant. Raises for (numerically) dependent inputs."""
        alg = self.algebra
        u = alg.check_element(np.asarray(u, dtype=float))
        v = alg.check_element(np.asarray(v, dtype=float))
        nu = float(np.sqrt(self.norm_sq(u)))
        nv = float(np.sqrt(self.norm_sq(v)))
        if nu == 0.0 or nv == 0.0:
            raise DegeneratePlaneError("zero vector cannot span a plane")
        uh = u / nu
        vh = v / nv
        gram = 1.0 - float(self.inner(uh, vh)) ** 2
        if gram < _GRAM_TOL:
            raise DegeneratePlaneError(
                "Gram determinant {:.3g} below threshold".format(gram))
        return float(self.curvature_of_pair(uh, vh)) / gram

    def sectional_batch(self, U, V):
        """Vectorized sectional curvature. Returns (values, valid) where
        valid flags planes whose Gram determinant cleared the threshold;
        invalid slots hold +inf."""
        nu = np.sqrt(self.norm_sq(U))
        nv = np.sqrt(self.norm_sq(V))
        ok = (nu > 0) & (nv > 0)
        nu = np.where(nu > 0, nu, 1.0)
        nv = np.where(nv > 0, nv, 1.0)
        uh = U / nu[..., None, None]
        vh = V / nv[..., None, None]
        gram = 1.0 - self.inner(uh, vh) ** 2
        ok &= gram >= _GRAM_TOL
        vals = np.where(ok, self.curvature_of_pair(uh, vh)
                        / np.where(ok, gram, 1.0), np.inf)
        return vals, ok


@dataclass
class ScanResult:
    """Outcome of a seeded random-plane curvature scan."""
    min_value: float
    u: np.ndarray
    v: np.ndarray
    n_planes: int
    n_valid: int
    seed: int


def scan_min_sectional(metric, n_planes=100_000, seed=0):
    """Minimum sectional curvature over n_planes seeded Gaussian planes."""
    if n_planes < 1:
        raise ParameterError("n_planes must be positive")
    rng = np.random.default_rng(seed)
    alg = metric.algebra
    U = alg.random(rng, n_planes)
    V = alg.random(rng, n_planes)
    vals, ok = metric.sectional_batch(U, V)
    if not np.any(ok):
        raise DegeneratePlaneError("every sampled plane degenerated")
    idx = int(np.argmin(vals))
    return ScanResult(min_value=float(vals[idx]), u=U[idx], v=V[idx],
                      n_planes=n_planes, n_valid=int(np.sum(ok)), seed=seed)


@dataclass
class PlaneSearchResult:
    """Outcome of the negative-plane search. When found is False, value and
    (u, v) still describe the most negative plane encountered."""
    found: bool
    value: float
    u: np.ndarray
    v: np.ndarray
    oracle_value: float
    evaluations: int
    scan_min: float


def _gram_schmidt_pair(metric, x):
    """Split a 2*dim chart vector into a Q_a-orthonormal pair, or None."""
    alg = metric.algebra
    d = alg.dim
    u = alg.unflatten(x[:d])
    v = alg.unflatten(x[d:])
    nu = math.sqrt(float(metric.norm_sq(u)))
    if nu < 1e-12:
        return None
    u = u / nu
    v = v - float(metric.inner(v, u)) * u
    nv = math.sqrt(float(metric.norm_sq(v)))
    if nv < 1e-9:
        return None
    return u, v / nv


def find_negative_plane(metric, budget=100_000, seed=0, threshold=-1e-10):
    """Seeded search for a plane with sectional curvature below threshold.

    Phase one scans random planes; phase two runs Nelder-Mead descents on
    the orthonormalized-pair chart, starting from the worst scanned planes
    and then from fresh random points, until the evaluation budget runs
    out. Deterministic for a fixed (budget, seed). A found plane is
    re-evaluated with curvature_oracle so the closed form never certifies
    itself.
    """
    if budget < 10:
        raise ParameterError("budget too small to do anything")
    alg = metric.algebra
    d = alg.dim
    rng = np.random.default_rng(seed)
    evals = 0

    scan_n = max(min(budget // 2, 50_000), 10)
    U = alg.random(rng, scan_n)
    V = alg.random(rng, scan_n)
    vals, ok = metric.sectional_batch(U, V)
    evals += scan_n
    vals = np.where(ok, vals, np.inf)
    order = np.argsort(vals)
    scan_min = float(vals[order[0]])

    def objective(x):
        pair = _gram_schmidt_pair(metric, x)
        if pair is None:
            return 1.0e6
        return float(metric.curvature_of_pair(*pair))

    def finish(x):
        pair = _gram_schmidt_pair(metric, x)
        u, v = pair
        value = float(metric.curvature_of_pair(u, v))
        oracle = float(metric.curvature_oracle_of_pair(u, v))
        return u, v, value, oracle

    best_x = np.concatenate([alg.flatten(U[order[0]]), alg.flatten(V[order[0]])])
    best_val = scan_min
    if scan_min < threshold:
        u, v, value, oracle = finish(best_x)
        return PlaneSearchResult(True, value, u, v, oracle, evals, scan_min)

    starts = [np.concatenate([alg.flatten(U[i]), alg.flatten(V[i])])
              for i in order[:8] if np.isfinite(vals[i])]
    while evals < budget:
        x0 = starts.pop(0) if starts else rng.standard_normal(2 * d)
        res = minimize(objective, x0, method="Nelder-Mead",
                       options={"maxfev": int(min(4000, budget - evals)),
                                "fatol": 1e-13, "xatol": 1e-9})
        evals += int(res.nfev)
        if res.fun < best_val:
            best_val = float(res.fun)
            best_x = res.x
        if res.fun < threshold:
            u, v, value, oracle = finish(res.x)
            return PlaneSearchResult(True, value, u, v, oracle, evals, scan_min)

    u, v, value, oracle = finish(best_x)
    return PlaneSearchResult(False, value, u, v, oracle, evals, scan_min)


def negative_plane_witness(metric):
    """Explicit negatively curved plane for the diagonal subalgebra of
    su(2)^2 at any a > 1.

    The recipe kills both square terms of the closed form: pick
    noncommuting X, Y in k and A, B in m with [A,B] = -a^2 [X,Y] and
    [X,B] + [A,Y] = 0. Here X = (i,i), Y = (k,k), A = a(i,-i),
    B = -a(k,-k), leaving curvature

        1/4 a (1-a)^3 (1+3a) |[X,Y]|^2  < 0   for a > 1,

    with |[X,Y]|^2 = 8 in the reference normalization. Returns (A, X, B, Y).
    """
    alg = metric.algebra
    a = metric.a
    if alg.factors != 2 or metric.split.dim_k != 3:
        raise ParameterError(
            "witness construction needs the diagonal subalgebra of su(2)^2")
    probe = alg.element((1, 0, 0), (1, 0, 0)) / math.sqrt(2.0)
    if not metric.split.contains(probe, tol=1e-12):
        raise ParameterError(
            "witness construction needs the diagonal subalgebra of su(2)^2")
    if a <= 1.0:
        raise ParameterError("no negative plane exists for a <= 1")
    X = alg.element((1, 0, 0), (1, 0, 0))
    Y = alg.element((0, 0, 1), (0, 0, 1))
    A = a * alg.element((1, 0, 0), (-1, 0, 0))
    B = -a * alg.element((0, 0, 1), (0, 0, -1))
    return A, X, B, Y


def witness_plane_value(a):
    """Closed-form curvature of the plane built by negative_plane_witness."""
    return 0.25 * a * (1.0 - a) ** 3 * (1.0 + 3.0 * a) * 8.0


# -- quotient scaling ------------------------------------------------------


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return None


def cheeger_quotient_factors(lam):
    """Block scalings of the metric induced on the quotient of the
    product-with-shrunk-orbit construction: the transverse block keeps its
    metric, the orbit block shrinks by lam/(lam+1). Exact for rational lam."""
    exact = _as_fraction(lam)
    if exact is not None:
        if exact <= 0:
            raise ParameterError("lam must be positive")
        return (Fraction(1), exact / (exact + 1))
    lam = float(lam)
    if not math.isfinite(lam) or lam <= 0.0:
        raise ParameterError("lam must be positive")
    return (1.0, lam / (lam + 1.0))


def compensating_scale(lam):
    """The subalgebra scale a = (lam+1)/lam whose quotient shrink lands
    back on the undeformed metric: a * lam/(lam+1) = 1. Exact for rational
    lam."""
    exact = _as_fraction(lam)
    if exact is not None:
        if exact <= 0:
            raise ParameterError("lam must be positive")
        return (exact + 1) / exact
    lam = float(lam)
    if not math.isfinite(lam) or lam <= 0.0:
        raise ParameterError("lam must be positive")
    return (lam + 1.0) / lam


# -- horizontal space of the quotient submersion ---------------------------


@dataclass
class LiftCheckReport:
    """Numerical verification of the quotient submersion's horizontal
    geometry at the identity."""
    max_residual: float
    orthogonality_residual: float
    lift_norm_pairs: list
    transverse_norm_pairs: list


def horizontal_lift_check(split, lam, h_basis=None, metric=None,
                          samples=8, seed=0):
    """Check the closed-form horizontal space of the submersion from
    (group) x (shrunk orbit space) onto the quotient.

    The total space tangent model is g + p, where p is the orthogonal
    complement of the optional h inside k, with metric <.,.> on g and
    lam * <.,.> on p (<.,.> is Q or the supplied deformed metric, which
    must shrink the same subalgebra). Verifies that

      * the vertical space  h x {0} + {(-X, X) : X in p}  is orthogonal to
        the claimed horizontal space  m x {0} + {(lam Y, Y) : Y in p},
      * the lift (lam Y, Y)/(lam+1) of Y has squared norm
        lam/(lam+1) * |Y|^2,
      * the lift (A, 0) of transverse A has squared norm |A|^2,

    and returns the worst residual over all checks plus the sampled norm
    pairs. dim(vertical) + dim(horizontal) matches the total space by
    construction; orthogonality therefore pins the horizontal space.
    """
    lam = float(lam)
    if not math.isfinite(lam) or lam <= 0.0:
        raise ParameterError("lam must be positive")
    alg = split.algebra
    d = alg.dim
    K = split._flat
    r = split.dim_k

    if h_basis is None:
        h_flat = np.zeros((0, d))
    else:
        h_flat = alg.flatten(alg.check_element(np.asarray(h_basis, dtype=float)))
        if h_flat.ndim == 1:
            h_flat = h_flat[None]
        gram = h_flat @ h_flat.T
        if np.max(np.abs(gram - np.eye(h_flat.shape[0]))) > 1e-12:
            raise ValidationError("h basis is not Q-orthonormal")
        inside = h_flat @ K.T @ K
        if np.max(np.abs(inside - h_flat)) > 1e-10:
            raise ValidationError("h basis does not lie inside k")
    s = h_flat.shape[0]

    if s == 0:
        p_flat = K
    elif s == r:
        raise ParameterError("h exhausts k, nothing left to lift")
    else:
        coords = h_flat @ K.T
        p_flat = null_space(coords).T @ K
    rp = p_flat.shape[0]

    if metric is None:
        mg = np.eye(d)
    else:
        if not np.allclose(metric.split._flat, K, atol=1e-12):
            raise ValidationError(
                "supplied metric must deform the same subalgebra")
        mg = np.eye(d) + (metric.a - 1.0) * (K.T @ K)
    mp = p_flat @ mg @ p_flat.T
    big = np.zeros((d + rp, d + rp))
    big[:d, :d] = mg
    big[d:, d:] = lam * mp

    m_rows = null_space(K).T

    def embed(g_part, p_coeff):
        vec = np.zeros(d + rp)
        vec[:d] = g_part
        vec[d:] = p_coeff
        return vec

    vertical = [embed(h_flat[i], np.zeros(rp)) for i in range(s)]
    vertical += [embed(-p_flat[j], np.eye(rp)[j]) for j in range(rp)]
    horizontal = [embed(m_rows[i], np.zeros(rp)) for i in range(m_rows.shape[0])]
    horizontal += [embed(lam * p_flat[j], np.eye(rp)[j]) for j in range(rp)]
    assert len(vertical) + len(horizontal) == d + rp

    def mnorm(vec):
        return math.sqrt(float(vec @ big @ vec))

    ortho = 0.0
    for hv in horizontal:
        for vv in vertical:
            ortho = max(ortho, abs(float(hv @ big @ vv))
                        / (mnorm(hv) * mnorm(vv)))

    rng = np.random.default_rng(seed)
    lift_pairs = []
    worst = ortho
    for _ in range(samples):
        y = rng.standard_normal(rp)
        y_flat = y @ p_flat
        expected = lam / (lam + 1.0) * float(y_flat @ mg @ y_flat)
        lift = embed(lam * y_flat, y) / (lam + 1.0)
        actual = float(lift @ big @ lift)
        lift_pairs.append((expected, actual))
        worst = max(worst, abs(expected - actual) / max(1.0, abs(expected)))
        for vv in vertical:
            worst = max(worst, abs(float(lift @ big @ vv))
                        / (mnorm(lift) * mnorm(vv)))

    trans_pairs = []
    if m_rows.shape[0] > 0:
        for _ in range(samples):
            c = rng.standard_normal(m_rows.shape[0])
            a_flat = c @ m_rows
            expected = float(a_flat @ mg @ a_flat)
            vec = embed(a_flat, np.zeros(rp))
            actual = float(vec @ big @ vec)
            trans_pairs.append((expected, actual))
            worst = max(worst, abs(expected - actual) / max(1.0, abs(expected)))

    return LiftCheckReport(max_residual=worst, orthogonality_residual=ortho,
                           lift_norm_pairs=lift_pairs,
                           transverse_norm_pairs=trans_pairs)
