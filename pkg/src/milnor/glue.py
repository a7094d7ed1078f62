"""Rotationally symmetric disc profiles and the boundary-matching
certificate for the two-disc gluing.

The codimension-two gluing needs, on each half, a metric of the form
dt^2 + f(t)^2 dtheta^2 on the normal disc, warped against a deformed
group metric. The profile f must close the disc smoothly (f(0) = 0,
f'(0) = 1), stay concave so the disc curvature -f''/f is nonnegative,
and become constant before the boundary so the metric is a product there.
The constant it must reach is pinned by the deformation: with subalgebra
scale a > 1 and gluing-circle radius r, the boundary metrics of the two
halves agree exactly when f^2 hits the matching level a r^2 / (a - 1).
That level only exists for a > 1, and the group side only stays
nonnegatively curved (abelian shrunk block) for a <= 4/3, which is why
the whole construction lives in the window 1 < a <= 4/3.
"""

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .deform import scan_min_sectional
from .errors import (NoFiniteMatchingError, ParameterError, ProfileError)


def _rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return None


def matching_level_sq(a, r):
    """Square of the plateau value: a r^2 / (a - 1).

    Exact (Fraction) when a and r are rational; requires a > 1 for a
    finite level and r > 0.
    """
    aq, rq = _rational(a), _rational(r)
    if aq is not None and rq is not None:
        if rq <= 0:
            raise ParameterError("radius r must be positive")
        if aq <= 1:
            raise NoFiniteMatchingError(
                "no finite matching level for a <= 1 (got a = {})".format(aq))
        return aq * rq * rq / (aq - 1)
    af, rf = float(a), float(r)
    if rf <= 0.0:
        raise ParameterError("radius r must be positive")
    if af <= 1.0:
        raise NoFiniteMatchingError(
            "no finite matching level for a <= 1 (got a = {:.6g})".format(af))
    return af * rf * rf / (af - 1.0)


def matching_level(a, r):
    """Plateau value F = r sqrt(a/(a-1)) (always a float)."""
    return math.sqrt(float(matching_level_sq(a, r)))


@dataclass(frozen=True)
class GlueParams:
    """Gluing data: subalgebra scale a, gluing-circle radius r, and the
    derived plateau. plateau_sq is kept exact when a, r are rational."""
    a: object
    r: object
    plateau: float
    plateau_sq: object
    t_plateau: float


def glue_params(a, r):
    psq = matching_level_sq(a, r)
    plateau = math.sqrt(float(psq))
    return GlueParams(a=a, r=r, plateau=plateau, plateau_sq=psq,
                      t_plateau=math.pi * plateau / 2.0)


class ProfileFunction:
    """Piecewise-smooth warping profile with a sampled grid.

    Holds closed-form callables for f, f', f'' plus the plateau data; the
    grid (step grid_step, running past the plateau) is what certificates
    sample. Constructed profiles are validated unless validate=False,
    which exists so that tests can feed broken profiles to the
    certificate.
    """

    def __init__(self, value, derivative, second_derivative, t_plateau,
                 plateau, grid_step=None, plateau_sq=None, glue=None,
                 validate=True):
        if t_plateau <= 0 or plateau <= 0:
            raise ParameterError("plateau data must be positive")
        self._f = value
        self._fp = derivative
        self._fpp = second_derivative
        self.t_plateau = float(t_plateau)
        self.plateau = float(plateau)
        self.plateau_sq = plateau_sq if plateau_sq is not None \
            else float(plateau) ** 2
        self.glue = glue
        if grid_step is None:
            grid_step = self.t_plateau / 1000.0
        if grid_step <= 0 or grid_step >= self.t_plateau:
            raise ParameterError("grid_step must be in (0, t_plateau)")
        self.grid_step = float(grid_step)
        n = int(math.ceil(1.25 * self.t_plateau / self.grid_step))
        self.grid = np.arange(n + 1) * self.grid_step
        if validate:
            self.validate()

    @classmethod
    def capped_sine(cls, a, r, grid_step=None):
        """F sin(t/F) up to the quarter period t0 = pi F / 2, constant F
        beyond, where F is the matching level for (a, r). The join is C^1:
        f' runs down to 0 at t0 while f'' jumps from -1/F to 0, so
        concavity holds weakly and the disc curvature -f''/f drops from
        1/F^2 to 0.
        """
        params = glue_params(a, r)
        F = params.plateau
        t0 = params.t_plateau

        def value(t):
            return F * math.sin(t / F) if t < t0 else F

        def derivative(t):
            return math.cos(t / F) if t < t0 else 0.0

        def second_derivative(t):
            return -math.sin(t / F) / F if t < t0 else 0.0

        return cls(value, derivative, second_derivative, t_plateau=t0,
                   plateau=F, grid_step=grid_step,
                   plateau_sq=params.plateau_sq, glue=params)

    # -- evaluation ---------------------------------------------------------

    def value(self, t):
        return self._f(float(t))

    def derivative(self, t):
        return self._fp(float(t))

    def second_derivative(self, t):
        return self._fpp(float(t))

    def value_sq(self, t):
        """f(t)^2, exact on the plateau when the plateau square is exact."""
        if float(t) >= self.t_plateau:
            return self.plateau_sq
        return self.value(t) ** 2

    def disc_curvature(self, t):
        """Rotational curvature -f''/f; undefined at the origin."""
        t = float(t)
        f = self.value(t)
        if f == 0.0:
            raise ParameterError("disc curvature is undefined where f = 0")
        return -self.second_derivative(t) / f

    def sample(self, ts=None):
        ts = self.grid if ts is None else np.asarray(ts, dtype=float)
        return ts, np.array([self.value(t) for t in ts])

    # -- invariants ---------------------------------------------------------

    def validate(self):
        """Raise ProfileError on any violated construction invariant."""
        if abs(self.value(0.0)) > 1e-12:
            raise ProfileError("profile must vanish at the origin")
        h = 1e-4 * self.plateau
        slope = self.value(h) / h
        if abs(slope - 1.0) > 1e-8 or abs(self.derivative(0.0) - 1.0) > 1e-8:
            raise ProfileError(
                "profile must close the disc with unit slope, got {:.12g}".format(slope))
        eps = 1e-9 * self.t_plateau
        checkpoints = list(self.grid)
        checkpoints += [self.t_plateau - eps, self.t_plateau + eps]
        worst = max(self.second_derivative(t) for t in checkpoints)
        if worst > 1e-9:
            raise ProfileError(
                "profile must be concave, found f'' = {:.3g}".format(worst))
        for t in checkpoints:
            if t >= self.t_plateau:
                if abs(self.value(t) - self.plateau) > 1e-12 \
                        or abs(self.derivative(t)) > 1e-12:
                    raise ProfileError("profile must be constant past the plateau")
            elif t > 0.0 and self.value(t) <= 0.0:
                raise ProfileError("profile must stay positive before the plateau")

    # -- export -------------------------------------------------------------

    def export_csv(self, path, ts=None):
        """Write (t, f, orbit_factor) rows; needs attached gluing data."""
        if self.glue is None:
            raise ParameterError("profile has no gluing data attached")
        ts, fs = self.sample(ts)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "f", "orbit_factor"])
            for t, f in zip(ts, fs):
                factor = float(orbit_metric_factor(self, t))
                writer.writerow(["{:.17g}".format(t), "{:.17g}".format(f),
                                 "{:.17g}".format(factor)])


def orbit_metric_factor(profile, t, params=None):
    """Relative scale the quotient puts on the gluing-circle direction at
    radius t: f(t)^2 a / (f(t)^2 + a r^2).

    Climbs from 0 at the origin to exactly 1 when f^2 reaches the matching
    level, which is the boundary-matching identity that makes the two
    halves glue. Exact in rational arithmetic on the plateau when a, r are
    rational.
    """
    if params is None:
        params = profile.glue
    if params is None:
        raise ParameterError("no gluing parameters available")
    f2 = profile.value_sq(t)
    a, r = params.a, params.r
    return f2 * a / (f2 + a * r * r)


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""


@dataclass(frozen=True)
class GluingCertificate:
    passed: bool
    clauses: tuple

    def failed(self):
        return [c for c in self.clauses if not c.passed]

    def clause(self, name):
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


def nonneg_certificate(profile, metric, params=None, planes=10_000, seed=0):
    """Certify the ingredients of the nonnegatively curved disc gluing.

    Clauses, in order: the deformation scale sits in (1, 4/3]; the shrunk
    block is abelian; profile and metric agree on the scale; the profile
    plateau squares to the matching level; the profile's own shape
    invariants hold; the disc curvature -f''/f is nonnegative on the grid;
    the metric is a product past the plateau (f frozen); and a seeded
    random-plane scan of the deformed metric finds no curvature below
    -1e-9. Returns a certificate carrying every clause; passed means all
    clauses passed.
    """
    if params is None:
        params = profile.glue
    clauses = []
    a = metric.a

    in_window = 1.0 < a <= 4.0 / 3.0 + 1e-12
    clauses.append(ClauseResult(
        "deformation_range", in_window, a, 4.0 / 3.0,
        "need 1 < a <= 4/3"))

    abelian = metric.split.is_abelian()
    clauses.append(ClauseResult(
        "abelian_block", abelian, float(metric.split.dim_k), 0.0,
        "shrunk subalgebra must be abelian for nonnegativity at a > 1"))

    if params is not None:
        scale_gap = abs(float(params.a) - a)
        clauses.append(ClauseResult(
            "scale_match", scale_gap <= 1e-12, scale_gap, 1e-12,
            "profile and metric must use the same deformation scale"))
        if in_window:
            level = float(params.a) * float(params.r) ** 2 / (float(params.a) - 1.0)
            gap = abs(float(profile.value_sq(profile.t_plateau)) - level)
            clauses.append(ClauseResult(
                "plateau_match", gap <= 1e-8, gap, 1e-8,
                "plateau square must equal a r^2/(a-1)"))
        else:
            clauses.append(ClauseResult(
                "plateau_match", False, math.inf, 1e-8,
                "no finite matching level outside the window"))
    else:
        clauses.append(ClauseResult(
            "scale_match", False, math.inf, 1e-12, "no gluing parameters"))
        clauses.append(ClauseResult(
            "plateau_match", False, math.inf, 1e-8, "no gluing parameters"))

    try:
        profile.validate()
        shape_ok, shape_msg = True, ""
    except ProfileError as exc:
        shape_ok, shape_msg = False, str(exc)
    clauses.append(ClauseResult(
        "profile_shape", shape_ok, 0.0 if shape_ok else 1.0, 0.0, shape_msg))

    interior = [t for t in profile.grid if t > 0.0]
    try:
        min_curv = min(profile.disc_curvature(t) for t in interior)
    except ParameterError:
        min_curv = -math.inf
    clauses.append(ClauseResult(
        "disc_curvature", min_curv >= -1e-9, min_curv, -1e-9,
        "-f''/f on the grid"))

    tail = [t for t in profile.grid if t >= profile.t_plateau]
    tail_gap = max([abs(profile.value(t) - profile.plateau) for t in tail]
                   + [abs(profile.derivative(t)) for t in tail], default=math.inf)
    clauses.append(ClauseResult(
        "product_near_boundary", tail_gap <= 1e-12, tail_gap, 1e-12,
        "profile frozen past the plateau"))

    scan = scan_min_sectional(metric, n_planes=planes, seed=seed)
    clauses.append(ClauseResult(
        "metric_nonneg", scan.min_value >= -1e-9, scan.min_value, -1e-9,
        "seeded random-plane minimum over {} planes".format(planes)))

    return GluingCertificate(passed=all(c.passed for c in clauses),
                             clauses=tuple(clauses))


@dataclass(frozen=True)
class GluingRule:
    codimension: int
    strategy: str
    needs_deformation: bool
    description: str


def codim_one_rule(codimension):
    """Which gluing strategy a nonprincipal orbit of the given codimension
    admits: codimension 1 glues with the undeformed metric (interval
    normal slice, nothing to match), codimension 2 is the deformed-disc
    construction certified by nonneg_certificate, higher codimension has
    no general recipe here."""
    if not isinstance(codimension, int) or isinstance(codimension, bool):
        raise ParameterError("codimension must be an integer")
    if codimension < 1:
        raise ParameterError("codimension must be at least 1")
    if codimension == 1:
        return GluingRule(1, "bi_invariant", False,
                          "normal slice is an interval; the undeformed "
                          "product metric already matches (a = 1)")
    if codimension == 2:
        return GluingRule(2, "deformed_disc", True,
                          "shrink the gluing circle (1 < a <= 4/3) and cap "
                          "the profile at the matching level")
    return GluingRule(codimension, "out_of_scope", False,
                      "no general nonnegative gluing recipe for normal "
                      "spheres of dimension >= 2")
