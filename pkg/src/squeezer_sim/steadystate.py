"""Steady states, pump regimes, thresholds and second-harmonic power.

The pump axis splits into three regions:

  i.   below laser threshold, both fundamental fields dark;
  ii.  lasing, the orthogonally polarized mode still dark;
  iii. both polarizations excited ("oscillation" of the orthogonal mode).

Region ii has a closed form built on a quadratic for sigma3.  Region iii
clamps the inversion at sigma3 - sigma2 = 2(gamma_par + gamma_orth)/G,
which yields an algebraic seed that a damped Newton solve then polishes
against the full five-equation fixed point (with an ODE-settling
fallback).  Thresholds are located by sign-change bracketing with a
doubling upper bound, favouring robustness over speed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import model
from .errors import (
    NegativeDiscriminant,
    RootFindFailure,
    Unreachable,
    WrongRegime,
)
from .params import ModelParams, as_pump

__all__ = [
    "Regime",
    "SteadyState",
    "sigma3_quadratic",
    "steady_state",
    "classify_regime",
    "regime_thresholds",
    "laser_threshold",
    "orth_threshold_intensity",
    "orth_threshold_pump",
    "sh_power",
    "laser_only_branch",
    "zero_field_populations",
]

_MAX_DOUBLINGS = 60
_BOUND_SLACK = 1e-9  # tolerance on population bounds for float dust


class Regime(enum.Enum):
    """Pump region tag; labels follow the i/ii/iii numbering."""

    BelowLaser = "i"
    LaserOnly = "ii"
    OrthExcited = "iii"

    @property
    def label(self) -> str:
        return self.value


@dataclass(frozen=True)
class SteadyState:
    """Scaled populations and intensities of a settled operating point."""

    sigma1: float
    sigma2: float
    sigma3: float
    i_par: float
    i_orth: float
    regime: Regime

    def __post_init__(self):
        total = self.sigma1 + self.sigma2 + self.sigma3
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"populations sum to {total!r}, not 1")
        for name in ("sigma1", "sigma2", "sigma3"):
            v = getattr(self, name)
            if not -_BOUND_SLACK <= v <= 1.0 + _BOUND_SLACK:
                raise ValueError(f"{name}={v!r} outside [0, 1]")
        if self.i_par < 0 or self.i_orth < 0:
            raise ValueError("intensities must be >= 0")
        if self.regime is Regime.BelowLaser and (self.i_par != 0 or self.i_orth != 0):
            raise ValueError("below-laser state must have dark fields")
        if self.regime is Regime.LaserOnly and (self.i_orth != 0 or self.i_par <= 0):
            raise ValueError("laser-only state needs i_par > 0, i_orth = 0")
        if self.regime is Regime.OrthExcited and self.i_orth <= 0:
            raise ValueError("orth-excited state needs i_orth > 0")

    @property
    def a_par(self) -> float:
        return math.sqrt(self.i_par)

    @property
    def a_orth(self) -> float:
        return math.sqrt(self.i_orth)

    def state_vector(self) -> np.ndarray:
        return np.array([self.a_par, self.a_orth,
                         self.sigma1, self.sigma2, self.sigma3])


@dataclass(frozen=True)
class Sigma3Quadratic:
    """Coefficients of the sigma3 quadratic and its physical root."""

    a_coef: float
    b_coef: float
    c_coef: float
    sigma3: float


def zero_field_populations(params: ModelParams, pump) -> tuple[float, float, float]:
    """Population balance with both fields dark.

    k2 s2 = Gamma s1 and k3 s3 = k2 s2, normalized to unit sum, so
    s2 = (k3/k2) s3 and s1 = (k3/Gamma) s3.
    """
    g = as_pump(pump)
    if g == 0.0:
        return 1.0, 0.0, 0.0
    r = params.decay_k3 / params.decay_k2
    s3 = 1.0 / (1.0 + r + params.decay_k3 / g)
    s2 = r * s3
    s1 = 1.0 - s2 - s3
    return s1, s2, s3


def _small_signal_gain(params: ModelParams, pump: float) -> float:
    _, s2, s3 = zero_field_populations(params, pump)
    return 0.5 * params.stim_rate_G * (s3 - s2)


def sigma3_quadratic(params: ModelParams, pump) -> Sigma3Quadratic:
    """Lasing-branch quadratic a*s3^2 + b*s3 + c = 0 and its "+sqrt" root.

    With f = Gamma/(Gamma + k2):

        a = (G^2 / 2 mu) (1 + f)^2
        b = k3 + k2 f - G (1 + f) (G f / mu + gamma_par / mu)
        c = G f (G f / 2 mu + gamma_par / mu) - k2 f

    The root is evaluated in the cancellation-free form (2c over
    -b - sqrt(disc) when b > 0).
    """
    g = as_pump(pump)
    G = params.stim_rate_G
    mu = params.nl_coupling_mu
    k2, k3 = params.decay_k2, params.decay_k3
    gpar = params.gamma_par
    f = g / (g + k2)
    a = (G * G / (2.0 * mu)) * (1.0 + f) ** 2
    b = k3 + k2 * f - G * (1.0 + f) * (G * f / mu + gpar / mu)
    c = G * f * (G * f / (2.0 * mu) + gpar / mu) - k2 * f
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        raise NegativeDiscriminant(
            f"sigma3 quadratic has no real root at pump {g!r}")
    sq = math.sqrt(disc)
    if b <= 0.0:
        s3 = (-b + sq) / (2.0 * a)
    else:
        s3 = (2.0 * c) / (-b - sq)
    return Sigma3Quadratic(a_coef=a, b_coef=b, c_coef=c, sigma3=s3)


def laser_only_branch(params: ModelParams, pump) -> SteadyState:
    """Analytic lasing branch with the orthogonal mode dark.

    Valid as algebra for any pump on which the quadratic has a physical
    root; no regime gating beyond rejecting roots with populations
    outside [0, 1] or non-positive intensity.  Callers that need the
    branch only where it is the realized steady state should go through
    steady_state instead.
    """
    g = as_pump(pump)
    s3 = sigma3_quadratic(params, g).sigma3
    f = g / (g + params.decay_k2)
    s2 = f * (1.0 - s3)
    s1 = 1.0 - s2 - s3
    inv = s3 - s2
    i_par = (params.stim_rate_G * inv - 2.0 * params.gamma_par) / (
        2.0 * params.nl_coupling_mu)
    if i_par <= 0.0:
        raise WrongRegime(
            f"lasing branch has i_par <= 0 at pump {g!r} (below threshold)")
    for name, v in (("sigma1", s1), ("sigma2", s2), ("sigma3", s3)):
        if not -_BOUND_SLACK <= v <= 1.0 + _BOUND_SLACK:
            raise WrongRegime(f"lasing branch root gives {name}={v!r}")
    return SteadyState(sigma1=s1, sigma2=s2, sigma3=s3,
                       i_par=i_par, i_orth=0.0, regime=Regime.LaserOnly)


def _bracket_and_bisect(fn, hi0: float, what: str) -> float:
    """Root of fn on [0, hi], doubling hi until a sign change shows up.

    fn must be negative at 0+.  Raises Unreachable after 60 doublings
    without a sign change.
    """
    hi = hi0
    for _ in range(_MAX_DOUBLINGS):
        if fn(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise Unreachable(f"{what}: no sign change up to pump {hi!r}")
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if fn(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def laser_threshold(params: ModelParams) -> float:
    """Pump rate where small-signal gain equals the parallel-mode loss.

    Solves (G/2)(s3 - s2) = gamma_par with zero-field populations by
    bracketed bisection.  Raises Unreachable when the saturated gain
    (G/2)(1 - r)/(1 + r), r = k3/k2, never reaches the loss.
    """
    gpar = params.gamma_par
    r = params.decay_k3 / params.decay_k2
    gain_sup = 0.5 * params.stim_rate_G * (1.0 - r) / (1.0 + r)
    if gain_sup <= gpar:
        raise Unreachable(
            "small-signal gain cannot reach the parallel-mode loss: "
            f"sup gain {gain_sup!r} <= gamma_par {gpar!r}")
    return _bracket_and_bisect(
        lambda g: _small_signal_gain(params, g) - gpar,
        hi0=params.decay_k3, what="laser threshold")


def orth_threshold_intensity(params: ModelParams) -> float:
    """Parallel intensity gamma_orth/mu at which the orthogonal mode oscillates."""
    return params.gamma_orth / params.nl_coupling_mu


def laser_branch_intensity(params: ModelParams, pump: float) -> float:
    """i_par on the lasing branch, clamped to 0 below threshold."""
    try:
        q = sigma3_quadratic(params, pump)
    except NegativeDiscriminant:
        return 0.0
    f = pump / (pump + params.decay_k2)
    inv = (1.0 + f) * q.sigma3 - f
    i_par = (params.stim_rate_G * inv - 2.0 * params.gamma_par) / (
        2.0 * params.nl_coupling_mu)
    return max(i_par, 0.0)


def orth_threshold_pump(params: ModelParams) -> float:
    """Pump rate at which the lasing-branch intensity reaches gamma_orth/mu."""
    target = orth_threshold_intensity(params)
    start = laser_threshold(params)  # may raise Unreachable
    fn = lambda g: laser_branch_intensity(params, g) - target
    hi = max(start, params.decay_k3) * 2.0
    for _ in range(_MAX_DOUBLINGS):
        if fn(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise Unreachable(
            f"lasing intensity saturates below gamma_orth/mu = {target!r}")
    lo = start
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if fn(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def regime_thresholds(params: ModelParams) -> tuple[float, float]:
    """Both threshold pumps, with unreachable ones mapped to +inf."""
    try:
        g_laser = laser_threshold(params)
    except Unreachable:
        return math.inf, math.inf
    try:
        g_orth = orth_threshold_pump(params)
    except Unreachable:
        g_orth = math.inf
    return g_laser, g_orth


def classify_regime(params: ModelParams, pump,
                    thresholds: tuple[float, float] | None = None) -> Regime:
    """Region of the pump axis; unreachable thresholds count as infinite.

    `thresholds` takes precomputed (laser, orth) threshold pumps so that
    sweeps do not re-solve them per grid point.
    """
    g = as_pump(pump)
    g_laser, g_orth = thresholds if thresholds is not None \
        else regime_thresholds(params)
    if g < g_laser:
        return Regime.BelowLaser
    return Regime.LaserOnly if g < g_orth else Regime.OrthExcited


def _regime3_seed(params: ModelParams, pump: float) -> tuple[float, ...]:
    """Algebraic reduction of the region-iii fixed point.

    Both field equations clamp: mu (i_par - i_orth) = gamma_orth and
    (G/2)(s3 - s2) = gamma_par + gamma_orth, so the populations follow
    from the s1 balance plus normalization and the s2 balance hands back
    i_par.
    """
    G = params.stim_rate_G
    k2, k3 = params.decay_k2, params.decay_k3
    D = 2.0 * (params.gamma_par + params.gamma_orth) / G
    s2 = pump * (1.0 - D) / (k2 + 2.0 * pump)
    s3 = s2 + D
    s1 = 1.0 - s2 - s3
    i_par = (k2 * s2 - k3 * s3) / (G * D)
    i_orth = i_par - params.gamma_orth / params.nl_coupling_mu
    return s1, s2, s3, i_par, i_orth


def _newton_polish(params: ModelParams, pump: float, y0: np.ndarray,
                   max_iter: int = 50) -> np.ndarray:
    """Damped Newton on the fixed-point system with unit population sum.

    The fifth rate equation is linearly dependent on the other two
    population rates, so it is replaced by the normalization constraint
    to give a full-rank system.  Rows are rescaled by their natural
    magnitudes before solving.
    """
    y = y0.astype(float).copy()

    def residual(yv):
        f = model.rhs(yv, params, pump)
        scales = model.rate_scales(yv, params, pump)
        res = np.empty(5)
        res[:4] = f[:4]
        res[4] = yv[2] + yv[3] + yv[4] - 1.0
        sc = np.empty(5)
        sc[:4] = scales[:4]
        sc[4] = 1.0
        return res, sc

    res, sc = residual(y)
    for _ in range(max_iter):
        if np.all(np.abs(res) <= 1e-12 * sc):
            return y
        J = model.jacobian(y, params, pump)
        A = np.empty((5, 5))
        A[:4] = J[:4] / sc[:4, None]
        A[4] = [0.0, 0.0, 1.0, 1.0, 1.0]
        try:
            step = np.linalg.solve(A, -res / sc)
        except np.linalg.LinAlgError as exc:
            raise RootFindFailure(f"Newton linear solve failed: {exc}") from exc
        norm0 = np.linalg.norm(res / sc)
        alpha = 1.0
        for _ in range(30):
            y_try = y + alpha * step
            res_try, sc_try = residual(y_try)
            if np.linalg.norm(res_try / sc_try) < norm0:
                y, res, sc = y_try, res_try, sc_try
                break
            alpha *= 0.5
        else:
            raise RootFindFailure("Newton line search stalled")
    if np.all(np.abs(res) <= 1e-10 * sc):
        return y
    raise RootFindFailure("Newton did not converge in region iii")


def _regime3_state(params: ModelParams, pump: float) -> SteadyState:
    s1, s2, s3, i_par, i_orth = _regime3_seed(params, pump)
    if i_orth <= 0.0:
        # Boundary dust: the pump sits numerically at the instability
        # point, where the lasing branch is still the steady state.
        return laser_only_branch(params, pump)
    y0 = np.array([math.sqrt(max(i_par, 0.0)), math.sqrt(i_orth), s1, s2, s3])
    try:
        y = _newton_polish(params, pump, y0)
    except RootFindFailure:
        from .dynamics import settle  # fallback oracle, imported lazily
        return settle(params, pump)
    a, b = y[0], y[1]
    return SteadyState(sigma1=y[2], sigma2=y[3], sigma3=y[4],
                       i_par=a * a, i_orth=b * b, regime=Regime.OrthExcited)


def steady_state(params: ModelParams, pump,
                 thresholds: tuple[float, float] | None = None) -> SteadyState:
    """Realized steady state at this pump, tagged with its regime."""
    g = as_pump(pump)
    regime = classify_regime(params, g, thresholds)
    if regime is Regime.BelowLaser:
        s1, s2, s3 = zero_field_populations(params, g)
        return SteadyState(sigma1=s1, sigma2=s2, sigma3=s3,
                           i_par=0.0, i_orth=0.0, regime=Regime.BelowLaser)
    if regime is Regime.LaserOnly:
        return laser_only_branch(params, g)
    return _regime3_state(params, g)


def sh_power(params: ModelParams, ss: SteadyState) -> float:
    """Scaled second-harmonic photon flux mu (i_par - i_orth)^2.

    This is the conversion flux implied by the -mu a_par (a_par^2 -
    a_orth^2) loss term.  In region iii the difference clamps at
    gamma_orth/mu, so the flux plateaus at gamma_orth^2/mu no matter how
    hard the laser is pumped.
    """
    diff = ss.i_par - ss.i_orth
    return params.nl_coupling_mu * diff * diff
