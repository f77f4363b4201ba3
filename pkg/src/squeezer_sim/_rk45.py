"""Embedded Dormand-Prince 4(5) stepper with a hard step-size cap.

The cap matters here: the lower-level decay k2 is routinely the fastest
rate in the flow, and an explicit method has to resolve it for both
stability and accuracy.  The scheme is FSAL, so the derivative at every
accepted state comes for free, which is what makes a per-step stall
check (used by settling) essentially costless.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonFiniteState, StepUnderflow

_A2 = np.array([1.0 / 5.0])
_A3 = np.array([3.0 / 40.0, 9.0 / 40.0])
_A4 = np.array([44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0])
_A5 = np.array([19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0,
                -212.0 / 729.0])
_A6 = np.array([9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0,
                49.0 / 176.0, -5103.0 / 18656.0])
# Fifth-order weights; the last stage argument is the solution (FSAL).
_B = np.array([35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0,
               -2187.0 / 6784.0, 11.0 / 84.0])
# Difference against the embedded fourth-order weights.
_E = np.array([35.0 / 384.0 - 5179.0 / 57600.0, 0.0,
               500.0 / 1113.0 - 7571.0 / 16695.0,
               125.0 / 192.0 - 393.0 / 640.0,
               -2187.0 / 6784.0 + 92097.0 / 339200.0,
               11.0 / 84.0 - 187.0 / 2100.0, -1.0 / 40.0])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
_MAX_CONSECUTIVE_REJECTS = 60


def rk45(f, y0, t_end: float, rtol: float, atol: float, max_step: float,
         record: bool = False, stall_rel: float | None = None,
         max_step_fn=None):
    """Integrate dy/dt = f(y) from 0 to t_end.

    When `stall_rel` is given, stops early once the derivative norm at an
    accepted state falls below stall_rel times the state norm.
    `max_step_fn(y)` may supply an additional state-dependent step cap;
    without one, error control alone leaves the step chattering at the
    stability boundary, which floors the derivative norm at the
    tolerance scale and defeats stall detection.  Returns a dict with
    the final (t, y), optional recorded path, a `stalled` flag and step
    diagnostics.
    """
    y = np.asarray(y0, float).copy()
    n = len(y)
    t = 0.0
    k = np.empty((7, n))
    k[0] = f(y)
    nfev = 1
    naccept = nreject = 0
    ts, ys = [0.0], [y.copy()]

    def _norm(v):
        return math.sqrt(float(v @ v))

    cap = max_step if max_step_fn is None else min(max_step, max_step_fn(y))
    fnorm = _norm(k[0])
    scale0 = atol + rtol * _norm(y)
    h = cap if fnorm == 0.0 else min(cap, 0.01 * scale0 / fnorm)
    h = min(h, t_end)

    stalled = bool(stall_rel is not None and fnorm < stall_rel * _norm(y))

    inv_n = 1.0 / n
    rejects = 0
    while t < t_end and not stalled:
        h = min(h, cap, t_end - t)
        if h < 1e-16 * t_end:
            raise StepUnderflow(f"step {h!r} underflowed at t = {t!r}")
        k[1] = f(y + h * (_A2 @ k[:1]))
        k[2] = f(y + h * (_A3 @ k[:2]))
        k[3] = f(y + h * (_A4 @ k[:3]))
        k[4] = f(y + h * (_A5 @ k[:4]))
        k[5] = f(y + h * (_A6 @ k[:5]))
        y_new = y + h * (_B @ k[:6])
        k[6] = f(y_new)
        nfev += 6
        err = h * (_E @ k)
        scale = atol + rtol * np.abs(y_new)
        q = err / scale
        err_norm = math.sqrt(float(q @ q) * inv_n)
        if not math.isfinite(err_norm):
            rejects += 1
            nreject += 1
            if rejects > _MAX_CONSECUTIVE_REJECTS:
                raise NonFiniteState(f"state diverged near t = {t!r}")
            h *= _MIN_FACTOR
            continue
        if err_norm <= 1.0:
            t += h
            y = y_new
            k[0] = k[6]
            naccept += 1
            rejects = 0
            if record:
                ts.append(t)
                ys.append(y.copy())
            if stall_rel is not None and _norm(k[0]) < stall_rel * _norm(y):
                stalled = True
            if max_step_fn is not None:
                cap = min(max_step, max_step_fn(y))
            factor = _MAX_FACTOR if err_norm == 0.0 else min(
                _MAX_FACTOR, _SAFETY * err_norm ** -0.2)
            h *= factor
        else:
            rejects += 1
            nreject += 1
            if rejects > _MAX_CONSECUTIVE_REJECTS:
                raise StepUnderflow(f"repeated step rejections at t = {t!r}")
            h *= max(_MIN_FACTOR, _SAFETY * err_norm ** -0.2)

    if not np.all(np.isfinite(y)):
        raise NonFiniteState("integration produced non-finite state values")
    return {
        "t": t,
        "y": y,
        "ts": np.array(ts) if record else None,
        "ys": np.array(ys) if record else None,
        "stalled": stalled,
        "nfev": nfev,
        "n_accepted": naccept,
        "n_rejected": nreject,
    }
