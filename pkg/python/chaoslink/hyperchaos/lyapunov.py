import collections
import logging
import math

import numpy
import scipy.linalg

from chaoslink.hyperchaos.integrator import IntegratorConfig, rk4_step
from chaoslink.hyperchaos.system import HyperchaoticSystem, UNIT_STATE, as_state
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import (ConfigurationError, DEFAULT_LYAPUNOV_INTERVAL, DEFAULT_LYAPUNOV_TOTAL,
                                 DEFAULT_LYAPUNOV_TRANSIENT, DivergenceError)

__all__ = ["LyapunovReport", "lyapunov_spectrum", "tangent_spectrum"]

log = logging.getLogger("hyperchaos.lyapunov")

LyapunovReport = collections.namedtuple("LyapunovReport", "exponents transient_steps total_steps history")
"""Result of a Lyapunov spectrum run.

Attributes
----------
exponents : numpy.ndarray
    The six exponents, sorted descending.
transient_steps : int
    Steps integrated before the tangent frame started.
total_steps : int
    All integrated steps, transient included.
history : numpy.ndarray or None
    Rows of (time, l1, ..., l6) holding running estimates, when requested.
"""

def _check_counts(transient, total, interval):
    if interval < 1:
        raise ConfigurationError("Re-orthonormalization interval must be at least 1, got {}".format(interval))
    if transient < 0 or total <= transient:
        raise ConfigurationError("Need total > transient >= 0, got total={} transient={}".format(total,
                                                                                            transient))
    if total - transient < 10 * interval:
        raise ConfigurationError("Need at least {} measured steps, got {}".format(10 * interval,
                                                                                total - transient))

def tangent_spectrum(system, init, cfg=None, transient=DEFAULT_LYAPUNOV_TRANSIENT,
                     total=DEFAULT_LYAPUNOV_TOTAL, interval=DEFAULT_LYAPUNOV_INTERVAL, history_stride=None):
    """Compute the Lyapunov spectrum of any system with a vector field and Jacobian.

    The state and a 6x6 perturbation frame are advanced together with RK4, the frame
    following the linearized flow. Every ``interval`` steps the frame is QR factorized,
    the logarithms of the stretch factors on the diagonal of R are accumulated and the
    frame is replaced by Q.

    Parameters
    ----------
    system : object
        Provides ``vector_field(x)`` and ``jacobian(x)``.
    init : ChaoticState
        The initial condition.
    cfg : IntegratorConfig, optional
        The integration settings.
    transient : int
        Steps integrated before the frame is started.
    total : int
        All steps to integrate, transient included.
    interval : int
        Steps between re-orthonormalizations.
    history_stride : int, optional
        Keep the running estimates every ``history_stride`` re-orthonormalizations.

    Returns
    -------
    LyapunovReport
    """
    _check_counts(transient, total, interval)
    cfg = cfg if cfg is not None else IntegratorConfig()
    h = cfg.step_size
    hh = 0.5 * h
    h6 = h / 6.0
    f = system.vector_field
    jac = system.jacobian

    x = tuple(as_state(init))
    for i in range(1, transient + 1):
        x = rk4_step(f, x, h)
        if not math.isfinite(sum(x)):
            raise DivergenceError(i, "during the Lyapunov transient")
    log.log(LoggingLevel.EXTENSIVE.value, "Transient of {} steps done, state {}".format(transient, x))

    frame = numpy.eye(6)
    log_stretch = numpy.zeros(6)
    history = []
    n_measured = total - transient
    n_reorth = 0
    for i in range(1, n_measured + 1):
        k1 = f(x)
        m1 = jac(x).dot(frame)
        x2 = tuple(xi + hh * ki for xi, ki in zip(x, k1))
        k2 = f(x2)
        m2 = jac(x2).dot(frame + hh * m1)
        x3 = tuple(xi + hh * ki for xi, ki in zip(x, k2))
        k3 = f(x3)
        m3 = jac(x3).dot(frame + hh * m2)
        x4 = tuple(xi + h * ki for xi, ki in zip(x, k3))
        k4 = f(x4)
        m4 = jac(x4).dot(frame + h * m3)
        x = tuple(xi + h6 * (a + 2.0 * b + 2.0 * c + d) for xi, a, b, c, d in zip(x, k1, k2, k3, k4))
        frame = frame + h6 * (m1 + 2.0 * m2 + 2.0 * m3 + m4)
        if not math.isfinite(sum(x)):
            raise DivergenceError(transient + i, "during the Lyapunov measurement")

        if i % interval == 0 or i == n_measured:
            q, r = scipy.linalg.qr(frame)
            log_stretch += numpy.log(numpy.abs(numpy.diag(r)))
            frame = q
            n_reorth += 1
            if history_stride is not None and n_reorth % history_stride == 0:
                elapsed = i * h
                history.append(numpy.concatenate(([elapsed], log_stretch / elapsed)))

    exponents = numpy.sort(log_stretch / (n_measured * h))[::-1]
    log.debug("Lyapunov exponents: {}".format(exponents))
    return LyapunovReport(exponents, transient, total, numpy.array(history) if history_stride is not None
                          else None)

def lyapunov_spectrum(init=UNIT_STATE, params=None, cfg=None, transient=DEFAULT_LYAPUNOV_TRANSIENT,
                      total=DEFAULT_LYAPUNOV_TOTAL, interval=DEFAULT_LYAPUNOV_INTERVAL, history_stride=None):
    """Compute the Lyapunov spectrum of the hyperchaotic system.

    Parameters
    ----------
    init : ChaoticState, optional
        The initial condition, (1, 1, 1, 1, 1, 1) by default.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings.
    transient : int
        Steps integrated before the measurement.
    total : int
        All steps to integrate, transient included.
    interval : int
        Steps between re-orthonormalizations.
    history_stride : int, optional
        Keep running estimates every ``history_stride`` re-orthonormalizations.

    Returns
    -------
    LyapunovReport
    """
    return tangent_spectrum(HyperchaoticSystem(params), init, cfg, transient, total, interval,
                            history_stride)
