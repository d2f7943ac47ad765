import collections
import logging
import math

import numpy

from chaoslink.hyperchaos.system import ChaoticState, HyperchaoticSystem, as_state
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ConfigurationError, DEFAULT_STEP_SIZE, DivergenceError

__all__ = ["IntegratorConfig", "advance", "generate_trajectory", "integrate_step", "rk4_step"]

METHODS = ("rk4",)

log = logging.getLogger("hyperchaos.integrator")

class IntegratorConfig(collections.namedtuple("IntegratorConfig", "step_size method")):
    """Fixed-step integration settings.

    Attributes
    ----------
    step_size : float
        The time step h, strictly positive.
    method : str
        The integration scheme. Only classic fourth-order Runge-Kutta (rk4) is available.
    """
    __slots__ = ()

    def __new__(cls, step_size=DEFAULT_STEP_SIZE, method="rk4"):
        step_size = float(step_size)
        if not math.isfinite(step_size) or step_size <= 0.0:
            raise ConfigurationError("Integration step must be positive and finite, got {}".format(step_size))
        if method not in METHODS:
            raise ConfigurationError("Unknown integration method: {}".format(method))
        return super(IntegratorConfig, cls).__new__(cls, step_size, method)

def rk4_step(f, x, h):
    """Advance a state by one classic Runge-Kutta step.

    Parameters
    ----------
    f : callable
        The vector field, taking and returning a tuple of floats.
    x : tuple of float
        The current state.
    h : float
        The time step.

    Returns
    -------
    tuple of float
    """
    hh = 0.5 * h
    h6 = h / 6.0
    k1 = f(x)
    k2 = f([xi + hh * ki for xi, ki in zip(x, k1)])
    k3 = f([xi + hh * ki for xi, ki in zip(x, k2)])
    k4 = f([xi + h * ki for xi, ki in zip(x, k3)])
    return tuple([xi + h6 * (a + 2.0 * b + 2.0 * c + d) for xi, a, b, c, d in zip(x, k1, k2, k3, k4)])

def _is_finite(x):
    # inf - inf is nan, so checking the sum covers every component
    return math.isfinite(sum(x))

def _stepper(params, cfg):
    f = HyperchaoticSystem(params).vector_field
    h = cfg.step_size

    def step(x):
        return rk4_step(f, x, h)
    return step

def integrate_step(state, params=None, cfg=None):
    """Integrate the hyperchaotic system over one step.

    Parameters
    ----------
    state : ChaoticState
        The starting state.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings.

    Returns
    -------
    ChaoticState

    Raises
    ------
    DivergenceError
        If the step overflows, with step index 1.
    """
    cfg = cfg if cfg is not None else IntegratorConfig()
    x = _stepper(params, cfg)(as_state(state))
    if not _is_finite(x):
        raise DivergenceError(1)
    return ChaoticState(*x)

def advance(init, params=None, cfg=None, n_steps=1):
    """Integrate a number of steps and keep only the final state.

    Parameters
    ----------
    init : ChaoticState
        The starting state.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings.
    n_steps : int
        The number of steps, zero returns the initial state.

    Returns
    -------
    ChaoticState
    """
    if n_steps < 0:
        raise ConfigurationError("Number of steps cannot be negative, got {}".format(n_steps))
    cfg = cfg if cfg is not None else IntegratorConfig()
    step = _stepper(params, cfg)
    x = tuple(as_state(init))
    for i in range(1, n_steps + 1):
        x = step(x)
        if not _is_finite(x):
            raise DivergenceError(i)
    return ChaoticState(*x)

def generate_trajectory(init, params=None, cfg=None, n_steps=1):
    """Integrate the hyperchaotic system and keep every state.

    Parameters
    ----------
    init : ChaoticState
        The starting state, not included in the output.
    params : SystemParams, optional
        The system coefficients.
    cfg : IntegratorConfig, optional
        The integration settings.
    n_steps : int
        The number of steps, at least one.

    Returns
    -------
    numpy.ndarray
        An (n_steps, 6) array whose row k - 1 is the state after k steps.

    Raises
    ------
    DivergenceError
        With the 1-based index of the offending step.
    """
    if n_steps < 1:
        raise ConfigurationError("A trajectory needs at least one step, got {}".format(n_steps))
    cfg = cfg if cfg is not None else IntegratorConfig()
    step = _stepper(params, cfg)
    x = tuple(as_state(init))
    states = [None] * n_steps
    for i in range(n_steps):
        x = step(x)
        if not _is_finite(x):
            raise DivergenceError(i + 1)
        states[i] = x
    log.log(LoggingLevel.TRACE.value, "Generated {} steps, final state {}".format(n_steps, x))
    return numpy.array(states, dtype=float)
