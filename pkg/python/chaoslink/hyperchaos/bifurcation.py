import collections
from concurrent.futures import ThreadPoolExecutor
import logging
import math

import numpy

from chaoslink.hyperchaos.integrator import IntegratorConfig, advance, generate_trajectory
from chaoslink.hyperchaos.system import STATE_NAMES, SystemParams, UNIT_STATE
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import (ConfigurationError, DEFAULT_BIFURCATION_RECORD,
                                 DEFAULT_BIFURCATION_TRANSIENT, DivergenceError)

__all__ = ["BifurcationScan", "bifurcation_scan", "local_maxima"]

log = logging.getLogger("hyperchaos.bifurcation")

BifurcationScan = collections.namedtuple("BifurcationScan", "parameter grid maxima diverged observable")
"""Local maxima of one state variable over a parameter grid.

Attributes
----------
parameter : str
    The swept system coefficient.
grid : numpy.ndarray
    The strictly increasing parameter values.
maxima : list[numpy.ndarray]
    The recorded local maxima for every grid value, empty where the run diverged.
diverged : list[bool]
    Whether the integration diverged at each grid value.
observable : str
    The state variable whose maxima are recorded.
"""

def local_maxima(series):
    """Find the samples strictly greater than both neighbors.

    Parameters
    ----------
    series : numpy.ndarray
        A 1-D sequence of samples.

    Returns
    -------
    numpy.ndarray
        The maxima in time order.
    """
    series = numpy.asarray(series, dtype=float)
    if series.size < 3:
        return numpy.empty(0)
    inner = series[1:-1]
    return inner[(inner > series[:-2]) & (inner > series[2:])]

def _scan_point(params, init, cfg, transient, record, observable):
    start = advance(init, params, cfg, transient)
    trajectory = generate_trajectory(start, params, cfg, record)
    return local_maxima(trajectory[:, observable])

def bifurcation_scan(param_name, grid, init=UNIT_STATE, params=None, cfg=None,
                     transient=DEFAULT_BIFURCATION_TRANSIENT, record=DEFAULT_BIFURCATION_RECORD,
                     observable="x1", workers=1):
    """Sweep one system coefficient and record the local maxima of a state variable.

    Parameters
    ----------
    param_name : str
        The coefficient to sweep, one of a, b, c, d, e, r, g.
    grid : sequence of float
        The strictly increasing parameter values.
    init : ChaoticState, optional
        The initial condition at every grid value.
    params : SystemParams, optional
        The values of the coefficients not being swept.
    cfg : IntegratorConfig, optional
        The integration settings.
    transient : int
        Steps discarded at every grid value.
    record : int
        Steps searched for maxima at every grid value.
    observable : str, optional
        The state variable to record, x1 by default.
    workers : int, optional
        Threads used across grid values. Results keep grid order.

    Returns
    -------
    BifurcationScan
    """
    params = params if params is not None else SystemParams()
    cfg = cfg if cfg is not None else IntegratorConfig()
    if param_name not in SystemParams._fields:
        raise ConfigurationError("Unknown system parameter: {}. Choices are {}.".format(
                                 param_name, ", ".join(SystemParams._fields)))
    if observable not in STATE_NAMES:
        raise ConfigurationError("Unknown observable {}. Choices are {}.".format(observable,
                                                                               ", ".join(STATE_NAMES)))
    grid = numpy.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ConfigurationError("Bifurcation grid must be a non-empty sequence")
    if not all(math.isfinite(v) for v in grid) or numpy.any(numpy.diff(grid) <= 0):
        raise ConfigurationError("Bifurcation grid must be finite and strictly increasing")
    if record < 1 or transient < 0:
        raise ConfigurationError("Need record >= 1 and transient >= 0, got record={} transient={}".format(
                                 record, transient))
    index = STATE_NAMES.index(observable)

    def run(value):
        try:
            maxima = _scan_point(params.with_value(param_name, value), init, cfg, transient, record, index)
        except DivergenceError as err:
            log.warning("{}={}: {}".format(param_name, value, err))
            return numpy.empty(0), True
        log.log(LoggingLevel.EXTENSIVE.value, "{}={}: {} maxima".format(param_name, value, maxima.size))
        return maxima, False

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run, grid))
    else:
        results = [run(value) for value in grid]

    log.info("Bifurcation scan over {} with {} grid values, {} diverged".format(
             param_name, grid.size, sum(1 for _, d in results if d)))
    return BifurcationScan(param_name, grid, [m for m, _ in results], [d for _, d in results], observable)
