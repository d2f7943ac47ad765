import collections
import math

import numpy

from chaoslink.utilities import ConfigurationError, InvalidStateError

__all__ = ["ChaoticState", "HyperchaoticSystem", "LinearSystem", "PRINTED_X5_COUPLING", "STATE_NAMES",
           "SystemParams", "UNIT_STATE", "derivative", "jacobian"]

STATE_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6")

PRINTED_X5_COUPLING = 1.0
"""Gain of x5 in the first equation as usually printed. That orientation is unbounded from
(1, 1, 1, 1, 1, 1) at the default coefficients."""

class SystemParams(collections.namedtuple("SystemParams", "a b c d e r g")):
    """Coefficients of the 6-D hyperchaotic system.

    The system is

        x1' = a(x2 - x1) + x4 + g x5 - x6
        x2' = c x1 - x2 - x1 x3
        x3' = -b x3 + x1 x2
        x4' = d x4 - x2 x3
        x5' = e x6 + x3 x2
        x6' = r x1

    Attributes
    ----------
    a, b, c, d, e, r : float
        The system coefficients.
    g : float
        The gain of x5 in the first equation. The default of -1 keeps the attractor bounded.
    """
    __slots__ = ()

    def __new__(cls, a=10.0, b=8.0 / 3.0, c=28.0, d=-1.0, e=8.0, r=3.0, g=-1.0):
        values = [float(v) for v in (a, b, c, d, e, r, g)]
        for name, value in zip(cls._fields, values):
            if not math.isfinite(value):
                raise ConfigurationError("System coefficient {} must be finite, got {}".format(name, value))
        return super(SystemParams, cls).__new__(cls, *values)

    @property
    def divergence(self):
        """float: Trace of the Jacobian, the same at every state.
        """
        return -self.a - 1.0 - self.b + self.d

    def with_value(self, name, value):
        """Copy the coefficients with one of them replaced.

        Parameters
        ----------
        name : str
            The coefficient to replace.
        value : float
            The new coefficient value.

        Returns
        -------
        SystemParams
        """
        if name not in self._fields:
            raise ConfigurationError("Unknown system parameter: {}. Choices are {}.".format(
                                     name, ", ".join(self._fields)))
        values = self._asdict()
        values[name] = value
        return SystemParams(**values)

class ChaoticState(collections.namedtuple("ChaoticState", STATE_NAMES)):
    """A point in the 6-D state space.
    """
    __slots__ = ()

    def is_finite(self):
        """Check that every component is finite.

        Returns
        -------
        bool
        """
        return all(math.isfinite(x) for x in self)

UNIT_STATE = ChaoticState(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)
"""Default initial condition for trajectories and diagnostics."""

def as_state(state):
    """Convert a 6-sequence into a ChaoticState, rejecting non-finite values.
    """
    if len(state) != 6:
        raise InvalidStateError("A state needs 6 components, got {}".format(len(state)))
    state = ChaoticState(*[float(x) for x in state])
    if not state.is_finite():
        raise InvalidStateError("State has non-finite components: {}".format(state))
    return state

class HyperchaoticSystem(object):
    """Vector field and Jacobian of the 6-D hyperchaotic system.

    Parameters
    ----------
    params : SystemParams, optional
        The system coefficients. The defaults are used when not given.
    """

    def __init__(self, params=None):
        self.params = params if params is not None else SystemParams()

    def vector_field(self, x):
        """Evaluate the time derivative without any checks.

        Parameters
        ----------
        x : tuple of float
            The six state components.

        Returns
        -------
        tuple of float
        """
        a, b, c, d, e, r, g = self.params
        x1, x2, x3, x4, x5, x6 = x
        return (a * (x2 - x1) + x4 + g * x5 - x6,
                c * x1 - x2 - x1 * x3,
                -b * x3 + x1 * x2,
                d * x4 - x2 * x3,
                e * x6 + x3 * x2,
                r * x1)

    def jacobian(self, x):
        """Evaluate the analytic Jacobian.

        Parameters
        ----------
        x : tuple of float
            The six state components.

        Returns
        -------
        numpy.ndarray
            The 6x6 matrix of partial derivatives.
        """
        p = self.params
        x1, x2, x3, _, _, _ = x
        return numpy.array([[-p.a, p.a, 0.0, 1.0, p.g, -1.0],
                            [p.c - x3, -1.0, -x1, 0.0, 0.0, 0.0],
                            [x2, x1, -p.b, 0.0, 0.0, 0.0],
                            [0.0, -x3, -x2, p.d, 0.0, 0.0],
                            [0.0, x3, x2, 0.0, 0.0, p.e],
                            [p.r, 0.0, 0.0, 0.0, 0.0, 0.0]])

class LinearSystem(object):
    """The linear system x' = A x.

    Parameters
    ----------
    matrix : array_like
        The 6x6 system matrix.
    """

    def __init__(self, matrix):
        self.matrix = numpy.array(matrix, dtype=float)
        if self.matrix.shape != (6, 6):
            raise ConfigurationError("Linear system matrix must be 6x6, got {}".format(self.matrix.shape))

    @classmethod
    def diagonal(cls, rates):
        """Build a decoupled system x_i' = rate_i x_i.

        Parameters
        ----------
        rates : sequence of float
            The six growth rates.

        Returns
        -------
        LinearSystem
        """
        return cls(numpy.diag(rates))

    def vector_field(self, x):
        return tuple(float(v) for v in self.matrix.dot(x))

    def jacobian(self, x):
        return self.matrix

def derivative(state, params=None):
    """Evaluate the time derivative of the hyperchaotic system.

    Parameters
    ----------
    state : ChaoticState
        The point to evaluate at.
    params : SystemParams, optional
        The system coefficients.

    Returns
    -------
    ChaoticState
        The derivative (x1', ..., x6').

    Raises
    ------
    InvalidStateError
        If the state has non-finite components.
    """
    state = as_state(state)
    return ChaoticState(*HyperchaoticSystem(params).vector_field(state))

def jacobian(state, params=None):
    """Evaluate the analytic Jacobian of the hyperchaotic system.

    Parameters
    ----------
    state : ChaoticState
        The point to evaluate at.
    params : SystemParams, optional
        The system coefficients.

    Returns
    -------
    numpy.ndarray
    """
    state = as_state(state)
    return HyperchaoticSystem(params).jacobian(state)
