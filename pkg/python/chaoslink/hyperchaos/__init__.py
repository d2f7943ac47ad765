"""
Module for integrating the 6-D hyperchaotic system and computing its dynamics diagnostics.
"""
from .system import *
from .integrator import *
from .lyapunov import *
from .bifurcation import *
