"""
Module for classes that track pipeline results in a database.
"""
from .tables import *
from .results_db import *
