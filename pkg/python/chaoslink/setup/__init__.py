"""
Module for helpers handling the setup of a pipeline run: logging, command-line parsing and the
program configuration file.
"""
from .log import *
from .parser import *
from .prog_config import *
