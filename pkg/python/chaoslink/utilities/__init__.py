"""
Module for classes and methods that provide generic support not easily catagorized elsewhere.
"""
from .chaoslink_exceptions import *
from .constants import *
from .file_helpers import *
from .session_info import *
