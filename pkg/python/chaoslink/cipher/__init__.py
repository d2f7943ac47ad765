"""
Module for the hyperchaotic permutation-diffusion image cipher.
"""
from .gray_image import *
from .key_bundle import *
from .key_schedule import *
from .permutation import *
from .q_matrix import *
from .engine import *
