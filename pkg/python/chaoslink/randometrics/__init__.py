"""
Module for evaluating ciphertext randomness and reconstruction quality: bit sequences, the
randomness test suite and image statistics.
"""
from .bit_sequence import *
from .nist_tests import *
from .image_metrics import *
