"""
Package containing code for encrypting grayscale images with a 6-D hyperchaotic cipher, sending
them over a simulated OFDM baseband link and evaluating the results.
"""
from .version import *
