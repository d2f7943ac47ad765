"""
Module for the OFDM baseband modem: constellation mapping, OFDM symbols, the AWGN channel and
bit error rate measurement.
"""
from .constellation import *
from .ofdm import *
from .channel import *
from .theory import *
from .link import *
