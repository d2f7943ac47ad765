import math
import unittest

import numpy
import scipy.stats

from chaoslink.modem import ChannelModel, awgn, derive_seed
from chaoslink.utilities import ConfigurationError, DegenerateSignalError

class ChannelTest(unittest.TestCase):

    def setUp(self):
        self.signal = numpy.full(1000000, (1.0 + 1.0j) / math.sqrt(2.0))

    def test_model(self):
        channel = ChannelModel(10, 7)
        self.assertEqual(channel.kind, "awgn")
        self.assertEqual(channel.snr_db, 10.0)
        self.assertFalse(channel.noiseless)
        self.assertTrue(ChannelModel(math.inf, 7).noiseless)

    def test_bad_model(self):
        with self.assertRaises(ConfigurationError):
            ChannelModel(10, 7, kind="rayleigh")
        with self.assertRaises(ConfigurationError):
            ChannelModel(float("nan"), 7)
        with self.assertRaises(ConfigurationError):
            ChannelModel(-math.inf, 7)
        with self.assertRaises(ConfigurationError):
            ChannelModel(10, None)

    def test_noise_variance(self):
        noise = awgn(self.signal, ChannelModel(10, 1)) - self.signal
        variance = float(numpy.mean(numpy.abs(noise) ** 2))
        self.assertAlmostEqual(variance, 0.1, delta=0.001)
        self.assertAlmostEqual(float(numpy.var(noise.real)), 0.05, delta=0.0005)

    def test_noise_is_gaussian(self):
        noise = awgn(self.signal, ChannelModel(0, 2)) - self.signal
        self.assertAlmostEqual(scipy.stats.kurtosis(noise.real, fisher=False), 3.0, delta=0.05)
        self.assertAlmostEqual(float(numpy.mean(noise.imag)), 0.0, delta=0.01)

    def test_seeded_noise_repeats(self):
        first = awgn(self.signal[:1000], ChannelModel(5, 42))
        second = awgn(self.signal[:1000], ChannelModel(5, 42))
        third = awgn(self.signal[:1000], ChannelModel(5, 43))
        self.assertTrue(numpy.array_equal(first, second))
        self.assertFalse(numpy.array_equal(first, third))

    def test_noiseless(self):
        result = awgn(self.signal[:10], ChannelModel(math.inf, 0))
        self.assertTrue(numpy.array_equal(result, self.signal[:10]))

    def test_degenerate_signal(self):
        with self.assertRaises(DegenerateSignalError):
            awgn(numpy.zeros(16), ChannelModel(10, 0))
        with self.assertRaises(ConfigurationError):
            awgn([], ChannelModel(10, 0))

    def test_derive_seed(self):
        self.assertEqual(derive_seed(1, 0), derive_seed(1, 0))
        self.assertNotEqual(derive_seed(1, 0), derive_seed(1, 1))
        self.assertNotEqual(derive_seed(1, 0), derive_seed(2, 0))
        self.assertLess(derive_seed(3, 5), 2 ** 32)
