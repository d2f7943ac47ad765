import math
import unittest

import numpy

from chaoslink.cipher import GrayImage
from chaoslink.randometrics import (chi_square_uniformity, histogram, mean_squared_error, psnr,
                                    shannon_entropy)
from chaoslink.utilities import DimensionMismatchError

from tests.helpers import constant_image, natural_image, ramp_image

class ImageMetricsTest(unittest.TestCase):

    def test_histogram(self):
        hist = histogram(GrayImage([[0, 0], [3, 255]]))
        self.assertEqual(hist.total, 4)
        self.assertEqual(hist.counts.size, 256)
        self.assertEqual(hist.counts[0], 2)
        self.assertEqual(hist.counts[3], 1)
        self.assertEqual(hist.counts[255], 1)

    def test_constant_image(self):
        image = constant_image(16, 16, 77)
        result = chi_square_uniformity(histogram(image))
        self.assertAlmostEqual(result.statistic, 255.0 * 256, places=6)
        self.assertEqual(result.degrees_of_freedom, 255)
        self.assertLess(result.p_value, 1.0e-10)
        self.assertEqual(shannon_entropy(image), 0.0)

    def test_uniform_image(self):
        image = ramp_image(16, 16)
        result = chi_square_uniformity(histogram(image))
        self.assertEqual(result.statistic, 0.0)
        self.assertEqual(result.p_value, 1.0)
        self.assertEqual(shannon_entropy(image), 8.0)

    def test_entropy_bounds(self):
        entropy = shannon_entropy(natural_image(64, 64))
        self.assertGreater(entropy, 0.0)
        self.assertLess(entropy, 8.0)

    def test_psnr(self):
        zeros = constant_image(8, 8, 0)
        ones = constant_image(8, 8, 1)
        self.assertEqual(mean_squared_error(zeros, ones), 1.0)
        self.assertAlmostEqual(psnr(zeros, ones), 48.1308, places=4)
        self.assertEqual(psnr(zeros, zeros), math.inf)

    def test_psnr_is_symmetric_and_falls_with_noise(self):
        rng = numpy.random.default_rng(3)
        image = natural_image(32, 32)
        noise = rng.normal(0.0, 1.0, image.shape)
        values = []
        for scale in (1.0, 4.0, 16.0):
            noisy = GrayImage(numpy.clip(numpy.round(image.pixels + scale * noise), 0, 255))
            self.assertAlmostEqual(psnr(image, noisy), psnr(noisy, image), places=12)
            values.append(psnr(image, noisy))
        self.assertGreater(values[0], values[1])
        self.assertGreater(values[1], values[2])

    def test_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            psnr(constant_image(4, 4), constant_image(4, 6))
