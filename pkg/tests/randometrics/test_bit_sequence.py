import unittest

import numpy

from chaoslink.cipher import GrayImage
from chaoslink.randometrics import BitSequence, bits_from_image, image_from_bits
from chaoslink.utilities import ConfigurationError, InvalidImageError

from tests.helpers import natural_image

class BitSequenceTest(unittest.TestCase):

    def test_from_string(self):
        seq = BitSequence.from_string("1011 0101\n01")
        self.assertEqual(len(seq), 10)
        self.assertEqual(seq.n, 10)
        self.assertEqual(list(seq.bits), [1, 0, 1, 1, 0, 1, 0, 1, 0, 1])

    def test_bad_values(self):
        with self.assertRaises(ConfigurationError):
            BitSequence.from_string("10201")
        with self.assertRaises(ConfigurationError):
            BitSequence([0, 1, 2])

    def test_signs(self):
        signs = BitSequence([1, 0, 0, 1]).to_signs()
        self.assertEqual(list(signs), [1, -1, -1, 1])
        self.assertEqual(signs.dtype, numpy.int64)

    def test_image_bits_are_msb_first(self):
        seq = bits_from_image(GrayImage([[1, 128], [255, 0]]))
        self.assertEqual(seq.n, 32)
        self.assertEqual(list(seq.bits[:16]), [0] * 7 + [1] + [1] + [0] * 7)
        self.assertEqual(list(seq.bits[16:24]), [1] * 8)

    def test_odd_image(self):
        image = natural_image(3, 5)
        seq = bits_from_image(image)
        self.assertEqual(seq.n, 120)
        self.assertEqual(image_from_bits(seq, 3, 5), image)

    def test_image_from_bits(self):
        image = natural_image(8, 8)
        bits = bits_from_image(image)
        self.assertEqual(image_from_bits(bits.bits, 8, 8), image)
        with self.assertRaises(InvalidImageError):
            image_from_bits(bits, 8, 9)
