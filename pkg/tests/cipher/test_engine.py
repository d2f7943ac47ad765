import unittest

import numpy

from chaoslink.cipher import GrayImage, KeyBundle, decrypt, encrypt
from chaoslink.randometrics import chi_square_uniformity, histogram, shannon_entropy
from chaoslink.utilities import ConfigurationError, DimensionMismatchError, InvalidImageError

from tests.helpers import SLOW_REASON, SLOW_TESTS, natural_image

class EngineTest(unittest.TestCase):

    def encrypt(self, image, **kwargs):
        bundle = KeyBundle(**kwargs)
        return encrypt(image, bundle), bundle

    def test_tiny_roundtrip(self):
        image = GrayImage([[1, 2], [3, 4]])
        cipher, bundle = self.encrypt(image, rounds=2, n0=100)
        self.assertEqual(len(bundle.round_keys), 2)
        self.assertEqual((bundle.height, bundle.width), (2, 2))
        self.assertEqual(decrypt(cipher, bundle), image)

    def test_roundtrip(self):
        for size in (8, 64):
            image = natural_image(size, size)
            cipher, bundle = self.encrypt(image)
            self.assertNotEqual(cipher, image)
            self.assertEqual(decrypt(cipher, bundle), image)

    def test_roundtrip_rectangular_concatenated(self):
        image = natural_image(6, 10)
        cipher, bundle = self.encrypt(image, rounds=3, n0=200, q_exponent=8, layout="concatenated")
        self.assertEqual(cipher.shape, (6, 10))
        self.assertEqual(decrypt(cipher, bundle), image)

    def test_roundtrip_through_key_text(self):
        image = natural_image(16, 16)
        cipher, bundle = self.encrypt(image, rounds=2)
        restored = KeyBundle.from_text(bundle.to_text())
        self.assertEqual(decrypt(cipher, restored), image)

    def test_encryption_is_deterministic(self):
        image = natural_image(16, 16)
        first, first_bundle = self.encrypt(image)
        second, second_bundle = self.encrypt(image)
        self.assertEqual(first, second)
        self.assertEqual(first_bundle, second_bundle)

    def test_roundtrip_large_q_exponent(self):
        image = natural_image(8, 8)
        for exponent in (92, 100, 200):
            cipher, bundle = self.encrypt(image, rounds=2, q_exponent=exponent)
            self.assertEqual(decrypt(cipher, bundle), image)

    def test_wrong_key_gives_garbage(self):
        image = natural_image(64, 64)
        cipher, bundle = self.encrypt(image)
        garbled = decrypt(cipher, bundle.perturbed(bundle.rounds - 1, 1, 1.0e-3))
        self.assertEqual(garbled.shape, image.shape)
        self.assertGreater(garbled.count_differences(image), 0.5 * image.size)

    def test_nearby_key_can_decrypt_small_image(self):
        # 64 keystream values drawn right after the discard keep their order under a 1e-3 change
        image = natural_image(8, 8)
        cipher, bundle = self.encrypt(image)
        self.assertEqual(decrypt(cipher, bundle.perturbed(bundle.rounds - 1, 1, 1.0e-3)), image)

    def test_bad_inputs(self):
        with self.assertRaises(InvalidImageError):
            self.encrypt(GrayImage(numpy.zeros((3, 4))))
        image = natural_image(8, 8)
        cipher, bundle = self.encrypt(image, rounds=1)
        with self.assertRaises(ConfigurationError):
            encrypt(image, bundle)
        with self.assertRaises(ConfigurationError):
            decrypt(cipher, KeyBundle(rounds=1))
        with self.assertRaises(DimensionMismatchError):
            decrypt(natural_image(8, 10), bundle)

    @unittest.skipUnless(SLOW_TESTS, SLOW_REASON)
    def test_full_size_statistics(self):
        image = natural_image(256, 256)
        cipher, bundle = self.encrypt(image)
        self.assertEqual(decrypt(cipher, bundle), image)
        self.assertLess(chi_square_uniformity(histogram(cipher)).statistic, 310.457)
        self.assertGreaterEqual(shannon_entropy(cipher), 7.99)

    @unittest.skipUnless(SLOW_TESTS, SLOW_REASON)
    def test_key_sensitivity(self):
        image = natural_image(64, 64)
        cipher, bundle = self.encrypt(image, n0=40000)
        wrong = decrypt(cipher, bundle.perturbed(bundle.rounds - 1, 1, 1.0e-10))
        self.assertGreater(wrong.count_differences(image), 0.99 * image.size)

    @unittest.skipUnless(SLOW_TESTS, SLOW_REASON)
    def test_key_sensitivity_at_default_discard(self):
        # With the built-in n0 a 1e-10 change has not spread before sampling starts:
        # only a minority of pixels come out wrong.
        image = natural_image(256, 256)
        cipher, bundle = self.encrypt(image)
        wrong = decrypt(cipher, bundle.perturbed(bundle.rounds - 1, 1, 1.0e-10))
        differing = wrong.count_differences(image)
        self.assertGreater(differing, 0.01 * image.size)
        self.assertLess(differing, 0.5 * image.size)

    @unittest.skipUnless(SLOW_TESTS, SLOW_REASON)
    def test_plaintext_sensitivity(self):
        image = natural_image(64, 64)
        pixels = image.pixels.copy()
        pixels[10, 20] += 1
        cipher, _ = self.encrypt(image, n0=40000)
        other, _ = self.encrypt(GrayImage(pixels), n0=40000)
        self.assertGreater(cipher.count_differences(other), 0.99 * image.size)
