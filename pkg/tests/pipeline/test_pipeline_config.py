import argparse
import math
import unittest

import numpy

from chaoslink.modem import derive_seed
from chaoslink.pipeline import PipelineConfig
from chaoslink.utilities import ConfigurationError

class PipelineConfigTest(unittest.TestCase):

    def test_defaults(self):
        cfg = PipelineConfig()
        self.assertIsNone(cfg.image)
        self.assertEqual(cfg.rounds, 4)
        self.assertEqual(cfg.n0, 1000)
        self.assertEqual(cfg.fft_length, 1024)
        self.assertEqual(cfg.cp_length, 256)
        self.assertEqual(cfg.mapping, "qpsk")
        self.assertEqual(cfg.snr_db, 20.0)
        self.assertEqual(cfg.snr_points, (20.0,))
        self.assertEqual(cfg.out_dir, "output")
        self.assertFalse(cfg.literal_key)

    def test_none_means_default(self):
        self.assertEqual(PipelineConfig(rounds=None, seed=None), PipelineConfig())

    def test_derived_settings(self):
        cfg = PipelineConfig(fft_length=64, cp_length=16, mapping="psk16", step_size=0.0005, rounds=2, n0=10)
        self.assertEqual(cfg.ofdm.bits_per_block, 256)
        self.assertEqual(cfg.integrator.step_size, 0.0005)
        bundle = cfg.new_key_bundle()
        self.assertEqual((bundle.rounds, bundle.n0, bundle.step_size), (2, 10, 0.0005))
        self.assertEqual(bundle.round_keys, [])

    def test_channels(self):
        cfg = PipelineConfig(snr_grid=[5, 20], seed=3)
        self.assertEqual(cfg.snr_grid, (5.0, 20.0))
        self.assertEqual(cfg.snr_points, (5.0, 20.0))
        channel = cfg.channel(1)
        self.assertEqual(channel.snr_db, 20.0)
        self.assertEqual(channel.seed, derive_seed(3, 1))
        self.assertTrue(PipelineConfig(snr_db=math.inf).channel(0).noiseless)

    def test_parameter_grid(self):
        self.assertEqual(PipelineConfig().parameter_grid.size, 101)
        self.assertTrue(numpy.array_equal(PipelineConfig(grid_count=1, grid_start=2.5).parameter_grid, [2.5]))
        grid = PipelineConfig(grid_start=1, grid_stop=2, grid_count=3).parameter_grid
        self.assertTrue(numpy.allclose(grid, [1.0, 1.5, 2.0]))

    def test_step_counts(self):
        self.assertEqual(PipelineConfig().step_counts, (10000, 200000, None))
        self.assertEqual(PipelineConfig(kind="bifurcation").step_counts, (20000, None, 20000))
        self.assertEqual(PipelineConfig(kind="trajectory", total=100).step_counts, (0, 100, None))

    def test_bad_settings(self):
        bad = [{"snr_grid": []}, {"snr_grid": [10, 5]}, {"kind": "phase"}, {"param": "z"},
               {"grid_count": 0}, {"grid_start": 3, "grid_stop": 1}, {"workers": 0}, {"fft_length": 100},
               {"rounds": 0}, {"q_exponent": 7}, {"layout": "spiral"}, {"mapping": "qam"}]
        for kwargs in bad:
            with self.assertRaises(ConfigurationError, msg=str(kwargs)):
                PipelineConfig(**kwargs)
        with self.assertRaises(ConfigurationError):
            PipelineConfig(colour="red")

    def test_from_options(self):
        options = argparse.Namespace(image="lena.pgm", rounds=3, snr_grid=[0.0, 10.0], verbose=2)
        cfg = PipelineConfig.from_options(options)
        self.assertEqual(cfg.image, "lena.pgm")
        self.assertEqual(cfg.rounds, 3)
        self.assertEqual(cfg.n0, 1000)
        self.assertEqual(cfg.snr_grid, (0.0, 10.0))

    def test_items_roundtrip(self):
        cfg = PipelineConfig(image="lena.pgm", snr_grid=[5, 10.5], literal_key=True, step_size=0.1 / 3)
        items = cfg.to_items()
        self.assertEqual(items[0], ("image", "lena.pgm"))
        self.assertIn(("key", ""), items)
        self.assertEqual(PipelineConfig.from_items(items), cfg)
