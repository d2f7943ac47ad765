import unittest

import numpy

from chaoslink.hyperchaos import (ChaoticState, IntegratorConfig, SystemParams, bifurcation_scan, jacobian,
                                  local_maxima, lyapunov_spectrum)
from chaoslink.utilities import ConfigurationError

class LocalMaximaTest(unittest.TestCase):

    def test_strict_maxima(self):
        maxima = local_maxima([0, 1, 0, 2, 2, 1, 3, 0])
        self.assertEqual(list(maxima), [1, 3])

    def test_short_series(self):
        self.assertEqual(local_maxima([1, 2]).size, 0)
        self.assertEqual(local_maxima([]).size, 0)

class BifurcationScanTest(unittest.TestCase):

    def test_chaotic_point_has_many_maxima(self):
        scan = bifurcation_scan("r", [3.0], transient=5000, record=20000)
        self.assertEqual(scan.parameter, "r")
        self.assertEqual(scan.observable, "x1")
        self.assertEqual(len(scan.maxima), 1)
        self.assertFalse(scan.diverged[0])
        self.assertGreaterEqual(numpy.unique(numpy.round(scan.maxima[0], 6)).size, 10)

    def test_stable_point_collapses_maxima(self):
        # c = -5 makes the origin the only equilibrium, with every Jacobian eigenvalue in the left half-plane
        params = SystemParams(c=-5.0)
        cfg = IntegratorConfig(0.01)
        near_origin = ChaoticState(0.01, 0.01, 0.01, 0.01, 0.01, 0.01)
        eigenvalues = numpy.linalg.eigvals(jacobian(ChaoticState(0, 0, 0, 0, 0, 0), params))
        self.assertLess(eigenvalues.real.max(), -0.15)

        report = lyapunov_spectrum(near_origin, params=params, cfg=cfg, transient=20000, total=120000)
        self.assertLess(report.exponents[0], -0.1)

        scan = bifurcation_scan("c", [-5.0], init=near_origin, cfg=cfg, transient=20000, record=5000)
        self.assertFalse(scan.diverged[0])
        self.assertLessEqual(numpy.unique(numpy.round(scan.maxima[0], 6)).size, 2)

    def test_divergent_point_is_flagged(self):
        scan = bifurcation_scan("g", [-1.0, 1.0], transient=20000, record=1000)
        self.assertEqual(scan.diverged, [False, True])
        self.assertEqual(scan.maxima[1].size, 0)
        self.assertGreater(scan.maxima[0].size, 0)

    def test_threads_keep_grid_order(self):
        grid = [2.5, 3.0, 3.5]
        serial = bifurcation_scan("r", grid, transient=500, record=2000, observable="x3")
        threaded = bifurcation_scan("r", grid, transient=500, record=2000, observable="x3", workers=2)
        self.assertTrue(numpy.array_equal(serial.grid, threaded.grid))
        for first, second in zip(serial.maxima, threaded.maxima):
            self.assertTrue(numpy.array_equal(first, second))

    def test_bad_arguments(self):
        with self.assertRaises(ConfigurationError):
            bifurcation_scan("z", [1.0])
        with self.assertRaises(ConfigurationError):
            bifurcation_scan("r", [2.0, 1.0])
        with self.assertRaises(ConfigurationError):
            bifurcation_scan("r", [])
        with self.assertRaises(ConfigurationError):
            bifurcation_scan("r", [1.0], record=0)
        with self.assertRaises(ConfigurationError):
            bifurcation_scan("r", [1.0], observable="x9")
