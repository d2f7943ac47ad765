import os
import unittest

from chaoslink.pipeline import FrameHeader, PipelineConfig, RunManifest, manifest_path
from chaoslink.utilities import ConfigurationError

from tests.helpers import make_temp_dir

class RunManifestTest(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = make_temp_dir(self)
        self.config = PipelineConfig(image="lena_cipher.pgm", snr_grid=[5, 20], seed=9)
        self.manifest = RunManifest("transmit", self.config)
        self.manifest.add_seed("master", 9)
        self.manifest.add_file("link_report", os.path.join(self.tmp_dir, "lena_link.csv"))
        self.manifest.add_metric("ber_snr5", 0.0125)
        self.manifest.add_metric("psnr_db_snr20", float("inf"))
        self.manifest.frame = FrameHeader(256, 256, 524288, 0)

    def test_manifest_path(self):
        self.assertEqual(manifest_path("out", "ber-sweep"), os.path.join("out", "ber_sweep_manifest.ini"))

    def test_roundtrip(self):
        filename = os.path.join(self.tmp_dir, "transmit_manifest.ini")
        self.manifest.write(filename)
        other = RunManifest.read(filename)
        self.assertEqual(other.command, "transmit")
        self.assertEqual(other.config, self.config)
        self.assertEqual(other.frame, self.manifest.frame)
        self.assertEqual(other.seeds["master"], 9)
        self.assertEqual(other.files, self.manifest.files)
        self.assertEqual(other.metrics["ber_snr5"], "0.0125")
        self.assertEqual(other.metrics["psnr_db_snr20"], "inf")

    def test_repeat_write_is_identical(self):
        first = os.path.join(self.tmp_dir, "first.ini")
        second = os.path.join(self.tmp_dir, "second.ini")
        self.manifest.write(first)
        RunManifest.read(first).write(second)
        with open(first) as ffile, open(second) as sfile:
            self.assertEqual(ffile.read(), sfile.read())

    def test_missing_files(self):
        self.assertEqual(self.manifest.missing_files(), [os.path.join(self.tmp_dir, "lena_link.csv")])
        open(os.path.join(self.tmp_dir, "lena_link.csv"), "w").close()
        self.assertEqual(self.manifest.missing_files(), [])

    def test_not_a_manifest(self):
        filename = os.path.join(self.tmp_dir, "other.ini")
        with open(filename, "w") as mfile:
            mfile.write("[cipher]\nrounds = 2\n")
        with self.assertRaises(ConfigurationError):
            RunManifest.read(filename)
        with self.assertRaises(IOError):
            RunManifest.read(os.path.join(self.tmp_dir, "missing.ini"))
